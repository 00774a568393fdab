//! The recombination operation on slot tuples and the expansion matrix.
//!
//! A basis element of the target space is an n-tuple `(x_1, y_2, ...)`
//! recording which molecule contributes the submolecule in each slot. The
//! operation applied to `n` tuples sums, over all `sigma` in `S_n`, the
//! tuple whose slot `i` is taken from slot `i` of argument `sigma(i)`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::algebra::{
    order_slot_tuples, slot_tuple_count, IdentityCombination, Monomial, MonomialBasis, Permutation,
    SlotTuple, Tree, Variable,
};
use crate::error::{Error, Result};
use crate::linalg::IntegerMatrix;

/// A sparse integer combination of slot tuples.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SlotCombination {
    terms: BTreeMap<SlotTuple, i64>,
}

impl SlotCombination {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, tuple: SlotTuple, coeff: i64) {
        if coeff == 0 {
            return;
        }
        match self.terms.entry(tuple) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &SlotCombination, factor: i64) {
        for (t, &c) in &other.terms {
            self.add(t.clone(), c * factor);
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SlotTuple, i64)> + '_ {
        self.terms.iter().map(|(t, &c)| (t, c))
    }

    pub fn coefficient(&self, t: &SlotTuple) -> i64 {
        self.terms.get(t).copied().unwrap_or(0)
    }

    /// Sum of all coefficients.
    pub fn mass(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Relabels the variables in every tuple.
    pub fn permute(&self, sigma: &Permutation) -> SlotCombination {
        let mut out = SlotCombination::new();
        for (t, &c) in &self.terms {
            let entries = t.entries().iter().map(|&v| sigma.apply(v)).collect();
            out.add(SlotTuple::new_unchecked(entries), c);
        }
        out
    }

    fn variable_mask(&self) -> u32 {
        self.terms
            .keys()
            .flat_map(|t| t.entries())
            .fold(0, |acc, v| acc | 1 << v.index())
    }
}

impl fmt::Display for SlotCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (t, &c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// One argument of the operation.
#[derive(Clone, Debug)]
pub enum Operand {
    /// A lone molecule `x`, treated as the tuple `(x, x, ..., x)`.
    Variable(Variable),
    Combination(SlotCombination),
}

impl Operand {
    fn mask(&self) -> u32 {
        match self {
            Operand::Variable(v) => 1 << v.index(),
            Operand::Combination(c) => c.variable_mask(),
        }
    }

    fn basis_terms(&self, arity: usize) -> Vec<(Vec<Variable>, i64)> {
        match self {
            Operand::Variable(v) => vec![(vec![*v; arity], 1)],
            Operand::Combination(c) => c.terms().map(|(t, k)| (t.entries().to_vec(), k)).collect(),
        }
    }
}

/// Applies the n-ary recombination operation, extended multilinearly.
pub fn expand_operation(args: &[Operand]) -> Result<SlotCombination> {
    let arity = args.len();
    if arity < 2 {
        return Err(Error::InvalidArity(arity));
    }
    let mut seen = 0u32;
    for a in args {
        let mask = a.mask();
        if seen & mask != 0 {
            let v = Variable::new((seen & mask).trailing_zeros() as usize);
            return Err(Error::RepeatedVariable(v.to_string()));
        }
        seen |= mask;
    }
    for a in args {
        if let Operand::Combination(c) = a {
            if let Some((t, _)) = c.terms().next() {
                if t.arity() != arity {
                    return Err(Error::WrongArity {
                        expected: arity,
                        found: t.arity(),
                    });
                }
            }
        }
    }

    let expanded: Vec<_> = args.iter().map(|a| a.basis_terms(arity)).collect();
    let shuffles: Vec<Permutation> = Permutation::all(arity).collect();
    let mut out = SlotCombination::new();
    let mut choice = vec![0usize; arity];
    'outer: loop {
        let coeff: i64 = choice.iter().zip(&expanded).map(|(&i, e)| e[i].1).product();
        for sigma in &shuffles {
            let entries = (0..arity)
                .map(|slot| expanded[sigma.image(slot)][choice[sigma.image(slot)]].0[slot])
                .collect();
            out.add(SlotTuple::new_unchecked(entries), coeff);
        }
        for k in 0..arity {
            choice[k] += 1;
            if choice[k] < expanded[k].len() {
                continue 'outer;
            }
            choice[k] = 0;
        }
        break;
    }
    Ok(out)
}

/// Expands a monomial by applying the operation bottom-up.
pub fn expand_monomial(m: &Monomial) -> Result<SlotCombination> {
    match expand_tree(m.tree())? {
        Operand::Combination(c) => Ok(c),
        Operand::Variable(_) => Err(Error::InvalidDegree {
            arity: m.arity(),
            degree: 1,
        }),
    }
}

fn expand_tree(t: &Tree) -> Result<Operand> {
    match t {
        Tree::Leaf(v) => Ok(Operand::Variable(*v)),
        Tree::Node(children) => {
            let args = children
                .iter()
                .map(expand_tree)
                .collect::<Result<Vec<_>>>()?;
            Ok(Operand::Combination(expand_operation(&args)?))
        }
    }
}

/// The signed combination `sum c * expand(m)`; zero iff the identity holds.
pub fn evaluate_identity(id: &IdentityCombination) -> Result<SlotCombination> {
    let mut out = SlotCombination::new();
    for (m, c) in id.terms() {
        out.add_scaled(&expand_monomial(m)?, c);
    }
    Ok(out)
}

/// Rows are slot tuples in lexicographic order, columns the monomial basis;
/// entry `(i, j)` is the coefficient of tuple `i` in the expansion of
/// monomial `j`.
#[derive(Clone, Debug)]
pub struct ExpansionMatrix {
    rows: Vec<SlotTuple>,
    basis: MonomialBasis,
    entries: Vec<u32>,
}

impl ExpansionMatrix {
    pub fn arity(&self) -> usize {
        self.basis.arity()
    }

    pub fn degree(&self) -> usize {
        self.basis.degree()
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn column_count(&self) -> usize {
        self.basis.len()
    }

    pub fn row_tuples(&self) -> &[SlotTuple] {
        &self.rows
    }

    pub fn basis(&self) -> &MonomialBasis {
        &self.basis
    }

    pub fn into_basis(self) -> MonomialBasis {
        self.basis
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.column_count() + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        let w = self.column_count();
        &self.entries[i * w..(i + 1) * w]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> + '_ {
        self.entries.chunks(self.column_count().max(1))
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.row_count()).map(|i| self.get(i, j)).collect()
    }

    /// Entries as signed integers, row-major.
    pub fn to_rows_i64(&self) -> Vec<Vec<i64>> {
        self.rows()
            .map(|r| r.iter().map(|&x| x as i64).collect())
            .collect()
    }

    pub fn to_integer_matrix(&self) -> IntegerMatrix {
        IntegerMatrix::from_rows(self.column_count(), &self.to_rows_i64())
            .expect("rows have uniform length")
    }

    /// `E v` for an integer column vector `v`.
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        self.rows()
            .map(|r| r.iter().zip(v).map(|(&a, &b)| a as i64 * b).sum())
            .collect()
    }
}

/// Builds the expansion matrix of degree `degree` for the given arity.
///
/// Each association type is expanded once with leaves labelled by
/// position; every monomial's column is that template with positions
/// relabelled by its leaf sequence.
pub fn build_expansion_matrix(arity: usize, degree: usize) -> Result<ExpansionMatrix> {
    let basis = MonomialBasis::new(arity, degree)?;
    if degree < arity {
        return Err(Error::InvalidDegree { arity, degree });
    }
    let rows = order_slot_tuples(arity, degree);
    let width = basis.len();

    let templates: Vec<Vec<(Vec<usize>, u32)>> = basis
        .types()
        .iter()
        .map(|t| {
            let e = expand_monomial(&t.template())?;
            Ok(e.terms()
                .map(|(tuple, c)| {
                    (
                        tuple.entries().iter().map(|v| v.index()).collect(),
                        c as u32,
                    )
                })
                .collect())
        })
        .collect::<Result<_>>()?;

    let columns: Vec<Vec<(usize, u32)>> = (0..basis.types().len())
        .flat_map(|t| basis.type_range(t).map(move |j| (t, j)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(t, j)| {
            let leaves = basis.monomial(j).leaves();
            templates[t]
                .iter()
                .map(|(positions, c)| {
                    let entries = positions.iter().map(|&p| leaves[p]).collect();
                    (SlotTuple::new_unchecked(entries).index(degree), *c)
                })
                .collect()
        })
        .collect();

    let mut entries = vec![0u32; slot_tuple_count(arity, degree) * width];
    for (j, col) in columns.into_iter().enumerate() {
        for (i, c) in col {
            entries[i * width + j] += c;
        }
    }
    Ok(ExpansionMatrix {
        rows,
        basis,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str, arity: usize) -> Monomial {
        Monomial::parse(s, arity).unwrap()
    }

    fn tuple(s: &str) -> SlotTuple {
        SlotTuple::new(
            s.chars()
                .map(|c| Variable::from_letter(c).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn single_ternary_application() {
        let e = expand_monomial(&m("[a,b,c]", 3)).unwrap();
        assert_eq!(
            e.to_string(),
            "(a,b,c) + (a,c,b) + (b,a,c) + (b,c,a) + (c,a,b) + (c,b,a)"
        );
    }

    #[test]
    fn binary_left_normed() {
        let e = expand_monomial(&m("[[[a,b],c],d]", 2)).unwrap();
        assert_eq!(
            e.to_string(),
            "(a,d) + (b,d) + 2(c,d) + (d,a) + (d,b) + 2(d,c)"
        );
        let e = expand_monomial(&m("[[a,b],[c,d]]", 2)).unwrap();
        assert_eq!(e.len(), 8);
        assert!(e.terms().all(|(_, c)| c == 1));
    }

    #[test]
    fn degree_five_all_twos() {
        let e = expand_monomial(&m("[[a,b,c],d,e]", 3)).unwrap();
        assert_eq!(e.len(), 18);
        assert!(e.terms().all(|(_, c)| c == 2));
        assert_eq!(e.coefficient(&tuple("ade")), 2);
        assert_eq!(e.coefficient(&tuple("abc")), 0);
    }

    #[test]
    fn overlapping_operands_rejected() {
        let args = [
            Operand::Variable(Variable::new(0)),
            Operand::Variable(Variable::new(0)),
        ];
        assert!(matches!(
            expand_operation(&args),
            Err(Error::RepeatedVariable(_))
        ));
        assert!(expand_monomial(&Monomial::variable(Variable::new(0), 3)).is_err());
    }

    #[test]
    fn nonidentity_does_not_vanish() {
        let id = IdentityCombination::from_terms(3, 3, [(1, m("[a,b,c]", 3))]).unwrap();
        assert_eq!(evaluate_identity(&id).unwrap().len(), 6);
    }

    #[test]
    fn matrix_columns_match_direct_expansion() {
        let e = build_expansion_matrix(3, 7).unwrap();
        assert_eq!((e.row_count(), e.column_count()), (210, 280));
        for j in (0..280).step_by(7) {
            let direct = expand_monomial(e.basis().monomial(j)).unwrap();
            let mut col = vec![0u32; 210];
            for (t, c) in direct.terms() {
                col[t.index(7)] = c as u32;
            }
            assert_eq!(e.column(j), col);
        }
    }

    #[test]
    fn degree_three_is_column_of_ones() {
        let e = build_expansion_matrix(3, 3).unwrap();
        assert_eq!((e.row_count(), e.column_count()), (6, 1));
        assert!(e.column(0).iter().all(|&x| x == 1));
    }
}
