use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use super::monomial::shape_cmp;
use super::{check_degree, factorial, Monomial, Permutation, Tree, Variable};
use crate::error::Result;

/// The shape of a monomial modulo complete symmetry.
///
/// Stored as a template monomial whose leaves are labelled `a, b, c, ...`
/// in left-to-right order; every canonical monomial of this type is the
/// template with its leaves relabelled.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AssociationType {
    arity: usize,
    template: Tree,
}

impl AssociationType {
    pub(crate) fn of_tree(tree: &Tree, arity: usize) -> Self {
        let mut labels = (0..).map(Variable::new);
        AssociationType {
            arity,
            template: tree.with_leaves(&mut labels),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn degree(&self) -> usize {
        self.template.degree()
    }

    pub fn node_count(&self) -> usize {
        self.template.node_count()
    }

    /// The canonical monomial of this type with leaves `a, b, c, ...`.
    pub fn template(&self) -> Monomial {
        Monomial::canonical(self.template.clone(), self.arity)
    }

    /// The monomial of this type whose leaf sequence is `leaves`.
    pub fn monomial_with_leaves(&self, leaves: &[Variable]) -> Monomial {
        let mut it = leaves.iter().copied();
        Monomial::canonical(self.template.with_leaves(&mut it), self.arity)
    }

    /// Order of the group of leaf permutations fixing the shape.
    pub fn automorphism_count(&self) -> u64 {
        automorphisms(&self.template)
    }

    /// Closed-form number of distinct multilinear monomials of this type.
    pub fn monomial_count(&self) -> u64 {
        factorial(self.degree()) / self.automorphism_count()
    }
}

fn automorphisms(tree: &Tree) -> u64 {
    match tree {
        Tree::Leaf(_) => 1,
        Tree::Node(children) => {
            let mut total: u64 = children.iter().map(automorphisms).product();
            let mut run = 1;
            for pair in children.windows(2) {
                if shape_cmp(&pair[0], &pair[1]) == Ordering::Equal {
                    run += 1;
                } else {
                    total *= factorial(run);
                    run = 1;
                }
            }
            total * factorial(run)
        }
    }
}

impl PartialOrd for AssociationType {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AssociationType {
    fn cmp(&self, other: &Self) -> Ordering {
        self.arity
            .cmp(&other.arity)
            .then_with(|| shape_cmp(&self.template, &other.template))
    }
}

impl fmt::Display for AssociationType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.template.fmt(f)
    }
}

/// All association types of the given degree, in canonical order: types
/// with the most nesting in the first argument come first.
pub fn enumerate_canonical_types(arity: usize, degree: usize) -> Result<Vec<AssociationType>> {
    check_degree(arity, degree)?;
    let dummy = Tree::Leaf(Variable::new(0));
    // shapes[k] holds the shapes with k operation applications
    let mut shapes: Vec<Vec<Tree>> = vec![vec![dummy]];
    let applications = super::operation_count(arity, degree);
    for k in 1..=applications {
        let pool: Vec<(usize, &Tree)> = shapes
            .iter()
            .enumerate()
            .flat_map(|(j, v)| v.iter().map(move |t| (j, t)))
            .collect();
        let mut found = Vec::new();
        let mut chosen = Vec::with_capacity(arity);
        choose_children(&pool, 0, arity, k - 1, &mut chosen, &mut found);
        found.sort_by(shape_cmp);
        found.dedup_by(|a, b| shape_cmp(a, b) == Ordering::Equal);
        shapes.push(found);
    }
    let types = shapes
        .pop()
        .unwrap()
        .iter()
        .map(|t| AssociationType::of_tree(t, arity))
        .collect();
    Ok(types)
}

// Picks `remaining` children from `pool[start..]` (with repetition, in pool
// order) whose application counts sum to `budget`.
fn choose_children(
    pool: &[(usize, &Tree)],
    start: usize,
    remaining: usize,
    budget: usize,
    chosen: &mut Vec<Tree>,
    found: &mut Vec<Tree>,
) {
    if remaining == 0 {
        if budget == 0 {
            let mut children = chosen.clone();
            children.sort_by(shape_cmp);
            found.push(Tree::Node(children));
        }
        return;
    }
    for i in start..pool.len() {
        let (apps, tree) = pool[i];
        if apps > budget {
            continue;
        }
        chosen.push(tree.clone());
        choose_children(pool, i, remaining - 1, budget - apps, chosen, found);
        chosen.pop();
    }
}

/// All canonical monomials of type `t` on the variables `0..degree`, in
/// increasing order of leaf sequence.
pub fn enumerate_monomials(t: &AssociationType) -> Vec<Monomial> {
    let degree = t.degree();
    let mut seen = HashSet::new();
    for sigma in Permutation::all(degree) {
        let labels: Vec<Variable> = sigma.images().iter().map(|&i| Variable::new(i)).collect();
        seen.insert(t.monomial_with_leaves(&labels));
    }
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    out.sort();
    assert_eq!(
        out.len() as u64,
        t.monomial_count(),
        "orbit count mismatch for type {t}"
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shapes(n: usize, d: usize) -> Vec<String> {
        enumerate_canonical_types(n, d)
            .unwrap()
            .iter()
            .map(|t| t.to_string())
            .collect()
    }

    #[test]
    fn type_lists() {
        assert_eq!(shapes(3, 3), ["[a,b,c]"]);
        assert_eq!(shapes(3, 5), ["[[a,b,c],d,e]"]);
        assert_eq!(shapes(3, 7), ["[[[a,b,c],d,e],f,g]", "[[a,b,c],[d,e,f],g]"]);
        assert_eq!(shapes(2, 4), ["[[[a,b],c],d]", "[[a,b],[c,d]]"]);
        assert_eq!(
            shapes(3, 9),
            [
                "[[[[a,b,c],d,e],f,g],h,i]",
                "[[[a,b,c],[d,e,f],g],h,i]",
                "[[[a,b,c],d,e],[f,g,h],i]",
                "[[a,b,c],[d,e,f],[g,h,i]]",
            ]
        );
        assert_eq!(shapes(3, 1), ["a"]);
    }

    #[test]
    fn degree_formula_holds() {
        for (n, d) in [(2, 4), (2, 6), (3, 7), (3, 9), (4, 10)] {
            for t in enumerate_canonical_types(n, d).unwrap() {
                assert_eq!(t.degree(), t.node_count() * (n - 1) + 1);
                assert_eq!(t.degree(), d);
            }
        }
    }

    #[test]
    fn rejects_bad_degree() {
        assert!(enumerate_canonical_types(3, 4).is_err());
        assert!(enumerate_canonical_types(3, 0).is_err());
    }

    #[test]
    fn binary_degree_four_monomials() {
        let types = enumerate_canonical_types(2, 4).unwrap();
        let listed: Vec<String> = types
            .iter()
            .flat_map(enumerate_monomials)
            .map(|m| m.to_string())
            .collect();
        assert_eq!(
            listed,
            [
                "[[[a,b],c],d]",
                "[[[a,b],d],c]",
                "[[[a,c],b],d]",
                "[[[a,c],d],b]",
                "[[[a,d],b],c]",
                "[[[a,d],c],b]",
                "[[[b,c],a],d]",
                "[[[b,c],d],a]",
                "[[[b,d],a],c]",
                "[[[b,d],c],a]",
                "[[[c,d],a],b]",
                "[[[c,d],b],a]",
                "[[a,b],[c,d]]",
                "[[a,c],[b,d]]",
                "[[a,d],[b,c]]",
            ]
        );
    }

    #[test]
    fn ternary_degree_five_monomials() {
        let t = &enumerate_canonical_types(3, 5).unwrap()[0];
        let listed: Vec<String> = enumerate_monomials(t)
            .iter()
            .map(|m| m.to_string())
            .collect();
        assert_eq!(listed.len(), 10);
        assert_eq!(listed[4], "[[a,c,e],b,d]");
        assert_eq!(listed[9], "[[c,d,e],a,b]");
    }
}
