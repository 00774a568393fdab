//! Pass/fail reproduction of the reference results.
//!
//! Every expected value comes from [`crate::golden`]. A table passes when
//! all its required rows pass; stretch rows are reported but do not count.

use std::fmt::{self, Debug, Display};
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::algebra::{enumerate_canonical_types, slot_tuple_count, Monomial, MonomialBasis};
use crate::expansion::{build_expansion_matrix, evaluate_identity, expand_monomial};
use crate::golden::{self, reference_values, GoldenIdentity as G, GoldenMatrix};
use crate::identities::{
    expansion_rank_mod_p, generator_sieve, lift_identity, module_rank, new_identity_test_with,
    rewrite_second_type, single_generators, ClosureMode, ClosureProgress, Verdict,
};
use crate::linalg::{
    hnf_with_transform, lll_reduce, nullspace_lattice, rcf, IntegerMatrix, LatticeBasis,
    RationalMatrix,
};
use crate::nullspace::{nullspace_basis, NullspaceMethod};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    Required,
    /// A target worth reporting whose failure does not fail the table.
    Stretch,
}

#[derive(Clone, Debug)]
pub struct ReportRow {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
    pub kind: CheckKind,
}

#[derive(Clone, Debug)]
pub struct ReportTable {
    pub title: String,
    pub rows: Vec<ReportRow>,
    pub elapsed: Duration,
}

impl ReportTable {
    pub fn new(title: impl Into<String>) -> Self {
        ReportTable {
            title: title.into(),
            rows: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn push(
        &mut self,
        name: &str,
        expected: impl Display,
        actual: impl Display,
        pass: bool,
        kind: CheckKind,
    ) {
        self.rows.push(ReportRow {
            name: name.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            pass,
            kind,
        });
    }

    /// Required row comparing two values.
    pub fn eq<T: PartialEq + Debug>(&mut self, name: &str, expected: T, actual: T) {
        let pass = expected == actual;
        self.push(
            name,
            brief(&expected),
            brief(&actual),
            pass,
            CheckKind::Required,
        );
    }

    pub fn stretch_eq<T: PartialEq + Debug>(&mut self, name: &str, expected: T, actual: T) {
        let pass = expected == actual;
        self.push(
            name,
            brief(&expected),
            brief(&actual),
            pass,
            CheckKind::Stretch,
        );
    }

    /// Required yes/no row.
    pub fn holds(&mut self, name: &str, ok: bool) {
        self.push(
            name,
            "yes",
            if ok { "yes" } else { "no" },
            ok,
            CheckKind::Required,
        );
    }

    pub fn info(&mut self, name: &str, value: impl Display) {
        self.push(name, "-", value, true, CheckKind::Stretch);
    }

    pub fn passed(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.pass || r.kind == CheckKind::Stretch)
    }

    pub fn row(&self, name: &str) -> Option<&ReportRow> {
        self.rows.iter().find(|r| r.name == name)
    }
}

// Long lists are shortened so the table stays readable.
fn brief<T: Debug>(x: &T) -> String {
    let s = format!("{x:?}");
    if s.len() <= 72 {
        return s;
    }
    let count = s.matches(',').count() + 1;
    format!("{}... ({count} items)", &s[..60])
}

impl Display for ReportTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(f, "== {} [{status}] ({:.2?})", self.title, self.elapsed)?;
        let w = self.rows.iter().map(|r| r.name.len()).max().unwrap_or(0);
        for r in &self.rows {
            let mark = match (r.pass, r.kind) {
                (true, _) => "ok  ",
                (false, CheckKind::Required) => "FAIL",
                (false, CheckKind::Stretch) => "miss",
            };
            writeln!(
                f,
                "  {mark} {:w$}  expected {}  got {}",
                r.name, r.expected, r.actual
            )?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    Binary,
    Deg5,
    Deg7,
    Deg9Rank,
    Deg9Closure(ClosureMode),
}

impl FromStr for Scope {
    type Err = String;

    /// `deg9-closure` parses to the certify mode with the default seed.
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "binary" => Ok(Scope::Binary),
            "deg5" => Ok(Scope::Deg5),
            "deg7" => Ok(Scope::Deg7),
            "deg9-rank" => Ok(Scope::Deg9Rank),
            "deg9-closure" => Ok(Scope::Deg9Closure(ClosureMode::certify(
                crate::identities::DEFAULT_SEED,
            ))),
            _ => Err(format!(
                "unknown scope `{s}` (expected binary, deg5, deg7, deg9-rank or deg9-closure)"
            )),
        }
    }
}

/// Runs one scope.
pub fn reproduce(scope: Scope) -> Result<Vec<ReportTable>> {
    reproduce_with(scope, &mut |_| {})
}

pub fn reproduce_with(
    scope: Scope,
    progress: &mut dyn FnMut(ClosureProgress),
) -> Result<Vec<ReportTable>> {
    match scope {
        Scope::Binary => Ok(vec![
            timed(binary_matrix)?,
            timed(binary_lattice)?,
            timed(binary_identities)?,
        ]),
        Scope::Deg5 => Ok(vec![timed(ternary5)?]),
        Scope::Deg7 => Ok(vec![
            timed(ternary7_matrix)?,
            timed(ternary7_modules)?,
            timed(ternary7_bases)?,
        ]),
        Scope::Deg9Rank => Ok(vec![timed(ternary9_rank)?]),
        Scope::Deg9Closure(mode) => Ok(vec![timed(|| ternary9_closure(mode, progress))?]),
    }
}

fn timed(f: impl FnOnce() -> Result<ReportTable>) -> Result<ReportTable> {
    let t = Instant::now();
    let mut table = f()?;
    table.elapsed = t.elapsed();
    Ok(table)
}

fn type_counts(arity: usize, degree: usize) -> Result<Vec<usize>> {
    Ok(enumerate_canonical_types(arity, degree)?
        .iter()
        .map(|t| t.monomial_count() as usize)
        .collect())
}

fn to_u64(v: Vec<BigInt>) -> Vec<u64> {
    v.into_iter()
        .map(|x| u64::try_from(x).expect("squared norms are small"))
        .collect()
}

/// Rows sorted by squared norm, then by entries; removes the arbitrary
/// order among vectors of equal norm.
pub fn norm_sorted_rows(b: &LatticeBasis) -> Vec<(BigInt, Vec<BigInt>)> {
    let mut rows: Vec<(BigInt, Vec<BigInt>)> = b
        .squared_norms()
        .into_iter()
        .zip(b.rows().iter().cloned())
        .collect();
    rows.sort();
    rows
}

fn every_vector_annihilated(e: &IntegerMatrix, b: &LatticeBasis) -> bool {
    b.rows().iter().all(|v| {
        e.mul_vec(v)
            .map(|r| r.iter().all(|x| x == &BigInt::from(0)))
            .unwrap_or(false)
    })
}

fn binary_matrix() -> Result<ReportTable> {
    let v = &reference_values().binary;
    let mut t = ReportTable::new("binary degree 4: expansion matrix and canonical nullspace");
    t.eq(
        "monomials per association type",
        v.type_counts.clone(),
        type_counts(v.arity, v.degree)?,
    );
    t.eq(
        "slot tuples",
        v.slot_tuples,
        slot_tuple_count(v.arity, v.degree),
    );
    let e = build_expansion_matrix(v.arity, v.degree)?;
    let m = e.to_integer_matrix();
    t.holds(
        "expansion matrix equals reference",
        m == GoldenMatrix::BinaryExpansion.load(),
    );
    let f = rcf(&RationalMatrix::from_integer(&m));
    t.eq("rank", v.rank, f.rank);
    let nonzero = f
        .matrix
        .to_integer()
        .map(|x| x.select_rows(&(0..f.rank).collect::<Vec<_>>()));
    t.holds(
        "row canonical form equals reference",
        nonzero == Some(GoldenMatrix::BinaryRcf.load()),
    );
    let ns = nullspace_basis(&e, NullspaceMethod::Rcf)?;
    t.eq("nullspace dimension", v.nullspace_dim, ns.len());
    t.holds(
        "E v = 0 for every basis vector",
        every_vector_annihilated(&m, &ns),
    );
    let reference = LatticeBasis::from_matrix(&GoldenMatrix::BinaryCanonicalBasis.load());
    t.holds(
        "canonical basis equals reference (norm-sorted)",
        norm_sorted_rows(&ns) == norm_sorted_rows(&reference),
    );
    let mut norms = to_u64(ns.squared_norms());
    norms.sort_unstable();
    t.eq("canonical squared norms", v.canonical_norms.clone(), norms);
    Ok(t)
}

fn binary_lattice() -> Result<ReportTable> {
    let v = &reference_values().binary;
    let mut t = ReportTable::new("binary degree 4: Hermite form and LLL");
    let e = build_expansion_matrix(v.arity, v.degree)?.to_integer_matrix();
    let et = e.transpose();
    let h = hnf_with_transform(&et);
    t.eq("rank of E^t", v.rank, h.rank);
    t.holds(
        "nonzero Hermite rows equal reference",
        h.nonzero_rows() == GoldenMatrix::BinaryHnf.load(),
    );
    t.holds("U E^t = H", h.u.mul(&et)? == h.h);
    t.holds("|det U| = 1", h.u.determinant()?.abs().is_one());
    t.holds("Hermite form conditions", h.is_hermite());
    t.stretch_eq(
        "transform equals reference",
        true,
        h.u == GoldenMatrix::BinaryTransform.load(),
    );

    let kernel = nullspace_lattice(&e);
    t.eq("kernel lattice rank", v.nullspace_dim, kernel.len());
    let bottom: Vec<usize> = (v.rank..v.rank + v.nullspace_dim).collect();
    for (label, g) in [
        ("reference transform", GoldenMatrix::BinaryTransform),
        (
            "reference reduced transform",
            GoldenMatrix::BinaryReducedTransform,
        ),
    ] {
        let u = g.load();
        t.holds(&format!("{label}: U E^t = H"), u.mul(&et)? == h.h);
        let rows = LatticeBasis::from_matrix(&u.select_rows(&bottom));
        t.holds(
            &format!("{label}: bottom rows span the kernel lattice"),
            rows.same_lattice(&kernel),
        );
    }
    // the reduced identity is row 9 of the reduced transform
    let row9: Vec<i64> = GoldenMatrix::BinaryReducedTransform.load().to_i64_rows()?[8].clone();
    let basis = crate::algebra::MonomialBasis::new(v.arity, v.degree)?;
    let id6 = basis.dense_vector(&G::BinaryReduced.load())?;
    let neg: Vec<i64> = id6.iter().map(|x| -x).collect();
    t.holds(
        "reduced identity is row 9 of the reduced transform",
        row9 == id6 || row9 == neg,
    );
    let reduced = lll_reduce(&kernel)?;
    let norms = to_u64(reduced.squared_norms());
    let bound = v.reduced_norm_bound;
    t.push(
        "max reduced squared norm",
        format!("<= {bound}"),
        norms.iter().max().copied().unwrap_or(0),
        norms.iter().all(|&n| n <= bound),
        CheckKind::Required,
    );
    t.holds(
        "reduced basis spans the kernel lattice",
        reduced.same_lattice(&kernel),
    );
    t.holds(
        "E v = 0 for every reduced vector",
        every_vector_annihilated(&e, &reduced),
    );
    t.stretch_eq(
        "all reduced squared norms",
        vec![v.reduced_norm_target; norms.len()],
        norms,
    );
    Ok(t)
}

fn binary_identities() -> Result<ReportTable> {
    let v = &reference_values().binary;
    let p = reference_values().prime;
    let mut t = ReportTable::new("binary: identities and their consequences");
    let id3 = G::BinaryRecombination.load();
    let id6 = G::BinaryReduced.load();
    t.holds(
        "recombination identity expands to zero",
        evaluate_identity(&id3)?.is_zero(),
    );
    t.holds(
        "reduced identity expands to zero",
        evaluate_identity(&id6)?.is_zero(),
    );
    t.eq(
        "module rank of recombination identity",
        v.recombination_module_rank,
        module_rank(std::slice::from_ref(&id3), p)?,
    );

    t.eq(
        "module rank of reduced identity",
        v.nullspace_dim,
        module_rank(std::slice::from_ref(&id6), p)?,
    );

    let e = build_expansion_matrix(v.arity, v.degree)?;
    let ns = nullspace_basis(&e, NullspaceMethod::Rcf)?.sorted_by_norm();
    let rows = ns.to_i64_rows()?;
    let singles = single_generators(e.basis(), &rows, p)?;
    let norms = to_u64(ns.squared_norms());
    t.eq(
        "shortest single generator squared norm",
        Some(v.single_generator_norm),
        singles.first().map(|&k| norms[k - 1]),
    );
    let first_rank = match singles.first() {
        Some(&k) => module_rank(&[e.basis().combination(&rows[k - 1])?], p)?,
        None => 0,
    };
    t.eq("single generator rank", v.single_generator_rank, first_rank);
    // equal-norm vectors may be ordered differently
    let shortest: Vec<usize> = singles
        .iter()
        .copied()
        .filter(|&k| norms[k - 1] == v.single_generator_norm)
        .collect();
    t.eq(
        "single generators of shortest norm",
        v.single_generator_positions.len(),
        shortest.len(),
    );
    let target = e.basis().dense_vector(&id3)?;
    let negated: Vec<i64> = target.iter().map(|x| -x).collect();
    let hit = shortest
        .iter()
        .any(|&k| rows[k - 1] == target || rows[k - 1] == negated);
    t.holds("recombination identity is one of them", hit);
    let gens = generator_sieve(e.basis(), &rows, p)?;
    t.info("generators kept by the sieve", gens.len());

    let m = Monomial::parse(&v.second_type_monomial, v.arity)?;
    let rw = rewrite_second_type(&m)?;
    t.eq("terms in second-type rewrite", v.rewrite_terms, rw.len());
    let mut diff = rw.clone();
    diff.add_term(-1, m)?;
    t.holds(
        "rewrite agrees under expansion",
        evaluate_identity(&diff)?.is_zero(),
    );

    let lifts = lift_identity(&id3)?;
    t.eq("lifted consequences", v.degree + 1, lifts.len());
    let lifts_ok = lifts
        .iter()
        .map(|l| evaluate_identity(&l.result).map(|r| r.is_zero()))
        .collect::<Result<Vec<_>>>()?;
    t.holds("every lift expands to zero", lifts_ok.iter().all(|&x| x));
    let closure = new_identity_test_with(
        v.arity,
        v.degree + 1,
        &[id3],
        p,
        ClosureMode::Exact,
        &mut |_| {},
    )?;
    t.eq(
        "degree 5 association types",
        v.degree5_types,
        type_counts(v.arity, v.degree + 1)?.len(),
    );
    t.eq(
        "degree 5 verdict",
        Verdict::NoNewIdentities,
        closure.verdict,
    );
    t.info("degree 5 nullspace dimension", closure.nullspace_dim);
    Ok(t)
}

fn ternary5() -> Result<ReportTable> {
    let v = &reference_values().ternary5;
    let mut t = ReportTable::new("ternary degree 5");
    t.eq(
        "monomials per association type",
        v.type_counts.clone(),
        type_counts(v.arity, v.degree)?,
    );
    let e = build_expansion_matrix(v.arity, v.degree)?;
    t.eq("rows", v.rows, e.row_count());
    let m = e.to_integer_matrix();
    let rows: Vec<usize> = golden::ternary5_submatrix_rows()
        .iter()
        .map(|r| r - 1)
        .collect();
    let sub = m.select_rows(&rows);
    t.holds(
        "selected rows equal reference submatrix",
        sub == GoldenMatrix::Ternary5Submatrix.load(),
    );
    let f = rcf(&RationalMatrix::from_integer(&sub));
    t.holds(
        "submatrix reduces to the identity",
        f.matrix.to_integer() == Some(IntegerMatrix::identity(sub.rows())),
    );
    let full = rcf(&RationalMatrix::from_integer(&m));
    t.eq("rank", v.rank, full.rank);
    t.eq(
        "nullspace dimension",
        v.nullspace_dim,
        nullspace_basis(&e, NullspaceMethod::Rcf)?.len(),
    );
    Ok(t)
}

fn ternary7_matrix() -> Result<ReportTable> {
    let v = &reference_values().ternary7;
    let mut t = ReportTable::new("ternary degree 7: expansion matrix");
    t.eq(
        "monomials per association type",
        v.type_counts.clone(),
        type_counts(v.arity, v.degree)?,
    );
    let e = build_expansion_matrix(v.arity, v.degree)?;
    t.eq("rows", v.rows, e.row_count());
    let [ref1, ref2] = golden::ternary7_type_expansions();
    for (name, mono, reference, distinct) in [
        (
            "first type",
            &v.type1_representative,
            ref1,
            v.type1_distinct_triples,
        ),
        (
            "second type",
            &v.type2_representative,
            ref2,
            v.type2_distinct_triples,
        ),
    ] {
        let x = expand_monomial(&Monomial::parse(mono, v.arity)?)?;
        t.holds(
            &format!("{name} expansion equals reference"),
            x == reference,
        );
        t.eq(&format!("{name} distinct triples"), distinct, x.len());
        t.eq(
            &format!("{name} total coefficient"),
            v.column_mass,
            x.mass(),
        );
    }
    let m = e.to_integer_matrix();
    t.eq("rank", v.rank, rcf(&RationalMatrix::from_integer(&m)).rank);
    let ns = nullspace_basis(&e, NullspaceMethod::Rcf)?;
    t.eq("nullspace dimension", v.nullspace_dim, ns.len());
    t.holds(
        "E v = 0 for every basis vector",
        every_vector_annihilated(&m, &ns),
    );
    let mut norms = to_u64(ns.squared_norms());
    norms.sort_unstable();
    t.eq(
        "canonical squared norms",
        golden::ternary7_canonical_norms(),
        norms,
    );
    Ok(t)
}

fn ternary7_modules() -> Result<ReportTable> {
    let v = &reference_values().ternary7;
    let p = reference_values().prime;
    let mut t = ReportTable::new("ternary degree 7: identities and module ranks");
    for g in [
        G::TernaryI,
        G::TernaryJ,
        G::TernaryK,
        G::TernaryP,
        G::TernaryQ,
        G::TernaryR,
        G::TernarySecondTypeRewrite,
    ] {
        t.holds(
            &format!("{} expands to zero", g.name()),
            evaluate_identity(&g.load())?.is_zero(),
        );
    }
    let load = |gs: &[G]| gs.iter().map(|g| g.load()).collect::<Vec<_>>();
    t.eq(
        "module rank of P",
        v.module_rank_p,
        module_rank(&load(&[G::TernaryP]), p)?,
    );
    t.eq(
        "module rank of Q",
        v.module_rank_q,
        module_rank(&load(&[G::TernaryQ]), p)?,
    );
    t.eq(
        "module rank of P, Q",
        v.module_rank_pq,
        module_rank(&load(&[G::TernaryP, G::TernaryQ]), p)?,
    );
    t.eq(
        "module rank of R",
        v.module_rank_r,
        module_rank(&load(&[G::TernaryR]), p)?,
    );
    t.eq(
        "module rank of I, J, K",
        v.module_rank_ijk,
        module_rank(&load(&[G::TernaryI, G::TernaryJ, G::TernaryK]), p)?,
    );
    t.info("module rank of I", module_rank(&load(&[G::TernaryI]), p)?);

    let m = Monomial::parse(&v.second_type_monomial, v.arity)?;
    let rw = rewrite_second_type(&m)?;
    t.eq("terms in second-type rewrite", v.rewrite_terms, rw.len());
    let mut diff = rw;
    diff.add_term(-1, m)?;
    t.holds(
        "rewrite agrees under expansion",
        evaluate_identity(&diff)?.is_zero(),
    );
    Ok(t)
}

fn sieve_rows(
    t: &mut ReportTable,
    label: &str,
    basis: &MonomialBasis,
    b: &LatticeBasis,
    norms: &[u64],
    positions: &[usize],
) -> Result<()> {
    let p = reference_values().prime;
    let gens = generator_sieve(basis, &b.to_i64_rows()?, p)?;
    let found: Vec<u64> = gens.iter().map(|g| g.squared_norm as u64).collect();
    t.eq(
        &format!("{label} generator squared norms"),
        norms.to_vec(),
        found,
    );
    t.eq(
        &format!("{label} final module rank"),
        b.len(),
        gens.last().map_or(0, |g| g.cumulative_rank),
    );
    let ok = gens
        .iter()
        .map(|g| evaluate_identity(&g.identity).map(|r| r.is_zero()))
        .collect::<Result<Vec<_>>>()?;
    t.holds(
        &format!("{label} generators expand to zero"),
        ok.iter().all(|&x| x),
    );
    let at: Vec<usize> = gens.iter().map(|g| g.position).collect();
    t.stretch_eq(
        &format!("{label} generator positions"),
        positions.to_vec(),
        at,
    );
    Ok(())
}

fn ternary7_bases() -> Result<ReportTable> {
    let v = &reference_values().ternary7;
    let p = reference_values().prime;
    let q = reference_values().cross_check_prime;
    let mut t = ReportTable::new("ternary degree 7: canonical and reduced bases");
    let e = build_expansion_matrix(v.arity, v.degree)?;
    let m = e.to_integer_matrix();
    let canonical = nullspace_basis(&e, NullspaceMethod::Rcf)?;
    let reduced = nullspace_basis(&e, NullspaceMethod::HnfLll)?;
    let norms = to_u64(reduced.squared_norms());
    let max = norms.iter().max().copied().unwrap_or(0);
    t.push(
        "max reduced squared norm",
        format!("<= {}", v.reduced_max_norm),
        max,
        max <= v.reduced_max_norm,
        CheckKind::Required,
    );
    t.holds(
        "E v = 0 for every reduced vector",
        every_vector_annihilated(&m, &reduced),
    );
    t.holds(
        "reduced basis spans the integer kernel",
        reduced.same_lattice(&nullspace_lattice(&m)),
    );
    t.holds(
        "canonical vectors lie in the reduced lattice",
        reduced.contains_all(canonical.rows()),
    );
    let mut sorted = norms.clone();
    sorted.sort_unstable();
    t.stretch_eq(
        "reduced squared norm multiset",
        golden::ternary7_reduced_norms(),
        sorted,
    );

    sieve_rows(
        &mut t,
        "canonical",
        e.basis(),
        &canonical.sorted_by_norm(),
        &v.canonical_generator_norms,
        &v.canonical_generator_positions,
    )?;
    sieve_rows(
        &mut t,
        "reduced",
        e.basis(),
        &reduced.sorted_by_norm(),
        &v.reduced_generator_norms,
        &v.reduced_generator_positions,
    )?;
    t.eq(
        "expansion rank mod cross-check prime",
        v.rank,
        expansion_rank_mod_p(&e, q)?,
    );
    t.eq(
        "module rank of R mod cross-check prime",
        v.module_rank_r,
        module_rank(&[G::TernaryR.load()], q)?,
    );
    t.info("prime", p);
    Ok(t)
}

fn ternary9_rank() -> Result<ReportTable> {
    let v = &reference_values().ternary9;
    let p = reference_values().prime;
    let mut t = ReportTable::new("ternary degree 9: expansion matrix");
    t.eq(
        "monomials per association type",
        v.type_counts.clone(),
        type_counts(v.arity, v.degree)?,
    );
    let e = build_expansion_matrix(v.arity, v.degree)?;
    t.eq("rows", v.rows, e.row_count());
    t.eq("columns", v.columns, e.column_count());
    let r = expansion_rank_mod_p(&e, p)?;
    t.eq("rank mod p", v.rank, r);
    t.eq("nullspace dimension", v.nullspace_dim, e.column_count() - r);
    Ok(t)
}

fn ternary9_closure(
    mode: ClosureMode,
    progress: &mut dyn FnMut(ClosureProgress),
) -> Result<ReportTable> {
    let v = &reference_values().ternary9;
    let p = reference_values().prime;
    let title = match mode {
        ClosureMode::Exact => "ternary degree 9: closure (exact)".to_string(),
        ClosureMode::Certify { seed, .. } => {
            format!("ternary degree 9: closure (certify, seed {seed})")
        }
    };
    let mut t = ReportTable::new(title);
    let r = G::TernaryR.load();
    let lifts = lift_identity(&r)?;
    let ok = lifts
        .iter()
        .map(|l| evaluate_identity(&l.result).map(|x| x.is_zero()))
        .collect::<Result<Vec<_>>>()?;
    t.eq("lifted consequences", v.lifted_consequences, lifts.len());
    t.holds("every lift expands to zero", ok.iter().all(|&x| x));
    let report = new_identity_test_with(v.arity, v.degree, &[r], p, mode, progress)?;
    t.eq("nullspace dimension", v.nullspace_dim, report.nullspace_dim);
    if mode == ClosureMode::Exact {
        t.eq(
            "cumulative dimensions",
            v.cumulative_dims.clone(),
            report.cumulative_dims.clone(),
        );
    } else {
        t.info("rows sampled", report.rows);
    }
    t.eq("span dimension", v.nullspace_dim, report.span_dim);
    t.eq("verdict", Verdict::NoNewIdentities, report.verdict);
    Ok(t)
}

/// Parses a scope name, mapping failures to a usage error.
pub fn parse_scope(s: &str) -> Result<Scope> {
    s.parse().map_err(|m: String| Error::parse(0, m))
}
