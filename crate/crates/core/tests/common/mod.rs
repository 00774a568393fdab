//! Test-side oracles. They recompute things from first principles without
//! going through the library code they check.
#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use recomb::algebra::Tree;
use recomb::linalg::LatticeBasis;

/// Slot tuple (as variable indices) -> coefficient.
pub type Expansion = BTreeMap<Vec<u8>, i64>;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Expansion straight from the definition: a variable x is the tuple
/// (x, ..., x); the operation sums, over every bijection of arguments to
/// slots, the tuple whose slot j comes from slot j of its argument.
pub fn expand(tree: &Tree, arity: usize) -> Expansion {
    match tree {
        Tree::Leaf(v) => BTreeMap::from([(vec![v.index() as u8; arity], 1)]),
        Tree::Node(children) => {
            let args: Vec<Expansion> = children.iter().map(|c| expand(c, arity)).collect();
            let mut out = Expansion::new();
            // every choice of one term per argument
            let mut choices: Vec<(Vec<&Vec<u8>>, i64)> = vec![(vec![], 1)];
            for a in &args {
                let mut next = Vec::new();
                for (picked, c) in &choices {
                    for (t, k) in a {
                        let mut p = picked.clone();
                        p.push(t);
                        next.push((p, c * k));
                    }
                }
                choices = next;
            }
            for (picked, c) in choices {
                for sigma in permutations(arity) {
                    let t: Vec<u8> = (0..arity).map(|j| picked[sigma[j]][j]).collect();
                    *out.entry(t).or_insert(0) += c;
                }
            }
            out.retain(|_, c| *c != 0);
            out
        }
    }
}

/// All tuples of `arity` distinct variables among `degree`, in
/// lexicographic order.
pub fn slot_rows(arity: usize, degree: usize) -> Vec<Vec<u8>> {
    let mut out: Vec<Vec<u8>> = vec![vec![]];
    for _ in 0..arity {
        let mut next = Vec::new();
        for t in &out {
            for x in 0..degree as u8 {
                if !t.contains(&x) {
                    let mut u = t.clone();
                    u.push(x);
                    next.push(u);
                }
            }
        }
        out = next;
    }
    out
}

fn plane_trees(arity: usize, leaves: usize) -> Vec<Tree> {
    if leaves == 1 {
        return vec![Tree::leaf(0)];
    }
    let mut out = Vec::new();
    // split leaves-? among arity children, each of size 1 mod (arity-1)
    fn splits(arity: usize, parts: usize, total: usize) -> Vec<Vec<usize>> {
        if parts == 0 {
            return if total == 0 { vec![vec![]] } else { vec![] };
        }
        let mut out = Vec::new();
        let mut k = 1;
        while k <= total {
            for mut rest in splits(arity, parts - 1, total - k) {
                rest.insert(0, k);
                out.push(rest);
            }
            k += arity - 1;
        }
        out
    }
    for s in splits(arity, arity, leaves) {
        let mut combos: Vec<Vec<Tree>> = vec![vec![]];
        for &k in &s {
            let subs = plane_trees(arity, k);
            combos = combos
                .into_iter()
                .flat_map(|c| {
                    subs.iter().map(move |t| {
                        let mut c = c.clone();
                        c.push(t.clone());
                        c
                    })
                })
                .collect();
        }
        out.extend(combos.into_iter().map(Tree::Node));
    }
    out
}

fn label(t: &Tree, labels: &mut impl Iterator<Item = usize>) -> Tree {
    match t {
        Tree::Leaf(_) => Tree::leaf(labels.next().unwrap()),
        Tree::Node(cs) => Tree::Node(cs.iter().map(|c| label(c, labels)).collect()),
    }
}

/// Key invariant under reordering the arguments of every operation.
pub fn symmetric_key(t: &Tree) -> String {
    match t {
        Tree::Leaf(v) => v.letter().to_string(),
        Tree::Node(cs) => {
            let mut ks: Vec<String> = cs.iter().map(symmetric_key).collect();
            ks.sort();
            format!("({})", ks.join(" "))
        }
    }
}

/// Number of multilinear monomials up to complete symmetry, by labelling
/// every plane tree in every way and counting distinct keys.
pub fn brute_force_monomial_count(arity: usize, degree: usize) -> usize {
    let mut keys = HashSet::new();
    for shape in plane_trees(arity, degree) {
        for p in permutations(degree) {
            keys.insert(symmetric_key(&label(&shape, &mut p.into_iter())));
        }
    }
    keys.len()
}

/// Rank over the rationals by fraction-free elimination.
pub fn bareiss_rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for j in 0..cols {
        let Some(p) = (rank..a.len()).find(|&i| !a[i][j].is_zero()) else {
            continue;
        };
        a.swap(p, rank);
        for i in rank + 1..a.len() {
            for k in j + 1..cols {
                a[i][k] = (&a[rank][j] * &a[i][k] - &a[i][j] * &a[rank][k]) / &prev;
            }
            a[i][j] = BigInt::zero();
        }
        prev = a[rank][j].clone();
        rank += 1;
    }
    rank
}

/// Rank modulo a prime by plain elimination.
pub fn rank_mod_p(rows: &[Vec<i64>], p: i64) -> usize {
    let mut a: Vec<Vec<i64>> = rows
        .iter()
        .map(|r| r.iter().map(|x| x.rem_euclid(p)).collect())
        .collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for j in 0..cols {
        let Some(piv) = (rank..a.len()).find(|&i| a[i][j] != 0) else {
            continue;
        };
        a.swap(piv, rank);
        let inv = (1..p).find(|x| x * a[rank][j] % p == 1).unwrap();
        for k in 0..cols {
            a[rank][k] = a[rank][k] * inv % p;
        }
        for i in 0..a.len() {
            if i != rank && a[i][j] != 0 {
                let f = a[i][j];
                for k in 0..cols {
                    a[i][k] = (a[i][k] - f * a[rank][k]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Size reduction and the Lovász condition with constant 3/4, checked
/// through exact Gram-Schmidt.
pub fn is_lll_reduced(b: &LatticeBasis) -> bool {
    let rows: Vec<Vec<BigRational>> = b
        .rows()
        .iter()
        .map(|r| r.iter().map(|x| BigRational::from(x.clone())).collect())
        .collect();
    let dot = |x: &[BigRational], y: &[BigRational]| -> BigRational {
        x.iter().zip(y).map(|(a, c)| a * c).sum()
    };
    let mut star: Vec<Vec<BigRational>> = Vec::new();
    let mut norms: Vec<BigRational> = Vec::new();
    let half = BigRational::new(1.into(), 2.into());
    for (k, r) in rows.iter().enumerate() {
        let mut s = r.clone();
        let mut mu_prev = BigRational::zero();
        for j in 0..k {
            let mu = dot(r, &star[j]) / &norms[j];
            if mu.abs() > half {
                return false;
            }
            for (x, y) in s.iter_mut().zip(&star[j]) {
                *x -= &mu * y;
            }
            if j + 1 == k {
                mu_prev = mu;
            }
        }
        let n = dot(&s, &s);
        if k > 0 {
            let lhs = &n;
            let rhs = (BigRational::new(3.into(), 4.into()) - &mu_prev * &mu_prev) * &norms[k - 1];
            if *lhs < rhs {
                return false;
            }
        }
        star.push(s);
        norms.push(n);
    }
    true
}
