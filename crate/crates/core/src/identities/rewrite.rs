use crate::algebra::{IdentityCombination, Monomial, Permutation, Tree};
use crate::golden::GoldenIdentity;
use crate::{Error, Result};

fn leaf_index(t: &Tree) -> Option<usize> {
    match t {
        Tree::Leaf(v) => Some(v.index()),
        Tree::Node(_) => None,
    }
}

// Leaves of a node whose children are all leaves.
fn flat_node(t: &Tree) -> Option<Vec<usize>> {
    match t {
        Tree::Node(cs) => cs.iter().map(leaf_index).collect(),
        Tree::Leaf(_) => None,
    }
}

/// Expresses a monomial of the second association type as a combination
/// of first-type monomials.
///
/// Arity 3, degree 7 covers `[[a,b,c],[d,e,f],g]`; arity 2, degree 4
/// covers `[[a,b],[c,d]]`. The bundled rule for the template monomial is
/// relabelled to match `m`.
pub fn rewrite_second_type(m: &Monomial) -> Result<IdentityCombination> {
    let (n, d) = (m.arity(), m.degree());
    let rule = match (n, d) {
        (3, 7) => GoldenIdentity::TernarySecondTypeRewrite,
        (2, 4) => GoldenIdentity::BinaryReduced,
        _ => {
            return Err(Error::NoRewriteRule {
                arity: n,
                degree: d,
            })
        }
    };
    let not_second = || Error::NotSecondType(m.to_string());
    let Tree::Node(children) = m.tree() else {
        return Err(not_second());
    };
    // canonical order puts the composite children first
    let mut images = Vec::with_capacity(d);
    for c in children {
        match c {
            Tree::Leaf(v) if images.len() == 2 * n => images.push(v.index()),
            _ if images.len() < 2 * n => images.extend(
                flat_node(c)
                    .filter(|l| l.len() == n)
                    .ok_or_else(not_second)?,
            ),
            _ => return Err(not_second()),
        }
    }
    if images.len() != d {
        return Err(not_second());
    }
    let sigma = Permutation::from_images(images)?;
    let rule = rule.load().apply_permutation(&sigma)?;
    if rule.coefficient(m) != 1 {
        return Err(not_second());
    }
    let mut lhs = IdentityCombination::new(n, d)?;
    lhs.add_term(1, m.clone())?;
    lhs.sub(&rule)
}
