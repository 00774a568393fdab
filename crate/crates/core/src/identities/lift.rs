use std::fmt;

use crate::algebra::{straighten, IdentityCombination, Tree, Variable};
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiftRecipe {
    /// Replace the variable `x` by the operation applied to `x` and the
    /// new variables.
    Substitute(Variable),
    /// Apply the operation to the whole identity and the new variables.
    Embed,
}

impl fmt::Display for LiftRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LiftRecipe::Substitute(x) => write!(f, "substitute {x}"),
            LiftRecipe::Embed => write!(f, "embed"),
        }
    }
}

/// A degree-raising consequence of an identity.
#[derive(Clone, Debug)]
pub struct LiftedConsequence {
    pub recipe: LiftRecipe,
    pub result: IdentityCombination,
}

impl LiftedConsequence {
    /// True when straightening cancelled every term.
    pub fn collapsed(&self) -> bool {
        self.result.is_empty()
    }
}

fn substitute(tree: &Tree, x: Variable, fresh: &[Variable]) -> Tree {
    match tree {
        Tree::Leaf(v) if *v == x => Tree::Node(
            std::iter::once(Tree::Leaf(x))
                .chain(fresh.iter().map(|&h| Tree::Leaf(h)))
                .collect(),
        ),
        Tree::Leaf(_) => tree.clone(),
        Tree::Node(children) => {
            Tree::Node(children.iter().map(|c| substitute(c, x, fresh)).collect())
        }
    }
}

/// All consequences one operation higher: one substitution per variable,
/// in variable order, then the embedding. The new variables come right
/// after the old ones.
pub fn lift_identity(id: &IdentityCombination) -> Result<Vec<LiftedConsequence>> {
    let (n, d) = (id.arity(), id.degree());
    let fresh: Vec<Variable> = (d..d + n - 1).map(Variable::new).collect();
    let recipes = (0..d)
        .map(|i| LiftRecipe::Substitute(Variable::new(i)))
        .chain([LiftRecipe::Embed]);
    recipes
        .map(|recipe| {
            let mut result = IdentityCombination::new(n, d + n - 1)?;
            for (m, c) in id.terms() {
                let raw = match recipe {
                    LiftRecipe::Substitute(x) => substitute(m.tree(), x, &fresh),
                    LiftRecipe::Embed => Tree::Node(
                        std::iter::once(m.tree().clone())
                            .chain(fresh.iter().map(|&h| Tree::Leaf(h)))
                            .collect(),
                    ),
                };
                result.add_term(c, straighten(raw, n)?)?;
            }
            Ok(LiftedConsequence { recipe, result })
        })
        .collect()
}
