use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::{AssociationType, Permutation, Variable};
use crate::error::{Error, Result};

/// A nonassociative monomial tree with no ordering constraints on children.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Tree {
    Leaf(Variable),
    Node(Vec<Tree>),
}

impl Tree {
    pub fn leaf(index: usize) -> Self {
        Tree::Leaf(Variable::new(index))
    }

    pub fn node(children: Vec<Tree>) -> Self {
        Tree::Node(children)
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Tree::Leaf(_))
    }

    pub fn degree(&self) -> usize {
        match self {
            Tree::Leaf(_) => 1,
            Tree::Node(children) => children.iter().map(Tree::degree).sum(),
        }
    }

    /// Number of internal nodes, i.e. operation applications.
    pub fn node_count(&self) -> usize {
        match self {
            Tree::Leaf(_) => 0,
            Tree::Node(children) => 1 + children.iter().map(Tree::node_count).sum::<usize>(),
        }
    }

    /// Leaves in left-to-right order.
    pub fn leaves(&self) -> Vec<Variable> {
        let mut out = Vec::with_capacity(self.degree());
        self.push_leaves(&mut out);
        out
    }

    fn push_leaves(&self, out: &mut Vec<Variable>) {
        match self {
            Tree::Leaf(v) => out.push(*v),
            Tree::Node(children) => children.iter().for_each(|c| c.push_leaves(out)),
        }
    }

    pub fn relabel(&self, f: &impl Fn(Variable) -> Variable) -> Tree {
        match self {
            Tree::Leaf(v) => Tree::Leaf(f(*v)),
            Tree::Node(children) => Tree::Node(children.iter().map(|c| c.relabel(f)).collect()),
        }
    }

    /// Replaces leaves, in left-to-right order, by `labels`.
    pub(crate) fn with_leaves(&self, labels: &mut impl Iterator<Item = Variable>) -> Tree {
        match self {
            Tree::Leaf(_) => Tree::Leaf(labels.next().expect("too few labels")),
            Tree::Node(children) => {
                Tree::Node(children.iter().map(|c| c.with_leaves(labels)).collect())
            }
        }
    }

    fn validate(&self, arity: usize, seen: &mut u32) -> Result<()> {
        match self {
            Tree::Leaf(v) => {
                let bit = 1u32 << v.index();
                if *seen & bit != 0 {
                    return Err(Error::RepeatedVariable(v.to_string()));
                }
                *seen |= bit;
                Ok(())
            }
            Tree::Node(children) => {
                if children.len() != arity {
                    return Err(Error::WrongArity {
                        expected: arity,
                        found: children.len(),
                    });
                }
                children.iter().try_for_each(|c| c.validate(arity, seen))
            }
        }
    }

    fn canonicalize(&mut self) {
        if let Tree::Node(children) = self {
            children.iter_mut().for_each(Tree::canonicalize);
            children.sort_by(canonical_cmp);
        }
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Leaf(v) => write!(f, "{v}"),
            Tree::Node(children) => {
                f.write_str("[")?;
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str("]")
            }
        }
    }
}

impl FromStr for Tree {
    type Err = String;

    /// Parses the nested bracket notation, e.g. `[[a,b,c],d,e]`. Whitespace
    /// is ignored; `{}` and `()` are accepted as brackets too.
    fn from_str(s: &str) -> Result<Self, String> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let tree = parse_tree(&chars, &mut pos)?;
        if pos != chars.len() {
            return Err(format!("trailing input after position {pos}"));
        }
        Ok(tree)
    }
}

fn parse_tree(chars: &[char], pos: &mut usize) -> Result<Tree, String> {
    match chars.get(*pos) {
        Some(&open @ ('[' | '{' | '(')) => {
            let close = match open {
                '[' => ']',
                '{' => '}',
                _ => ')',
            };
            *pos += 1;
            let mut children = vec![parse_tree(chars, pos)?];
            loop {
                match chars.get(*pos) {
                    Some(',') => {
                        *pos += 1;
                        children.push(parse_tree(chars, pos)?);
                    }
                    Some(&c) if c == close => {
                        *pos += 1;
                        return Ok(Tree::Node(children));
                    }
                    Some(c) => return Err(format!("unexpected '{c}'")),
                    None => return Err(format!("missing '{close}'")),
                }
            }
        }
        Some(&c) => match Variable::from_letter(c) {
            Some(v) => {
                *pos += 1;
                Ok(Tree::Leaf(v))
            }
            None => Err(format!("unexpected '{c}'")),
        },
        None => Err("unexpected end of input".into()),
    }
}

/// Subtree order: internal nodes before leaves, larger degree first,
/// then children compared in order.
pub(crate) fn shape_cmp(a: &Tree, b: &Tree) -> Ordering {
    match (a, b) {
        (Tree::Leaf(_), Tree::Leaf(_)) => Ordering::Equal,
        (Tree::Node(_), Tree::Leaf(_)) => Ordering::Less,
        (Tree::Leaf(_), Tree::Node(_)) => Ordering::Greater,
        (Tree::Node(xs), Tree::Node(ys)) => b
            .degree()
            .cmp(&a.degree())
            .then_with(|| {
                xs.iter()
                    .zip(ys)
                    .map(|(x, y)| shape_cmp(x, y))
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal)
            })
            .then_with(|| xs.len().cmp(&ys.len())),
    }
}

// Only meaningful when the two trees have the same shape.
fn leaf_cmp(a: &Tree, b: &Tree) -> Ordering {
    match (a, b) {
        (Tree::Leaf(x), Tree::Leaf(y)) => x.cmp(y),
        (Tree::Node(xs), Tree::Node(ys)) => xs
            .iter()
            .zip(ys)
            .map(|(x, y)| leaf_cmp(x, y))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal),
        _ => unreachable!("leaf_cmp on different shapes"),
    }
}

/// The global monomial order: shape first, then leaf sequence.
pub(crate) fn canonical_cmp(a: &Tree, b: &Tree) -> Ordering {
    shape_cmp(a, b).then_with(|| leaf_cmp(a, b))
}

/// A multilinear monomial in canonical form: at every node the children
/// are sorted by the global monomial order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    arity: u8,
    tree: Tree,
}

/// Rewrites `raw` to the canonical representative of its class under
/// complete symmetry.
pub fn straighten(raw: Tree, arity: usize) -> Result<Monomial> {
    let mut seen = 0u32;
    raw.validate(arity, &mut seen)?;
    Ok(Monomial::canonical(raw, arity))
}

impl Monomial {
    /// Canonicalizes a tree already known to be multilinear of this arity.
    pub(crate) fn canonical(mut tree: Tree, arity: usize) -> Self {
        tree.canonicalize();
        Monomial {
            arity: arity as u8,
            tree,
        }
    }

    pub fn variable(v: Variable, arity: usize) -> Self {
        Monomial {
            arity: arity as u8,
            tree: Tree::Leaf(v),
        }
    }

    pub fn parse(s: &str, arity: usize) -> Result<Self> {
        let tree: Tree = s.parse().map_err(|m| Error::parse(0, m))?;
        straighten(tree, arity)
    }

    pub fn arity(&self) -> usize {
        self.arity as usize
    }

    pub fn degree(&self) -> usize {
        self.tree.degree()
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn into_tree(self) -> Tree {
        self.tree
    }

    pub fn leaves(&self) -> Vec<Variable> {
        self.tree.leaves()
    }

    pub fn association_type(&self) -> AssociationType {
        AssociationType::of_tree(&self.tree, self.arity())
    }

    /// Relabels every leaf by `sigma` and re-straightens.
    pub fn permute(&self, sigma: &Permutation) -> Monomial {
        Monomial::canonical(self.tree.relabel(&|v| sigma.apply(v)), self.arity())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.arity
            .cmp(&other.arity)
            .then_with(|| canonical_cmp(&self.tree, &other.tree))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.tree.fmt(f)
    }
}
