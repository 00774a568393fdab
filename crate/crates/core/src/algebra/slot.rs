use std::fmt;

use super::Variable;
use crate::error::{Error, Result};

/// An ordered n-tuple of distinct variables; entry `i` fills slot `i + 1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SlotTuple(Vec<Variable>);

impl SlotTuple {
    pub fn new(entries: Vec<Variable>) -> Result<Self> {
        let mut seen = 0u32;
        for v in &entries {
            let bit = 1 << v.index();
            if seen & bit != 0 {
                return Err(Error::RepeatedVariable(v.to_string()));
            }
            seen |= bit;
        }
        Ok(SlotTuple(entries))
    }

    pub(crate) fn new_unchecked(entries: Vec<Variable>) -> Self {
        SlotTuple(entries)
    }

    pub fn entries(&self) -> &[Variable] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    /// Position of this tuple in [`order_slot_tuples`] for `degree`
    /// variables.
    pub fn index(&self, degree: usize) -> usize {
        let n = self.0.len();
        let mut used = 0u32;
        let mut index = 0;
        for (i, v) in self.0.iter().enumerate() {
            let smaller_unused = (0..v.index()).filter(|&j| used & (1 << j) == 0).count();
            index += smaller_unused * falling_factorial(degree - i - 1, n - i - 1);
            used |= 1 << v.index();
        }
        index
    }
}

impl fmt::Display for SlotTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

fn falling_factorial(m: usize, k: usize) -> usize {
    (0..k).map(|i| m - i).product()
}

/// `n! * C(d, n)`.
pub fn slot_tuple_count(arity: usize, degree: usize) -> usize {
    if degree < arity {
        0
    } else {
        falling_factorial(degree, arity)
    }
}

/// All n-tuples of distinct variables from `0..degree`, lexicographic.
pub fn order_slot_tuples(arity: usize, degree: usize) -> Vec<SlotTuple> {
    let mut out = Vec::with_capacity(slot_tuple_count(arity, degree));
    let mut current = Vec::with_capacity(arity);
    extend_tuples(arity, degree, &mut current, &mut out);
    out
}

fn extend_tuples(
    arity: usize,
    degree: usize,
    current: &mut Vec<Variable>,
    out: &mut Vec<SlotTuple>,
) {
    if current.len() == arity {
        out.push(SlotTuple(current.clone()));
        return;
    }
    for i in 0..degree {
        let v = Variable::new(i);
        if !current.contains(&v) {
            current.push(v);
            extend_tuples(arity, degree, current, out);
            current.pop();
        }
    }
}
