//! Weighted polynomial ring descriptors and monomial orders.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::Monomial;

/// Admissible monomial orders. All of them refine the weighted degree except
/// plain `Lex`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum MonomialOrder {
    /// Weighted degree, ties broken reverse-lexicographically.
    WeightedGrevlex,
    Lex,
    /// Product of two weighted grevlex orders; the first `usize` variables
    /// form the block being eliminated.
    BlockElimination(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Variable {
    pub name: String,
    pub weight: u32,
}

#[derive(Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    vars: Vec<Variable>,
    order: MonomialOrder,
    field: Field,
}

pub type RingRef = Arc<Ring>;

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    pub fn new<S: Into<String>>(
        vars: impl IntoIterator<Item = (S, u32)>,
        order: MonomialOrder,
        field: Field,
    ) -> Result<RingRef> {
        let vars: Vec<Variable> = vars
            .into_iter()
            .map(|(name, weight)| Variable {
                name: name.into(),
                weight,
            })
            .collect();
        let mut seen = HashSet::new();
        for v in &vars {
            if !valid_name(&v.name) {
                return Err(Error::InvalidRing(format!(
                    "bad variable name {:?}",
                    v.name
                )));
            }
            if v.weight == 0 {
                return Err(Error::InvalidRing(format!(
                    "variable {} has weight 0",
                    v.name
                )));
            }
            if !seen.insert(v.name.as_str()) {
                return Err(Error::InvalidRing(format!("duplicate variable {}", v.name)));
            }
        }
        if let MonomialOrder::BlockElimination(b) = order {
            if b > vars.len() {
                return Err(Error::InvalidRing(format!(
                    "elimination block of size {b} exceeds {} variables",
                    vars.len()
                )));
            }
        }
        Ok(Arc::new(Ring { vars, order, field }))
    }

    /// Variables of weight one, graded reverse lexicographic order.
    pub fn standard<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        field: Field,
    ) -> Result<RingRef> {
        Ring::new(
            names.into_iter().map(|n| (n, 1)),
            MonomialOrder::WeightedGrevlex,
            field,
        )
    }

    pub fn with_order(&self, order: MonomialOrder) -> Result<RingRef> {
        Ring::new(
            self.vars.iter().map(|v| (v.name.clone(), v.weight)),
            order,
            self.field,
        )
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[Variable] {
        &self.vars
    }

    pub fn name(&self, i: usize) -> &str {
        &self.vars[i].name
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.vars[i].weight
    }

    pub fn weights(&self) -> Vec<u32> {
        self.vars.iter().map(|v| v.weight).collect()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v.name == name)
    }

    pub fn require_var(&self, name: &str) -> Result<usize> {
        self.var_index(name)
            .ok_or_else(|| Error::InvalidArgument(format!("ring has no variable {name}")))
    }

    /// Same variables, weights and field (the order may differ).
    pub fn same_variables(&self, other: &Ring) -> bool {
        self.vars == other.vars && self.field == other.field
    }

    pub fn degree(&self, m: &Monomial) -> u64 {
        m.exponents()
            .iter()
            .zip(&self.vars)
            .map(|(&e, v)| e as u64 * v.weight as u64)
            .sum()
    }

    fn partial_degree(&self, m: &Monomial, range: std::ops::Range<usize>) -> u64 {
        m.exponents()[range.clone()]
            .iter()
            .zip(&self.vars[range])
            .map(|(&e, v)| e as u64 * v.weight as u64)
            .sum()
    }

    /// Compares two monomials of this ring.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let n = self.vars.len();
        match self.order {
            MonomialOrder::Lex => a.exponents().cmp(b.exponents()),
            MonomialOrder::WeightedGrevlex => self.grevlex(a, b, 0..n),
            MonomialOrder::BlockElimination(k) => self
                .grevlex(a, b, 0..k)
                .then_with(|| self.grevlex(a, b, k..n)),
        }
    }

    fn grevlex(&self, a: &Monomial, b: &Monomial, range: std::ops::Range<usize>) -> Ordering {
        let da = self.partial_degree(a, range.clone());
        let db = self.partial_degree(b, range.clone());
        da.cmp(&db).then_with(|| {
            let (ea, eb) = (a.exponents(), b.exponents());
            for i in range.rev() {
                if ea[i] != eb[i] {
                    return eb[i].cmp(&ea[i]);
                }
            }
            Ordering::Equal
        })
    }
}

pub fn same_ring(a: &RingRef, b: &RingRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.field)?;
        for (i, v) in self.vars.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if v.weight == 1 {
                write!(f, "{}", v.name)?;
            } else {
                write!(f, "{}:{}", v.name, v.weight)?;
            }
        }
        write!(f, "] {:?}", self.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn rejects_bad_descriptors() {
        assert!(Ring::standard(["x", "x"], Field::Rational).is_err());
        assert!(Ring::new([("x", 0)], MonomialOrder::Lex, Field::Rational).is_err());
        assert!(Ring::new([("2x", 1)], MonomialOrder::Lex, Field::Rational).is_err());
        assert!(Ring::new(
            [("x", 1)],
            MonomialOrder::BlockElimination(2),
            Field::Rational
        )
        .is_err());
    }

    #[test]
    fn weighted_grevlex_sorts_heavy_variable() {
        let r = Ring::new(
            [("x", 1), ("y", 1), ("T", 2)],
            MonomialOrder::WeightedGrevlex,
            Field::Rational,
        )
        .unwrap();
        // T has weight 2 so T > x*y is decided by revlex, T > x by degree
        assert_eq!(
            r.cmp(&mono(&[0, 0, 1]), &mono(&[1, 0, 0])),
            Ordering::Greater
        );
        assert_eq!(
            r.cmp(&mono(&[1, 1, 0]), &mono(&[0, 0, 1])),
            Ordering::Greater
        );
        assert_eq!(
            r.cmp(&mono(&[2, 0, 0]), &mono(&[1, 1, 0])),
            Ordering::Greater
        );
    }

    #[test]
    fn block_order_eliminates_front() {
        let r = Ring::new(
            [("t", 1), ("x", 1), ("y", 1)],
            MonomialOrder::BlockElimination(1),
            Field::Rational,
        )
        .unwrap();
        assert_eq!(
            r.cmp(&mono(&[1, 0, 0]), &mono(&[0, 5, 5])),
            Ordering::Greater
        );
        assert_eq!(
            r.cmp(&mono(&[0, 2, 0]), &mono(&[0, 1, 1])),
            Ordering::Greater
        );
    }
}
