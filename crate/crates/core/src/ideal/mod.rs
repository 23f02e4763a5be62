//! Ideals of weighted polynomial rings: membership, equality, elimination,
//! dimension and Hilbert functions, all through reduced Groebner bases.

mod dimension;
mod groebner;
mod hilbert;

use std::sync::OnceLock;

use serde::Serialize;

pub use dimension::max_independent_set;
pub use groebner::{Budget, GroebnerBasis, BUDGET_DEGREE_ENV, BUDGET_PAIRS_ENV};
pub use hilbert::{hilbert_from_monomials, series_numerator, HilbertTable};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::{same_ring, MonomialOrder, Ring, RingRef};

/// An ideal given by generators. The Groebner basis under the ring's own
/// order is computed on first use and cached.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: RingRef,
    generators: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
}

/// Outcome of comparing two ideals `A` (self) and `B` (other).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub equal: bool,
    /// `A ⊆ B`
    pub subset: bool,
    /// `A ⊇ B`
    pub superset: bool,
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: &RingRef, generators: impl IntoIterator<Item = Polynomial>) -> Result<Ideal> {
        let generators: Vec<Polynomial> = generators.into_iter().filter(|g| !g.is_zero()).collect();
        if generators.iter().any(|g| !same_ring(g.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators,
            gb: OnceLock::new(),
        })
    }

    pub fn from_strs(ring: &RingRef, gens: &[&str]) -> Result<Ideal> {
        let polys = gens
            .iter()
            .map(|s| crate::parse::parse_polynomial(ring, s))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, polys)
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(|g| g.is_homogeneous())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        Ideal::new(
            &self.ring,
            self.generators.iter().chain(&other.generators).cloned(),
        )
    }

    /// Moves every generator into `target` by variable name.
    pub fn embed(&self, target: &RingRef) -> Result<Ideal> {
        Ideal::new(
            target,
            self.generators
                .iter()
                .map(|g| g.embed(target))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    pub fn groebner(&self) -> Result<&GroebnerBasis> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        let gb = GroebnerBasis::compute(&self.ring, &self.generators, &Budget::from_env())?;
        Ok(self.gb.get_or_init(|| gb))
    }

    /// Uncached computation under another order or budget. The result lives
    /// in a copy of the ring carrying `order`.
    pub fn groebner_with(&self, order: MonomialOrder, budget: &Budget) -> Result<GroebnerBasis> {
        let ring = self.ring.with_order(order)?;
        let gens = self
            .generators
            .iter()
            .map(|g| g.reinterpret(&ring))
            .collect::<Result<Vec<_>>>()?;
        GroebnerBasis::compute(&ring, &gens, budget)
    }

    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        self.groebner()?.normal_form(p)
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    pub fn contains_all(&self, ps: &[Polynomial]) -> Result<bool> {
        for p in ps {
            if !self.contains(p)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn compare(&self, other: &Ideal) -> Result<Comparison> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let subset = other.contains_all(&self.generators)?;
        let superset = self.contains_all(&other.generators)?;
        Ok(Comparison {
            equal: subset && superset,
            subset,
            superset,
        })
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        Ok(self.compare(other)?.equal)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.groebner()?.is_unit())
    }

    /// `self ∩ k[remaining variables]`, computed with a block elimination
    /// order. The result lives in the subring of the kept variables, which
    /// inherits the weights and (non-block) order of this ring.
    pub fn eliminate(&self, drop: &[usize]) -> Result<Ideal> {
        let n = self.ring.nvars();
        if drop.iter().any(|&i| i >= n) {
            return Err(Error::InvalidArgument(
                "eliminated variable out of range".into(),
            ));
        }
        let keep: Vec<usize> = (0..n).filter(|i| !drop.contains(i)).collect();
        let mut drop_sorted: Vec<usize> = drop.to_vec();
        drop_sorted.sort_unstable();
        drop_sorted.dedup();

        let layout: Vec<usize> = drop_sorted.iter().chain(&keep).copied().collect();
        let elim_ring = Ring::new(
            layout
                .iter()
                .map(|&i| (self.ring.name(i).to_string(), self.ring.weight(i))),
            MonomialOrder::BlockElimination(drop_sorted.len()),
            self.ring.field(),
        )?;
        let mut to_elim = vec![0; n];
        for (slot, &i) in layout.iter().enumerate() {
            to_elim[i] = slot;
        }
        let gens = self
            .generators
            .iter()
            .map(|g| g.relabel(&elim_ring, &to_elim))
            .collect::<Result<Vec<_>>>()?;
        let gb = GroebnerBasis::compute(&elim_ring, &gens, &Budget::from_env())?;

        let sub_order = match self.ring.order() {
            MonomialOrder::BlockElimination(_) => MonomialOrder::WeightedGrevlex,
            o => o,
        };
        let sub = Ring::new(
            keep.iter()
                .map(|&i| (self.ring.name(i).to_string(), self.ring.weight(i))),
            sub_order,
            self.ring.field(),
        )?;
        let nd = drop_sorted.len();
        let back: Vec<usize> = (0..n).map(|slot| slot.saturating_sub(nd)).collect();
        let kept = gb
            .basis()
            .iter()
            .filter(|g| (0..nd).all(|v| !g.uses_var(v)))
            .map(|g| g.relabel(&sub, &back))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&sub, kept)
    }

    pub fn eliminate_names(&self, names: &[&str]) -> Result<Ideal> {
        let idx = names
            .iter()
            .map(|n| self.ring.require_var(n))
            .collect::<Result<Vec<_>>>()?;
        self.eliminate(&idx)
    }

    /// Krull dimension of the quotient ring.
    pub fn krull_dimension(&self) -> Result<usize> {
        let gb = self.groebner()?;
        if gb.is_unit() {
            return Err(Error::UnitIdeal);
        }
        Ok(max_independent_set(
            self.ring.nvars(),
            &gb.leading_monomials(),
        ))
    }

    /// Dimensions of the weighted graded pieces of the quotient in degrees
    /// `0..=up_to`. Requires homogeneous generators.
    pub fn hilbert_function(&self, up_to: u64) -> Result<HilbertTable> {
        if !self.is_homogeneous() {
            return Err(Error::Inhomogeneous);
        }
        let gb = self.groebner()?;
        Ok(hilbert_from_monomials(
            &gb.leading_monomials(),
            &self.ring.weights(),
            up_to,
        ))
    }
}
