//! Buchberger's algorithm with the normal selection strategy and the
//! Gebauer–Möller pair criteria.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::{merge_scaled, Polynomial, Term};
use crate::ring::{same_ring, RingRef};

/// Work limits for a Groebner computation. Exceeding either limit aborts
/// with [`Error::BudgetExceeded`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of S-pairs reduced.
    pub max_pairs: usize,
    /// Maximum weighted degree of an S-pair lcm.
    pub max_degree: Option<u64>,
}

pub const BUDGET_PAIRS_ENV: &str = "UNPROJ_GB_MAX_PAIRS";
pub const BUDGET_DEGREE_ENV: &str = "UNPROJ_GB_MAX_DEGREE";

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_pairs: 200_000,
            max_degree: None,
        }
    }
}

impl Budget {
    /// Default budget, overridden by `UNPROJ_GB_MAX_PAIRS` and
    /// `UNPROJ_GB_MAX_DEGREE` when set.
    pub fn from_env() -> Budget {
        let mut b = Budget::default();
        if let Some(v) = std::env::var(BUDGET_PAIRS_ENV)
            .ok()
            .and_then(|s| s.parse().ok())
        {
            b.max_pairs = v;
        }
        if let Some(v) = std::env::var(BUDGET_DEGREE_ENV)
            .ok()
            .and_then(|s| s.parse().ok())
        {
            b.max_degree = Some(v);
        }
        b
    }
}

/// A reduced Groebner basis, sorted by increasing leading monomial.
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis {
    ring: RingRef,
    basis: Vec<Polynomial>,
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Fully reduces `p` modulo `basis` (any order of the divisors).
pub(crate) fn reduce(p: &Polynomial, basis: &[&Polynomial]) -> Polynomial {
    let ring = p.ring().clone();
    let field = ring.field();
    let mut remainder: Vec<Term> = Vec::new();
    let mut work: Vec<Term> = p.terms().to_vec();
    let mut start = 0;
    while start < work.len() {
        let lt = &work[start];
        let divisor = basis
            .iter()
            .find(|g| g.leading_monomial().is_some_and(|lm| lm.divides(&lt.mono)));
        match divisor {
            Some(g) => {
                let glt = g.leading_term().unwrap();
                let m = lt.mono.div(&glt.mono).unwrap();
                let c = field.neg(&field.div(&lt.coeff, &glt.coeff).unwrap());
                work = merge_scaled(&ring, &work[start..], &c, &m, g.terms());
                start = 0;
            }
            None => {
                remainder.push(work[start].clone());
                start += 1;
            }
        }
    }
    Polynomial::from_sorted(&ring, remainder)
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let field = f.ring().field();
    let (ft, gt) = (f.leading_term().unwrap(), g.leading_term().unwrap());
    let lcm = ft.mono.lcm(&gt.mono);
    let a = f.mul_term(&field.inv(&ft.coeff).unwrap(), &lcm.div(&ft.mono).unwrap());
    let minus_inv = field.neg(&field.inv(&gt.coeff).unwrap());
    a.add_scaled(&minus_inv, &lcm.div(&gt.mono).unwrap(), g)
}

struct Engine<'a> {
    ring: RingRef,
    budget: &'a Budget,
    polys: Vec<Polynomial>,
    active: Vec<bool>,
    /// Sorted so the smallest lcm is last.
    pairs: Vec<Pair>,
}

impl<'a> Engine<'a> {
    fn lm(&self, i: usize) -> &Monomial {
        self.polys[i].leading_monomial().unwrap()
    }

    fn active_refs(&self) -> Vec<&Polynomial> {
        self.polys
            .iter()
            .zip(&self.active)
            .filter(|(_, &a)| a)
            .map(|(p, _)| p)
            .collect()
    }

    fn pair_cmp(&self, a: &Pair, b: &Pair) -> Ordering {
        // descending, so pop() yields the smallest lcm; ties by index
        self.ring
            .cmp(&b.lcm, &a.lcm)
            .then_with(|| (b.j, b.i).cmp(&(a.j, a.i)))
    }

    fn update(&mut self, h: Polynomial) {
        let hlm = h.leading_monomial().unwrap().clone();
        let hidx = self.polys.len();
        let candidates: Vec<usize> = (0..self.polys.len()).filter(|&g| self.active[g]).collect();
        let lcms: Vec<Monomial> = candidates.iter().map(|&g| hlm.lcm(self.lm(g))).collect();

        let mut kept: Vec<usize> = Vec::new();
        for (pos, &g) in candidates.iter().enumerate() {
            let coprime = hlm.is_coprime(self.lm(g));
            let dominated = || {
                candidates[pos + 1..]
                    .iter()
                    .enumerate()
                    .any(|(off, _)| lcms[pos + 1 + off].divides(&lcms[pos]))
                    || kept.iter().any(|&k| lcms[k].divides(&lcms[pos]))
            };
            if coprime || !dominated() {
                kept.push(pos);
            }
        }
        let new_pairs: Vec<Pair> = kept
            .into_iter()
            .filter(|&pos| !hlm.is_coprime(self.lm(candidates[pos])))
            .map(|pos| Pair {
                i: candidates[pos],
                j: hidx,
                lcm: lcms[pos].clone(),
            })
            .collect();

        let polys = &self.polys;
        self.pairs.retain(|p| {
            let lm_i = polys[p.i].leading_monomial().unwrap();
            let lm_j = polys[p.j].leading_monomial().unwrap();
            !(hlm.divides(&p.lcm) && hlm.lcm(lm_i) != p.lcm && hlm.lcm(lm_j) != p.lcm)
        });
        self.pairs.extend(new_pairs);
        let mut pairs = std::mem::take(&mut self.pairs);
        pairs.sort_by(|a, b| self.pair_cmp(a, b));
        self.pairs = pairs;

        for g in candidates {
            if hlm.divides(self.lm(g)) {
                self.active[g] = false;
            }
        }
        self.polys.push(h);
        self.active.push(true);
    }

    fn run(mut self, generators: &[Polynomial]) -> Result<Vec<Polynomial>> {
        for g in generators {
            let h = reduce(g, &self.active_refs());
            if !h.is_zero() {
                self.update(h.monic());
            }
        }
        let mut steps = 0usize;
        while let Some(pair) = self.pairs.pop() {
            steps += 1;
            if steps > self.budget.max_pairs {
                return Err(Error::BudgetExceeded(format!(
                    "more than {} S-pairs",
                    self.budget.max_pairs
                )));
            }
            if let Some(maxd) = self.budget.max_degree {
                let d = self.ring.degree(&pair.lcm);
                if d > maxd {
                    return Err(Error::BudgetExceeded(format!(
                        "S-pair of degree {d} exceeds {maxd}"
                    )));
                }
            }
            let s = s_polynomial(&self.polys[pair.i], &self.polys[pair.j]);
            let h = reduce(&s, &self.active_refs());
            if !h.is_zero() {
                self.update(h.monic());
            }
        }
        Ok(self
            .polys
            .into_iter()
            .zip(self.active)
            .filter(|(_, a)| *a)
            .map(|(p, _)| p)
            .collect())
    }
}

/// Turns a Groebner basis into the reduced one.
fn interreduce(ring: &RingRef, mut basis: Vec<Polynomial>) -> Vec<Polynomial> {
    basis.sort_by(|a, b| ring.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        let lm = g.leading_monomial().unwrap();
        if !minimal
            .iter()
            .any(|h| h.leading_monomial().unwrap().divides(lm))
        {
            minimal.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<&Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, p)| p)
            .collect();
        reduced.push(reduce(&minimal[i], &others).monic());
    }
    reduced
}

impl GroebnerBasis {
    /// Computes the reduced Groebner basis of the ideal generated by
    /// `generators` under the order of `ring`.
    pub fn compute(
        ring: &RingRef,
        generators: &[Polynomial],
        budget: &Budget,
    ) -> Result<GroebnerBasis> {
        if generators.iter().any(|g| !same_ring(g.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        let engine = Engine {
            ring: ring.clone(),
            budget,
            polys: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
        };
        let basis = engine.run(generators)?;
        let basis = interreduce(ring, basis);
        Ok(GroebnerBasis {
            ring: ring.clone(),
            basis,
        })
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis
            .iter()
            .map(|g| g.leading_monomial().unwrap().clone())
            .collect()
    }

    pub fn is_unit(&self) -> bool {
        self.basis.iter().any(|g| g.is_constant())
    }

    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        if !same_ring(p.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        let refs: Vec<&Polynomial> = self.basis.iter().collect();
        Ok(reduce(p, &refs))
    }

    /// Leading coefficients are one and no term of any element is divisible
    /// by the leading monomial of another.
    pub fn is_reduced(&self) -> bool {
        let field = self.ring.field();
        let lms = self.leading_monomials();
        self.basis.iter().enumerate().all(|(i, g)| {
            field.is_one(g.leading_coeff().unwrap())
                && g.terms().iter().all(|t| {
                    lms.iter()
                        .enumerate()
                        .all(|(j, lm)| j == i || !lm.divides(&t.mono))
                })
        })
    }

    /// Re-checks Buchberger's criterion on every pair, without any pair
    /// elimination.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let refs: Vec<&Polynomial> = self.basis.iter().collect();
        (0..self.basis.len()).all(|i| {
            (i + 1..self.basis.len())
                .all(|j| reduce(&s_polynomial(&self.basis[i], &self.basis[j]), &refs).is_zero())
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::parse::parse_polynomial;
    use crate::ring::{MonomialOrder, Ring};

    fn polys(r: &RingRef, s: &[&str]) -> Vec<Polynomial> {
        s.iter().map(|x| parse_polynomial(r, x).unwrap()).collect()
    }

    #[test]
    fn single_binomial_is_its_own_basis() {
        let r = Ring::standard(["x00", "x01", "x10", "x11"], Field::Rational).unwrap();
        let gb = GroebnerBasis::compute(&r, &polys(&r, &["x00*x11 - x01*x10"]), &Budget::default())
            .unwrap();
        // grevlex: x01*x10 leads x00*x11
        assert_eq!(gb.basis(), polys(&r, &["x01*x10 - x00*x11"]).as_slice());
        let gb =
            GroebnerBasis::compute(&r, &polys(&r, &["x01", "x00"]), &Budget::default()).unwrap();
        assert_eq!(gb.len(), 2);
    }

    #[test]
    fn textbook_example() {
        // Cox-Little-O'Shea: x^3 - 2xy, x^2 y - 2y^2 + x under grlex-like order
        let r = Ring::standard(["x", "y"], Field::Rational).unwrap();
        let gb = GroebnerBasis::compute(
            &r,
            &polys(&r, &["x^3 - 2*x*y", "x^2*y - 2*y^2 + x"]),
            &Budget::default(),
        )
        .unwrap();
        assert!(gb.is_reduced());
        assert!(gb.satisfies_buchberger_criterion());
        let expected = polys(&r, &["y^2 - 1/2*x", "x*y", "x^2"]);
        let mut got = gb.basis().to_vec();
        got.sort_by_key(|p| p.to_string());
        let mut exp = expected;
        exp.sort_by_key(|p| p.to_string());
        assert_eq!(got, exp);
    }

    #[test]
    fn lex_basis() {
        let r = Ring::new([("x", 1), ("y", 1)], MonomialOrder::Lex, Field::Rational).unwrap();
        let gb = GroebnerBasis::compute(
            &r,
            &polys(&r, &["x^2 + y^2 - 1", "x - y"]),
            &Budget::default(),
        )
        .unwrap();
        assert_eq!(gb.basis(), polys(&r, &["y^2 - 1/2", "x - y"]).as_slice());
    }

    #[test]
    fn budget_is_enforced() {
        let r = Ring::standard(["x", "y", "z"], Field::Rational).unwrap();
        let gens = polys(&r, &["x^3 - y*z^2", "y^3 - x*z^2", "z^3 - x*y^2"]);
        let tiny = Budget {
            max_pairs: 1,
            max_degree: None,
        };
        assert!(matches!(
            GroebnerBasis::compute(&r, &gens, &tiny),
            Err(Error::BudgetExceeded(_))
        ));
        let shallow = Budget {
            max_pairs: 1000,
            max_degree: Some(3),
        };
        assert!(matches!(
            GroebnerBasis::compute(&r, &gens, &shallow),
            Err(Error::BudgetExceeded(_))
        ));
    }
}
