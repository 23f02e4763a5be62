//! Rational normal scrolls `F(m,n)` as determinantal rings, the line `Γ`
//! on them, the shift map `φ`, and the algebraic checks on `Hom(I, S)`.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::ideal::{HilbertTable, Ideal};
use crate::linalg::{column_kernel, rank};
use crate::map::RingMap;
use crate::monomial::{monomials_of_degree, Monomial};
use crate::poly::Polynomial;
use crate::ring::{MonomialOrder, Ring, RingRef};

/// The 2x2 minors `a.0 * b.1 - b.0 * a.1` of a two-row matrix given by columns.
/// Zero minors are skipped.
pub fn two_by_two_minors(columns: &[(Polynomial, Polynomial)]) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    for (a, ca) in columns.iter().enumerate() {
        for cb in &columns[a + 1..] {
            let minor = ca.0.try_mul(&cb.1)?.try_sub(&cb.0.try_mul(&ca.1)?)?;
            if !minor.is_zero() {
                out.push(minor);
            }
        }
    }
    Ok(out)
}

/// Writes each polynomial as a coefficient vector over the union of their
/// supports.
pub(crate) fn coefficient_columns(field: Field, polys: &[Polynomial]) -> (Vec<Vec<Scalar>>, usize) {
    let mut index: BTreeMap<Monomial, usize> = BTreeMap::new();
    for p in polys {
        for t in p.terms() {
            let next = index.len();
            index.entry(t.mono.clone()).or_insert(next);
        }
    }
    let height = index.len();
    let cols = polys
        .iter()
        .map(|p| {
            let mut v = vec![field.zero(); height];
            for t in p.terms() {
                v[index[&t.mono]] = t.coeff.clone();
            }
            v
        })
        .collect();
    (cols, height)
}

/// The scroll `F(m,n)` in `P^{m+n+1}` with coordinates `x00..x0m, x10..x1n`.
#[derive(Clone, Debug)]
pub struct ScrollData {
    m: usize,
    n: usize,
    ring: RingRef,
    q: Ideal,
    i: Ideal,
    phi: Vec<Option<usize>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScrollSummary {
    pub m: usize,
    pub n: usize,
    pub variables: Vec<String>,
    pub weights: Vec<u32>,
    pub q: Vec<String>,
    pub i: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisDegreeRow {
    pub degree: u64,
    pub b_count: usize,
    pub hilbert: u64,
    pub rank: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct BasisClaimReport {
    pub rows: Vec<BasisDegreeRow>,
    pub g_images_distinct: bool,
    pub g_images_avoid_zt: bool,
    pub rewriting_lands_in_b: bool,
    /// Members of the unrestricted family `x0m^a x1n^b` that lie in `Q1`.
    pub literal_conflicts: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SecondClaimRow {
    pub degree: u64,
    pub kernel_dim: usize,
    pub q1_dim: usize,
    pub contained: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SecondClaimReport {
    pub rows: Vec<SecondClaimRow>,
    pub holds: bool,
}

pub fn build_scroll(m: usize, n: usize) -> Result<ScrollData> {
    ScrollData::new(m, n, Field::Rational)
}

impl ScrollData {
    /// Requires `n >= m >= 1`.
    pub fn new(m: usize, n: usize, field: Field) -> Result<ScrollData> {
        if m < 1 || n < m {
            return Err(Error::InvalidArgument(format!(
                "F({m},{n}) needs n >= m >= 1"
            )));
        }
        ScrollData::with_blocks(m, n, field, "x")
    }

    /// Same construction without the `n >= m` normalisation; variables are
    /// named `{prefix}0i`, `{prefix}1j`.
    pub fn with_blocks(m: usize, n: usize, field: Field, prefix: &str) -> Result<ScrollData> {
        if m < 1 || n < 1 {
            return Err(Error::InvalidArgument(
                "scroll blocks must be non-empty".into(),
            ));
        }
        let names = (0..=m)
            .map(|i| format!("{prefix}0{i}"))
            .chain((0..=n).map(|j| format!("{prefix}1{j}")));
        let ring = Ring::new(names.map(|s| (s, 1)), MonomialOrder::WeightedGrevlex, field)?;
        let nv = m + n + 2;
        let phi: Vec<Option<usize>> = (0..nv)
            .map(|v| (v != m && v != nv - 1).then_some(v + 1))
            .collect();
        let mut s = ScrollData {
            m,
            n,
            ring: ring.clone(),
            q: Ideal::new(&ring, [])?,
            i: Ideal::new(&ring, [])?,
            phi,
        };
        let cols: Vec<(Polynomial, Polynomial)> = s
            .columns()
            .into_iter()
            .map(|(a, b)| (s.var(a), s.var(b)))
            .collect();
        s.q = Ideal::new(&ring, two_by_two_minors(&cols)?)?;
        s.i = Ideal::new(&ring, s.i_vars().into_iter().map(|v| s.var(v)))?;
        Ok(s)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> Field {
        self.ring.field()
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn q(&self) -> &Ideal {
        &self.q
    }

    pub fn i(&self) -> &Ideal {
        &self.i
    }

    /// Index of `x0i`.
    pub fn x0(&self, i: usize) -> usize {
        i
    }

    /// Index of `x1j`.
    pub fn x1(&self, j: usize) -> usize {
        self.m + 1 + j
    }

    pub fn var(&self, idx: usize) -> Polynomial {
        Polynomial::var(&self.ring, idx)
    }

    /// Column pairs of the scroll matrix as variable indices.
    pub fn columns(&self) -> Vec<(usize, usize)> {
        (0..self.m)
            .map(|i| (self.x0(i), self.x0(i + 1)))
            .chain((0..self.n).map(|j| (self.x1(j), self.x1(j + 1))))
            .collect()
    }

    /// The first-row variables, which generate `I`.
    pub fn i_vars(&self) -> Vec<usize> {
        self.columns().into_iter().map(|c| c.0).collect()
    }

    pub fn phi_var(&self, v: usize) -> Option<usize> {
        self.phi.get(v).copied().flatten()
    }

    /// `φ` on an element of `I`, term by term: a term `c·w` is read as
    /// `(c·w/u)·u` for the first generator `u` dividing it.
    pub fn phi(&self, p: &Polynomial) -> Result<Polynomial> {
        let mut out = Polynomial::zero(&self.ring);
        let nv = self.ring.nvars();
        for t in p.terms() {
            let u = t
                .mono
                .support()
                .find(|&v| self.phi[v].is_some())
                .ok_or_else(|| Error::InvalidArgument(format!("term of {p} does not lie in I")))?;
            let w = t
                .mono
                .div(&Monomial::var(nv, u))
                .unwrap()
                .mul(&Monomial::var(nv, self.phi[u].unwrap()));
            out = out.try_add(&Polynomial::monomial(&self.ring, t.coeff.clone(), w))?;
        }
        Ok(out)
    }

    /// `Q + (x00, x01)`.
    pub fn q1(&self) -> Result<Ideal> {
        Ideal::new(
            &self.ring,
            self.q
                .generators()
                .iter()
                .cloned()
                .chain([self.var(self.x0(0)), self.var(self.x0(1))]),
        )
    }

    /// `x01·u - x00·φ(u) ∈ Q` for every generator `u` of `I`.
    pub fn verify_phi(&self) -> Result<bool> {
        let x00 = self.var(self.x0(0));
        let x01 = self.var(self.x0(1));
        for u in self.i.generators() {
            let w = x01.try_mul(u)?.try_sub(&x00.try_mul(&self.phi(u)?)?)?;
            if !self.q.contains(&w)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `g: R -> k[z,s,t]`, `x0i ↦ z t^{m-i} s^i`, `x1j ↦ t^{n-j} s^j`.
    pub fn g_map(&self) -> Result<RingMap> {
        let target = Ring::standard(["z", "s", "t"], self.field())?;
        let mono = |z: u32, s: usize, t: usize| {
            Polynomial::monomial(
                &target,
                self.field().one(),
                Monomial::new(vec![z, s as u32, t as u32]),
            )
        };
        let images = (0..=self.m)
            .map(|i| mono(1, i, self.m - i))
            .chain((0..=self.n).map(|j| mono(0, j, self.n - j)));
        RingMap::new(&self.ring, &target, images.collect())
    }

    /// Every generator of `Q` maps to zero under `g`.
    pub fn verify_g_kernel(&self) -> Result<bool> {
        let g = self.g_map()?;
        for q in self.q.generators() {
            if !g.apply(q)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Membership in the four displayed families plus `{1}`, read literally.
    pub fn in_b_literal(&self, w: &Monomial) -> bool {
        let (m, n) = (self.m, self.n);
        let e = w.exponents();
        let only = |allowed: &[usize]| w.support().all(|v| allowed.contains(&v));
        if w.is_one() {
            return true;
        }
        let (x0m, x1n, x10) = (self.x0(m), self.x1(n), self.x1(0));
        let linear_once = |v: usize| e[v] == 1;
        if only(&[x0m, x1n]) {
            return true;
        }
        if only(&[x10, x1n]) {
            return true;
        }
        if (2..m).any(|i| linear_once(self.x0(i)) && only(&[self.x0(i), x0m, x1n])) {
            return true;
        }
        (1..n).any(|i| linear_once(self.x1(i)) && only(&[x10, self.x1(i), x1n]))
    }

    /// The basis `B`: the literal families without monomials divisible by
    /// `x00` or `x01`. For `m >= 2` this is exactly the literal set.
    pub fn in_b(&self, w: &Monomial) -> bool {
        w.exponent(self.x0(0)) == 0 && w.exponent(self.x0(1)) == 0 && self.in_b_literal(w)
    }

    /// Rewrites `w` modulo `Q1` into `B`; `None` when `w ∈ Q1`.
    ///
    /// Rules, applied to the first match: kill `x00`, `x01`; inside a block
    /// `x_i x_j -> x_{i-1} x_{j+1}` for `1 <= i <= j <= top-1`; across blocks
    /// `x0i x1j -> x0(i-1) x1(j+1)` for `i >= 1`, `j < n`.
    pub fn b_normal_form(&self, w: &Monomial) -> Option<Monomial> {
        let mut e = w.exponents().to_vec();
        loop {
            if e[self.x0(0)] > 0 || e[self.x0(1)] > 0 {
                return None;
            }
            let step = self
                .block_step(&e, 0, self.m)
                .or_else(|| self.block_step(&e, 1, self.n))
                .or_else(|| self.mixed_step(&e));
            match step {
                Some((a, b, c, d)) => {
                    e[a] -= 1;
                    e[b] -= 1;
                    e[c] += 1;
                    e[d] += 1;
                }
                None => return Some(Monomial::new(e)),
            }
        }
    }

    fn block_index(&self, block: usize, i: usize) -> usize {
        if block == 0 {
            self.x0(i)
        } else {
            self.x1(i)
        }
    }

    fn block_step(
        &self,
        e: &[u32],
        block: usize,
        top: usize,
    ) -> Option<(usize, usize, usize, usize)> {
        for i in 1..top {
            let vi = self.block_index(block, i);
            if e[vi] == 0 {
                continue;
            }
            for j in i..top {
                let vj = self.block_index(block, j);
                let available = if i == j { e[vi] >= 2 } else { e[vj] >= 1 };
                if available {
                    return Some((
                        vi,
                        vj,
                        self.block_index(block, i - 1),
                        self.block_index(block, j + 1),
                    ));
                }
            }
        }
        None
    }

    fn mixed_step(&self, e: &[u32]) -> Option<(usize, usize, usize, usize)> {
        for i in 1..=self.m {
            if e[self.x0(i)] == 0 {
                continue;
            }
            for j in 0..self.n {
                if e[self.x1(j)] > 0 {
                    return Some((self.x0(i), self.x1(j), self.x0(i - 1), self.x1(j + 1)));
                }
            }
        }
        None
    }

    /// First claim: `B` is a basis of `R/Q1`, checked in degrees `0..=d` by
    /// counting against the Hilbert function, by the rank of the normal forms
    /// of `B`, and by the `g`-image argument.
    pub fn verify_basis_claim(&self, d: u64) -> Result<BasisClaimReport> {
        let q1 = self.q1()?;
        let gb = q1.groebner()?;
        let table = q1.hilbert_function(d)?;
        let g = self.g_map()?;
        let weights = self.ring.weights();
        let zt = Monomial::new(vec![1, 0, (self.m - 1) as u32]);

        let mut rows = Vec::new();
        let mut images: HashSet<Monomial> = HashSet::new();
        let mut distinct = true;
        let mut avoid = true;
        let mut lands = true;
        let mut conflicts = 0;
        for deg in 0..=d {
            let all = monomials_of_degree(&weights, deg);
            let basis: Vec<&Monomial> = all.iter().filter(|w| self.in_b(w)).collect();
            for w in &all {
                if let Some(nf) = self.b_normal_form(w) {
                    lands &= self.in_b(&nf);
                }
                if self.in_b_literal(w) && !self.in_b(w) {
                    conflicts += 1;
                }
            }
            let nfs = basis
                .iter()
                .map(|w| {
                    gb.normal_form(&Polynomial::monomial(
                        &self.ring,
                        self.field().one(),
                        (*w).clone(),
                    ))
                })
                .collect::<Result<Vec<_>>>()?;
            let (cols, _) = coefficient_columns(self.field(), &nfs);
            for w in &basis {
                let img = g.apply(&Polynomial::monomial(
                    &self.ring,
                    self.field().one(),
                    (*w).clone(),
                ))?;
                let lm = img
                    .leading_monomial()
                    .cloned()
                    .unwrap_or_else(|| Monomial::one(3));
                avoid &= !zt.divides(&lm);
                distinct &= images.insert(lm);
            }
            rows.push(BasisDegreeRow {
                degree: deg,
                b_count: basis.len(),
                hilbert: table.get(deg).unwrap_or(0),
                rank: rank(self.field(), &cols),
            });
        }
        let holds = distinct
            && avoid
            && lands
            && rows
                .iter()
                .all(|r| r.b_count as u64 == r.hilbert && r.rank == r.b_count);
        Ok(BasisClaimReport {
            rows,
            g_images_distinct: distinct,
            g_images_avoid_zt: avoid,
            rewriting_lands_in_b: lands,
            literal_conflicts: conflicts,
            holds,
        })
    }

    /// Kernel of `u ↦ (u·v mod J)_{v}` on the degree-`d` monomials, returned
    /// as polynomials.
    fn degree_kernel(
        &self,
        d: u64,
        multipliers: &[Polynomial],
        j: &Ideal,
    ) -> Result<Vec<Polynomial>> {
        let monos = monomials_of_degree(&self.ring.weights(), d);
        let one = self.field().one();
        let mut images: Vec<Vec<Polynomial>> = Vec::new();
        for w in &monos {
            let u = Polynomial::monomial(&self.ring, one.clone(), w.clone());
            images.push(
                multipliers
                    .iter()
                    .map(|v| j.normal_form(&u.try_mul(v)?))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        // stack the coefficient vectors of all multipliers into one column per monomial
        let mut columns: Vec<Vec<Scalar>> = vec![Vec::new(); monos.len()];
        for k in 0..multipliers.len() {
            let polys: Vec<Polynomial> = images.iter().map(|row| row[k].clone()).collect();
            let (cols, _) = coefficient_columns(self.field(), &polys);
            for (c, col) in columns.iter_mut().zip(cols) {
                c.extend(col);
            }
        }
        let height = columns.first().map_or(0, |c| c.len());
        let kernel = column_kernel(self.field(), &columns, height);
        Ok(kernel
            .into_iter()
            .map(|v| {
                Polynomial::from_terms(
                    &self.ring,
                    v.into_iter()
                        .zip(&monos)
                        .filter(|(c, _)| !self.field().is_zero(c))
                        .map(|(c, w)| (c, w.clone())),
                )
            })
            .collect())
    }

    fn x00_plus_q(&self) -> Result<Ideal> {
        Ideal::new(
            &self.ring,
            self.q
                .generators()
                .iter()
                .cloned()
                .chain([self.var(self.x0(0))]),
        )
    }

    /// Second claim: `u·x1(n-1) ∈ (x00) + Q` implies `u ∈ Q1`, degree by degree.
    pub fn verify_second_claim(&self, d: u64) -> Result<SecondClaimReport> {
        let j = self.x00_plus_q()?;
        let q1 = self.q1()?;
        let q1_table = q1.hilbert_function(d)?;
        let mult = [self.var(self.x1(self.n - 1))];
        let mut rows = Vec::new();
        for deg in 0..=d {
            let kernel = self.degree_kernel(deg, &mult, &j)?;
            let contained = q1.contains_all(&kernel)?;
            let total = monomials_of_degree(&self.ring.weights(), deg).len();
            rows.push(SecondClaimRow {
                degree: deg,
                kernel_dim: kernel.len(),
                q1_dim: total - q1_table.get(deg).unwrap_or(0) as usize,
                contained,
            });
        }
        let holds = rows.iter().all(|r| r.contained);
        Ok(SecondClaimReport { rows, holds })
    }

    /// Degree-zero part of `Hom_S(I, S)`: linear forms `u` with
    /// `u·v ∈ (x00) + Q` for every generator `v` of `I`.
    pub fn hom_degree_zero_dim(&self) -> Result<usize> {
        let j = self.x00_plus_q()?;
        Ok(self.degree_kernel(1, self.i.generators(), &j)?.len())
    }

    /// The same count using only the multiplier `x1(n-1)`.
    pub fn hom_degree_zero_dim_reduced(&self) -> Result<usize> {
        let j = self.x00_plus_q()?;
        Ok(self
            .degree_kernel(1, &[self.var(self.x1(self.n - 1))], &j)?
            .len())
    }

    pub fn krull_dimension(&self) -> Result<usize> {
        self.q.krull_dimension()
    }

    pub fn hilbert_function(&self, up_to: u64) -> Result<HilbertTable> {
        self.q.hilbert_function(up_to)
    }

    /// Degree of the surface, read off the stabilised second difference of
    /// the Hilbert function up to `bound`.
    pub fn surface_degree(&self, bound: u64) -> Result<Option<u64>> {
        Ok(match self.hilbert_function(bound)?.growth() {
            Some((2, c)) if c > 0 => Some(c as u64),
            _ => None,
        })
    }

    pub fn summary(&self) -> ScrollSummary {
        ScrollSummary {
            m: self.m,
            n: self.n,
            variables: self.ring.vars().iter().map(|v| v.name.clone()).collect(),
            weights: self.ring.weights(),
            q: self.q.generators().iter().map(|g| g.to_string()).collect(),
            i: self.i.generators().iter().map(|g| g.to_string()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn p(s: &ScrollData, t: &str) -> Polynomial {
        parse_polynomial(s.ring(), t).unwrap()
    }

    #[test]
    fn segre_quadric() {
        let s = build_scroll(1, 1).unwrap();
        assert_eq!(s.q().generators().len(), 1);
        assert_eq!(s.q().generators()[0], p(&s, "x00*x11 - x01*x10"));
        assert_eq!(s.i().generators().len(), 2);
        assert_eq!(s.krull_dimension().unwrap(), 3);
        assert!(build_scroll(1, 0).is_err());
        assert!(build_scroll(2, 1).is_err());
    }

    #[test]
    fn phi_and_g() {
        let s = build_scroll(1, 2).unwrap();
        assert!(s.verify_phi().unwrap());
        assert!(s.verify_g_kernel().unwrap());
        let g = s.g_map().unwrap();
        assert_eq!(g.apply(&p(&s, "x12")).unwrap().to_string(), "s^2");
        let s11 = build_scroll(1, 1).unwrap();
        let g = s11.g_map().unwrap();
        assert_eq!(g.apply(&p(&s11, "x00")).unwrap().to_string(), "z*t");
        assert!(s.q().contains(&p(&s, "x00*x12 - x01*x11")).unwrap());
        assert_eq!(s.phi(&p(&s, "x11")).unwrap(), p(&s, "x12"));
    }

    #[test]
    fn rewriting_examples() {
        let s = build_scroll(2, 3).unwrap();
        let mono = |t: &str| p(&s, t).leading_monomial().unwrap().clone();
        assert_eq!(s.b_normal_form(&mono("x01*x10")), None);
        assert_eq!(s.b_normal_form(&mono("x11*x13")), Some(mono("x11*x13")));
        assert_eq!(s.b_normal_form(&mono("x12^2")), Some(mono("x11*x13")));
        assert_eq!(s.b_normal_form(&mono("x02^2*x13")), Some(mono("x02^2*x13")));
        assert_eq!(s.b_normal_form(&mono("x02*x10")), None);
    }

    #[test]
    fn claims_small_cases() {
        for (m, n, d) in [(1, 1, 2), (1, 2, 3), (2, 2, 3)] {
            let s = build_scroll(m, n).unwrap();
            let r = s.verify_basis_claim(d).unwrap();
            assert!(r.holds, "{m},{n}: {r:?}");
            assert!(s.verify_second_claim(d).unwrap().holds);
            assert_eq!(s.hom_degree_zero_dim().unwrap(), 2);
        }
        let s = build_scroll(1, 1).unwrap();
        let rows = s.verify_second_claim(1).unwrap().rows;
        assert_eq!(rows[1].kernel_dim, 2);
    }

    #[test]
    fn degree_of_surface() {
        assert_eq!(
            build_scroll(2, 2).unwrap().surface_degree(6).unwrap(),
            Some(4)
        );
        assert_eq!(
            build_scroll(1, 3).unwrap().surface_degree(6).unwrap(),
            Some(4)
        );
    }
}
