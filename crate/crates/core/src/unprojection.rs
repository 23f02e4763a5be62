//! Generalised unprojection rings `S_un(f) = S[T]/(T·u - f·φ(u), u ∈ I)`,
//! their determinantal presentation, and the classification of the
//! degree-one members as scrolls.

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::ideal::{Comparison, HilbertTable, Ideal};
use crate::linalg::determinant;
use crate::map::RingMap;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::{MonomialOrder, Ring, RingRef};
use crate::scroll::{two_by_two_minors, ScrollData};

/// A point `[a:b]` of `Γ` with a multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorPoint {
    pub a: BigRational,
    pub b: BigRational,
    pub multiplicity: u32,
}

/// An effective divisor on `Γ` given by distinct points with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorSpec {
    points: Vec<DivisorPoint>,
}

impl DivisorSpec {
    pub fn new(points: Vec<DivisorPoint>) -> Result<DivisorSpec> {
        if points.is_empty() {
            return Err(Error::InvalidArgument("divisor has no points".into()));
        }
        for (idx, p) in points.iter().enumerate() {
            if p.a.is_zero() && p.b.is_zero() {
                return Err(Error::InvalidArgument("[0:0] is not a point".into()));
            }
            if p.multiplicity == 0 {
                return Err(Error::InvalidArgument(
                    "multiplicities must be positive".into(),
                ));
            }
            for q in &points[..idx] {
                if &p.a * &q.b == &p.b * &q.a {
                    return Err(Error::InvalidArgument(format!(
                        "repeated point [{}:{}]",
                        p.a, p.b
                    )));
                }
            }
        }
        Ok(DivisorSpec { points })
    }

    pub fn simple(points: &[(i64, i64, u32)]) -> Result<DivisorSpec> {
        DivisorSpec::new(
            points
                .iter()
                .map(|&(a, b, k)| DivisorPoint {
                    a: BigRational::from_integer(a.into()),
                    b: BigRational::from_integer(b.into()),
                    multiplicity: k,
                })
                .collect(),
        )
    }

    pub fn points(&self) -> &[DivisorPoint] {
        &self.points
    }

    pub fn degree(&self) -> u32 {
        self.points.iter().map(|p| p.multiplicity).sum()
    }
}

/// `f = Π (a·x0m - b·x1n)^k` over the points of `D`.
pub fn f_from_divisor(s: &ScrollData, d: &DivisorSpec) -> Result<Polynomial> {
    let field = s.field();
    let x0m = s.var(s.x0(s.m()));
    let x1n = s.var(s.x1(s.n()));
    let mut f = Polynomial::one(s.ring());
    for p in d.points() {
        let a = field.from_rational(&p.a)?;
        let b = field.from_rational(&p.b)?;
        let factor = x0m.scale(&a).try_sub(&x1n.scale(&b))?;
        if factor.is_zero() {
            return Err(Error::InvalidArgument(format!(
                "[{}:{}] vanishes in {}",
                p.a, p.b, field
            )));
        }
        f = f.try_mul(&factor.pow(p.multiplicity))?;
    }
    Ok(f)
}

/// Splitting `f = f' + i` with `f' ∈ k[x0m, x1n]` and `i ∈ I`.
#[derive(Clone, Debug)]
pub struct NormalizedF {
    pub f_prime: Polynomial,
    pub i_part: Polynomial,
    pub phi_i: Polynomial,
    /// `f' = 0`, i.e. `f ∈ I` and `S_un(f)` has zero divisors.
    pub not_a_domain: bool,
}

impl NormalizedF {
    /// `T ↦ T - φ(i)` on `R2`; it carries the relations of `S_un(f')` onto
    /// those of `S_un(f)`.
    pub fn substitution(&self, u: &UnprojectionRing) -> Result<RingMap> {
        let t = u.t_var();
        let image = Polynomial::var(u.ring(), t).try_sub(&self.phi_i.embed(u.ring())?)?;
        RingMap::substitution(u.ring(), &[(t, image)])
    }
}

pub fn normalize_f(s: &ScrollData, f: &Polynomial) -> Result<NormalizedF> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_homogeneous() {
        return Err(Error::Inhomogeneous);
    }
    let keep = [s.x0(s.m()), s.x1(s.n())];
    let (head, tail): (Vec<_>, Vec<_>) = f
        .terms()
        .iter()
        .partition(|t| t.mono.support().all(|v| keep.contains(&v)));
    let f_prime = Polynomial::from_terms(
        s.ring(),
        head.into_iter().map(|t| (t.coeff.clone(), t.mono.clone())),
    );
    let i_part = Polynomial::from_terms(
        s.ring(),
        tail.into_iter().map(|t| (t.coeff.clone(), t.mono.clone())),
    );
    let phi_i = s.phi(&i_part)?;
    Ok(NormalizedF {
        not_a_domain: f_prime.is_zero(),
        f_prime,
        i_part,
        phi_i,
    })
}

/// `R2 = R[T]` with `T` of weight `k`.
pub fn unprojection_ring(s: &ScrollData, k: u32) -> Result<RingRef> {
    let vars = s
        .ring()
        .vars()
        .iter()
        .map(|v| (v.name.clone(), v.weight))
        .chain([("T".to_string(), k)]);
    Ring::new(vars, MonomialOrder::WeightedGrevlex, s.field())
}

/// `S_un(f)` in both presentations.
#[derive(Clone, Debug)]
pub struct UnprojectionRing {
    scroll: ScrollData,
    k: u32,
    f: Polynomial,
    ring: RingRef,
    q2_minors: Ideal,
    q2_def: Ideal,
}

pub fn build_unprojection(s: &ScrollData, f: &Polynomial) -> Result<UnprojectionRing> {
    let k = f.homogeneous_degree()? as u32;
    if k == 0 {
        return Err(Error::InvalidArgument("f must have positive degree".into()));
    }
    if normalize_f(s, f)?.not_a_domain {
        return Err(Error::NotADomain);
    }
    let ring = unprojection_ring(s, k)?;
    let t = Polynomial::var(&ring, ring.nvars() - 1);
    let f2 = f.embed(&ring)?;
    let x = |v: usize| Polynomial::var(&ring, v);

    let mut cols: Vec<(Polynomial, Polynomial)> =
        s.columns().into_iter().map(|(a, b)| (x(a), x(b))).collect();
    cols.push((f2.clone(), t.clone()));
    let q2_minors = Ideal::new(&ring, two_by_two_minors(&cols)?)?;

    let mut def = s.q().embed(&ring)?.generators().to_vec();
    for u in s.i().generators() {
        let u2 = u.embed(&ring)?;
        let phi_u = s.phi(u)?.embed(&ring)?;
        def.push(t.try_mul(&u2)?.try_sub(&f2.try_mul(&phi_u)?)?);
    }
    let q2_def = Ideal::new(&ring, def)?;
    Ok(UnprojectionRing {
        scroll: s.clone(),
        k,
        f: f2,
        ring,
        q2_minors,
        q2_def,
    })
}

impl UnprojectionRing {
    pub fn scroll(&self) -> &ScrollData {
        &self.scroll
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// `f` as an element of `R2`.
    pub fn f(&self) -> &Polynomial {
        &self.f
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn t_var(&self) -> usize {
        self.ring.nvars() - 1
    }

    pub fn q2_minors(&self) -> &Ideal {
        &self.q2_minors
    }

    pub fn q2_def(&self) -> &Ideal {
        &self.q2_def
    }

    pub fn presentations_equal(&self) -> Result<bool> {
        self.q2_minors.equals(&self.q2_def)
    }

    pub fn compare_presentations(&self) -> Result<Comparison> {
        self.q2_def.compare(&self.q2_minors)
    }

    pub fn krull_dimension(&self) -> Result<usize> {
        self.q2_minors.krull_dimension()
    }

    pub fn codimension(&self) -> Result<usize> {
        Ok(self.ring.nvars() - self.krull_dimension()?)
    }

    pub fn hilbert_table(&self, up_to: u64) -> Result<HilbertTable> {
        self.q2_minors.hilbert_function(up_to)
    }

    /// Each relation `G(T)` of `T`-degree `c`, with `T = f·x01/x00` and
    /// denominators cleared by `x00^c`, lies in `Q`.
    pub fn localization_witness(&self) -> Result<bool> {
        let ring = &self.ring;
        let t = self.t_var();
        let q = self.scroll.q().embed(ring)?;
        let x00 = Polynomial::var(ring, self.scroll.x0(0));
        let tval = self.f.try_mul(&Polynomial::var(ring, self.scroll.x0(1)))?;
        for g in self.q2_minors.generators() {
            let c = g
                .terms()
                .iter()
                .map(|term| term.mono.exponent(t))
                .max()
                .unwrap_or(0);
            let mut h = Polynomial::zero(ring);
            for term in g.terms() {
                let e = term.mono.exponent(t);
                let mut exps = term.mono.exponents().to_vec();
                exps[t] = 0;
                let rest = Polynomial::monomial(ring, term.coeff.clone(), Monomial::new(exps));
                h = h.try_add(&rest.try_mul(&tval.pow(e))?.try_mul(&x00.pow(c - e))?)?;
            }
            if !q.contains(&h)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `x00..x0(m-1), x10..x1(n-1), f·x0m` cut the dimension of `R2` by
/// `m+n+1`, which for a homogeneous sequence certifies regularity.
pub fn regular_sequence_check(s: &ScrollData, f: &Polynomial) -> Result<bool> {
    let k = f.homogeneous_degree()? as u32;
    let ring = unprojection_ring(s, k)?;
    let mut gens: Vec<Polynomial> = s
        .i_vars()
        .into_iter()
        .map(|v| Polynomial::var(&ring, v))
        .collect();
    gens.push(
        f.embed(&ring)?
            .try_mul(&Polynomial::var(&ring, s.x0(s.m())))?,
    );
    let len = gens.len();
    let dim = Ideal::new(&ring, gens)?.krull_dimension()?;
    Ok(ring.nvars() - dim == len)
}

/// `T ↦ T - φ(i)` turns the relations of `S_un(f')` into those of `S_un(f)`.
pub fn check_normalization(s: &ScrollData, f: &Polynomial) -> Result<bool> {
    let nf = normalize_f(s, f)?;
    if nf.not_a_domain {
        return Err(Error::NotADomain);
    }
    let u = build_unprojection(s, f)?;
    let u_prime = build_unprojection(s, &nf.f_prime)?;
    let sigma = nf.substitution(&u)?;
    let moved = u_prime
        .q2_def()
        .generators()
        .iter()
        .map(|g| sigma.apply(&g.embed(u.ring())?))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(u.ring(), moved)?.equals(u.q2_def())
}

/// A scroll type `F(m,n)`; abstractly the Hirzebruch surface `F_|n-m|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ScrollTag {
    pub m: usize,
    pub n: usize,
}

impl ScrollTag {
    pub fn hirzebruch_index(&self) -> usize {
        self.m.abs_diff(self.n)
    }

    pub fn abstract_name(&self) -> String {
        format!("F_{}", self.hirzebruch_index())
    }
}

impl fmt::Display for ScrollTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F({},{})", self.m, self.n)
    }
}

/// Result of identifying `S_un(a·x0m + b·x1n)` with a scroll.
#[derive(Clone, Debug)]
pub struct Classification {
    pub a: BigRational,
    pub b: BigRational,
    pub tag: ScrollTag,
    pub target: ScrollData,
    pub unprojection: UnprojectionRing,
    /// From the target scroll's ring into `R2`.
    pub change_of_variables: RingMap,
    pub ideal_equal: bool,
    pub determinant: Scalar,
    pub invertible: bool,
}

impl Classification {
    pub fn verified(&self) -> bool {
        self.ideal_equal && self.invertible
    }

    pub fn row(&self) -> ClassificationRow {
        let s = self.unprojection.scroll();
        ClassificationRow {
            m: s.m(),
            n: s.n(),
            point: [self.a.to_string(), self.b.to_string()],
            tag: self.tag.to_string(),
            r#abstract: self.tag.abstract_name(),
            verified: self.verified(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationRow {
    pub m: usize,
    pub n: usize,
    pub point: [String; 2],
    pub tag: String,
    #[serde(rename = "abstract")]
    pub r#abstract: String,
    pub verified: bool,
}

/// Identifies `Proj S_un(a·x0m + b·x1n)` with `F(m,n+1)` when `a = 0` and
/// with `F(m+1,n)` otherwise, through an explicit linear change of
/// variables whose image ideal is compared with `Q2`.
pub fn classify_elementary(
    s: &ScrollData,
    a: &BigRational,
    b: &BigRational,
) -> Result<Classification> {
    let field = s.field();
    let (fa, fb) = (field.from_rational(a)?, field.from_rational(b)?);
    let (m, n) = (s.m(), s.n());
    let f = s
        .var(s.x0(m))
        .scale(&fa)
        .try_add(&s.var(s.x1(n)).scale(&fb))?;
    if f.is_zero() {
        return Err(Error::InvalidArgument("[a:b] must not be [0:0]".into()));
    }
    let u = build_unprojection(s, &f)?;
    let r2 = u.ring().clone();
    let x = |v: usize| Polynomial::var(&r2, v);
    let t = x(u.t_var());

    let (tag, images) = if field.is_zero(&fa) {
        let tag = ScrollTag { m, n: n + 1 };
        let mut images: Vec<Polynomial> = (0..=m).map(|i| x(s.x0(i))).collect();
        images.extend((0..=n).map(|j| x(s.x1(j))));
        images.push(t.scale(&field.inv(&fb)?));
        (tag, images)
    } else {
        let tag = ScrollTag { m: m + 1, n };
        let c = field.div(&fb, &fa)?;
        let mut images: Vec<Polynomial> = (0..=m)
            .map(|i| x(s.x0(i)).try_add(&x(s.x1(n - m + i)).scale(&c)))
            .collect::<Result<_>>()?;
        images.push(t.scale(&field.inv(&fa)?));
        images.extend((0..=n).map(|j| x(s.x1(j))));
        (tag, images)
    };
    let target = ScrollData::with_blocks(tag.m, tag.n, field, "y")?;
    let map = RingMap::new(target.ring(), &r2, images)?;

    let moved = target
        .q()
        .generators()
        .iter()
        .map(|g| map.apply(g))
        .collect::<Result<Vec<_>>>()?;
    let ideal_equal = Ideal::new(&r2, moved)?.equals(u.q2_minors())?;

    let nv = r2.nvars();
    let matrix: Vec<Vec<Scalar>> = map
        .images()
        .iter()
        .map(|img| {
            (0..nv)
                .map(|v| img.coefficient(&Monomial::var(nv, v)))
                .collect()
        })
        .collect();
    let det = determinant(field, &matrix);
    let invertible = matrix.len() == nv && !field.is_zero(&det);

    Ok(Classification {
        a: a.clone(),
        b: b.clone(),
        tag,
        target,
        unprojection: u,
        change_of_variables: map,
        ideal_equal,
        determinant: det,
        invertible,
    })
}

/// Classifies every sample point; the output keeps the input order.
pub fn family_scan(
    s: &ScrollData,
    points: &[(BigRational, BigRational)],
) -> Result<Vec<ClassificationRow>> {
    points
        .par_iter()
        .map(|(a, b)| classify_elementary(s, a, b).map(|c| c.row()))
        .collect()
}
