//! Sparse polynomials in canonical form.
//!
//! Terms are kept strictly decreasing under the ring's monomial order, with
//! no zero coefficients and no repeated monomials, so structural equality is
//! equality of polynomials.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::monomial::Monomial;
use crate::ring::{same_ring, RingRef};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Scalar,
    pub mono: Monomial,
}

#[derive(Clone)]
pub struct Polynomial {
    ring: RingRef,
    terms: Vec<Term>,
}

/// Result of asking for the weighted degree of a nonzero polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degree {
    Homogeneous(u64),
    Inhomogeneous,
}

impl Polynomial {
    pub fn zero(ring: &RingRef) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &RingRef, c: Scalar) -> Self {
        Self::monomial(ring, c, Monomial::one(ring.nvars()))
    }

    pub fn from_i64(ring: &RingRef, c: i64) -> Self {
        Self::constant(ring, ring.field().from_i64(c))
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::from_i64(ring, 1)
    }

    pub fn monomial(ring: &RingRef, c: Scalar, mono: Monomial) -> Self {
        assert_eq!(
            mono.nvars(),
            ring.nvars(),
            "monomial length does not match ring"
        );
        if ring.field().is_zero(&c) {
            return Self::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![Term { coeff: c, mono }],
        }
    }

    pub fn var(ring: &RingRef, i: usize) -> Self {
        Self::monomial(ring, ring.field().one(), Monomial::var(ring.nvars(), i))
    }

    pub fn var_named(ring: &RingRef, name: &str) -> Result<Self> {
        Ok(Self::var(ring, ring.require_var(name)?))
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates and
    /// sorting into canonical order.
    pub fn from_terms(ring: &RingRef, terms: impl IntoIterator<Item = (Scalar, Monomial)>) -> Self {
        let field = ring.field();
        let mut acc: HashMap<Monomial, Scalar> = HashMap::new();
        for (c, m) in terms {
            assert_eq!(
                m.nvars(),
                ring.nvars(),
                "monomial length does not match ring"
            );
            match acc.get_mut(&m) {
                Some(existing) => *existing = field.add(existing, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<Term> = acc
            .into_iter()
            .filter(|(_, c)| !field.is_zero(c))
            .map(|(mono, coeff)| Term { coeff, mono })
            .collect();
        terms.sort_by(|a, b| ring.cmp(&b.mono, &a.mono));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub(crate) fn from_sorted(ring: &RingRef, terms: Vec<Term>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.cmp(&w[0].mono, &w[1].mono) == Ordering::Greater));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_one())
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.terms.first().map(|t| &t.coeff)
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms
            .iter()
            .find(|t| &t.mono == m)
            .map(|t| t.coeff.clone())
            .unwrap_or_else(|| self.ring.field().zero())
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// `self + c * m * g` in a single merge pass.
    pub(crate) fn add_scaled(&self, c: &Scalar, m: &Monomial, g: &Polynomial) -> Polynomial {
        let terms = merge_scaled(&self.ring, &self.terms, c, m, &g.terms);
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let one = self.ring.field().one();
        Ok(self.add_scaled(&one, &Monomial::one(self.ring.nvars()), other))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let minus_one = self.ring.field().from_i64(-1);
        Ok(self.add_scaled(&minus_one, &Monomial::one(self.ring.nvars()), other))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let field = self.ring.field();
        if self.terms.len() == 1 || other.terms.len() == 1 {
            // Monomial orders are multiplicative, so sortedness survives.
            let (single, many) = if self.terms.len() == 1 {
                (self, other)
            } else {
                (other, self)
            };
            let t = &single.terms[0];
            return Ok(many.mul_term(&t.coeff, &t.mono));
        }
        let products = self.terms.iter().flat_map(|a| {
            other
                .terms
                .iter()
                .map(move |b| (field.mul(&a.coeff, &b.coeff), a.mono.mul(&b.mono)))
        });
        Ok(Polynomial::from_terms(&self.ring, products))
    }

    pub fn mul_term(&self, c: &Scalar, m: &Monomial) -> Polynomial {
        let field = self.ring.field();
        if field.is_zero(c) {
            return Polynomial::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: field.mul(c, &t.coeff),
                mono: t.mono.mul(m),
            })
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        self.mul_term(c, &Monomial::one(self.ring.nvars()))
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Scales so the leading coefficient is one. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => {
                let inv = self
                    .ring
                    .field()
                    .inv(lc)
                    .expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    pub fn weighted_degree(&self) -> Result<Degree> {
        let mut degrees = self.terms.iter().map(|t| self.ring.degree(&t.mono));
        let first = degrees.next().ok_or(Error::ZeroPolynomial)?;
        if degrees.all(|d| d == first) {
            Ok(Degree::Homogeneous(first))
        } else {
            Ok(Degree::Inhomogeneous)
        }
    }

    /// The zero polynomial counts as homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        !matches!(self.weighted_degree(), Ok(Degree::Inhomogeneous))
    }

    /// Degree of a homogeneous nonzero polynomial.
    pub fn homogeneous_degree(&self) -> Result<u64> {
        match self.weighted_degree()? {
            Degree::Homogeneous(d) => Ok(d),
            Degree::Inhomogeneous => Err(Error::Inhomogeneous),
        }
    }

    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.iter().any(|t| t.mono.exponent(i) > 0)
    }

    /// Reads the same polynomial in a ring with identical variables but
    /// possibly another monomial order.
    pub fn reinterpret(&self, ring: &RingRef) -> Result<Polynomial> {
        if !self.ring.same_variables(ring) {
            return Err(Error::RingMismatch);
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| ring.cmp(&b.mono, &a.mono));
        Ok(Polynomial {
            ring: ring.clone(),
            terms,
        })
    }

    /// Moves the polynomial into `target`, sending variable `i` to
    /// `target` variable `map[i]`. Variables not used by `self` may map
    /// anywhere.
    pub fn relabel(&self, target: &RingRef, map: &[usize]) -> Result<Polynomial> {
        if map.len() != self.ring.nvars() || self.ring.field() != target.field() {
            return Err(Error::RingMismatch);
        }
        let n = target.nvars();
        Ok(Polynomial::from_terms(
            target,
            self.terms
                .iter()
                .map(|t| (t.coeff.clone(), t.mono.relabel(map, n))),
        ))
    }

    /// Moves the polynomial into `target` by matching variable names. Fails
    /// if a variable used by `self` is missing from `target`.
    pub fn embed(&self, target: &RingRef) -> Result<Polynomial> {
        let map: Vec<usize> = (0..self.ring.nvars())
            .map(|i| match target.var_index(self.ring.name(i)) {
                Some(j) => Ok(j),
                None if !self.uses_var(i) => Ok(0),
                None => Err(Error::InvalidArgument(format!(
                    "variable {} is missing from the target ring",
                    self.ring.name(i)
                ))),
            })
            .collect::<Result<_>>()?;
        if target.nvars() == 0 && !self.is_constant() {
            return Err(Error::RingMismatch);
        }
        self.relabel(target, &map)
    }
}

/// Merges `a + c * m * b` for term lists sorted under `ring`'s order.
pub(crate) fn merge_scaled(
    ring: &RingRef,
    a: &[Term],
    c: &Scalar,
    m: &Monomial,
    b: &[Term],
) -> Vec<Term> {
    let field = ring.field();
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut a = a.iter().peekable();
    let mut b = b
        .iter()
        .map(|t| Term {
            coeff: field.mul(c, &t.coeff),
            mono: t.mono.mul(m),
        })
        .peekable();
    loop {
        let ord = match (a.peek(), b.peek()) {
            (None, None) => break,
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (Some(x), Some(y)) => ring.cmp(&x.mono, &y.mono),
        };
        match ord {
            Ordering::Greater => out.push(a.next().unwrap().clone()),
            Ordering::Less => out.push(b.next().unwrap()),
            Ordering::Equal => {
                let x = a.next().unwrap();
                let y = b.next().unwrap();
                let s = field.add(&x.coeff, &y.coeff);
                if !field.is_zero(&s) {
                    out.push(Term {
                        coeff: s,
                        mono: y.mono,
                    });
                }
            }
        }
    }
    out
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parse::format_polynomial(self))
    }
}

// Operator forms panic on ring mismatch; use the `try_*` methods when the
// operands come from untrusted input.

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomials from different rings")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomials from different rings")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomials from different rings")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&self.ring.field().from_i64(-1))
    }
}
