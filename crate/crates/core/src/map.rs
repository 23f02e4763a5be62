use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::{same_ring, RingRef};

/// A ring homomorphism given by the images of the source variables.
#[derive(Clone, Debug)]
pub struct RingMap {
    source: RingRef,
    target: RingRef,
    images: Vec<Polynomial>,
}

impl RingMap {
    pub fn new(source: &RingRef, target: &RingRef, images: Vec<Polynomial>) -> Result<RingMap> {
        if images.len() != source.nvars() {
            return Err(Error::InvalidArgument(format!(
                "{} images for {} source variables",
                images.len(),
                source.nvars()
            )));
        }
        if source.field() != target.field() || images.iter().any(|p| !same_ring(p.ring(), target)) {
            return Err(Error::RingMismatch);
        }
        Ok(RingMap {
            source: source.clone(),
            target: target.clone(),
            images,
        })
    }

    /// Like [`RingMap::new`] but also requires every image to be homogeneous
    /// of the weight of its source variable (zero images are allowed).
    pub fn graded(source: &RingRef, target: &RingRef, images: Vec<Polynomial>) -> Result<RingMap> {
        let map = RingMap::new(source, target, images)?;
        for (i, img) in map.images.iter().enumerate() {
            if img.is_zero() {
                continue;
            }
            if img.homogeneous_degree()? != source.weight(i) as u64 {
                return Err(Error::InvalidArgument(format!(
                    "image of {} does not have degree {}",
                    source.name(i),
                    source.weight(i)
                )));
            }
        }
        Ok(map)
    }

    pub fn identity(ring: &RingRef) -> RingMap {
        let images = (0..ring.nvars())
            .map(|i| Polynomial::var(ring, i))
            .collect();
        RingMap {
            source: ring.clone(),
            target: ring.clone(),
            images,
        }
    }

    /// Identity on every variable except the listed substitutions.
    pub fn substitution(ring: &RingRef, subs: &[(usize, Polynomial)]) -> Result<RingMap> {
        let mut images: Vec<Polynomial> = (0..ring.nvars())
            .map(|i| Polynomial::var(ring, i))
            .collect();
        for (i, img) in subs {
            images[*i] = img.clone();
        }
        RingMap::new(ring, ring, images)
    }

    pub fn source(&self) -> &RingRef {
        &self.source
    }

    pub fn target(&self) -> &RingRef {
        &self.target
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    pub fn image(&self, i: usize) -> &Polynomial {
        &self.images[i]
    }

    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        if !same_ring(p.ring(), &self.source) {
            return Err(Error::RingMismatch);
        }
        let field = self.target.field();
        let mut powers: HashMap<(usize, u32), Polynomial> = HashMap::new();
        let mut acc = Polynomial::zero(&self.target);
        for t in p.terms() {
            let mut value = Polynomial::constant(&self.target, t.coeff.clone());
            for (i, &e) in t.mono.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = powers
                    .entry((i, e))
                    .or_insert_with(|| self.images[i].pow(e));
                value = &value * pw;
            }
            acc = &acc + &value;
        }
        debug_assert!(acc.terms().iter().all(|t| field.contains(&t.coeff)));
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::parse::parse_polynomial;
    use crate::ring::{MonomialOrder, Ring};

    #[test]
    fn identity_and_substitution() {
        let r = Ring::standard(["x", "y"], Field::Rational).unwrap();
        let p = parse_polynomial(&r, "x^2*y - 3*y").unwrap();
        assert_eq!(RingMap::identity(&r).apply(&p).unwrap(), p);
        let s = RingMap::substitution(&r, &[(0, parse_polynomial(&r, "x + y").unwrap())]).unwrap();
        assert_eq!(
            s.apply(&p).unwrap(),
            parse_polynomial(&r, "(x+y)^2*y - 3*y").unwrap()
        );
    }

    #[test]
    fn graded_maps_check_weights() {
        let src = Ring::new([("a", 2)], MonomialOrder::WeightedGrevlex, Field::Rational).unwrap();
        let tgt = Ring::standard(["x", "y"], Field::Rational).unwrap();
        let ok = vec![parse_polynomial(&tgt, "x*y").unwrap()];
        assert!(RingMap::graded(&src, &tgt, ok).is_ok());
        let bad = vec![parse_polynomial(&tgt, "x").unwrap()];
        assert!(RingMap::graded(&src, &tgt, bad).is_err());
    }
}
