//! Rees-algebra presentation of the blow-up of `(I, f)` and the two
//! eliminations towards the scroll and towards the unprojection.

use serde::Serialize;

use crate::error::Result;
use crate::ideal::{Comparison, Ideal};
use crate::map::RingMap;
use crate::poly::Polynomial;
use crate::ring::{MonomialOrder, Ring, RingRef};
use crate::scroll::{two_by_two_minors, ScrollData};
use crate::unprojection::build_unprojection;

/// `R3 = R[T00..T0(m-1), T10..T1(n-1), Tf]` with the ideal `B` of 2x2 minors
/// of `[[x00 .. x1(n-1), f], [T00 .. T1(n-1), Tf]]`.
#[derive(Clone, Debug)]
pub struct ReesPresentation {
    scroll: ScrollData,
    f: Polynomial,
    k: u32,
    ring: RingRef,
    /// Indices of `T00 .. T1(n-1)` in `R3`.
    t_row: Vec<usize>,
    tf: usize,
    b: Ideal,
    q_ext: Ideal,
}

#[derive(Clone, Debug, Serialize)]
pub struct EliminationReport {
    /// Comparison of the elimination ideal `E` with the target `Q` or `Q2`:
    /// `subset` is `E ⊆ target`, `superset` is `E ⊇ target`.
    pub comparison: Comparison,
    pub generators: usize,
    pub target_generators: usize,
}

pub fn build_rees(s: &ScrollData, f: &Polynomial) -> Result<ReesPresentation> {
    let k = f.homogeneous_degree()? as u32;
    let i_vars = s.i_vars();
    let mut vars: Vec<(String, u32)> = s
        .ring()
        .vars()
        .iter()
        .map(|v| (v.name.clone(), v.weight))
        .collect();
    let t_names: Vec<String> = i_vars
        .iter()
        .map(|&v| format!("T{}", &s.ring().name(v)[1..]))
        .collect();
    vars.extend(t_names.iter().map(|t| (t.clone(), 1)));
    vars.push(("Tf".to_string(), k));
    let ring = Ring::new(vars, MonomialOrder::WeightedGrevlex, s.field())?;
    let base = s.ring().nvars();
    let t_row: Vec<usize> = (base..base + i_vars.len()).collect();
    let tf = base + i_vars.len();

    let x = |v: usize| Polynomial::var(&ring, v);
    let mut cols: Vec<(Polynomial, Polynomial)> = i_vars
        .iter()
        .zip(&t_row)
        .map(|(&a, &t)| (x(a), x(t)))
        .collect();
    cols.push((f.embed(&ring)?, x(tf)));
    let b = Ideal::new(&ring, two_by_two_minors(&cols)?)?;
    let q_ext = s.q().embed(&ring)?;
    Ok(ReesPresentation {
        scroll: s.clone(),
        f: f.clone(),
        k,
        ring,
        t_row,
        tf,
        b,
        q_ext,
    })
}

impl ReesPresentation {
    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn b(&self) -> &Ideal {
        &self.b
    }

    pub fn q_ext(&self) -> &Ideal {
        &self.q_ext
    }

    pub fn t_row(&self) -> &[usize] {
        &self.t_row
    }

    pub fn tf(&self) -> usize {
        self.tf
    }

    fn total(&self) -> Result<Ideal> {
        self.b.sum(&self.q_ext)
    }

    /// `(B + Q) ∩ R` against `Q`.
    pub fn eliminate_to_base(&self) -> Result<EliminationReport> {
        let mut drop = self.t_row.clone();
        drop.push(self.tf);
        let e = self.total()?.eliminate(&drop)?;
        let target = self.scroll.q().embed(e.ring())?;
        Ok(EliminationReport {
            comparison: e.compare(&target)?,
            generators: e.generators().len(),
            target_generators: target.generators().len(),
        })
    }

    /// `(B + Q) ∩ R[Tf]`, with `Tf` read as `T`, against `Q2`.
    pub fn eliminate_to_unprojection(&self) -> Result<EliminationReport> {
        let e = self.total()?.eliminate(&self.t_row)?;
        let u = build_unprojection(&self.scroll, &self.f)?;
        let n = e.ring().nvars();
        let map: Vec<usize> = (0..n).collect();
        let gens = e
            .generators()
            .iter()
            .map(|g| g.relabel(u.ring(), &map))
            .collect::<Result<Vec<_>>>()?;
        let renamed = Ideal::new(u.ring(), gens)?;
        Ok(EliminationReport {
            comparison: renamed.compare(u.q2_minors())?,
            generators: renamed.generators().len(),
            target_generators: u.q2_minors().generators().len(),
        })
    }

    /// `(B + Q) ∩ R[Tf]` against `Q` extended to `R[Tf]`.
    pub fn unprojection_elimination_equals_q(&self) -> Result<bool> {
        let e = self.total()?.eliminate(&self.t_row)?;
        let q = self.scroll.q().embed(e.ring())?;
        e.equals(&q)
    }

    /// `(x00..x1(n-1), T00..T1(n-1))`, cutting out the strict transform of `Γ`.
    pub fn strict_transform_ideal(&self) -> Result<Ideal> {
        let vars = self
            .scroll
            .i_vars()
            .into_iter()
            .chain(self.t_row.iter().copied());
        Ideal::new(&self.ring, vars.map(|v| Polynomial::var(&self.ring, v)))
    }

    /// Krull dimension of `R3 / (strict transform + B + Q)`.
    pub fn strict_transform_dimension(&self) -> Result<usize> {
        self.strict_transform_ideal()?
            .sum(&self.total()?)?
            .krull_dimension()
    }

    /// Every generator of `B` vanishes under `T_u ↦ λ·u`, `Tf ↦ λ·f`.
    pub fn tautological_check(&self) -> Result<bool> {
        let vars = self
            .ring
            .vars()
            .iter()
            .map(|v| (v.name.clone(), v.weight))
            .chain([("lambda".to_string(), 1)]);
        let target = Ring::new(vars, MonomialOrder::WeightedGrevlex, self.ring.field())?;
        let lambda = Polynomial::var(&target, target.nvars() - 1);
        let mut images: Vec<Polynomial> = (0..self.ring.nvars())
            .map(|v| Polynomial::var(&target, v))
            .collect();
        for (&t, &u) in self.t_row.iter().zip(&self.scroll.i_vars()) {
            images[t] = lambda.try_mul(&Polynomial::var(&target, u))?;
        }
        images[self.tf] = lambda.try_mul(&self.f.embed(&target)?)?;
        let map = RingMap::new(&self.ring, &target, images)?;
        for g in self.b.generators() {
            if !map.apply(g)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn k(&self) -> u32 {
        self.k
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::scroll::build_scroll;

    #[test]
    fn rees_11() {
        let s = build_scroll(1, 1).unwrap();
        let f = parse_polynomial(s.ring(), "x11").unwrap();
        let r = build_rees(&s, &f).unwrap();
        assert_eq!(r.b().generators().len(), 3);
        let names: Vec<&str> = r.ring().vars().iter().map(|v| v.name.as_str()).collect();
        assert_eq!(names, ["x00", "x01", "x10", "x11", "T00", "T10", "Tf"]);
        let minor = parse_polynomial(r.ring(), "x00*T10 - x10*T00").unwrap();
        assert!(r.b().contains(&minor).unwrap());
        assert!(r.tautological_check().unwrap());
        let base = r.eliminate_to_base().unwrap();
        assert!(base.comparison.equal);
        let st = r.strict_transform_ideal().unwrap();
        assert_eq!(st.generators().len(), 4);
    }

    #[test]
    fn elimination_to_unprojection_is_q() {
        let s = build_scroll(1, 1).unwrap();
        let f = parse_polynomial(s.ring(), "x11").unwrap();
        let r = build_rees(&s, &f).unwrap();
        let rep = r.eliminate_to_unprojection().unwrap();
        assert!(rep.comparison.subset);
        assert!(!rep.comparison.superset);
        assert!(r.unprojection_elimination_equals_q().unwrap());
    }
}
