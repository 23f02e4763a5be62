//! Intersection theory on Hirzebruch surfaces `F_d` and their iterated
//! blow-ups, on the basis `Δ0, Γ, E_1, ..., E_r` with `E_i` total transforms.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Exceptional {
    /// The exceptional curve this point was infinitely near to, if any.
    pub parent: Option<usize>,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceModel {
    d: i64,
    exceptionals: Vec<Exceptional>,
}

/// Integer combination of `Δ0, Γ, E_1, ..., E_r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DivClass(pub Vec<i64>);

impl DivClass {
    pub fn zero(model: &SurfaceModel) -> DivClass {
        DivClass(vec![0; model.rank()])
    }

    pub fn delta0(model: &SurfaceModel) -> DivClass {
        DivClass::zero(model).with(0, 1)
    }

    pub fn gamma(model: &SurfaceModel) -> DivClass {
        DivClass::zero(model).with(1, 1)
    }

    pub fn exceptional(model: &SurfaceModel, i: usize) -> DivClass {
        DivClass::zero(model).with(2 + i, 1)
    }

    fn with(mut self, idx: usize, c: i64) -> DivClass {
        self.0[idx] += c;
        self
    }

    pub fn add(&self, other: &DivClass) -> DivClass {
        DivClass(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &DivClass) -> DivClass {
        DivClass(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: i64) -> DivClass {
        DivClass(self.0.iter().map(|a| a * c).collect())
    }
}

pub fn hirzebruch(d: i64) -> Result<SurfaceModel> {
    if d < 0 {
        return Err(Error::InvalidArgument(format!("F_{d} needs d >= 0")));
    }
    Ok(SurfaceModel {
        d,
        exceptionals: Vec::new(),
    })
}

impl SurfaceModel {
    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn exceptionals(&self) -> &[Exceptional] {
        &self.exceptionals
    }

    pub fn rank(&self) -> usize {
        2 + self.exceptionals.len()
    }

    /// Blows up a point, infinitely near to `parent` if given. Returns the
    /// index of the new exceptional class.
    pub fn blow_up(&mut self, parent: Option<usize>, label: impl Into<String>) -> Result<usize> {
        if parent.is_some_and(|p| p >= self.exceptionals.len()) {
            return Err(Error::InvalidArgument(
                "unknown parent exceptional curve".into(),
            ));
        }
        self.exceptionals.push(Exceptional {
            parent,
            label: label.into(),
        });
        Ok(self.exceptionals.len() - 1)
    }

    /// Pads a class from an earlier stage of the blow-up with zeros.
    pub fn lift(&self, c: &DivClass) -> DivClass {
        let mut v = c.0.clone();
        v.resize(self.rank(), 0);
        DivClass(v)
    }

    pub fn intersect(&self, a: &DivClass, b: &DivClass) -> Result<i64> {
        if a.0.len() != self.rank() || b.0.len() != self.rank() {
            return Err(Error::InvalidArgument(
                "class does not belong to this model".into(),
            ));
        }
        let (a, b) = (&a.0, &b.0);
        let mut s = -self.d * a[0] * b[0] + a[0] * b[1] + a[1] * b[0];
        for i in 2..a.len() {
            s -= a[i] * b[i];
        }
        Ok(s)
    }

    pub fn self_intersection(&self, a: &DivClass) -> Result<i64> {
        self.intersect(a, a)
    }

    /// `K = -2Δ0 - (d+2)Γ + ΣE_i`.
    pub fn canonical_class(&self) -> DivClass {
        let mut v = vec![1; self.rank()];
        v[0] = -2;
        v[1] = -(self.d + 2);
        DivClass(v)
    }

    /// Arithmetic genus `(C² + K·C)/2 + 1`.
    pub fn genus(&self, c: &DivClass) -> Result<i64> {
        let k = self.canonical_class();
        Ok((self.self_intersection(c)? + self.intersect(&k, c)?) / 2 + 1)
    }
}

#[derive(Clone, Copy, Debug, Eq)]
pub enum SingularityKind {
    /// `1/k(1,1)`
    CyclicQuotient(u32),
    /// Du Val `A_n`
    DuValA(u32),
}

impl SingularityKind {
    /// `1/k(1,1)` with `k >= 2`, or `None` when the point is smooth.
    pub fn cyclic(k: u32) -> Option<SingularityKind> {
        (k >= 2).then_some(SingularityKind::CyclicQuotient(k))
    }

    fn normalized(&self) -> (bool, u32) {
        match *self {
            SingularityKind::CyclicQuotient(2) => (true, 1),
            SingularityKind::CyclicQuotient(k) => (false, k),
            SingularityKind::DuValA(n) => (true, n),
        }
    }
}

impl PartialEq for SingularityKind {
    fn eq(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }
}

impl fmt::Display for SingularityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SingularityKind::CyclicQuotient(k) => write!(f, "1/{k}(1,1)"),
            SingularityKind::DuValA(n) => write!(f, "A{n}"),
        }
    }
}

impl Serialize for SingularityKind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SingularityRecord {
    pub kind: SingularityKind,
    pub source: String,
}

/// A point of `D` on the fixed fibre `Γ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChainPoint {
    pub multiplicity: u32,
    pub on_delta0: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainReport {
    pub gamma_hat_sq: i64,
    /// Self-intersections of `C_i` followed by the final `(-1)`-curve, for
    /// every point with multiplicity at least two.
    pub chains: Vec<Vec<i64>>,
    pub singularities: Vec<SingularityRecord>,
    pub blow_ups: usize,
    /// `Γ̂` meets no `(-2)`-curve and exactly one `(-1)`-curve per point.
    pub configuration_ok: bool,
    #[serde(skip)]
    pub model: SurfaceModel,
    #[serde(skip)]
    pub gamma_hat: DivClass,
}

/// Blows up each point of `D` on `Γ`, then `k_i - 1` more times at the
/// intersection of the strict transform of `Γ` with the newest exceptional
/// curve, and reads off the contracted configuration.
pub fn unprojection_chain(model: &SurfaceModel, points: &[ChainPoint]) -> Result<ChainReport> {
    if points.is_empty() || points.iter().any(|p| p.multiplicity == 0) {
        return Err(Error::InvalidArgument(
            "D must be a non-empty list of positive multiplicities".into(),
        ));
    }
    if points.iter().filter(|p| p.on_delta0).count() > 1 {
        return Err(Error::InvalidArgument(
            "only one point of Γ lies on Δ0".into(),
        ));
    }
    let mut model = model.clone();
    let mut towers: Vec<Vec<usize>> = Vec::new();
    for (p_idx, p) in points.iter().enumerate() {
        let mut tower = Vec::new();
        for level in 0..p.multiplicity {
            let parent = tower.last().copied();
            tower.push(model.blow_up(parent, format!("E{}_{}", p_idx + 1, level + 1))?);
        }
        towers.push(tower);
    }
    let mut gamma_hat = DivClass::gamma(&model);
    for e in towers.iter().flatten() {
        gamma_hat = gamma_hat.sub(&DivClass::exceptional(&model, *e));
    }
    let k: u32 = points.iter().map(|p| p.multiplicity).sum();

    let mut chains = Vec::new();
    let mut singularities = Vec::new();
    if let Some(kind) = SingularityKind::cyclic(k) {
        singularities.push(SingularityRecord {
            kind,
            source: "contraction of the strict transform of Γ".into(),
        });
    }
    let mut configuration_ok = true;
    for (p, tower) in points.iter().zip(&towers) {
        let mut curves: Vec<DivClass> = tower
            .windows(2)
            .map(|w| DivClass::exceptional(&model, w[0]).sub(&DivClass::exceptional(&model, w[1])))
            .collect();
        curves.push(DivClass::exceptional(&model, *tower.last().unwrap()));
        let selfs = curves
            .iter()
            .map(|c| model.self_intersection(c))
            .collect::<Result<Vec<_>>>()?;
        let meets = curves
            .iter()
            .map(|c| model.intersect(&gamma_hat, c))
            .collect::<Result<Vec<_>>>()?;
        let last = curves.len() - 1;
        configuration_ok &= meets[..last].iter().all(|&v| v == 0) && meets[last] == 1;
        configuration_ok &= selfs[..last].iter().all(|&v| v == -2) && selfs[last] == -1;
        if p.multiplicity >= 2 {
            chains.push(selfs);
            singularities.push(SingularityRecord {
                kind: SingularityKind::DuValA(p.multiplicity - 1),
                source: format!(
                    "contraction of the chain over a point of multiplicity {}",
                    p.multiplicity
                ),
            });
        }
    }
    Ok(ChainReport {
        gamma_hat_sq: model.self_intersection(&gamma_hat)?,
        chains,
        singularities,
        blow_ups: towers.iter().map(Vec::len).sum(),
        configuration_ok,
        model,
        gamma_hat,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ElementaryReport {
    pub d: i64,
    pub on_delta0: bool,
    /// Self-intersection of the image of `Δ0` after contracting `Γ̂`.
    pub delta0_image_sq: i64,
    pub d_prime: i64,
}

/// Blows up a point of a fibre and contracts the strict transform of the
/// fibre. The image of a curve `C` has square `C² + (C·Γ̂)²`; the new index
/// is the absolute value of the square of the image of `Δ0`. From `F_0` a
/// point off the chosen section lands on `F_1` as well.
pub fn elementary_transformation(d: i64, on_delta0: bool) -> Result<ElementaryReport> {
    let mut model = hirzebruch(d)?;
    let e = model.blow_up(None, "E")?;
    let ex = DivClass::exceptional(&model, e);
    let gamma_hat = DivClass::gamma(&model).sub(&ex);
    let delta = if on_delta0 {
        DivClass::delta0(&model).sub(&ex)
    } else {
        DivClass::delta0(&model)
    };
    let meet = model.intersect(&delta, &gamma_hat)?;
    let sq = model.self_intersection(&delta)? + meet * meet;
    Ok(ElementaryReport {
        d,
        on_delta0,
        delta0_image_sq: sq,
        d_prime: sq.abs(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct HorikawaReport {
    pub m: usize,
    pub n: usize,
    pub d: i64,
    pub pg: i64,
    pub k_sq: i64,
    /// Coefficients of `L` on `Δ0, Γ, E_x, E_y`.
    pub l: Vec<i64>,
    pub l_sq: i64,
    pub l_dot_gamma_hat: i64,
    pub gamma_hat_sq: i64,
    pub singularities: Vec<SingularityRecord>,
}

/// Numerology of an odd Horikawa surface whose canonical image is `F(m,n)`.
pub fn horikawa_numerology(m: usize, n: usize, infinitely_near: bool) -> Result<HorikawaReport> {
    if m < 1 || n < m {
        return Err(Error::InvalidArgument(format!(
            "F({m},{n}) needs n >= m >= 1"
        )));
    }
    let d = (n - m) as i64;
    let mut model = hirzebruch(d)?;
    let ex = model.blow_up(None, "Ex")?;
    let ey = model.blow_up(infinitely_near.then_some(ex), "Ey")?;
    let (ex, ey) = (
        DivClass::exceptional(&model, ex),
        DivClass::exceptional(&model, ey),
    );
    let gamma = DivClass::gamma(&model);
    let l = DivClass::delta0(&model)
        .add(&gamma.scale(n as i64 - 4))
        .sub(&ex.scale(2))
        .sub(&ey.scale(2));
    let gamma_hat = gamma.sub(&ex).sub(&ey);
    let pg = (m + n + 2) as i64;
    let chain = unprojection_chain(
        &hirzebruch(d)?,
        &if infinitely_near {
            vec![ChainPoint {
                multiplicity: 2,
                on_delta0: false,
            }]
        } else {
            vec![
                ChainPoint {
                    multiplicity: 1,
                    on_delta0: false
                };
                2
            ]
        },
    )?;
    Ok(HorikawaReport {
        m,
        n,
        d,
        pg,
        k_sq: 2 * pg - 3,
        l_sq: model.self_intersection(&l)?,
        l_dot_gamma_hat: model.intersect(&l, &gamma_hat)?,
        gamma_hat_sq: model.self_intersection(&gamma_hat)?,
        l: l.0,
        singularities: chain.singularities.into_iter().take(1).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hirzebruch_form() {
        for d in 0..4 {
            let f = hirzebruch(d).unwrap();
            let (delta, gamma) = (DivClass::delta0(&f), DivClass::gamma(&f));
            assert_eq!(f.self_intersection(&delta).unwrap(), -d);
            assert_eq!(f.self_intersection(&gamma).unwrap(), 0);
            assert_eq!(f.intersect(&delta, &gamma).unwrap(), 1);
            let pos = delta.add(&gamma.scale(d));
            assert_eq!(f.self_intersection(&pos).unwrap(), d);
            let k = f.canonical_class();
            assert_eq!(f.self_intersection(&k).unwrap(), 8);
            assert_eq!(f.genus(&gamma).unwrap(), 0);
            assert_eq!(f.genus(&delta).unwrap(), 0);
        }
        assert!(hirzebruch(-1).is_err());
    }

    #[test]
    fn chains() {
        let f = hirzebruch(1).unwrap();
        let one = |k| ChainPoint {
            multiplicity: k,
            on_delta0: false,
        };
        let r = unprojection_chain(&f, &[one(1)]).unwrap();
        assert_eq!(
            (r.gamma_hat_sq, r.chains.len(), r.singularities.len()),
            (-1, 0, 0)
        );
        let r = unprojection_chain(&f, &[one(2)]).unwrap();
        assert_eq!(r.gamma_hat_sq, -2);
        assert_eq!(r.chains, vec![vec![-2, -1]]);
        let kinds: Vec<String> = r.singularities.iter().map(|s| s.kind.to_string()).collect();
        assert_eq!(kinds, ["1/2(1,1)", "A1"]);
        let r = unprojection_chain(&f, &[one(1), one(1)]).unwrap();
        assert_eq!(r.gamma_hat_sq, -2);
        assert!(r.chains.is_empty());
        assert_eq!(r.singularities[0].kind, SingularityKind::DuValA(1));
        assert!(r.configuration_ok);
        assert!(unprojection_chain(&f, &[]).is_err());
    }

    #[test]
    fn elementary() {
        assert_eq!(elementary_transformation(2, true).unwrap().d_prime, 3);
        assert_eq!(elementary_transformation(2, false).unwrap().d_prime, 1);
        assert_eq!(elementary_transformation(1, false).unwrap().d_prime, 0);
        assert_eq!(elementary_transformation(0, false).unwrap().d_prime, 1);
        assert_eq!(elementary_transformation(0, true).unwrap().d_prime, 1);
    }

    #[test]
    fn horikawa() {
        let h = horikawa_numerology(2, 3, false).unwrap();
        assert_eq!((h.pg, h.k_sq, h.l_sq, h.gamma_hat_sq), (7, 11, -11, -2));
        assert_eq!(h.l_dot_gamma_hat, -3);
        assert_eq!(h.singularities[0].kind, SingularityKind::DuValA(1));
        let h = horikawa_numerology(2, 3, true).unwrap();
        assert_eq!((h.l_sq, h.gamma_hat_sq), (-11, -2));
    }
}
