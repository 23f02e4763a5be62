//! Exact computations with weighted polynomial rings, rational normal
//! scrolls and their generalised unprojections.

pub mod error;
pub mod field;
pub mod ideal;
pub mod lattice;
pub mod linalg;
pub mod map;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod rees;
pub mod ring;
pub mod scroll;
pub mod unprojection;

pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use ideal::{Budget, Comparison, GroebnerBasis, HilbertTable, Ideal};
pub use lattice::{ChainPoint, DivClass, SingularityKind, SurfaceModel};
pub use map::RingMap;
pub use monomial::Monomial;
pub use parse::{parse_point, parse_polynomial};
pub use poly::{Degree, Polynomial, Term};
pub use rees::{build_rees, ReesPresentation};
pub use ring::{MonomialOrder, Ring, RingRef, Variable};
pub use scroll::{build_scroll, ScrollData};
pub use unprojection::{
    build_unprojection, classify_elementary, f_from_divisor, family_scan, normalize_f, DivisorSpec,
    ScrollTag, UnprojectionRing,
};
