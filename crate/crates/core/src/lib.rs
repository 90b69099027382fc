//! Quiver representations modelling rank-2 instanton sheaves on P^3.
//!
//! The quiver has vertices `-1, 0, 1`, arrows `f_0..f_3 : V_{-1} -> V_0` and
//! `g_0..g_3 : V_0 -> V_1`, and relations `g_i f_j + g_j f_i = 0`. A
//! representation of dimension `(n, 2n+2, n)` is the same data as a linear
//! monad `O(-1)^n -> O^(2n+2) -> O(1)^n`.
//!
//! All arithmetic is exact over ℚ. Questions that range over every point of
//! P^3 (injectivity of a pencil, codimension of its rank-drop locus) answer
//! `Yes`/`No` when a proof is available and `ProbablyYes` otherwise.
//!
//! ```
//! use instanton_quiver::{classify, Charge1Kind, Rational, SkewForm, StabilityParam};
//! use instanton_quiver::charge_one::from_skew_form;
//!
//! let r = from_skew_form(&SkewForm::from_i64([1, 0, 0, 0, 0, 1]).unwrap());
//! let theta = StabilityParam::new(Rational::from_integer(1.into()), Rational::from_integer((-2).into()), 1);
//! assert_eq!(classify(&r, &theta).unwrap().kind, Charge1Kind::LocallyFreeInstanton);
//! ```

pub mod charge_one;
pub mod error;
pub mod format;
pub mod linalg;
mod modp;
pub mod monad;
pub mod pencil;
pub mod poly;
pub mod quiver;
pub mod sample;
pub mod stability;

pub use charge_one::{
    classify, from_p5_point, normal_form, Charge1Class, Charge1Family, Charge1Kind,
    QuadricMembership, Region, SkewForm,
};
pub use error::{Error, Result};
pub use format::{parse_document, parse_monad, parse_qrep, write_monad, write_qrep, Document};
pub use linalg::{Rational, RationalMatrix};
pub use monad::{generate_instanton, InstantonKind, Monad, MonadDiagnosis, SheafType};
pub use pencil::{Answer, Certificate, LinearPencil, Mode, PencilVerdict, ProbeConfig};
pub use quiver::{
    all_subrep_dimvectors_charge1, DimVector, QuiverRep, RelationCheck, SubrepResult, SubrepSearch,
    SubrepWitness,
};
pub use sample::Sampler;
pub use stability::{
    effective_walls_charge1, is_stable_charge1, stability_region_charge1, wall_arrangement,
    StabilityParam, StabilityRegion, StabilityVerdict, WallArrangement,
};
