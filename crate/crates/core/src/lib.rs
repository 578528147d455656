//! Exact computation of the tangent cones at infinity `C₃,∞ ⊂ C₄,∞ ⊂ C₅,∞`
//! of affine complex algebraic sets, with symbolic checkers for the
//! branched-covering theorems built on them and a floating-point witness
//! layer that samples the sequence definitions.

pub mod cones;
pub mod error;
pub mod fixtures;
pub mod ideal;
pub mod io;
pub mod poly;
pub mod projections;
pub mod witness;

pub use cones::{ConeKind, ConeResult, Purity};
pub use error::{Error, Result};
pub use ideal::{Budget, Ideal, Variety};
pub use poly::{parse_polynomial, GaussianRational, MonomialOrder, Polynomial, VariableContext};
