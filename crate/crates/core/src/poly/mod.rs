//! Exact multivariate polynomials over ℚ(i).

mod coeff;
mod context;
mod monomial;
mod parse;
mod polynomial;

pub use coeff::GaussianRational;
pub use context::{Ctx, VarBlock, VariableContext};
pub use monomial::{InnerOrder, Monomial, MonomialOrder, OrderBlock};
pub use parse::{parse_constant, parse_polynomial};
pub use polynomial::Polynomial;

pub(crate) use polynomial::same_ctx;
