//! Exact rational, polynomial and rational-function arithmetic over ℚ.
//!
//! Everything here is immutable value arithmetic on arbitrary-precision integers.
//! Rational roots are found by p-adic lifting, so the size of the coefficients
//! never has to be factored.

mod expr;
mod plane;
mod poly;
mod ratfun;
mod rational;
mod roots;

pub use expr::{parse_expr, parse_rational, parse_ratfun, ExprField};
pub use plane::{plane_model, BiPoly, PlaneModel};
pub use poly::Poly;
pub use ratfun::{ratfun_eval, ratfun_preimages, RatFun};
pub use rational::{height, int, rat, Extended, Rational};
pub use roots::{poly_rational_roots, quadratic_section_roots};

pub use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RatqError {
    #[error("identically zero")]
    IdenticallyZero,
    #[error("constant j-map")]
    ConstantJMap,
    #[error("degenerate section")]
    DegenerateSection,
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, RatqError>;
