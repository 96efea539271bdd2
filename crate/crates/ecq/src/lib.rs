//! Elliptic curves over ℚ in long Weierstrass form: invariants, twists, reduction and
//! traces of Frobenius, CM detection, the mod-2 image and division polynomials.

mod cache;
mod curve;
mod divpoly;
mod trace;

pub use cache::TraceCache;
pub use curve::{is_rational_square, EllipticCurveQ, Invariants, Mod2Image};
pub use divpoly::division_polynomial;
pub use trace::{primes_below, trace_of_frobenius, MAX_TRACE_PRIME};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EcqError {
    #[error("singular: discriminant is zero")]
    Singular,
    #[error("bad prime {0}: the model has bad reduction there")]
    BadPrime(u64),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("prime {0} exceeds the point-counting bound {MAX_TRACE_PRIME}")]
    PrimeTooLarge(u64),
    #[error("twist parameter must be nonzero")]
    ZeroTwist,
    #[error("cannot parse curve: {0}")]
    Parse(String),
    #[error("trace cache: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, EcqError>;
