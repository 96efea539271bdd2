//! 2×2 matrices over ℤ/Nℤ and the finite subgroups of GL₂(ℤ/Nℤ) they generate.
//!
//! Groups are materialized: every element is stored as a packed `u64` key in a hash set,
//! which keeps closures of a few hundred thousand elements cheap.

mod arith;
mod conj;
mod group;
mod matrix;

pub use arith::{factor, gcd, is_prime, units};
pub use conj::{conjugate_into, is_conjugate};
pub use group::{
    adjoin_minus_identity, closure, contains_minus_identity, crt_product, det_image, fixed_points,
    fixes_line, full_gl2, gl2_order, lift, project, trace_det_pairs, DetImage, FixedPoints, Subgroup,
};
pub use matrix::{parse_generators, ModMatrix};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModError {
    #[error("matrix {0} is not invertible mod {1}")]
    NotInvertible(String, u32),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u32, u32),
    #[error("{0} does not divide {1}")]
    NotDivisor(u32, u32),
    #[error("moduli {0} and {1} are not coprime")]
    NotCoprime(u32, u32),
    #[error("modulus {0} is out of range")]
    BadModulus(u32),
    #[error("conjugacy search unsupported: {0}")]
    Unsupported(String),
    #[error("cannot parse generators: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, ModError>;
