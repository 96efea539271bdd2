//! Discrete invariants of the modular curve X_G attached to an open subgroup G, and
//! the dictionary between types [G_p : p ∈ S] and groups of composite level.

mod cosets;
mod types;

pub use cosets::{coset_action, genus_profile, CosetAction, CurveProfile, ProfileRecord};
pub use types::{
    group_to_type, label_level, subtype_of, type_level, type_length, type_to_group, LabelResolver,
    TypeDescriptor, TypeEntry, UNLABELED,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModcurveError {
    #[error("not a ℚ-modular curve input: determinant is not surjective mod {0}")]
    NotQModular(u32),
    #[error("internal consistency: {0}")]
    Inconsistent(String),
    #[error("{0}")]
    UnknownLabel(String),
    #[error("bad type: {0}")]
    BadType(String),
    #[error(transparent)]
    Group(#[from] modmatrix::ModError),
}

pub type Result<T> = std::result::Result<T, ModcurveError>;
