//! Census computations over the group catalog: the isogeny/torsion pair sieve, genus
//! distributions of pair types, the triple scan, the set 𝒜∞ of Serre-constant levels,
//! bounded-height point search and j-invariant cross-referencing.

mod ainf;
mod census;
mod curvefn;
mod search;
mod sieve;
mod triple;
mod xref;

pub use ainf::{a_infinity_from, compute_a_infinity, phantom_sides, verify_phantom, PhantomCheck};
pub use census::{enumerate_adic_pairs, enumerate_exceptional_pairs, histogram, Bucket, CensusRow, Histogram};
pub use curvefn::CurveFn;
pub use search::{bounded_point_search, search_record, SearchModel, SearchPoint};
pub use sieve::{admissible_pair, forced_isogeny_degree, mod_p_family, presieve_count, ALLOWED_ISOGENY_DEGREES};
pub use triple::{triple_scan, triple_scan_from, TripleRow};
pub use xref::{cross_reference_j, CrossReference};

use catalog::CatalogError;
use modcurve::ModcurveError;
use ratq::RatqError;

#[derive(Debug, thiserror::Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Curve(#[from] ModcurveError),
    #[error(transparent)]
    Ratq(#[from] RatqError),
    #[error(transparent)]
    Group(#[from] modmatrix::ModError),
    #[error("{0} and {1} are at the same prime")]
    SamePrime(String, String),
    #[error("no genus-1 fixture for {0}")]
    MissingFixture(String),
    #[error("phantom identity fails for {0}: {1}")]
    Phantom(String, String),
    #[error("{0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, AnalysisError>;
