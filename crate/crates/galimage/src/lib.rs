//! Classification of the ℓ-adic and mod-p Galois images of a non-CM elliptic curve over ℚ:
//! per-prime labels, exceptional primes and the Serre constant A(E).

mod adic;
mod level;
mod modp;
mod report;
mod sample;

pub use adic::AdicLevel;
pub use modp::{AMBIGUOUS, SURJECTIVE};
pub use modp::{ImageEntry, Method};
pub use report::{ImageReport, SerreConstant};
pub use sample::{Confidence, TraceSample};

use catalog::CatalogError;
use ecq::{EcqError, EllipticCurveQ, TraceCache};
use modcurve::ModcurveError;
use ratq::RatqError;

/// Primes at which a non-CM curve over ℚ can have a nonsurjective mod-p image.
pub const EXCEPTIONAL_CANDIDATES: [u32; 8] = [2, 3, 5, 7, 11, 13, 17, 37];

pub const STRONG_UNIFORMITY: &str = "Strong Uniformity";
pub const CONJECTURE_13S4: &str = "Conjecture 13S4";

#[derive(Debug, thiserror::Error)]
pub enum GalError {
    #[error("curve has complex multiplication (j = {0})")]
    Cm(String),
    #[error("CM corner case: j = {0}")]
    CmCorner(String),
    #[error("no candidate groups for p = {0}")]
    UnsupportedPrime(u32),
    #[error(transparent)]
    Curve(#[from] EcqError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Ratq(#[from] RatqError),
    #[error(transparent)]
    Type(#[from] ModcurveError),
}

pub type Result<T> = std::result::Result<T, GalError>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifyConfig {
    /// Number of good primes ℓ whose traces are sampled.
    pub samples: usize,
    /// Only primes below this bound are sampled.
    pub prime_bound: u64,
    pub seed: u64,
    pub assume: Assumptions,
}

/// Conjectures the classifier may rely on; each use is recorded in the output.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Assumptions {
    /// Groups only conjecturally absent (the uniformity labels) count as eliminated.
    pub strong_uniformity: bool,
    /// The finite 13S4 list is complete.
    pub conjecture_13s4: bool,
}

impl Assumptions {
    pub const ALL: Assumptions = Assumptions { strong_uniformity: true, conjecture_13s4: true };
    pub const NONE: Assumptions = Assumptions { strong_uniformity: false, conjecture_13s4: false };
}

impl Default for ClassifyConfig {
    fn default() -> Self {
        ClassifyConfig { samples: 200, prime_bound: 10_000, seed: 0x6a1_0de5, assume: Assumptions::ALL }
    }
}

/// Entry point; holds the sampling configuration and the trace cache.
pub struct Classifier<'a> {
    pub cfg: ClassifyConfig,
    cache: &'a TraceCache,
}

impl<'a> Classifier<'a> {
    pub fn new(cfg: ClassifyConfig, cache: &'a TraceCache) -> Self {
        Classifier { cfg, cache }
    }

    fn check_non_cm(&self, e: &EllipticCurveQ) -> Result<()> {
        if e.is_cm() {
            return Err(GalError::Cm(e.j().to_string()));
        }
        Ok(())
    }

    pub fn sample(&self, e: &EllipticCurveQ) -> Result<TraceSample> {
        self.check_non_cm(e)?;
        sample::sample_traces(e, &self.cfg, self.cache)
    }

    pub fn mod_p_image(&self, e: &EllipticCurveQ, p: u32) -> Result<ImageEntry> {
        let s = self.sample(e)?;
        modp::mod_p_image(e, p, &s, self.cfg.assume)
    }

    pub fn adic_level_2(&self, e: &EllipticCurveQ) -> Result<AdicLevel> {
        self.check_non_cm(e)?;
        adic::adic_level_2(e)
    }

    pub fn adic_level_3(&self, e: &EllipticCurveQ) -> Result<AdicLevel> {
        let s = self.sample(e)?;
        adic::adic_level_3(e, &modp::mod_p_image(e, 3, &s, self.cfg.assume)?)
    }

    pub fn report(&self, label: &str, e: &EllipticCurveQ) -> Result<ImageReport> {
        let s = self.sample(e)?;
        report::build(label, e, &s, self.cfg.assume)
    }

    pub fn exceptional_primes(&self, e: &EllipticCurveQ) -> Result<Vec<u32>> {
        Ok(self.report("", e)?.s_e)
    }

    pub fn serre_constant(&self, e: &EllipticCurveQ) -> Result<SerreConstant> {
        Ok(self.report("", e)?.serre_constant)
    }

    pub fn exceptional_type(&self, e: &EllipticCurveQ) -> Result<modcurve::TypeDescriptor> {
        self.report("", e)?.exceptional_type()
    }

    /// Reports for many curves, classified in parallel.
    pub fn report_batch(&self, curves: &[(String, EllipticCurveQ)]) -> Vec<Result<ImageReport>> {
        use rayon::prelude::*;
        curves.par_iter().map(|(l, e)| self.report(l, e)).collect()
    }
}
