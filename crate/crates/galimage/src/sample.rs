use crate::{ClassifyConfig, Result};
use ecq::{primes_below, EllipticCurveQ, TraceCache};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Traces a_ℓ at a deterministic pseudo-random set of good primes.
#[derive(Clone, Debug)]
pub struct TraceSample {
    pub traces: Vec<(u64, i64)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Confidence {
    pub samples: usize,
    pub eliminated: usize,
}

impl TraceSample {
    /// (a_ℓ mod p, ℓ mod p) for every sampled ℓ ≠ p.
    pub fn pairs(&self, p: u32) -> impl Iterator<Item = (u32, u32)> + '_ {
        let p64 = p as i64;
        self.traces
            .iter()
            .filter(move |(l, _)| *l != p as u64)
            .map(move |&(l, a)| (a.rem_euclid(p64) as u32, (l % p as u64) as u32))
    }

    pub fn count(&self, p: u32) -> usize {
        self.traces.iter().filter(|(l, _)| *l != p as u64).count()
    }
}

pub(crate) fn sample_traces(e: &EllipticCurveQ, cfg: &ClassifyConfig, cache: &TraceCache) -> Result<TraceSample> {
    let m = e.integral_model();
    let delta = m.discriminant();
    let mut primes = primes_below(cfg.prime_bound);
    primes.shuffle(&mut ChaCha8Rng::seed_from_u64(cfg.seed));
    let good: Vec<u64> = primes
        .into_iter()
        .filter(|&l| residue(delta.numer(), l) != 0)
        .take(cfg.samples)
        .collect();
    let traces = cache
        .traces(&m, &good)
        .into_iter()
        .zip(&good)
        .map(|(a, &l)| Ok((l, a?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(TraceSample { traces })
}

fn residue(n: &BigInt, l: u64) -> u64 {
    n.mod_floor(&BigInt::from(l)).to_u64().unwrap()
}
