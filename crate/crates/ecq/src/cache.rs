use crate::{trace_of_frobenius, EcqError, EllipticCurveQ, Result};
use rayon::prelude::*;
use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

/// Traces of Frobenius keyed by (c4, c6, ℓ), optionally persisted as an append-only
/// text file of lines "c4 c6 ℓ a_ℓ".
#[derive(Default)]
pub struct TraceCache {
    path: Option<PathBuf>,
    map: Mutex<HashMap<(String, u64), i64>>,
    writer: Mutex<Option<File>>,
}

fn curve_key(e: &EllipticCurveQ) -> String {
    let inv = e.invariants();
    format!("{} {}", inv.c4, inv.c6)
}

impl TraceCache {
    /// An in-memory cache.
    pub fn memory() -> TraceCache {
        TraceCache::default()
    }

    /// Loads existing entries from `path` (if any) and appends new ones there.
    pub fn open(path: &Path) -> Result<TraceCache> {
        let mut map = HashMap::new();
        if path.exists() {
            let f = File::open(path).map_err(|e| EcqError::Cache(format!("{}: {e}", path.display())))?;
            for (n, line) in BufReader::new(f).lines().enumerate() {
                let line = line.map_err(|e| EcqError::Cache(e.to_string()))?;
                let parts: Vec<&str> = line.split_whitespace().collect();
                let bad = || EcqError::Cache(format!("{} line {}: {line:?}", path.display(), n + 1));
                if parts.len() != 4 {
                    return Err(bad());
                }
                let l: u64 = parts[2].parse().map_err(|_| bad())?;
                let a: i64 = parts[3].parse().map_err(|_| bad())?;
                map.insert((format!("{} {}", parts[0], parts[1]), l), a);
            }
        }
        let file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(path)
            .map_err(|e| EcqError::Cache(format!("{}: {e}", path.display())))?;
        Ok(TraceCache { path: Some(path.to_path_buf()), map: Mutex::new(map), writer: Mutex::new(Some(file)) })
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    pub fn len(&self) -> usize {
        self.map.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn trace(&self, e: &EllipticCurveQ, l: u64) -> Result<i64> {
        self.traces(e, &[l]).pop().unwrap()
    }

    /// Traces for many primes, computing the missing ones in parallel.
    pub fn traces(&self, e: &EllipticCurveQ, primes: &[u64]) -> Vec<Result<i64>> {
        let key = curve_key(e);
        let known: Vec<Option<i64>> = {
            let map = self.map.lock().unwrap();
            primes.iter().map(|&l| map.get(&(key.clone(), l)).copied()).collect()
        };
        let computed: Vec<Result<i64>> = primes
            .par_iter()
            .zip(known.par_iter())
            .map(|(&l, k)| match k {
                Some(a) => Ok(*a),
                None => trace_of_frobenius(e, l),
            })
            .collect();
        let fresh: Vec<(u64, i64)> = primes
            .iter()
            .zip(&known)
            .zip(&computed)
            .filter_map(|((&l, k), r)| match (k, r) {
                (None, Ok(a)) => Some((l, *a)),
                _ => None,
            })
            .collect();
        if !fresh.is_empty() {
            let mut map = self.map.lock().unwrap();
            let mut writer = self.writer.lock().unwrap();
            for &(l, a) in &fresh {
                map.insert((key.clone(), l), a);
                if let Some(w) = writer.as_mut() {
                    // a failed append only loses persistence, never correctness
                    let _ = writeln!(w, "{key} {l} {a}");
                }
            }
        }
        computed
    }
}
