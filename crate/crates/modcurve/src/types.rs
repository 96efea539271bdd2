use crate::{ModcurveError, Result};
use modmatrix::{
    adjoin_minus_identity, conjugate_into, crt_product, factor, full_gl2, is_conjugate, lift,
    project, Subgroup,
};
use std::fmt;

/// Label recorded when a local image matches no known group.
pub const UNLABELED: &str = "unlabeled";

/// Maps labels to groups; implemented by the catalog.
pub trait LabelResolver {
    fn resolve(&self, label: &str) -> Result<Subgroup>;
    /// Known groups containing −I at exactly this prime-power level, for matching.
    fn candidates(&self, level: u32) -> Vec<(String, Subgroup)>;
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TypeEntry {
    pub prime: u32,
    pub level: u32,
    pub label: String,
}

/// A type [G_p : p ∈ S], entries sorted by prime.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TypeDescriptor {
    entries: Vec<TypeEntry>,
}

/// Level encoded in a label's numeric prefix, e.g. 8 for "8X4", 13 for "13B.4.1".
pub fn label_level(label: &str) -> Option<u32> {
    let digits: String = label.chars().take_while(|c| c.is_ascii_digit()).collect();
    digits.parse().ok().filter(|&n| n >= 2)
}

impl TypeDescriptor {
    pub fn new(mut entries: Vec<TypeEntry>) -> Result<Self> {
        entries.sort();
        if entries.windows(2).any(|w| w[0].prime == w[1].prime) {
            return Err(ModcurveError::BadType("repeated prime".into()));
        }
        Ok(TypeDescriptor { entries })
    }

    pub fn from_labels<S: AsRef<str>>(labels: &[S]) -> Result<Self> {
        let mut entries = Vec::new();
        for l in labels {
            let label = l.as_ref().trim();
            let level = label_level(label)
                .ok_or_else(|| ModcurveError::BadType(format!("no level prefix in {label:?}")))?;
            let f = factor(level as u64);
            if f.len() != 1 {
                return Err(ModcurveError::BadType(format!("{label}: level {level} is not a prime power")));
            }
            entries.push(TypeEntry { prime: f[0].0 as u32, level, label: label.to_string() });
        }
        Self::new(entries)
    }

    /// Parses "[3Nn, 5B]" or "3Nn,5B".
    pub fn parse(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        let labels: Vec<&str> = inner.split(',').map(str::trim).filter(|l| !l.is_empty()).collect();
        Self::from_labels(&labels)
    }

    pub fn entries(&self) -> &[TypeEntry] {
        &self.entries
    }

    pub fn labels(&self) -> Vec<String> {
        self.entries.iter().map(|e| e.label.clone()).collect()
    }

    pub fn get(&self, prime: u32) -> Option<&TypeEntry> {
        self.entries.iter().find(|e| e.prime == prime)
    }
}

impl fmt::Display for TypeDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.labels().join(","))
    }
}

pub fn type_level(t: &TypeDescriptor) -> u64 {
    t.entries.iter().map(|e| e.level as u64).product()
}

pub fn type_length(t: &TypeDescriptor) -> usize {
    t.entries.len()
}

/// CRT product of the ±-adjoined local groups.
pub fn type_to_group(t: &TypeDescriptor, r: &dyn LabelResolver) -> Result<Subgroup> {
    let mut acc: Option<Subgroup> = None;
    for e in &t.entries {
        let g = adjoin_minus_identity(&r.resolve(&e.label)?);
        acc = Some(match acc {
            None => g,
            Some(a) => crt_product(&a, &g)?,
        });
    }
    acc.ok_or_else(|| ModcurveError::BadType("empty type".into()))
}

/// Smallest level p^j at which the p^k-level group h is a full preimage, with its projection.
fn reduce_level(h: &Subgroup, p: u32, k: u32) -> Result<Option<Subgroup>> {
    let q = p.pow(k);
    for j in 1..=k {
        let pj = p.pow(j);
        let low = project(h, pj)?;
        if low.order() * ((q / pj) as u64).pow(4) == h.order() {
            if low.order() == full_gl2(pj).order() {
                return Ok(None);
            }
            return Ok(Some(low));
        }
    }
    unreachable!("j = k always succeeds")
}

pub fn group_to_type(g: &Subgroup, r: &dyn LabelResolver) -> Result<TypeDescriptor> {
    let n = g.modulus();
    let mut entries = Vec::new();
    for (p, k) in factor(n as u64) {
        let (p, k) = (p as u32, k);
        let local = adjoin_minus_identity(&project(g, p.pow(k))?);
        let Some(h) = reduce_level(&local, p, k)? else { continue };
        let level = h.modulus();
        let mut label = UNLABELED.to_string();
        for (name, c) in r.candidates(level) {
            if is_conjugate(&h, &adjoin_minus_identity(&c))? {
                label = name;
                break;
            }
        }
        entries.push(TypeEntry { prime: p, level, label });
    }
    TypeDescriptor::new(entries)
}

/// Whether G (mod a) is conjugate into H (mod b), lifting both to a common level.
fn local_contained(g: &Subgroup, h: &Subgroup) -> Result<bool> {
    let m = g.modulus().max(h.modulus());
    let (g, h) = (lift(&adjoin_minus_identity(g), m)?, lift(&adjoin_minus_identity(h), m)?);
    Ok(conjugate_into(&g, &h)?.is_some())
}

/// t1 is a subtype of t2: its primes are among t2's and each local group is conjugate into t2's.
pub fn subtype_of(t1: &TypeDescriptor, t2: &TypeDescriptor, r: &dyn LabelResolver) -> Result<bool> {
    for e in &t1.entries {
        let Some(f) = t2.get(e.prime) else { return Ok(false) };
        if e.label == f.label {
            continue;
        }
        if !local_contained(&r.resolve(&e.label)?, &r.resolve(&f.label)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}
