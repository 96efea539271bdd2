use crate::sieve::{admissible_pair, mod_p_family};
use crate::Result;
use catalog::Catalog;
use modcurve::{genus_profile, type_level, type_to_group, CurveProfile, TypeDescriptor};
use rayon::prelude::*;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;
use std::collections::BTreeMap;

/// The 2- and 3-adic groups of level 4, 8 and 9.
pub(crate) const ADIC: [&str; 5] = ["4X3", "4X7", "8X4", "8X5", "9XE"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Bucket {
    Genus0WithPoint,
    Genus0Unknown,
    Genus1Infinite,
    Genus1Phantom,
    Genus1Finite,
    Genus1Unknown,
    HigherGenus,
}

impl Bucket {
    pub fn name(&self) -> &'static str {
        match self {
            Bucket::Genus0WithPoint => "genus0-with-point",
            Bucket::Genus0Unknown => "genus0-unknown",
            Bucket::Genus1Infinite => "genus1-infinite",
            Bucket::Genus1Phantom => "genus1-phantom",
            Bucket::Genus1Finite => "genus1-finite",
            Bucket::Genus1Unknown => "genus1-unknown",
            Bucket::HigherGenus => "higher-genus",
        }
    }

    /// Whether the modular curve has infinitely many rational points.
    pub fn infinite(&self) -> bool {
        matches!(self, Bucket::Genus0WithPoint | Bucket::Genus1Infinite | Bucket::Genus1Phantom)
    }
}

/// One pair type with its genus data. The group itself is not kept; it is cheap to rebuild
/// with `type_to_group` and large to hold for every row.
#[derive(Clone, Debug, Serialize)]
pub struct CensusRow {
    #[serde(rename = "type", serialize_with = "as_string")]
    pub types: TypeDescriptor,
    pub level: u64,
    pub profile: CurveProfile,
    pub bucket: Bucket,
}

fn as_string<S: Serializer>(t: &TypeDescriptor, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&t.to_string())
}

impl CensusRow {
    pub fn genus(&self) -> u64 {
        self.profile.genus
    }

    pub fn csv(&self) -> String {
        format!("\"{}\",{},{},{}", self.types, self.level, self.profile.genus, self.bucket.name())
    }
}

pub(crate) fn bucket(cat: &Catalog, t: &TypeDescriptor, genus: u64) -> Bucket {
    match genus {
        0 if cat.pair_jmap(t).is_some() => Bucket::Genus0WithPoint,
        0 => Bucket::Genus0Unknown,
        1 => match cat.genus1_fixture(t) {
            Some(f) if f.infinite && f.phantom => Bucket::Genus1Phantom,
            Some(f) if f.infinite => Bucket::Genus1Infinite,
            Some(_) => Bucket::Genus1Finite,
            None => Bucket::Genus1Unknown,
        },
        _ => Bucket::HigherGenus,
    }
}

pub(crate) fn row(t: TypeDescriptor) -> Result<CensusRow> {
    let cat = Catalog::global();
    let g = type_to_group(&t, cat)?;
    let profile = genus_profile(&g)?;
    Ok(CensusRow { level: type_level(&t), bucket: bucket(cat, &t, profile.genus), profile, types: t })
}

fn rows(types: Vec<TypeDescriptor>) -> Result<Vec<CensusRow>> {
    let mut out = types.into_par_iter().map(row).collect::<Result<Vec<_>>>()?;
    out.sort_by(|a, b| (a.level, a.types.to_string()).cmp(&(b.level, b.types.to_string())));
    Ok(out)
}

/// Every admissible pair of infinite-family groups at distinct primes.
pub fn enumerate_exceptional_pairs() -> Result<Vec<CensusRow>> {
    let fam = mod_p_family();
    let mut types = Vec::new();
    for (i, a) in fam.iter().enumerate() {
        for b in &fam[i + 1..] {
            if a.level != b.level && admissible_pair(&a.label, &b.label)? {
                types.push(TypeDescriptor::from_labels(&[&a.label, &b.label])?);
            }
        }
    }
    rows(types)
}

/// Each 2- or 3-adic group against every maximal group at another prime, plus the
/// 2-adic groups against 9XE.
pub fn enumerate_adic_pairs() -> Result<Vec<CensusRow>> {
    let cat = Catalog::global();
    let maximal = cat.maximal_labels();
    let mut types = Vec::new();
    for a in ADIC {
        let p = cat.lookup(a)?.prime();
        for m in &maximal {
            if cat.lookup(m)?.prime() != p {
                types.push(TypeDescriptor::from_labels(&[a, m])?);
            }
        }
        if p == 2 {
            types.push(TypeDescriptor::from_labels(&[a, "9XE"])?);
        }
    }
    rows(types)
}

/// Row counts per genus, with genera ≥ `cap` pooled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Histogram {
    pub counts: BTreeMap<u64, usize>,
    pub cap: Option<u64>,
    pub pooled: usize,
}

impl Histogram {
    pub fn total(&self) -> usize {
        self.counts.values().sum::<usize>() + self.pooled
    }
}

impl Serialize for Histogram {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(None)?;
        for (g, n) in &self.counts {
            m.serialize_entry(&g.to_string(), n)?;
        }
        if let Some(c) = self.cap {
            m.serialize_entry(&format!(">={c}"), &self.pooled)?;
        }
        m.end()
    }
}

pub fn histogram(rows: &[CensusRow], cap: Option<u64>) -> Histogram {
    let mut counts = BTreeMap::new();
    let mut pooled = 0;
    for r in rows {
        match cap {
            Some(c) if r.genus() >= c => pooled += 1,
            _ => *counts.entry(r.genus()).or_insert(0) += 1,
        }
    }
    Histogram { counts, cap, pooled }
}
