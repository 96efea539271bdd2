use crate::census::{enumerate_adic_pairs, enumerate_exceptional_pairs, row, Bucket, CensusRow};
use crate::Result;
use modcurve::{CurveProfile, TypeDescriptor};
use serde::Serialize;
use std::collections::BTreeSet;

#[derive(Clone, Debug, Serialize)]
pub struct TripleRow {
    #[serde(rename = "type")]
    pub types: String,
    pub level: u64,
    pub profile: CurveProfile,
    pub bucket: Bucket,
}

/// Triples at three distinct primes all of whose sub-pairs have infinitely many points.
/// Phantom pairs are left out: their points already come from a smaller type.
pub fn triple_scan_from(mod_p: &[CensusRow], adic: &[CensusRow]) -> Result<Vec<TripleRow>> {
    let good: Vec<&CensusRow> = mod_p
        .iter()
        .chain(adic)
        .filter(|r| matches!(r.bucket, Bucket::Genus0WithPoint | Bucket::Genus1Infinite))
        .collect();
    let set: BTreeSet<&TypeDescriptor> = good.iter().map(|r| &r.types).collect();
    let mut found = BTreeSet::new();
    for a in &good {
        for b in &good {
            let ea = a.types.entries();
            let eb = b.types.entries();
            // share the first entry of a, extend by the second entry of b
            if ea[0] != eb[0] || ea[1].prime >= eb[1].prime {
                continue;
            }
            let labels = [ea[0].label.clone(), ea[1].label.clone(), eb[1].label.clone()];
            let cross = TypeDescriptor::from_labels(&[&labels[1], &labels[2]])?;
            if set.contains(&cross) {
                found.insert(TypeDescriptor::from_labels(&labels)?);
            }
        }
    }
    found
        .into_iter()
        .map(|t| {
            let r = row(t)?;
            Ok(TripleRow { types: r.types.to_string(), level: r.level, profile: r.profile, bucket: r.bucket })
        })
        .collect()
}

pub fn triple_scan() -> Result<Vec<TripleRow>> {
    triple_scan_from(&enumerate_exceptional_pairs()?, &enumerate_adic_pairs()?)
}
