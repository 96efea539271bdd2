use crate::adic::{adic_level_2, adic_level_3, AdicLevel};
use crate::modp::{mod_p_image, ImageEntry};
use crate::sample::TraceSample;
use crate::{Assumptions, Result, EXCEPTIONAL_CANDIDATES};
use ecq::EllipticCurveQ;
use modcurve::TypeDescriptor;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SerreConstant {
    pub value: u64,
    /// p → k_p for p ∈ S_E^∞.
    pub exponents: BTreeMap<u32, u32>,
    pub assumptions: Vec<String>,
    /// Primes whose classification was ambiguous; `value` is then only a partial product.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub ambiguous: Vec<u32>,
}

impl SerreConstant {
    /// Whether ρ_{E,m} is surjective as far as the per-prime data can tell
    /// (entanglement between primes is not detected).
    pub fn surjective_mod(&self, m: u64) -> bool {
        self.exponents.iter().all(|(&p, &k)| {
            let mut v = 0;
            let mut r = m;
            while r % p as u64 == 0 {
                r /= p as u64;
                v += 1;
            }
            v < k
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ImageReport {
    pub label: String,
    pub j: String,
    pub delta: String,
    #[serde(rename = "S_E")]
    pub s_e: Vec<u32>,
    #[serde(rename = "S_E_infty")]
    pub s_e_infty: Vec<u32>,
    pub images: BTreeMap<u32, ImageEntry>,
    pub adic: BTreeMap<u32, AdicLevel>,
    pub serre_constant: SerreConstant,
    pub assumptions: Vec<String>,
}

impl ImageReport {
    /// [label_p : p ∈ S_E], using the finest determined label at each prime.
    pub fn exceptional_type(&self) -> Result<TypeDescriptor> {
        let labels: Vec<&str> = self.s_e.iter().map(|p| self.images[p].label.as_str()).collect();
        Ok(TypeDescriptor::from_labels(&labels)?)
    }

    /// Same, but 2 and 3 use the adic label when the mod-p image is surjective.
    pub fn adic_type(&self) -> Result<TypeDescriptor> {
        let labels: Vec<String> = self
            .s_e_infty
            .iter()
            .map(|p| match (self.images[p].is_surjective(), self.adic.get(p)) {
                (true, Some(AdicLevel { label: Some(l), .. })) => l.clone(),
                _ => self.images[p].label.clone(),
            })
            .collect();
        Ok(TypeDescriptor::from_labels(&labels)?)
    }
}

pub(crate) fn build(label: &str, e: &EllipticCurveQ, s: &TraceSample, assume: Assumptions) -> Result<ImageReport> {
    let mut images = BTreeMap::new();
    for p in EXCEPTIONAL_CANDIDATES {
        images.insert(p, mod_p_image(e, p, s, assume)?);
    }
    let mut adic = BTreeMap::new();
    adic.insert(2, adic_level_2(e)?);
    adic.insert(3, adic_level_3(e, &images[&3])?);

    let s_e: Vec<u32> = images.iter().filter(|(_, v)| !v.is_surjective()).map(|(&p, _)| p).collect();
    let mut s_e_infty: Vec<u32> = s_e.clone();
    for (&p, a) in &adic {
        if a.k.is_some() && !s_e_infty.contains(&p) {
            s_e_infty.push(p);
        }
    }
    s_e_infty.sort();
    for &p in &s_e_infty {
        assert!(p <= 3 || s_e.contains(&p), "p ≥ 5 is adically exceptional only if exceptional");
    }

    let mut exponents = BTreeMap::new();
    let mut value = 1u64;
    for &p in &s_e_infty {
        let k = match adic.get(&p) {
            Some(a) => a.k.expect("adic level is finite on S_E^∞"),
            None => 1,
        };
        exponents.insert(p, k);
        value *= (p as u64).pow(k);
    }
    let ambiguous: Vec<u32> = images.iter().filter(|(_, v)| v.is_ambiguous()).map(|(&p, _)| p).collect();
    let mut assumptions: Vec<String> = images.values().flat_map(|v| v.assumptions.iter().cloned()).collect();
    assumptions.sort();
    assumptions.dedup();
    let inv = e.invariants();
    Ok(ImageReport {
        label: label.to_string(),
        j: inv.j.to_string(),
        delta: inv.delta.to_string(),
        s_e,
        s_e_infty,
        images,
        adic,
        serre_constant: SerreConstant { value, exponents, assumptions: assumptions.clone(), ambiguous },
        assumptions,
    })
}
