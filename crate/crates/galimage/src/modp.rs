use crate::level::{fine_children, level, parent_pm_line, Test};
use crate::sample::{Confidence, TraceSample};
use crate::{Assumptions, GalError, Result, CONJECTURE_13S4, STRONG_UNIFORMITY};
use ecq::{division_polynomial, is_rational_square, EllipticCurveQ, Mod2Image};
use ratq::{poly_rational_roots, ratfun_preimages, Extended, Rational};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Deterministic,
    Fingerprint,
    JMap,
    FiniteList,
}

pub const SURJECTIVE: &str = "surjective";
pub const AMBIGUOUS: &str = "ambiguous";

/// The image of ρ_{E,p}, up to conjugacy.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ImageEntry {
    /// Finest label determined, "surjective", or "ambiguous".
    pub label: String,
    /// The ±-label (equal to `label` unless a fine refinement was found).
    #[serde(skip)]
    pub pm_label: String,
    pub method: Method,
    pub confidence: Confidence,
    /// Survivors when the result is ambiguous, or undecided fine refinements.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub candidates: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub assumptions: Vec<String>,
}

impl ImageEntry {
    pub fn is_surjective(&self) -> bool {
        self.label == SURJECTIVE
    }

    pub fn is_ambiguous(&self) -> bool {
        self.label == AMBIGUOUS
    }
}

pub(crate) fn in_image(f: &ratq::RatFun, j: &Rational) -> Result<bool> {
    Ok(!ratfun_preimages(f, &Extended::Finite(j.clone()))?.is_empty())
}

fn mod2(e: &EllipticCurveQ) -> ImageEntry {
    let m = e.mod2_image();
    let label = if m == Mod2Image::Full { SURJECTIVE } else { m.label() }.to_string();
    ImageEntry {
        pm_label: label.clone(),
        label,
        method: Method::Deterministic,
        confidence: Confidence { samples: 0, eliminated: 0 },
        candidates: vec![],
        assumptions: vec![],
    }
}

pub(crate) fn mod_p_image(e: &EllipticCurveQ, p: u32, s: &TraceSample, assume: Assumptions) -> Result<ImageEntry> {
    if p == 2 {
        return Ok(mod2(e));
    }
    let lv = level(p);
    if lv.cands.is_empty() {
        return Err(GalError::UnsupportedPrime(p));
    }
    let j = e.j();
    let pairs: Vec<(u32, u32)> = s.pairs(p).collect();
    let mut assumptions = Vec::new();
    let mut survivors = Vec::new();
    for (i, c) in lv.cands.iter().enumerate() {
        let print_ok = pairs.iter().all(|x| c.pairs.contains(x));
        let keep = print_ok
            && match &c.test {
                Test::JMap(f) => in_image(f, &j)?,
                Test::Finite(list) => {
                    let hit = list.contains(&j);
                    if !hit && c.label == "13S4" {
                        if !assume.conjecture_13s4 {
                            // without the conjecture the list may be incomplete
                            survivors.push(i);
                            continue;
                        }
                        assumptions.push(CONJECTURE_13S4.to_string());
                    }
                    hit
                }
                Test::Open => true,
            };
        if keep {
            survivors.push(i);
        }
    }
    let confidence = Confidence { samples: pairs.len(), eliminated: lv.cands.len() - survivors.len() };
    let entry = |label: &str, method, candidates, assumptions| ImageEntry {
        label: label.to_string(),
        pm_label: label.to_string(),
        method,
        confidence,
        candidates,
        assumptions,
    };
    if survivors.is_empty() {
        return Ok(entry(SURJECTIVE, Method::Fingerprint, vec![], assumptions));
    }
    let min = survivors
        .iter()
        .copied()
        .find(|&i| survivors.iter().all(|&k| lv.below[i][k]));
    let Some(i) = min else {
        let names = survivors.iter().map(|&i| lv.cands[i].label.clone()).collect();
        return Ok(entry(AMBIGUOUS, Method::Fingerprint, names, assumptions));
    };
    let c = &lv.cands[i];
    if c.uniformity {
        if !assume.strong_uniformity {
            return Ok(entry(AMBIGUOUS, Method::Fingerprint, vec![SURJECTIVE.to_string(), c.label.clone()], assumptions));
        }
        assumptions.push(STRONG_UNIFORMITY.to_string());
        return Ok(entry(SURJECTIVE, Method::Fingerprint, vec![], assumptions));
    }
    let method = match c.test {
        Test::JMap(_) => Method::JMap,
        Test::Finite(_) => Method::FiniteList,
        Test::Open => Method::Fingerprint,
    };
    let mut out = entry(&c.label, method, vec![], assumptions);
    if matches!(p, 3 | 5 | 7) {
        refine(e, p, s, &mut out)?;
    }
    Ok(out)
}

/// Rational roots x₀ of ψ_p on the short model, and whether some f(x₀) is a square.
fn division_predicates(e: &EllipticCurveQ, p: u32) -> Result<(bool, bool)> {
    let psi = division_polynomial(e, p);
    let roots = poly_rational_roots(&psi)?;
    let (a, b) = e.short_model();
    let torsion = roots.iter().any(|x| is_rational_square(&(x * x * x + &a * x + &b)));
    Ok((!roots.is_empty(), torsion))
}

/// Picks among the ±-label and its fine sublabels using exact (unsigned) traces and
/// the p-division polynomial.
fn refine(e: &EllipticCurveQ, p: u32, s: &TraceSample, out: &mut ImageEntry) -> Result<()> {
    let children = fine_children(&out.pm_label);
    if children.is_empty() {
        return Ok(());
    }
    let (pm_line, torsion) = division_predicates(e, p)?;
    let pairs: Vec<(u32, u32)> = s.pairs(p).collect();
    let parent_ok = !torsion && pm_line == parent_pm_line(&out.pm_label);
    let alive: Vec<&str> = children
        .iter()
        .filter(|c| c.torsion == torsion && c.pm_line == pm_line)
        .filter(|c| pairs.iter().all(|x| c.pairs.contains(x)))
        .map(|c| c.label.as_str())
        .collect();
    match alive.as_slice() {
        [] => {}
        [one] => {
            out.label = one.to_string();
            if torsion || !parent_ok {
                out.method = Method::Deterministic;
            }
        }
        many => {
            out.candidates = many.iter().map(|s| s.to_string()).collect();
            if parent_ok {
                out.candidates.insert(0, out.pm_label.clone());
            }
        }
    }
    Ok(())
}
