use crate::census::{enumerate_adic_pairs, enumerate_exceptional_pairs, Bucket, CensusRow};
use crate::curvefn::CurveFn;
use crate::{AnalysisError, Result};
use catalog::{Catalog, JMap, PhantomRecord};
use modcurve::TypeDescriptor;
use ratq::{ExprField, Poly};
use std::collections::BTreeSet;

#[derive(Clone, Debug)]
pub struct PhantomCheck {
    pub types: TypeDescriptor,
    pub cover_types: Option<TypeDescriptor>,
    /// j′ = j ∘ φ holds identically on the cover.
    pub identity: bool,
    /// φ maps the cover onto the curve.
    pub morphism: bool,
}

fn cubic(a: &[i64; 5], name: &str) -> Result<Poly> {
    if a[0] != 0 || a[2] != 0 {
        return Err(AnalysisError::Phantom(name.into(), "model must have a1 = a3 = 0".into()));
    }
    Ok(Poly::from_ints(&[a[4], a[3], a[1], 1]))
}

/// The functions φ*(j) and j′ on the cover, together with Y² − f(X) for φ = (X, Y).
pub fn phantom_sides(p: &PhantomRecord) -> Result<(CurveFn, CurveFn, CurveFn)> {
    let name = p.types.to_string();
    let bad = |m: String| AnalysisError::Phantom(name.clone(), m);
    let (f, fc) = (cubic(&p.curve, &name)?, cubic(&p.cover, &name)?);
    let big_x = CurveFn::parse(&p.isogeny[0], &fc)?;
    let big_y = CurveFn::parse(&p.isogeny[1], &fc)?;
    let defect = big_y.mul(&big_y).sub(&big_x.apply(&ratq::RatFun::from_poly(f))?);

    let j_pulled: CurveFn = ratq::parse_expr(&p.j, &|v| match v {
        "x" => Some(big_x.clone()),
        "y" => Some(big_y.clone()),
        _ => None,
    })?;
    let j_cover = match (&p.cover_j, &p.cover_t, &p.cover_label) {
        (Some(s), _, _) => CurveFn::parse(s, &fc)?,
        (None, Some(t), Some(l)) => {
            let JMap::Rational(jm) = &Catalog::global().lookup(l)?.j_map else {
                return Err(bad(format!("{l} has no j-map")));
            };
            CurveFn::parse(t, &fc)?.apply(jm)?
        }
        _ => return Err(bad("no cover j-map".into())),
    };
    Ok((j_pulled, j_cover, defect))
}

/// Checks that the phantom curve's j-map pulled back along the isogeny φ from the cover
/// is the cover's j-map, so every point on the phantom curve comes from the smaller type.
pub fn verify_phantom(p: &PhantomRecord) -> Result<PhantomCheck> {
    let (j_pulled, j_cover, defect) = phantom_sides(p)?;
    Ok(PhantomCheck {
        types: p.types.clone(),
        cover_types: p.cover_types.clone(),
        identity: j_pulled.equals(&j_cover),
        morphism: defect.is_zero(),
    })
}

/// 𝒜∞ from precomputed censuses.
pub fn a_infinity_from(mod_p: &[CensusRow], adic: &[CensusRow]) -> Result<BTreeSet<u64>> {
    let cat = Catalog::global();
    let mut out = BTreeSet::from([1u64]);
    for r in cat.infinite_family() {
        out.insert(r.level as u64);
    }
    let all: Vec<&CensusRow> = mod_p.iter().chain(adic).collect();
    for row in &all {
        let name = row.types.to_string();
        match row.bucket {
            Bucket::Genus0WithPoint | Bucket::Genus1Infinite => {
                out.insert(row.level);
            }
            Bucket::Genus0Unknown => {
                return Err(AnalysisError::Inconsistent(format!("genus-0 row {name} has no j-map fixture")))
            }
            Bucket::Genus1Unknown => return Err(AnalysisError::MissingFixture(name)),
            Bucket::Genus1Phantom => {
                let rec = cat
                    .phantoms()
                    .iter()
                    .find(|p| p.types == row.types)
                    .ok_or_else(|| AnalysisError::MissingFixture(format!("phantom data for {name}")))?;
                let chk = verify_phantom(rec)?;
                if !(chk.identity && chk.morphism) {
                    return Err(AnalysisError::Phantom(name, format!("{chk:?}")));
                }
            }
            Bucket::Genus1Finite | Bucket::HigherGenus => {}
        }
    }
    // A positive-rank 8X4 row only yields curves of that exact 2-adic level if the matching
    // 4X7 row (mod-4 image inside 4X7) has finitely many points.
    for row in all.iter().filter(|r| r.bucket == Bucket::Genus1Infinite) {
        let labels = row.types.labels();
        if !labels.iter().any(|l| l == "8X4") {
            continue;
        }
        let swapped: Vec<String> = labels.iter().map(|l| if l == "8X4" { "4X7".into() } else { l.clone() }).collect();
        let t = TypeDescriptor::from_labels(&swapped)?;
        let other = all.iter().find(|r| r.types == t);
        if other.is_none_or(|o| o.bucket.infinite()) {
            return Err(AnalysisError::Inconsistent(format!("{t} does not rule out a smaller level for {}", row.types)));
        }
    }
    Ok(out)
}

pub fn compute_a_infinity() -> Result<BTreeSet<u64>> {
    a_infinity_from(&enumerate_exceptional_pairs()?, &enumerate_adic_pairs()?)
}
