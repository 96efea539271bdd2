use crate::modp::{in_image, ImageEntry};
use crate::{GalError, Result};
use catalog::{Catalog, JMap};
use ecq::{is_rational_square, EllipticCurveQ, Mod2Image};
use ratq::{int, RatFun, Rational};
use serde::Serialize;

/// Smallest k with ρ_{E,p^k} nonsurjective (None for ∞) and the label witnessing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdicLevel {
    pub k: Option<u32>,
    pub label: Option<String>,
}

impl AdicLevel {
    fn at(k: u32, label: &str) -> Self {
        AdicLevel { k: Some(k), label: Some(label.to_string()) }
    }

    fn infinite() -> Self {
        AdicLevel { k: None, label: None }
    }
}

fn jmap(label: &str) -> &'static RatFun {
    match &Catalog::global().lookup(label).expect("adic label in catalog").j_map {
        JMap::Rational(f) => f,
        _ => panic!("{label} has no j-map"),
    }
}

fn reject_corner(j: &Rational) -> Result<()> {
    if *j == int(0) || *j == int(1728) {
        return Err(GalError::CmCorner(j.to_string()));
    }
    Ok(())
}

pub(crate) fn adic_level_2(e: &EllipticCurveQ) -> Result<AdicLevel> {
    let j = e.j();
    reject_corner(&j)?;
    let m = e.mod2_image();
    if m != Mod2Image::Full {
        return Ok(AdicLevel::at(1, m.label()));
    }
    for l in ["4X3", "4X7"] {
        if in_image(jmap(l), &j)? {
            return Ok(AdicLevel::at(2, l));
        }
    }
    let in_8x4 = in_image(jmap("8X4"), &j)?;
    let certificate = is_rational_square(&(-e.discriminant() / int(2)));
    assert_eq!(in_8x4, certificate, "8X4 j-map test disagrees with -Δ/2 being a square");
    if in_8x4 {
        return Ok(AdicLevel::at(3, "8X4"));
    }
    if in_image(jmap("8X5"), &j)? {
        return Ok(AdicLevel::at(3, "8X5"));
    }
    Ok(AdicLevel::infinite())
}

pub(crate) fn adic_level_3(e: &EllipticCurveQ, mod3: &ImageEntry) -> Result<AdicLevel> {
    let j = e.j();
    reject_corner(&j)?;
    if !mod3.is_surjective() {
        return Ok(AdicLevel { k: Some(1), label: Some(mod3.label.clone()) });
    }
    if in_image(jmap("9XE"), &j)? {
        return Ok(AdicLevel::at(2, "9XE"));
    }
    Ok(AdicLevel::infinite())
}
