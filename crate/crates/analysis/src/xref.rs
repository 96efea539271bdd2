use crate::Result;
use catalog::{Catalog, CatalogError, JMap};
use ratq::{ratfun_preimages, Extended, Rational};
use serde::Serialize;

#[derive(Clone, Debug, Default, Serialize)]
pub struct CrossReference {
    pub cm: bool,
    /// Single labels whose modular curve has a rational point over j.
    pub labels: Vec<String>,
    /// Pair types whose j-map reaches j, with the parameters.
    pub types: Vec<(String, Vec<String>)>,
    /// None while the 11Nn equation is unavailable.
    pub eleven_nn: Option<bool>,
}

fn show(t: &Extended) -> String {
    match t {
        Extended::Finite(q) => q.to_string(),
        Extended::Infinity => "inf".into(),
    }
}

pub fn cross_reference_j(j: &Rational) -> Result<CrossReference> {
    let cat = Catalog::global();
    if cat.is_cm_j(j) {
        return Ok(CrossReference { cm: true, ..Default::default() });
    }
    let target = Extended::Finite(j.clone());
    let mut out = CrossReference::default();
    for r in cat.records() {
        let hit = match &r.j_map {
            JMap::Rational(f) => !ratfun_preimages(f, &target)?.is_empty(),
            JMap::Finite(js) => js.contains(j),
            JMap::None => false,
        };
        if hit {
            out.labels.push(r.label.clone());
        }
    }
    for p in cat.pairs() {
        let ts = ratfun_preimages(&p.jmap, &target)?;
        if !ts.is_empty() {
            out.types.push((p.types.to_string(), ts.iter().map(show).collect()));
        }
    }
    out.eleven_nn = match cat.eleven_nn_membership(j) {
        Ok(b) => Some(b),
        Err(CatalogError::FixturesMissing) => None,
        Err(e) => return Err(e.into()),
    };
    Ok(out)
}
