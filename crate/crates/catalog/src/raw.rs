//! Serde mirror of the data file; everything is re-validated in `load`.

use serde::Deserialize;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct RawCatalog {
    pub cm_j: Vec<String>,
    pub group: Vec<RawGroup>,
    #[serde(default)]
    pub pair: Vec<RawPair>,
    #[serde(default)]
    pub genus1: Vec<RawGenus1>,
    #[serde(default)]
    pub phantom: Vec<RawPhantom>,
    #[serde(default)]
    pub search: Vec<RawSearch>,
    pub eleven_nn: Option<RawElevenNn>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct RawGroup {
    pub label: String,
    pub zywina: Option<String>,
    pub level: u32,
    pub generators: Vec<[i64; 4]>,
    pub family: String,
    #[serde(default)]
    pub maximal: bool,
    pub jmap: Option<String>,
    pub subst: Option<String>,
    pub finite_j: Option<Vec<String>>,
    pub genus: Option<u64>,
    pub example: Option<String>,
    pub rank: Option<String>,
    pub parent: Option<String>,
    pub implied_isogeny: Option<u32>,
    pub implied_torsion: Option<u32>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct RawPair {
    pub types: Vec<String>,
    pub jmap: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct RawGenus1 {
    pub types: Vec<String>,
    pub points: String,
    pub curve: Option<String>,
    #[serde(default)]
    pub phantom: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct RawPhantom {
    pub types: Vec<String>,
    pub curve: [i64; 5],
    pub j: String,
    pub cover: [i64; 5],
    pub cover_types: Option<Vec<String>>,
    pub cover_t: Option<String>,
    pub cover_label: Option<String>,
    pub cover_j: Option<String>,
    pub isogeny: [String; 2],
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct RawSearch {
    pub name: String,
    pub types: Vec<String>,
    pub f: String,
    pub pair: Option<Vec<String>>,
    pub t: Option<String>,
    #[serde(default)]
    pub infinity: Vec<[String; 2]>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct RawElevenNn {
    pub a: String,
    pub b: String,
    pub c: String,
}
