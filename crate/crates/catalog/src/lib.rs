//! Labeled subgroups of GL₂ with their j-maps, finite j-lists and the fixtures built on them.
//!
//! The data lives in `data/catalog.toml` and is validated against the group theory on load:
//! determinant surjectivity, −I membership, implied isogenies and torsion, j-map degrees
//! against indices, genus, and the per-level counts.

mod raw;
mod validate;

use modcurve::{LabelResolver, ModcurveError, TypeDescriptor};
use modmatrix::{adjoin_minus_identity, contains_minus_identity, Subgroup};
use ratq::{parse_rational, parse_ratfun, BigInt, Poly, RatFun, Rational};
use std::collections::BTreeMap;
use std::sync::OnceLock;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown label {label:?}; nearest: {}", nearest.join(", "))]
    UnknownLabel { label: String, nearest: Vec<String> },
    #[error("{0} is not a finite-list label")]
    NotFiniteList(String),
    #[error("11Nn fixtures missing: no quadratic-section polynomials in the catalog")]
    FixturesMissing,
    #[error("catalog record {0}: {1}")]
    Invalid(String, String),
    #[error("catalog file: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, CatalogError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Infinitely many j, parametrized by a j-map (or a positive-rank genus-1 curve).
    Infinite,
    /// Finitely many non-CM j.
    Finite,
    /// No −I; refines the ± group named by `parent`.
    Fine,
    /// Normalizers of non-split Cartans at large p, kept for uniformity checks.
    Uniformity,
    Auxiliary,
}

#[derive(Debug, Clone)]
pub enum JMap {
    Rational(RatFun),
    Finite(Vec<Rational>),
    None,
}

/// A named curve "name,a1,a2,a3,a4,a6".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExampleCurve {
    pub name: String,
    pub coeffs: [BigInt; 5],
}

impl ExampleCurve {
    pub fn parse(s: &str) -> Option<ExampleCurve> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 6 {
            return None;
        }
        let mut coeffs: [BigInt; 5] = Default::default();
        for (c, p) in coeffs.iter_mut().zip(&parts[1..]) {
            *c = p.parse().ok()?;
        }
        Some(ExampleCurve { name: parts[0].to_string(), coeffs })
    }
}

#[derive(Debug, Clone)]
pub struct GroupRecord {
    pub label: String,
    pub zywina_label: Option<String>,
    pub level: u32,
    pub family: Family,
    pub maximal: bool,
    pub contains_minus_i: bool,
    pub j_map: JMap,
    pub example_curve: Option<ExampleCurve>,
    pub implied_isogeny: Option<u32>,
    pub implied_torsion: Option<u32>,
    pub genus: Option<u64>,
    pub rank: Option<String>,
    pub parent: Option<String>,
    pub group: Subgroup,
}

impl GroupRecord {
    /// The group with −I adjoined, which is what the modular curve sees.
    pub fn pm_group(&self) -> Subgroup {
        adjoin_minus_identity(&self.group)
    }

    pub fn prime(&self) -> u32 {
        modmatrix::factor(self.level as u64)[0].0 as u32
    }

    pub fn is_adic(&self) -> bool {
        !modmatrix::is_prime(self.level as u64)
    }
}

#[derive(Debug, Clone)]
pub struct PairRecord {
    pub types: TypeDescriptor,
    pub jmap: RatFun,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Genus1Record {
    pub types: TypeDescriptor,
    pub infinite: bool,
    pub curve: Option<String>,
    pub phantom: bool,
}

/// A genus-1 type whose points come from another type's curve through an isogeny.
#[derive(Debug, Clone)]
pub struct PhantomRecord {
    pub types: TypeDescriptor,
    pub curve: [i64; 5],
    /// j as an expression in x, y on `curve`.
    pub j: String,
    pub cover: [i64; 5],
    pub cover_types: Option<TypeDescriptor>,
    /// Either an explicit j on the cover, or a parameter `cover_t` fed into the j-map of `cover_label`.
    pub cover_j: Option<String>,
    pub cover_t: Option<String>,
    pub cover_label: Option<String>,
    pub isogeny: [String; 2],
}

#[derive(Debug, Clone)]
pub struct SearchRecord {
    pub name: String,
    pub types: TypeDescriptor,
    pub f: Poly,
    pub pair: Option<TypeDescriptor>,
    pub t: Option<String>,
    /// (sign of y/x^(deg/2), parameter t there) at the points at infinity.
    pub infinity: Vec<(i32, String)>,
}

pub struct Catalog {
    cm_j: Vec<Rational>,
    records: Vec<GroupRecord>,
    index: BTreeMap<String, usize>,
    pairs: Vec<PairRecord>,
    genus1: Vec<Genus1Record>,
    phantoms: Vec<PhantomRecord>,
    searches: Vec<SearchRecord>,
    eleven_nn: Option<(Poly, Poly, Poly)>,
}

const DATA: &str = include_str!("../data/catalog.toml");

impl Catalog {
    /// The shipped catalog, validated once; a broken data file aborts loudly.
    pub fn global() -> &'static Catalog {
        static CELL: OnceLock<Catalog> = OnceLock::new();
        CELL.get_or_init(|| match Catalog::from_toml(DATA) {
            Ok(c) => c,
            Err(e) => panic!("catalog failed validation: {e}"),
        })
    }

    pub fn from_toml(text: &str) -> Result<Catalog> {
        let raw: raw::RawCatalog = toml::from_str(text).map_err(|e| CatalogError::Parse(e.to_string()))?;
        let cat = build(raw)?;
        validate::validate(&cat)?;
        Ok(cat)
    }

    pub fn records(&self) -> &[GroupRecord] {
        &self.records
    }

    pub fn lookup(&self, label: &str) -> Result<&GroupRecord> {
        match self.index.get(label) {
            Some(&i) => Ok(&self.records[i]),
            None => Err(CatalogError::UnknownLabel { label: label.to_string(), nearest: self.nearest(label) }),
        }
    }

    fn nearest(&self, label: &str) -> Vec<String> {
        let mut scored: Vec<(usize, &String)> =
            self.index.keys().map(|k| (strsim::levenshtein(&label.to_lowercase(), &k.to_lowercase()), k)).collect();
        scored.sort();
        scored.into_iter().take(3).map(|(_, k)| k.clone()).collect()
    }

    pub fn cm_j_invariants(&self) -> &[Rational] {
        &self.cm_j
    }

    pub fn is_cm_j(&self, j: &Rational) -> bool {
        self.cm_j.contains(j)
    }

    pub fn finite_j_list(&self, label: &str) -> Result<&[Rational]> {
        match &self.lookup(label)?.j_map {
            JMap::Finite(v) => Ok(v),
            _ => Err(CatalogError::NotFiniteList(label.to_string())),
        }
    }

    /// Whether j lies in the image of X_{11Nn}(ℚ), via the quadratic-section test.
    pub fn eleven_nn_membership(&self, j: &Rational) -> Result<bool> {
        let (a, b, c) = self.eleven_nn.as_ref().ok_or(CatalogError::FixturesMissing)?;
        ratq::quadratic_section_roots(j, a, b, c).map_err(|e| CatalogError::Invalid("11Nn".into(), e.to_string()))
    }

    /// Records at one prime-power level.
    pub fn at_level(&self, level: u32) -> impl Iterator<Item = &GroupRecord> {
        self.records.iter().filter(move |r| r.level == level)
    }

    pub fn maximal_labels(&self) -> Vec<&str> {
        self.records.iter().filter(|r| r.maximal && !r.is_adic()).map(|r| r.label.as_str()).collect()
    }

    /// The infinite-family records (the ones a sieve of pairs ranges over).
    pub fn infinite_family(&self) -> impl Iterator<Item = &GroupRecord> {
        self.records.iter().filter(|r| r.family == Family::Infinite)
    }

    pub fn fine_refinements<'a>(&'a self, parent: &'a str) -> impl Iterator<Item = &'a GroupRecord> + 'a {
        self.records.iter().filter(move |r| r.parent.as_deref() == Some(parent))
    }

    pub fn pairs(&self) -> &[PairRecord] {
        &self.pairs
    }

    pub fn pair_jmap(&self, t: &TypeDescriptor) -> Option<&RatFun> {
        self.pairs.iter().find(|p| &p.types == t).map(|p| &p.jmap)
    }

    pub fn genus1(&self) -> &[Genus1Record] {
        &self.genus1
    }

    pub fn genus1_fixture(&self, t: &TypeDescriptor) -> Option<&Genus1Record> {
        self.genus1.iter().find(|g| &g.types == t)
    }

    pub fn phantoms(&self) -> &[PhantomRecord] {
        &self.phantoms
    }

    pub fn searches(&self) -> &[SearchRecord] {
        &self.searches
    }

    pub fn search(&self, name: &str) -> Option<&SearchRecord> {
        self.searches.iter().find(|s| s.name == name)
    }
}

impl LabelResolver for Catalog {
    fn resolve(&self, label: &str) -> modcurve::Result<Subgroup> {
        self.lookup(label).map(|r| r.group.clone()).map_err(|e| ModcurveError::UnknownLabel(e.to_string()))
    }

    fn candidates(&self, level: u32) -> Vec<(String, Subgroup)> {
        self.at_level(level)
            .filter(|r| r.family != Family::Fine && (r.contains_minus_i || level == 2))
            .map(|r| (r.label.clone(), r.group.clone()))
            .collect()
    }
}

fn invalid(label: &str, msg: impl ToString) -> CatalogError {
    CatalogError::Invalid(label.to_string(), msg.to_string())
}

fn types_of(label: &str, v: &[String]) -> Result<TypeDescriptor> {
    TypeDescriptor::from_labels(v).map_err(|e| invalid(label, e))
}

fn build(raw: raw::RawCatalog) -> Result<Catalog> {
    let cm_j = raw
        .cm_j
        .iter()
        .map(|s| parse_rational(s).map_err(|e| invalid("cm_j", e)))
        .collect::<Result<Vec<_>>>()?;

    let mut records = Vec::new();
    let mut index = BTreeMap::new();
    for g in raw.group {
        let l = g.label.clone();
        let family = match g.family.as_str() {
            "infinite" => Family::Infinite,
            "finite" => Family::Finite,
            "fine" => Family::Fine,
            "uniformity" => Family::Uniformity,
            "auxiliary" => Family::Auxiliary,
            f => return Err(invalid(&l, format!("unknown family {f}"))),
        };
        if modcurve::label_level(&l) != Some(g.level) {
            return Err(invalid(&l, format!("label does not encode level {}", g.level)));
        }
        let gens = g
            .generators
            .iter()
            .map(|m| modmatrix::ModMatrix::new(m[0], m[1], m[2], m[3], g.level))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| invalid(&l, e))?;
        let group = modmatrix::closure(&gens, g.level).map_err(|e| invalid(&l, e))?;
        let j_map = match (&g.jmap, &g.finite_j) {
            (Some(_), Some(_)) => return Err(invalid(&l, "both a j-map and a finite list")),
            (Some(s), None) => {
                let mut f = parse_ratfun(s, "t").map_err(|e| invalid(&l, e))?;
                if let Some(sub) = &g.subst {
                    f = f.compose(&parse_ratfun(sub, "t").map_err(|e| invalid(&l, e))?);
                }
                JMap::Rational(f)
            }
            (None, Some(v)) => JMap::Finite(
                v.iter().map(|s| parse_rational(s).map_err(|e| invalid(&l, e))).collect::<Result<_>>()?,
            ),
            (None, None) => JMap::None,
        };
        let example_curve = match &g.example {
            Some(s) => Some(ExampleCurve::parse(s).ok_or_else(|| invalid(&l, format!("bad example {s:?}")))?),
            None => None,
        };
        if index.insert(l.clone(), records.len()).is_some() {
            return Err(invalid(&l, "duplicate label"));
        }
        records.push(GroupRecord {
            label: l,
            zywina_label: g.zywina,
            level: g.level,
            family,
            maximal: g.maximal,
            contains_minus_i: contains_minus_identity(&group),
            j_map,
            example_curve,
            implied_isogeny: g.implied_isogeny,
            implied_torsion: g.implied_torsion,
            genus: g.genus,
            rank: g.rank,
            parent: g.parent,
            group,
        });
    }

    let pairs = raw
        .pair
        .iter()
        .map(|p| {
            let name = p.types.join(",");
            Ok(PairRecord {
                types: types_of(&name, &p.types)?,
                jmap: parse_ratfun(&p.jmap, "t").map_err(|e| invalid(&name, e))?,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let genus1 = raw
        .genus1
        .iter()
        .map(|g| {
            let name = g.types.join(",");
            let infinite = match g.points.as_str() {
                "infinite" => true,
                "finite" => false,
                p => return Err(invalid(&name, format!("points must be finite or infinite, not {p}"))),
            };
            Ok(Genus1Record { types: types_of(&name, &g.types)?, infinite, curve: g.curve.clone(), phantom: g.phantom })
        })
        .collect::<Result<Vec<_>>>()?;

    let phantoms = raw
        .phantom
        .into_iter()
        .map(|p| {
            let name = p.types.join(",");
            let cover_types = match &p.cover_types {
                Some(v) => Some(types_of(&name, v)?),
                None => None,
            };
            if p.cover_j.is_none() && (p.cover_t.is_none() || p.cover_label.is_none()) {
                return Err(invalid(&name, "phantom needs cover_j, or cover_t with cover_label"));
            }
            Ok(PhantomRecord {
                types: types_of(&name, &p.types)?,
                curve: p.curve,
                j: p.j,
                cover: p.cover,
                cover_types,
                cover_j: p.cover_j,
                cover_t: p.cover_t,
                cover_label: p.cover_label,
                isogeny: p.isogeny,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let searches = raw
        .search
        .into_iter()
        .map(|s| {
            let f = parse_ratfun(&s.f, "x").map_err(|e| invalid(&s.name, e))?;
            if !f.den().is_constant() {
                return Err(invalid(&s.name, "f must be a polynomial"));
            }
            let f = f.num().scale(&f.den().lead().recip());
            let pair = match &s.pair {
                Some(v) => Some(types_of(&s.name, v)?),
                None => None,
            };
            let infinity = s
                .infinity
                .iter()
                .map(|[sign, t]| match sign.as_str() {
                    "1" => Ok((1, t.clone())),
                    "-1" => Ok((-1, t.clone())),
                    _ => Err(invalid(&s.name, "infinity sign must be 1 or -1")),
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(SearchRecord { types: types_of(&s.name, &s.types)?, name: s.name, f, pair, t: s.t, infinity })
        })
        .collect::<Result<Vec<_>>>()?;

    let eleven_nn = match raw.eleven_nn {
        Some(e) => {
            let p = |s: &str| -> Result<Poly> {
                let f = parse_ratfun(s, "x").map_err(|err| invalid("11Nn", err))?;
                Ok(f.num().scale(&f.den().lead().recip()))
            };
            Some((p(&e.a)?, p(&e.b)?, p(&e.c)?))
        }
        None => None,
    };

    Ok(Catalog { cm_j, records, index, pairs, genus1, phantoms, searches, eleven_nn })
}
