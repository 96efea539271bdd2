use catalog::{Catalog, Family, JMap};
use modmatrix::{conjugate_into, fixed_points, fixes_line, trace_det_pairs, Subgroup};
use ratq::{RatFun, Rational};
use std::collections::{BTreeSet, HashMap};
use std::sync::{Mutex, OnceLock};

pub(crate) enum Test {
    JMap(RatFun),
    Finite(Vec<Rational>),
    /// Fingerprint only (no j-map available).
    Open,
}

pub(crate) struct Candidate {
    pub label: String,
    pub pairs: BTreeSet<(u32, u32)>,
    pub test: Test,
    pub uniformity: bool,
}

/// ±-candidates at a prime level with their containment relation up to conjugacy.
pub(crate) struct Level {
    pub cands: Vec<Candidate>,
    /// below[i][j]: candidate i is conjugate into candidate j.
    pub below: Vec<Vec<bool>>,
}

/// A fine (no −I) refinement of a ±-label.
pub(crate) struct Fine {
    pub label: String,
    pub pairs: BTreeSet<(u32, u32)>,
    pub torsion: bool,
    pub pm_line: bool,
}

/// Whether some stable line is acted on by ±1 only.
pub(crate) fn has_pm_line(g: &Subgroup) -> bool {
    let n = g.modulus();
    fixes_line(g).into_iter().any(|v| {
        g.generators().iter().all(|m| {
            let w = m.apply(v);
            w == v || w == ((n - v.0) % n, (n - v.1) % n)
        })
    })
}

fn build(p: u32) -> Level {
    let cat = Catalog::global();
    let cands_rec: Vec<_> = cat
        .at_level(p)
        .filter(|r| match r.family {
            Family::Infinite | Family::Finite => r.contains_minus_i,
            Family::Uniformity => true,
            _ => false,
        })
        .collect();
    let groups: Vec<Subgroup> = cands_rec.iter().map(|r| r.pm_group()).collect();
    let cands = cands_rec
        .iter()
        .zip(&groups)
        .map(|(r, g)| Candidate {
            label: r.label.clone(),
            pairs: trace_det_pairs(g),
            test: match &r.j_map {
                JMap::Rational(f) => Test::JMap(f.clone()),
                JMap::Finite(v) => Test::Finite(v.clone()),
                JMap::None => Test::Open,
            },
            uniformity: r.family == Family::Uniformity,
        })
        .collect();
    let below = groups
        .iter()
        .map(|a| {
            groups
                .iter()
                .map(|b| conjugate_into(a, b).ok().flatten().is_some())
                .collect()
        })
        .collect();
    Level { cands, below }
}

pub(crate) fn level(p: u32) -> &'static Level {
    static CACHE: OnceLock<Mutex<HashMap<u32, &'static Level>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(l) = cache.lock().unwrap().get(&p) {
        return l;
    }
    // built outside the lock; a racing duplicate build is harmless
    let l: &'static Level = Box::leak(Box::new(build(p)));
    *cache.lock().unwrap().entry(p).or_insert(l)
}

pub(crate) fn fine_children(parent: &str) -> Vec<Fine> {
    Catalog::global()
        .fine_refinements(parent)
        .map(|r| Fine {
            label: r.label.clone(),
            pairs: trace_det_pairs(&r.group),
            torsion: fixed_points(&r.group).exponent(r.level) == r.level,
            pm_line: has_pm_line(&r.group),
        })
        .collect()
}

pub(crate) fn parent_pm_line(parent: &str) -> bool {
    Catalog::global().lookup(parent).map(|r| has_pm_line(&r.group)).unwrap_or(false)
}
