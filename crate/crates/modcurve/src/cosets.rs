use crate::{ModcurveError, Result};
use modmatrix::{adjoin_minus_identity, det_image, ModMatrix, Subgroup};
use rustc_hash::FxHashMap;
use serde::Serialize;

/// Right cosets of P = ±(G ∩ SL₂) in SL₂(ℤ/Nℤ) with the permutations induced by S, T and ST.
#[derive(Clone, Debug)]
pub struct CosetAction {
    pub reps: Vec<ModMatrix>,
    pub s: Vec<u32>,
    pub t: Vec<u32>,
    pub st: Vec<u32>,
}

impl CosetAction {
    pub fn index(&self) -> usize {
        self.reps.len()
    }
}

fn canonical(p: &Subgroup, g: &ModMatrix) -> u64 {
    p.elements().map(|h| h.mul(g).key()).min().unwrap()
}

pub fn coset_action(g: &Subgroup) -> Result<CosetAction> {
    let n = g.modulus();
    if !det_image(g).surjective {
        return Err(ModcurveError::NotQModular(n));
    }
    let p = adjoin_minus_identity(g).sl2_part();
    let s_m = ModMatrix::new(0, -1, 1, 0, n)?;
    let t_m = ModMatrix::new(1, 1, 0, 1, n)?;

    let id = ModMatrix::identity(n);
    let mut index: FxHashMap<u64, u32> = FxHashMap::default();
    index.insert(canonical(&p, &id), 0);
    let mut reps = vec![id];
    let (mut s, mut t) = (Vec::new(), Vec::new());
    let mut i = 0;
    while i < reps.len() {
        for (gen, out) in [(&s_m, &mut s), (&t_m, &mut t)] {
            let x = reps[i].mul(gen);
            let key = canonical(&p, &x);
            let next = reps.len() as u32;
            let j = *index.entry(key).or_insert(next);
            if j == next {
                reps.push(x);
            }
            out.push(j);
        }
        i += 1;
    }
    let st = s.iter().map(|&j| t[j as usize]).collect();
    Ok(CosetAction { reps, s, t, st })
}

/// (d, ν₂, ν₃, cusps, genus) of X_G.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CurveProfile {
    #[serde(rename = "N")]
    pub n: u32,
    pub d: u64,
    pub nu2: u64,
    pub nu3: u64,
    pub cusps: u64,
    pub genus: u64,
}

/// The JSON form of a profile, tagged with the labels it was computed for.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProfileRecord {
    pub labels: Vec<String>,
    #[serde(flatten)]
    pub profile: CurveProfile,
}

fn fixed(perm: &[u32]) -> u64 {
    perm.iter().enumerate().filter(|&(i, &j)| i as u32 == j).count() as u64
}

fn orbits(perm: &[u32]) -> u64 {
    let mut seen = vec![false; perm.len()];
    let mut count = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i] as usize;
        }
    }
    count
}

pub fn genus_profile(g: &Subgroup) -> Result<CurveProfile> {
    let a = coset_action(g)?;
    let d = a.index() as u64;
    let (nu2, nu3, cusps) = (fixed(&a.s), fixed(&a.st), orbits(&a.t));
    let twelve_g = (12 + d) as i64 - (3 * nu2 + 4 * nu3 + 6 * cusps) as i64;
    if twelve_g < 0 || twelve_g % 12 != 0 {
        return Err(ModcurveError::Inconsistent(format!(
            "12g = {twelve_g} from d={d}, nu2={nu2}, nu3={nu3}, cusps={cusps}"
        )));
    }
    Ok(CurveProfile { n: g.modulus(), d, nu2, nu3, cusps, genus: (twelve_g / 12) as u64 })
}
