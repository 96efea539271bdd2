use crate::{invalid, Catalog, Family, JMap, Result};
use modcurve::{genus_profile, type_to_group, TypeDescriptor};
use modmatrix::{adjoin_minus_identity, det_image, fixed_points, fixes_line, is_conjugate, is_prime};
use std::collections::{BTreeMap, BTreeSet};

const LEVEL_COUNTS: [(u32, usize); 9] = [(2, 3), (3, 4), (4, 2), (5, 9), (7, 6), (8, 2), (9, 1), (11, 1), (13, 6)];
const MAXIMAL: [&str; 12] = ["2B", "2Cn", "3B", "3Nn", "5B", "5Nn", "5S4", "7B", "7Nn", "7Ns", "11Nn", "13B"];

pub(crate) fn validate(cat: &Catalog) -> Result<()> {
    let cm: BTreeSet<_> = cat.cm_j.iter().collect();
    if cm.len() != 13 || cat.cm_j.len() != 13 {
        return Err(invalid("cm_j", "expected 13 distinct values"));
    }

    for r in &cat.records {
        let l = &r.label;
        if !det_image(&r.group).surjective {
            return Err(invalid(l, "determinant is not surjective"));
        }
        let fine = r.family == Family::Fine;
        if r.level > 2 && fine == r.contains_minus_i {
            return Err(invalid(l, format!("-I membership {} contradicts family", r.contains_minus_i)));
        }
        if fine {
            let p = r.parent.as_deref().ok_or_else(|| invalid(l, "fine record without parent"))?;
            let parent = cat.lookup(p)?;
            if !is_conjugate(&adjoin_minus_identity(&r.group), &parent.pm_group()).map_err(|e| invalid(l, e))? {
                return Err(invalid(l, format!("adjoining -I does not give {p}")));
            }
        }

        if is_prime(r.level as u64) && matches!(r.family, Family::Infinite | Family::Finite | Family::Fine) {
            let lines = fixes_line(&r.group);
            match r.implied_isogeny {
                Some(n) if n != r.level || lines.is_empty() => {
                    return Err(invalid(l, format!("implied {n}-isogeny but {} stable lines", lines.len())))
                }
                None if !lines.is_empty() => return Err(invalid(l, "stable line without implied isogeny")),
                _ => {}
            }
            let exp = fixed_points(&r.group).exponent(r.level);
            if r.implied_torsion.unwrap_or(1) != exp {
                return Err(invalid(l, format!("fixed vectors have exponent {exp}")));
            }
        }

        if let JMap::Finite(js) = &r.j_map {
            if js.iter().any(|j| cat.is_cm_j(j)) {
                return Err(invalid(l, "finite list contains a CM j-invariant"));
            }
        }

        let has_curve = r.contains_minus_i || r.level == 2;
        if has_curve && (matches!(r.j_map, JMap::Rational(_)) || r.genus.is_some()) {
            let prof = genus_profile(&r.pm_group()).map_err(|e| invalid(l, e))?;
            if let JMap::Rational(f) = &r.j_map {
                if prof.genus != 0 || f.degree() as u64 != prof.d {
                    return Err(invalid(l, format!("j-map degree {} vs index {}, genus {}", f.degree(), prof.d, prof.genus)));
                }
            }
            if let Some(g) = r.genus {
                if g != prof.genus {
                    return Err(invalid(l, format!("recorded genus {g}, computed {}", prof.genus)));
                }
            }
        }
    }

    let mut counts = BTreeMap::new();
    for r in cat.infinite_family() {
        *counts.entry(r.level).or_insert(0usize) += 1;
    }
    if counts != BTreeMap::from(LEVEL_COUNTS) {
        return Err(invalid("catalog", format!("per-level counts {counts:?}")));
    }
    let maximal: BTreeSet<&str> = cat.maximal_labels().into_iter().collect();
    if maximal != BTreeSet::from(MAXIMAL) {
        return Err(invalid("catalog", format!("maximal labels {maximal:?}")));
    }

    for p in &cat.pairs {
        let name = p.types.to_string();
        let prof = profile(cat, &p.types)?;
        if prof.genus != 0 || p.jmap.degree() as u64 != prof.d {
            return Err(invalid(&name, format!("j-map degree {} vs index {}, genus {}", p.jmap.degree(), prof.d, prof.genus)));
        }
    }
    for g in &cat.genus1 {
        let prof = profile(cat, &g.types)?;
        if prof.genus != 1 {
            return Err(invalid(&g.types.to_string(), format!("genus-1 fixture has genus {}", prof.genus)));
        }
    }
    for p in &cat.phantoms {
        let name = p.types.to_string();
        if !cat.genus1_fixture(&p.types).is_some_and(|g| g.phantom && g.infinite) {
            return Err(invalid(&name, "phantom without a positive-rank phantom genus-1 fixture"));
        }
        if let Some(l) = &p.cover_label {
            if !matches!(cat.lookup(l)?.j_map, JMap::Rational(_)) {
                return Err(invalid(&name, format!("{l} has no j-map")));
            }
        }
    }
    for s in &cat.searches {
        for e in s.types.entries() {
            cat.lookup(&e.label)?;
        }
        if let Some(pair) = &s.pair {
            if cat.pair_jmap(pair).is_none() {
                return Err(invalid(&s.name, format!("no j-map for {pair}")));
            }
        }
    }
    Ok(())
}

fn profile(cat: &Catalog, t: &TypeDescriptor) -> Result<modcurve::CurveProfile> {
    let name = t.to_string();
    let g = type_to_group(t, cat).map_err(|e| invalid(&name, e))?;
    genus_profile(&g).map_err(|e| invalid(&name, e))
}
