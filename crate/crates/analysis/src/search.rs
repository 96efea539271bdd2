use crate::{AnalysisError, Result};
use catalog::Catalog;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use ratq::{height, parse_expr, poly_rational_roots, ratfun_eval, BigInt, Extended, PlaneModel, Poly, RatqError, Rational};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Clone, Debug)]
pub enum SearchModel {
    /// y² = f(x)
    Hyperelliptic(Poly),
    /// F(x, y) = 0, affine points only
    Plane(PlaneModel),
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchPoint {
    /// Projective coordinates; weighted [x : y : 1] for hyperelliptic models.
    pub coords: Vec<String>,
    pub height: u64,
    pub j_values: Vec<String>,
    pub cm: Option<bool>,
    pub cusp: Option<bool>,
    #[serde(skip)]
    pub affine: Option<(Rational, Rational)>,
    /// Sign of y/x^(deg/2) for a point at infinity.
    #[serde(skip)]
    pub infinity: Option<i32>,
}

fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let (n, d) = (q.numer().sqrt(), q.denom().sqrt());
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| Rational::new(n, d))
}

/// Every a/b in lowest terms with max(|a|, |b|) ≤ h.
fn rationals_up_to(h: i64) -> Vec<Rational> {
    let mut out = vec![Rational::zero()];
    for b in 1..=h {
        for a in 1..=h {
            if a.gcd(&b) == 1 {
                out.push(Rational::new(a.into(), b.into()));
                out.push(Rational::new((-a).into(), b.into()));
            }
        }
    }
    out
}

fn affine_point(x: Rational, y: Rational) -> SearchPoint {
    let h = height(&x).max(height(&y)).to_u64().unwrap_or(u64::MAX);
    SearchPoint {
        coords: vec![x.to_string(), y.to_string(), "1".into()],
        height: h,
        j_values: Vec::new(),
        cm: None,
        cusp: None,
        affine: Some((x, y)),
        infinity: None,
    }
}

fn sort_key(p: &SearchPoint) -> (bool, Rational, Rational, i32) {
    match (&p.affine, p.infinity) {
        (Some((x, y)), _) => (false, x.clone(), y.clone(), 0),
        (None, s) => (true, Rational::zero(), Rational::zero(), -s.unwrap_or(0)),
    }
}

/// Rational points of height at most `h`; for hyperelliptic models the height is that of x,
/// and for plane models the larger of the heights of x and y.
pub fn bounded_point_search(model: &SearchModel, h: u64) -> Result<Vec<SearchPoint>> {
    let xs = rationals_up_to(h as i64);
    let bound = BigInt::from(h);
    let mut pts: Vec<SearchPoint> = match model {
        SearchModel::Hyperelliptic(f) => {
            let mut pts: Vec<SearchPoint> = xs
                .into_par_iter()
                .flat_map_iter(|x| {
                    let v = f.eval(&x);
                    let roots = match rational_sqrt(&v) {
                        Some(r) if r.is_zero() => vec![r],
                        Some(r) => vec![-r.clone(), r],
                        None => vec![],
                    };
                    roots.into_iter().map(move |y| {
                        let mut p = affine_point(x.clone(), y);
                        p.height = height(&x).to_u64().unwrap_or(u64::MAX);
                        p
                    })
                })
                .collect();
            let d = f.degree();
            if d > 0 && d % 2 == 0 {
                if let Some(s) = rational_sqrt(&f.lead()) {
                    for sign in [1, -1] {
                        let y = if sign > 0 { s.clone() } else { -s.clone() };
                        pts.push(SearchPoint {
                            coords: vec!["1".into(), y.to_string(), "0".into()],
                            height: 1,
                            j_values: Vec::new(),
                            cm: None,
                            cusp: None,
                            affine: None,
                            infinity: Some(sign),
                        });
                    }
                }
            }
            pts
        }
        SearchModel::Plane(m) => xs
            .into_par_iter()
            .map(|x| {
                let g = m.poly.at_x(&x);
                if g.is_zero() {
                    // a vertical line lies on the curve: every y of bounded height
                    return Ok(rationals_up_to(h as i64).into_iter().map(|y| affine_point(x.clone(), y)).collect());
                }
                if g.degree() == 0 {
                    return Ok(Vec::new());
                }
                Ok(poly_rational_roots(&g)?
                    .into_iter()
                    .filter(|y| height(y) <= bound)
                    .map(|y| affine_point(x.clone(), y))
                    .collect::<Vec<_>>())
            })
            .collect::<Result<Vec<Vec<_>>>>()?
            .into_iter()
            .flatten()
            .collect(),
    };
    for p in &pts {
        if let Some((x, y)) = &p.affine {
            let on = match model {
                SearchModel::Hyperelliptic(f) => y * y == f.eval(x),
                SearchModel::Plane(m) => m.vanishes_at(x, y),
            };
            if !on {
                return Err(AnalysisError::Inconsistent(format!("({x}, {y}) is not on the model")));
            }
        }
    }
    pts.sort_by_key(sort_key);
    Ok(pts)
}

fn parse_extended(s: &str) -> Result<Extended> {
    if s.trim() == "inf" {
        Ok(Extended::Infinity)
    } else {
        Ok(Extended::Finite(ratq::parse_rational(s)?))
    }
}

/// Point search on a catalog curve; points are mapped to j through the recorded pair j-map.
pub fn search_record(name: &str, h: u64) -> Result<Vec<SearchPoint>> {
    let cat = Catalog::global();
    let rec = cat
        .search(name)
        .ok_or_else(|| AnalysisError::MissingFixture(format!("search curve {name}")))?;
    let mut pts = bounded_point_search(&SearchModel::Hyperelliptic(rec.f.clone()), h)?;
    let (Some(pair), Some(t)) = (&rec.pair, &rec.t) else {
        return Ok(pts);
    };
    let jmap = cat.pair_jmap(pair).expect("validated at load");
    for p in &mut pts {
        let tv = match (&p.affine, p.infinity) {
            (Some((x, y)), _) => {
                match parse_expr::<Rational>(t, &|v| match v {
                    "x" => Some(x.clone()),
                    "y" => Some(y.clone()),
                    _ => None,
                }) {
                    Ok(q) => Extended::Finite(q),
                    Err(RatqError::DivisionByZero) => Extended::Infinity,
                    Err(e) => return Err(e.into()),
                }
            }
            (None, Some(s)) => {
                let (_, tv) = rec
                    .infinity
                    .iter()
                    .find(|(sign, _)| *sign == s)
                    .ok_or_else(|| AnalysisError::MissingFixture(format!("{name}: t at infinity {s}")))?;
                parse_extended(tv)?
            }
            (None, None) => unreachable!(),
        };
        let j = ratfun_eval(jmap, &tv);
        p.cusp = Some(j.is_infinity());
        p.cm = Some(j.finite().is_some_and(|q| cat.is_cm_j(q)));
        p.j_values = vec![match &j {
            Extended::Finite(q) => q.to_string(),
            Extended::Infinity => "inf".into(),
        }];
    }
    Ok(pts)
}
