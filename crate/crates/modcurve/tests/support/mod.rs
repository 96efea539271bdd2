use modcurve::{LabelResolver, ModcurveError, Result};
use modmatrix::{closure, contains_minus_identity, parse_generators, Subgroup};

/// A few groups from standard generator tables, enough to exercise the dictionary.
const GROUPS: &[(&str, u32, &str)] = &[
    ("2B", 2, "[1,1,0,1]"),
    ("2Cn", 2, "[0,1,1,1]"),
    ("3B", 3, "[2,1,0,2],[1,0,0,2]"),
    ("3Cs", 3, "[1,0,0,2],[2,0,0,1]"),
    ("3Ns", 3, "[0,1,2,0],[0,1,1,0]"),
    ("3Nn", 3, "[1,1,2,1],[0,1,1,0]"),
    ("5B", 5, "[2,1,0,2],[1,0,0,2]"),
    ("5Cs", 5, "[1,0,0,2],[2,0,0,1]"),
    ("5Ns", 5, "[0,1,2,0],[0,1,1,0]"),
    ("5Nn", 5, "[1,1,3,1],[1,0,0,4]"),
    ("5S4", 5, "[1,1,3,2],[0,1,3,0]"),
    ("7B", 7, "[5,1,0,5],[1,0,0,5]"),
    ("7Ns", 7, "[0,1,5,0],[0,1,1,0]"),
    ("13B", 13, "[2,1,0,2],[1,0,0,2]"),
    ("13S4", 13, "[0,2,10,0],[0,1,12,12]"),
    ("13Ns", 13, "[0,1,2,0],[0,1,1,0]"),
    ("13Nn", 13, "[2,2,1,2],[1,0,0,12]"),
    ("4X7", 4, "[0,3,1,1],[0,1,1,0],[1,2,1,3]"),
    ("8X4", 8, "[0,1,5,1],[0,1,1,0]"),
    ("8X5", 8, "[0,1,1,1],[0,1,5,0]"),
    ("9XE", 9, "[0,2,2,8],[0,1,8,8]"),
];

pub struct Table;

pub fn group(label: &str) -> Subgroup {
    let (_, n, g) = GROUPS.iter().find(|r| r.0 == label).unwrap();
    closure(&parse_generators(g, *n).unwrap(), *n).unwrap()
}

impl LabelResolver for Table {
    fn resolve(&self, label: &str) -> Result<Subgroup> {
        if GROUPS.iter().any(|r| r.0 == label) {
            Ok(group(label))
        } else {
            Err(ModcurveError::UnknownLabel(format!("unknown label {label}")))
        }
    }

    fn candidates(&self, level: u32) -> Vec<(String, Subgroup)> {
        GROUPS
            .iter()
            .filter(|r| r.1 == level)
            .map(|r| (r.0.to_string(), group(r.0)))
            .filter(|(_, g)| contains_minus_identity(g) || g.modulus() == 2)
            .collect()
    }
}
