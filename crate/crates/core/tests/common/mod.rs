#![allow(dead_code)]

use std::collections::BTreeMap;

use ellcomb::{BivarPoly, UnivarPoly};

/// Golden polynomials keyed by name.
pub fn golden() -> BTreeMap<String, BivarPoly> {
    let text = include_str!("../golden/reference_tables.txt");
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let (name, poly) = l.split_once('|').expect("name | polynomial");
            let parsed =
                BivarPoly::parse(poly.trim()).unwrap_or_else(|e| panic!("golden {name}: {e}"));
            (name.trim().to_string(), parsed)
        })
        .collect()
}

pub fn golden_univar(name: &str) -> UnivarPoly {
    golden()[name].to_univar_q().expect("univariate golden")
}

pub fn p(s: &str) -> BivarPoly {
    BivarPoly::parse(s).unwrap()
}
