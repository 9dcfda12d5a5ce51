#![allow(dead_code)]

use bfusion::rootdata::parse_weight;
use bfusion::Weight;

pub fn w(s: &str) -> Weight {
    parse_weight(s).unwrap()
}

/// `sin(nzπ/ℓ) / sin(zπ/ℓ)`.
pub fn qint(n: f64, z: i64, ell: i64) -> f64 {
    let t = z as f64 * std::f64::consts::PI / ell as f64;
    (n * t).sin() / t.sin()
}
