//! Audit of the generator dimension `h(z)` against the positive character
//! `Dim(□)`, and negative-dimension witnesses in the even sector.

use std::f64::consts::PI;
use std::fmt::Write as _;

use num_integer::Integer;
use serde::Serialize;

use crate::bmwdual::{gamma_set, psi, FerrersDiagram};
use crate::error::{Error, Result};
use crate::fusion::AlcoveParams;
use crate::qchar::QuantumParams;
use crate::rootdata::Family;
use crate::symmetry::InvolutionData;

const STRICT_MARGIN: f64 = 1e-9;

fn check_z(ell: i64, z: i64) -> Result<()> {
    if z < 1 || z >= ell || z.gcd(&ell) != 1 {
        return Err(Error::Domain(format!(
            "z = {z} must lie in [1, {}] and be coprime to {ell}",
            ell - 1
        )));
    }
    Ok(())
}

/// `h(z) = 1 - sin(2kzπ/ℓ) / sin(zπ/ℓ)`, the dimension of the generator at
/// `q = exp(zπi/ℓ)`.
pub fn h(k: usize, ell: i64, z: i64) -> Result<f64> {
    check_z(ell, z)?;
    let t = z as f64 * PI / ell as f64;
    Ok(1.0 - (2.0 * k as f64 * t).sin() / t.sin())
}

/// `Dim(□) = sin((2k+1)π/ℓ) / sin(π/ℓ)`.
pub fn dim_box(k: usize, ell: i64) -> Result<f64> {
    if ell <= 2 * k as i64 + 1 {
        return Err(Error::Configuration(format!(
            "Dim(□) needs 2k+1 < ℓ, got k={k}, ℓ={ell}"
        )));
    }
    let t = PI / ell as f64;
    Ok(((2 * k + 1) as f64 * t).sin() / t.sin())
}

#[derive(Debug, Clone, Serialize)]
pub struct ZEntry {
    pub z: i64,
    pub h: f64,
    pub dim_box: f64,
    /// `Dim(□) - |h(z)|`.
    pub margin: f64,
    pub strict: bool,
    /// `|h(z)| ≠ Dim(□)`, the weaker statement that the generator dimension
    /// is not the positive one up to sign.
    pub distinct: bool,
    pub negative_even_witness: Option<FerrersDiagram>,
    pub witness_value: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct UnitarityReport {
    pub k: usize,
    pub ell: i64,
    /// `2(2k+1) < ℓ`.
    pub conclusive: bool,
    pub per_z: Vec<ZEntry>,
    pub all_strict: bool,
    pub all_distinct: bool,
    pub all_witnessed: bool,
}

/// Scans every admissible `z`. A witness is an even diagram `τ` whose
/// transported dimension `qdim(Ψ(τ))` at `z` is below `-1e-9`.
pub fn audit(k: usize, ell: i64) -> Result<UnitarityReport> {
    let alcove = AlcoveParams::from_family(Family::B, k, ell)?;
    let involution = InvolutionData::new(&alcove)?;
    let dim = dim_box(k, ell)?;
    let even: Vec<(FerrersDiagram, crate::rootdata::Weight)> = gamma_set(k, ell)?
        .into_iter()
        .filter(|d| d.size() % 2 == 0)
        .map(|d| {
            let w = psi(&alcove, &involution, &d)?;
            Ok((d, w))
        })
        .collect::<Result<_>>()?;
    let mut per_z = Vec::new();
    for z in (1..ell).filter(|z| z.gcd(&ell) == 1) {
        let value = h(k, ell, z)?;
        let params = QuantumParams::new(alcove.clone(), z)?;
        let margin = dim - value.abs();
        let witness = even.iter().map(|(d, w)| (d, params.qdim(w))).find(|(_, v)| *v < -1e-9);
        per_z.push(ZEntry {
            z,
            h: value,
            dim_box: dim,
            margin,
            strict: margin > STRICT_MARGIN,
            distinct: margin.abs() > STRICT_MARGIN,
            negative_even_witness: witness.map(|(d, _)| d.clone()),
            witness_value: witness.map(|(_, v)| v),
        });
    }
    Ok(UnitarityReport {
        k,
        ell,
        conclusive: 2 * (2 * k as i64 + 1) < ell,
        all_strict: per_z.iter().all(|e| e.strict),
        all_distinct: per_z.iter().all(|e| e.distinct),
        all_witnessed: per_z.iter().all(|e| e.negative_even_witness.is_some()),
        per_z,
    })
}

impl UnitarityReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("unitarity report serializes")
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "k={} ell={} conclusive={} all_strict={} all_witnessed={}",
            self.k, self.ell, self.conclusive, self.all_strict, self.all_witnessed
        );
        let _ = writeln!(
            out,
            "{:>4}  {:>20}  {:>20}  {:>20}  witness",
            "z", "h(z)", "Dim(□)", "margin"
        );
        for e in &self.per_z {
            let witness = e
                .negative_even_witness
                .as_ref()
                .map_or_else(|| "-".to_string(), |d| d.to_string());
            let _ = writeln!(
                out,
                "{:>4}  {:>20}  {:>20}  {:>20}  {}",
                e.z,
                format_significant(e.h),
                format_significant(e.dim_box),
                format_significant(e.margin),
                witness
            );
        }
        out
    }
}

/// Formats a float with 12 significant digits.
pub fn format_significant(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    if !(-4..12).contains(&magnitude) {
        return format!("{x:.11e}");
    }
    let decimals = (11 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h_and_dim_box_values() {
        let v = h(2, 11, 1).unwrap();
        assert!((v - (1.0 - (4.0 * PI / 11.0).sin() / (PI / 11.0).sin())).abs() < 1e-12);
        assert!((v + 2.2287).abs() < 1e-4);
        let g1 = (4.0 * PI / 11.0).sin() / (PI / 11.0).sin() + 1.0;
        assert!((h(2, 11, 10).unwrap() - g1).abs() < 1e-12);
        let d = dim_box(2, 11).unwrap();
        assert!((d - 3.5133).abs() < 1e-4);
        assert!(d > 1.0);
        assert!(matches!(h(2, 9, 3), Err(Error::Domain(_))));
    }

    #[test]
    fn audit_shapes() {
        let r = audit(2, 9).unwrap();
        assert!(!r.conclusive);
        let r = audit(3, 15).unwrap();
        assert_eq!(r.per_z.len(), 8);
        assert!(r.conclusive);
    }

    #[test]
    fn significant_digits() {
        assert_eq!(format_significant(3.513337091), "3.51333709100");
        assert_eq!(format_significant(-2.2287), "-2.22870000000");
        assert_eq!(format_significant(0.0), "0");
    }
}
