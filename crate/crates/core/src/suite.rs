//! The full invariant suite for one `(k, ℓ)` instance of type B.

use std::collections::BTreeSet;

use num_complex::Complex64;
use num_integer::Integer;
use serde::Serialize;

use crate::bmwdual::{
    bratteli_agree, categorical_trace_check, dim_from_eigs, eigen_square_check, generator_label, quantum_number_at,
    ranklevel_check, verify_psi_fusion, BmwParams,
};
use crate::error::Result;
use crate::fusion::{AlcoveParams, FusionTable};
use crate::qchar::{pf_certify_unique, positive_character, QuantumParams};
use crate::rootdata::{weyl_orbit, Family, Weight};
use crate::symmetry::{phi_sign, phi_sign_from_weyl, verify_current_shift, verify_simple_current, InvolutionData};
use crate::unitarity::audit;

pub const DEFAULT_GRID: [(usize, i64); 6] = [(2, 9), (2, 11), (2, 13), (3, 13), (3, 15), (4, 17)];

/// Relative tolerance for composed floating point identities.
pub const REL_TOL: f64 = 1e-7;

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub k: usize,
    pub ell: i64,
    pub checks: Vec<Check>,
    pub passed: bool,
}

fn check(name: &str, passed: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.to_string(),
        passed,
        detail: detail.into(),
    }
}

fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * (1.0 + a.abs().max(b.abs()))
}

pub fn admissible_z(ell: i64) -> Vec<i64> {
    (1..ell).filter(|z| z.gcd(&ell) == 1).collect()
}

/// `Λ_k ⊗ V_λ = ⊕ V_{λ + w(Λ_k)}` over the weights landing in the alcove,
/// each with multiplicity one.
pub fn spin_rule_holds(table: &FusionTable) -> Result<bool> {
    let alcove = table.params();
    let spin = alcove.datum().spin_weight()?;
    let s = table.index_of(&spin)?;
    for (a, lambda) in table.labels().iter().enumerate() {
        let expected: BTreeSet<usize> = weyl_orbit(&spin)
            .iter()
            .map(|w| lambda + w)
            .filter(|nu| alcove.contains(nu))
            .map(|nu| table.index_of(&nu))
            .collect::<Result<_>>()?;
        let got: BTreeSet<usize> = table.product(s, a).iter().map(|&(c, _)| c).collect();
        if got != expected || table.product(s, a).iter().any(|&(_, m)| m != 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For integral `μ`: `Λ_1 ⊗ V_μ = ⊕ V_{μ ± ε_i}` in the alcove, plus `V_μ`
/// itself iff `⟨μ, ε_k⟩ > 0`.
pub fn vector_rule_holds(table: &FusionTable) -> Result<bool> {
    let alcove = table.params();
    let k = alcove.rank();
    let v = table.index_of(&alcove.datum().vector_weight())?;
    for (a, mu) in table.labels().iter().enumerate() {
        if !mu.is_integral() {
            continue;
        }
        let mut expected = BTreeSet::new();
        for i in 0..k {
            let e = Weight::unit_vector(k, i);
            for nu in [mu + &e, mu - &e] {
                if alcove.contains(&nu) {
                    expected.insert(table.index_of(&nu)?);
                }
            }
        }
        if mu.doubled()[k - 1] > 0 {
            expected.insert(a);
        }
        let got: BTreeSet<usize> = table.product(v, a).iter().map(|&(c, _)| c).collect();
        if got != expected || table.product(v, a).iter().any(|&(_, m)| m != 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `|dim^μ(V_λ)| = |dim^μ(V_{φ(λ)})|` for every half-integral label `μ`,
/// every label `λ` and every admissible `z`. Returns the worst relative gap.
pub fn phi_magnitude_gap(alcove: &AlcoveParams, involution: &InvolutionData) -> Result<f64> {
    let labels = alcove.alcove_enumerate();
    let samples: Vec<&Weight> = labels.iter().filter(|w| !w.is_integral()).collect();
    let mut worst: f64 = 0.0;
    for z in admissible_z(alcove.ell()) {
        let params = QuantumParams::new(alcove.clone(), z)?;
        for mu in &samples {
            let values: Vec<f64> = labels.iter().map(|l| params.dim_mu(mu, l)).collect::<Result<_>>()?;
            for (i, &j) in involution.permutation().iter().enumerate() {
                let (a, b) = (values[i].abs(), values[j].abs());
                worst = worst.max((a - b).abs() / (1.0 + a.max(b)));
            }
        }
    }
    Ok(worst)
}

/// `qdim(φ(λ)) = s · qdim(λ)` with `s` from the sign table, across `z`.
/// Returns the number of `(z, λ)` pairs violating it.
pub fn phi_sign_violations(alcove: &AlcoveParams, involution: &InvolutionData) -> Result<usize> {
    let labels = alcove.alcove_enumerate();
    let k = alcove.rank();
    let mut bad = 0;
    for z in admissible_z(alcove.ell()) {
        let params = QuantumParams::new(alcove.clone(), z)?;
        let s = phi_sign(k, params.q_ell_sign()) as f64;
        for (i, &j) in involution.permutation().iter().enumerate() {
            if !rel_close(params.qdim(&labels[j]), s * params.qdim(&labels[i]), REL_TOL) {
                bad += 1;
            }
        }
    }
    Ok(bad)
}

/// Worst gap in `|qdim(φ(Λ_1))| = |[4k]/[2] + 1|` over all `z`.
pub fn vdim_gap(alcove: &AlcoveParams, involution: &InvolutionData) -> Result<f64> {
    let v = generator_label(involution, alcove)?;
    let k = alcove.rank() as i64;
    let mut worst: f64 = 0.0;
    for z in admissible_z(alcove.ell()) {
        let p = QuantumParams::new(alcove.clone(), z)?;
        let expected = p.quantum_integer(4 * k) / p.quantum_integer(2) + 1.0;
        worst = worst.max((p.qdim(&v).abs() - expected.abs()).abs());
    }
    Ok(worst)
}

/// Worst gap in `|dim_from_eigs(-q̃^{-1}, q̃, -q̃^{-2k})| = |[-2k]_q̃ + 1|`
/// and in `[2k]_q̃ = -[4k]_q / [2]_q`, with `q̃ = -q²`, over all `z`.
pub fn eigen_dimension_gap(alcove: &AlcoveParams) -> Result<f64> {
    let k = alcove.rank() as i32;
    let mut worst: f64 = 0.0;
    for z in admissible_z(alcove.ell()) {
        let p = QuantumParams::new(alcove.clone(), z)?;
        let x = BmwParams::from_quantum(&p)?.q;
        let d = dim_from_eigs(-x.inv(), x, -x.powi(-2 * k))?;
        let target = quantum_number_at(x, -2 * k) + Complex64::new(1.0, 0.0);
        worst = worst.max((d.norm() - target.norm()).abs());
        let changed = quantum_number_at(x, 2 * k);
        let direct = -p.quantum_integer(4 * k as i64) / p.quantum_integer(2);
        worst = worst.max((changed - direct).norm());
    }
    Ok(worst)
}

pub fn run_suite(k: usize, ell: i64) -> Result<SuiteReport> {
    let alcove = AlcoveParams::from_family(Family::B, k, ell)?;
    let table = FusionTable::build(&alcove)?;
    let involution = InvolutionData::new(&alcove)?;
    let mut checks = vec![
        check("fusion unit", table.check_unit(), ""),
        check("fusion total symmetry", table.check_symmetry(), ""),
        check("fusion associativity", table.check_associativity(), ""),
        check("fusion sector grading", table.check_grading(), ""),
        check("spin fusion rule", spin_rule_holds(&table)?, ""),
        check("vector fusion rule", vector_rule_holds(&table)?, "integral labels"),
    ];
    checks.push(check(
        "simple current",
        verify_simple_current(&table, &involution) && verify_current_shift(&table, &involution),
        "N_γ is the permutation of φ, N_γ² = I, N_φ(λ) = N_γ N_λ",
    ));
    checks.push(check(
        "φ is a fixed-point-free involution",
        involution.is_involution() && !involution.has_fixed_point(),
        "",
    ));

    let p1 = QuantumParams::new(alcove.clone(), 1)?;
    let spin = alcove.datum().spin_weight()?;
    let spin_dims: Vec<f64> = table
        .labels()
        .iter()
        .map(|l| p1.dim_mu(&spin, l))
        .collect::<Result<_>>()?;
    let dim = positive_character(&alcove);
    let agree = spin_dims.iter().zip(&dim.values).all(|(a, b)| rel_close(*a, *b, 1e-9));
    let law = dim.law_defect(&table);
    checks.push(check(
        "positive spin dimension",
        spin_dims.iter().all(|&v| v > 0.0) && agree && law < REL_TOL,
        format!("character law defect {law:.3e}"),
    ));
    match pf_certify_unique(&table) {
        Ok(cert) => {
            let matches = cert
                .eigenvector
                .iter()
                .zip(&dim.values)
                .all(|(a, b)| (a - b).abs() < 1e-6);
            checks.push(check(
                "unique positive character",
                cert.positive_count == 1 && matches,
                format!("s = {}", cert.s),
            ));
        }
        Err(e) => checks.push(check("unique positive character", false, e.to_string())),
    }

    let gap = phi_magnitude_gap(&alcove, &involution)?;
    checks.push(check(
        "φ preserves |dim^μ|",
        gap < REL_TOL,
        format!("worst gap {gap:.3e}"),
    ));
    let bad = phi_sign_violations(&alcove, &involution)?;
    let signs_agree = [1, -1].iter().all(|&s| phi_sign(k, s) == phi_sign_from_weyl(k, s));
    checks.push(check(
        "φ dimension sign table",
        bad == 0 && signs_agree,
        format!("{bad} violations"),
    ));

    checks.push(check("Ψ matches the box rule", verify_psi_fusion(&table)?, ""));
    checks.push(check(
        "Bratteli counts agree up to n = 6",
        bratteli_agree(&table, 6)?,
        "",
    ));

    let mut eig_ok = true;
    let mut trace_ok = true;
    for z in admissible_z(ell) {
        let p = QuantumParams::new(alcove.clone(), z)?;
        eig_ok &= eigen_square_check(&p, &table)?.equal;
        trace_ok &= categorical_trace_check(&p)?.matched.is_some();
    }
    checks.push(check("braiding eigenvalue squares", eig_ok, "all z"));
    checks.push(check("categorical trace of g", trace_ok, "all z"));
    let vgap = vdim_gap(&alcove, &involution)?;
    checks.push(check(
        "|dim V| = |[4k]/[2] + 1|",
        vgap < 1e-9,
        format!("worst gap {vgap:.3e}"),
    ));
    let egap = eigen_dimension_gap(&alcove)?;
    checks.push(check(
        "dimension from eigenvalues",
        egap < 1e-9,
        format!("worst gap {egap:.3e}"),
    ));

    let rank_level = ranklevel_check(k, ell)?;
    checks.push(check(
        "rank-level duality",
        rank_level.cardinalities_equal && rank_level.isomorphic(),
        format!("C_{} alcove has {} labels", rank_level.r, rank_level.c_alcove_size),
    ));

    let report = audit(k, ell)?;
    if report.conclusive {
        let failing: Vec<i64> = report.per_z.iter().filter(|e| !e.strict).map(|e| e.z).collect();
        checks.push(check(
            "unitarity audit",
            report.all_strict && report.all_witnessed,
            format!(
                "|h(z)| ≥ Dim(□) at z = {failing:?}; witnesses {}; |h| ≠ Dim(□) everywhere: {}",
                if report.all_witnessed {
                    "found for every z"
                } else {
                    "missing"
                },
                report.all_distinct
            ),
        ));
    }

    let passed = checks.iter().all(|c| c.passed);
    Ok(SuiteReport { k, ell, checks, passed })
}
