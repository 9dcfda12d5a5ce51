//! Oracles that recompute quantities without going through the code paths
//! they check, plus the acceptance suite in `tests/acceptance.rs`.

use std::collections::BTreeMap;

use bfusion::{Family, RootDatum, Weight};

/// Dominant weights of `B_k` (or `C_k`, integral only) whose coordinates sum
/// to at most `max_sum`.
pub fn small_dominant(family: Family, k: usize, max_sum: i32) -> Vec<Weight> {
    let mut out = Vec::new();
    let parities: &[i32] = if family == Family::B { &[0, 1] } else { &[0] };
    for &p in parities {
        let mut buf = vec![0i32; k];
        fill(&mut buf, 0, 2 * max_sum + p, 2 * max_sum, p, &mut out);
    }
    out
}

fn fill(buf: &mut [i32], i: usize, cap: i32, budget: i32, p: i32, out: &mut Vec<Weight>) {
    if i == buf.len() {
        out.push(Weight::from_doubled(buf.iter().copied()).unwrap());
        return;
    }
    let mut d = p;
    while d <= cap.min(budget) {
        buf[i] = d;
        fill(buf, i + 1, d, budget - d, p, out);
        d += 2;
    }
}

/// Classical decomposition of `V_λ ⊗ V_μ` by multiplying formal characters
/// and repeatedly peeling off the highest remaining dominant weight.
pub fn peel_tensor(datum: &RootDatum, lambda: &Weight, mu: &Weight) -> BTreeMap<Weight, u64> {
    let a = datum.weight_multiplicities(lambda).unwrap();
    let b = datum.weight_multiplicities(mu).unwrap();
    let mut product: BTreeMap<Weight, i64> = BTreeMap::new();
    for (x, m) in &a {
        for (y, n) in &b {
            *product.entry(x + y).or_default() += (*m * *n) as i64;
        }
    }
    let rho = datum.rho();
    let mut out = BTreeMap::new();
    loop {
        product.retain(|_, m| *m != 0);
        // maximal pairing with ρ means nothing remaining lies above it
        let top = product
            .iter()
            .filter(|(x, _)| x.is_dominant())
            .max_by_key(|(x, _)| datum.form_x4(x, rho))
            .map(|(x, m)| (x.clone(), *m));
        let Some((top, m)) = top else { break };
        assert!(m > 0, "negative multiplicity at {top}");
        out.insert(top.clone(), m as u64);
        for (x, n) in datum.weight_multiplicities(&top).unwrap() {
            *product.entry(x).or_default() -= m * n as i64;
        }
    }
    assert!(product.is_empty(), "nondominant weights left over");
    out
}

/// `sin(nzπ/ℓ) / sin(zπ/ℓ)`.
pub fn qint(n: f64, z: i64, ell: i64) -> f64 {
    let t = z as f64 * std::f64::consts::PI / ell as f64;
    (n * t).sin() / t.sin()
}
