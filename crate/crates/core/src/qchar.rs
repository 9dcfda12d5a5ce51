//! Quantum integers, Weyl-sum characters of the fusion ring, quantum
//! dimensions, and the Perron–Frobenius certificate for the positive
//! character.

use std::f64::consts::PI;

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fusion::{AlcoveParams, FusionTable};
use crate::rootdata::{Family, Weight};

/// Relative size below which a Weyl sum is treated as zero.
const SINGULAR_TOL: f64 = 1e-9;

/// Alcove data together with `z`, fixing `q = exp(zπi/ℓ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantumParams {
    alcove: AlcoveParams,
    z: i64,
}

impl QuantumParams {
    pub fn new(alcove: AlcoveParams, z: i64) -> Result<Self> {
        let ell = alcove.ell();
        if z < 1 || z >= ell || z.gcd(&ell) != 1 {
            return Err(Error::Domain(format!(
                "z = {z} must lie in [1, {}] and be coprime to {ell}",
                ell - 1
            )));
        }
        Ok(Self { alcove, z })
    }

    pub fn alcove(&self) -> &AlcoveParams {
        &self.alcove
    }

    pub fn z(&self) -> i64 {
        self.z
    }

    pub fn ell(&self) -> i64 {
        self.alcove.ell()
    }

    pub fn q(&self) -> Complex64 {
        self.q_pow(1)
    }

    /// `q^n`.
    pub fn q_pow(&self, n: i64) -> Complex64 {
        self.q_pow_half(2 * n)
    }

    /// `q^{n/2}`, with the exponent reduced mod `4ℓ` before evaluation.
    pub fn q_pow_half(&self, doubled: i64) -> Complex64 {
        let ell = self.ell();
        let e = (doubled * self.z).rem_euclid(4 * ell);
        Complex64::from_polar(1.0, PI * e as f64 / (2 * ell) as f64)
    }

    /// `q^ℓ = (-1)^z`.
    pub fn q_ell_sign(&self) -> i32 {
        if self.z % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// `[n] = sin(nzπ/ℓ) / sin(zπ/ℓ)`.
    pub fn quantum_integer(&self, n: i64) -> f64 {
        let ell = self.ell();
        // reduce mod 2ℓ so large arguments keep their precision
        let m = (n * self.z).rem_euclid(2 * ell);
        if m == 0 || m == ell {
            return 0.0;
        }
        (PI * m as f64 / ell as f64).sin() / (PI * self.z as f64 / ell as f64).sin()
    }

    /// `[x]` for a real argument, `sin(xzπ/ℓ) / sin(zπ/ℓ)`.
    pub fn quantum_number(&self, x: f64) -> f64 {
        let t = PI * self.z as f64 / self.ell() as f64;
        (x * t).sin() / t.sin()
    }

    fn check_root_lattice(&self, nu: &Weight) -> Result<()> {
        let datum = self.alcove.datum();
        datum.check_weight(nu)?;
        if datum.simple_root_coefficients(nu).is_none() {
            return Err(Error::Domain(format!("{nu} is not in the root lattice")));
        }
        Ok(())
    }

    /// `∏_{α>0} [½⟨α, ν⟩]`.
    pub fn weyl_denominator(&self, nu: &Weight) -> Result<f64> {
        self.check_root_lattice(nu)?;
        let datum = self.alcove.datum();
        Ok(datum
            .positive_roots()
            .iter()
            .map(|a| self.quantum_number(datum.form_x4(a, nu) as f64 / 8.0))
            .product())
    }

    /// `Σ_w ε(w) q^{⟨w(x), ν⟩}`. The Weyl group is all signed permutations,
    /// so the sum is `det[q^{⟨x_j ε_j, ν_i ε_i⟩} - q^{-⟨x_j ε_j, ν_i ε_i⟩}]`.
    pub fn weyl_sum(&self, x: &Weight, nu: &Weight) -> Complex64 {
        let datum = self.alcove.datum();
        let k = datum.rank();
        let scale = datum.form_scale();
        let (xs, ns) = (x.doubled(), nu.doubled());
        let m = DMatrix::from_fn(k, k, |i, j| {
            let e = scale * xs[j] as i64 * ns[i] as i64;
            self.q_pow_quarter(e) - self.q_pow_quarter(-e)
        });
        m.determinant()
    }

    fn q_pow_quarter(&self, n: i64) -> Complex64 {
        let ell = self.ell();
        let e = (n * self.z).rem_euclid(8 * ell);
        Complex64::from_polar(1.0, PI * e as f64 / (4 * ell) as f64)
    }

    /// `(q - q^{-1})^{|Φ_+|}`, the factor relating [`Self::weyl_sum`] at `ρ`
    /// to [`Self::weyl_denominator`].
    pub fn weyl_sum_normalizer(&self) -> Complex64 {
        let q = self.q();
        let n = self.alcove.datum().positive_roots().len() as i32;
        (q - q.inv()).powi(n)
    }

    /// `χ_λ(H_ν)`, the quotient of the Weyl sums at `λ+ρ` and at `ρ`.
    pub fn chi(&self, lambda: &Weight, nu: &Weight) -> Result<f64> {
        self.check_root_lattice(nu)?;
        let datum = self.alcove.datum();
        datum.check_dominant(lambda)?;
        let denom = self.weyl_sum(datum.rho(), nu);
        let scale = self.weyl_sum_normalizer().norm();
        if denom.norm() < SINGULAR_TOL * scale {
            return Err(Error::SingularEvaluation(format!("Weyl denominator vanishes at {nu}")));
        }
        let value = self.weyl_sum(&(lambda + datum.rho()), nu) / denom;
        assert!(
            value.im.abs() < 1e-9 * (1.0 + value.re.abs()),
            "character value {value} is not real"
        );
        Ok(value.re)
    }

    /// `∏_{α>0} [⟨μ+ρ, α⟩] / [⟨ρ, α⟩]`.
    pub fn qdim(&self, mu: &Weight) -> f64 {
        let datum = self.alcove.datum();
        let shifted = mu + datum.rho();
        datum
            .positive_roots()
            .iter()
            .map(|a| {
                self.quantum_integer(datum.form_x4(&shifted, a) / 4)
                    / self.quantum_integer(datum.form_x4(datum.rho(), a) / 4)
            })
            .product()
    }

    /// `dim^μ(V_λ) = χ_λ(H_{μ+ρ})` for half-integral dominant `μ`.
    pub fn dim_mu(&self, mu: &Weight, lambda: &Weight) -> Result<f64> {
        let datum = self.alcove.datum();
        if datum.family() != Family::B || mu.is_integral() || !mu.is_dominant() {
            return Err(Error::Domain(format!(
                "{mu} is not a half-integral dominant weight of type B"
            )));
        }
        self.chi(lambda, &(mu + datum.rho()))
    }

    /// Twice the twist exponent, `2⟨λ+2ρ, λ⟩`, so that `θ_λ = q^{c_λ}`.
    pub fn twist_exponent_doubled(&self, lambda: &Weight) -> i64 {
        twist_exponent_doubled(self.alcove.datum(), lambda)
    }

    /// `q^{c_ν - c_λ - c_μ}`, the scalar by which the squared braiding acts on
    /// `V_ν ⊂ V_λ ⊗ V_μ`.
    pub fn braiding_eig_sq(&self, table: &FusionTable, lambda: &Weight, mu: &Weight, nu: &Weight) -> Result<QPower> {
        if table.coefficient(lambda, mu, nu)? == 0 {
            return Err(Error::Domain(format!("{nu} does not occur in {lambda} ⊗ {mu}")));
        }
        let d = self.alcove.datum();
        let e = twist_exponent_doubled(d, nu) - twist_exponent_doubled(d, lambda) - twist_exponent_doubled(d, mu);
        Ok(QPower::new(e, self.ell()))
    }
}

pub fn twist_exponent_doubled(datum: &crate::rootdata::RootDatum, lambda: &Weight) -> i64 {
    let shifted = &(lambda + datum.rho()) + datum.rho();
    let v = datum.form_x4(&shifted, lambda);
    debug_assert_eq!(v % 2, 0);
    v / 2
}

/// A power `q^{e/2}` with the exponent stored doubled and reduced mod `4ℓ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct QPower {
    pub doubled: i64,
    pub ell: i64,
}

impl QPower {
    pub fn new(doubled: i64, ell: i64) -> Self {
        Self {
            doubled: doubled.rem_euclid(4 * ell),
            ell,
        }
    }

    /// `q^n` for integer `n`.
    pub fn integer(n: i64, ell: i64) -> Self {
        Self::new(2 * n, ell)
    }

    pub fn eval(&self, params: &QuantumParams) -> Complex64 {
        params.q_pow_half(self.doubled)
    }
}

/// Values of a character indexed by alcove labels.
#[derive(Debug, Clone, Serialize)]
pub struct CharacterVector {
    pub labels: Vec<Weight>,
    pub values: Vec<f64>,
}

impl CharacterVector {
    pub fn get(&self, w: &Weight) -> Option<f64> {
        self.labels.iter().position(|l| l == w).map(|i| self.values[i])
    }

    /// Largest `|f(λ)f(μ) - Σ_ν N_λμ^ν f(ν)| / (1 + |f(λ)f(μ)|)` over all
    /// label pairs; labels must follow the table order.
    pub fn law_defect(&self, table: &FusionTable) -> f64 {
        assert_eq!(self.labels, table.labels(), "character and table use different labels");
        let n = table.len();
        let mut worst: f64 = 0.0;
        for a in 0..n {
            for b in a..n {
                let lhs = self.values[a] * self.values[b];
                let rhs: f64 = table
                    .product(a, b)
                    .iter()
                    .map(|&(c, m)| m as f64 * self.values[c])
                    .sum();
                worst = worst.max((lhs - rhs).abs() / (1.0 + lhs.abs()));
            }
        }
        worst
    }
}

/// `Dim(λ) = ∏_{α̌>0} sin(⟨λ+ρ, α̌⟩π/ℓ) / sin(⟨ρ, α̌⟩π/ℓ)` on every label.
pub fn positive_character(alcove: &AlcoveParams) -> CharacterVector {
    let labels = alcove.alcove_enumerate();
    let values = labels.iter().map(|l| coroot_sine_product(alcove, l)).collect();
    CharacterVector { labels, values }
}

pub fn coroot_sine_product(alcove: &AlcoveParams, lambda: &Weight) -> f64 {
    let datum = alcove.datum();
    let shifted = lambda + datum.rho();
    let ell = alcove.ell() as f64;
    datum
        .positive_coroots()
        .iter()
        .map(|c| {
            let top = ratio_f64(datum.pair_coroot(&shifted, c));
            let bottom = ratio_f64(datum.pair_coroot(datum.rho(), c));
            (top * PI / ell).sin() / (bottom * PI / ell).sin()
        })
        .product()
}

fn ratio_f64(r: Ratio<i64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// The fusion generator used for positivity certificates: `Λ_k` for B,
/// the vector weight for C.
pub fn generator(alcove: &AlcoveParams) -> Weight {
    let datum = alcove.datum();
    match datum.family() {
        Family::B => datum.spin_weight().expect("type B has a spin weight"),
        Family::C => datum.vector_weight(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PfCertificate {
    /// Smallest odd `s` with `N^s + N^{s+1}` entrywise positive.
    pub s: usize,
    pub positive_count: usize,
    /// The positive eigenvector, normalized to 1 at the unit label.
    pub eigenvector: Vec<f64>,
}

/// Certifies that exactly one eigenvector of `N^s + N^{s+1}` is positive,
/// where `N` is the fusion matrix of [`generator`].
pub fn pf_certify_unique(table: &FusionTable) -> Result<PfCertificate> {
    let g = table.index_of(&generator(table.params()))?;
    let n = table.len();
    let step = table.fusion_matrix_at(g);
    let reach = step.map(|v| v > 0);
    let cap = 2 * n;

    let bool_mul =
        |a: &DMatrix<bool>, b: &DMatrix<bool>| DMatrix::from_fn(n, n, |i, j| (0..n).any(|t| a[(i, t)] && b[(t, j)]));
    let mut power = reach.clone(); // pattern of N^s
    let mut s = 1;
    loop {
        let next = bool_mul(&power, &reach);
        if power.iter().zip(next.iter()).all(|(a, b)| *a || *b) {
            break;
        }
        if s + 2 > cap {
            return Err(Error::CertificationFailure(format!(
                "no odd power below {cap} makes N^s + N^(s+1) positive"
            )));
        }
        power = bool_mul(&next, &reach);
        s += 2;
    }

    // N^s + N^{s+1}, rescaled at every step to stay within f64 range
    let nf = step.map(|v| v as f64);
    let mut p = DMatrix::<f64>::identity(n, n);
    for _ in 0..s {
        p = &p * &nf;
        let m = p.max();
        p /= m;
    }
    let mut m = &p + &p * &nf;
    m = (&m + m.transpose()) * 0.5;
    let eig = SymmetricEigen::new(m);

    let mut positive = Vec::new();
    for col in eig.eigenvectors.column_iter() {
        let scale = col.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
        let normalized: Vec<f64> = col.iter().map(|v| v / scale).collect();
        if normalized.iter().all(|&v| v > 1e-9) || normalized.iter().all(|&v| v < -1e-9) {
            positive.push(normalized);
        }
    }
    let positive_count = positive.len();
    if positive_count != 1 {
        return Err(Error::CertificationFailure(format!(
            "{positive_count} positive eigenvectors found"
        )));
    }
    let unit = table.unit_index();
    let v = &positive[0];
    let eigenvector = v.iter().map(|x| x / v[unit]).collect();
    Ok(PfCertificate {
        s,
        positive_count,
        eigenvector,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::parse_weight;

    fn w(s: &str) -> Weight {
        parse_weight(s).unwrap()
    }

    fn qp(k: usize, ell: i64, z: i64) -> QuantumParams {
        QuantumParams::new(AlcoveParams::from_family(Family::B, k, ell).unwrap(), z).unwrap()
    }

    #[test]
    fn quantum_integer_values() {
        let p = qp(2, 9, 1);
        assert!((p.quantum_integer(1) - 1.0).abs() < 1e-12);
        assert_eq!(p.quantum_integer(9), 0.0);
        assert!((p.quantum_integer(2) - 2.0 * (PI / 9.0).cos()).abs() < 1e-12);
        assert!((p.quantum_integer(2) - 1.8794).abs() < 1e-4);
        assert!(QuantumParams::new(p.alcove().clone(), 3).is_err());
    }

    #[test]
    fn weyl_denominator_two_ways() {
        let p = qp(2, 9, 1);
        let two_rho = p.alcove().datum().rho().scale(2);
        let prod = p.weyl_denominator(&two_rho).unwrap();
        // ½⟨α, 2ρ⟩ is 2, 4, 3, 1 on ε1-ε2, ε1+ε2, ε1, ε2
        let expected = p.quantum_integer(2) * p.quantum_integer(4) * p.quantum_integer(3) * p.quantum_integer(1);
        assert!((prod - expected).abs() < 1e-12);
        assert!(prod > 0.0);
        let sum = p.weyl_sum(p.alcove().datum().rho(), &two_rho) / p.weyl_sum_normalizer();
        assert!((sum.re - prod).abs() < 1e-9 && sum.im.abs() < 1e-9);
        assert!(matches!(p.weyl_denominator(&w("1/2,1/2")), Err(Error::Domain(_))));
    }

    #[test]
    fn weyl_sum_matches_group_sum() {
        for (family, k, ell) in [(Family::B, 2, 9), (Family::B, 3, 13), (Family::C, 3, 9)] {
            let alcove = AlcoveParams::from_family(family, k, ell).unwrap();
            let datum = alcove.datum().clone();
            let p = QuantumParams::new(alcove, 2).unwrap();
            let nu = datum.rho().scale(2);
            for l in p.alcove().alcove_enumerate().iter().take(12) {
                let x = l + datum.rho();
                let brute: Complex64 = datum
                    .weyl_group()
                    .iter()
                    .map(|g| p.q_pow_quarter(datum.form_x4(&g.apply(&x), &nu)) * g.signature() as f64)
                    .sum();
                assert!((brute - p.weyl_sum(&x, &nu)).norm() < 1e-9, "{family} {l}");
            }
        }
    }

    #[test]
    fn chi_basics() {
        let p = qp(2, 9, 2);
        let two_rho = p.alcove().datum().rho().scale(2);
        assert!((p.chi(&w("0,0"), &two_rho).unwrap() - 1.0).abs() < 1e-12);
        for l in p.alcove().alcove_enumerate() {
            let a = p.chi(&l, &two_rho).unwrap();
            assert!((a - p.qdim(&l)).abs() < 1e-9, "{l}");
        }
        assert!(matches!(p.chi(&w("1,0"), &w("0,0")), Err(Error::SingularEvaluation(_))));
    }

    #[test]
    fn qdim_examples() {
        let p = qp(2, 9, 1);
        assert!((p.qdim(&w("0,0")) - 1.0).abs() < 1e-12);
        assert!(p.qdim(&w("3,0")).abs() < 1e-12);
        let v = p.qdim(&w("5/2,3/2"));
        let expected = p.quantum_integer(8) / p.quantum_integer(2) + 1.0;
        assert!((v.abs() - expected.abs()).abs() < 1e-9);
    }

    #[test]
    fn spin_dimensions_positive_at_z1() {
        let p = qp(2, 9, 1);
        let spin = w("1/2,1/2");
        for l in p.alcove().alcove_enumerate() {
            assert!(p.dim_mu(&spin, &l).unwrap() > 0.0, "{l}");
        }
        assert!((p.dim_mu(&spin, &w("0,0")).unwrap() - 1.0).abs() < 1e-12);
        assert!((p.dim_mu(&spin, &w("5/2,5/2")).unwrap() - 1.0).abs() < 1e-9);
        assert!(matches!(p.dim_mu(&w("1,0"), &w("0,0")), Err(Error::Domain(_))));
    }

    #[test]
    fn twist_exponents() {
        let p = qp(2, 9, 1);
        assert_eq!(p.twist_exponent_doubled(&w("5/2,3/2")), 70);
        assert_eq!(p.twist_exponent_doubled(&w("1,0")), 16);
        assert_eq!(p.twist_exponent_doubled(&w("2,0")), 40);
    }

    #[test]
    fn positive_character_and_certificate() {
        let alcove = AlcoveParams::from_family(Family::B, 2, 9).unwrap();
        let table = FusionTable::build(&alcove).unwrap();
        let f = positive_character(&alcove);
        assert!((f.values[0] - 1.0).abs() < 1e-12);
        assert!(f.values.iter().all(|&v| v > 0.0));
        assert!(f.law_defect(&table) < 1e-9);
        let cert = pf_certify_unique(&table).unwrap();
        assert_eq!(cert.positive_count, 1);
        assert_eq!(cert.s % 2, 1);
        for (a, b) in cert.eigenvector.iter().zip(&f.values) {
            assert!((a - b).abs() < 1e-6);
        }
    }
}
