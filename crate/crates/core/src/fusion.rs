//! Weyl alcoves, the ρ-shifted affine Weyl action, and fusion coefficients
//! obtained by the truncated Racah–Speiser algorithm.

use std::collections::{BTreeMap, HashMap};

use nalgebra::DMatrix;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootdata::{enumerate_dominant, strict_dominant_coords, Coords, Family, RootDatum, Weight};

/// A root datum together with an odd level `ℓ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlcoveParams {
    datum: RootDatum,
    ell: i64,
}

/// Result of moving a weight into the alcove by the dot action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduced {
    /// `None` exactly when `sign == 0`.
    pub label: Option<Weight>,
    pub sign: i32,
}

impl AlcoveParams {
    /// Requires `ℓ` odd, `ℓ ≥ 3` and `ρ + Λ_1 ∈ C_ℓ`.
    pub fn new(datum: RootDatum, ell: i64) -> Result<Self> {
        if ell < 3 || ell % 2 == 0 {
            return Err(Error::Configuration(format!("level {ell} must be odd and at least 3")));
        }
        let params = Self { datum, ell };
        let probe = &params.datum.vector_weight() + params.datum.rho();
        if params.theta_pairing(&probe) >= ell {
            return Err(Error::Configuration(format!(
                "ρ+Λ_1 is not in the alcove of {}{} at level {ell}",
                params.datum.family(),
                params.datum.rank()
            )));
        }
        Ok(params)
    }

    pub fn from_family(family: Family, rank: usize, ell: i64) -> Result<Self> {
        Self::new(RootDatum::new(family, rank)?, ell)
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn ell(&self) -> i64 {
        self.ell
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    /// `⟨x, θ̌⟩`, always an integer on the weight lattice.
    pub fn theta_pairing(&self, x: &Weight) -> i64 {
        let v = self.datum.pair_coroot(x, self.datum.theta_check());
        debug_assert!(v.is_integer());
        v.to_integer()
    }

    pub fn contains(&self, mu: &Weight) -> bool {
        self.datum.check_dominant(mu).is_ok() && self.theta_pairing(&(mu + self.datum.rho())) < self.ell
    }

    /// `μ ∈ C̄_ℓ`: dominant with `⟨μ+ρ, θ̌⟩ ≤ ℓ`.
    pub fn closure_contains(&self, mu: &Weight) -> bool {
        self.datum.check_dominant(mu).is_ok() && self.theta_pairing(&(mu + self.datum.rho())) <= self.ell
    }

    pub fn unit(&self) -> Weight {
        self.datum.zero()
    }

    /// `γ = ((ℓ-2k)/2, …, (ℓ-2k)/2)` for type B.
    pub fn gamma(&self) -> Result<Weight> {
        if self.datum.family() != Family::B {
            return Err(Error::Domain("γ is defined for type B".into()));
        }
        let k = self.rank() as i64;
        let entry = (self.ell - 2 * k) as i32;
        Weight::from_doubled(std::iter::repeat_n(entry, self.rank()))
    }

    /// The labels of `C_ℓ` in graded lexicographic order.
    pub fn alcove_enumerate(&self) -> Vec<Weight> {
        let rank = self.rank();
        // ⟨μ,θ̌⟩ ≥ μ_1 in both families, so μ_1 < ℓ bounds the search
        let top = 2 * self.ell as i32;
        let parities: &[i32] = match self.datum.family() {
            Family::B => &[0, 1],
            Family::C => &[0],
        };
        let mut labels = Vec::new();
        for &parity in parities {
            let mut buf = Coords::new();
            enumerate_dominant(rank, top, parity, &mut buf, &mut |coords| {
                let mu = Weight::from_doubled(coords.iter().copied()).expect("uniform parity");
                if self.contains(&mu) {
                    labels.push(mu);
                }
            });
        }
        labels.sort_by(|a, b| a.graded_cmp(b));
        labels
    }

    /// Finds `w ∈ W_ℓ` with `w·ξ ∈ C_ℓ`, alternating sorting by the finite
    /// Weyl group with the affine reflection `t_ℓ`.
    pub fn affine_reduce(&self, xi: &Weight) -> Reduced {
        assert_eq!(xi.rank(), self.rank(), "weight rank mismatch");
        let rho = self.datum.rho();
        let theta = self.datum.theta().doubled();
        let scale = self.datum.form_scale();
        let theta_check = self.datum.theta_check().doubled();
        let ell_x4 = 4 * self.ell;
        let mut y: Coords = xi.doubled().iter().zip(rho.doubled()).map(|(a, b)| a + b).collect();
        let mut sign = 1;
        loop {
            let Some((s, sorted)) = strict_dominant_coords(&y) else {
                return Reduced { label: None, sign: 0 };
            };
            sign *= s;
            y = sorted;
            let pairing_x4: i64 = scale
                * y.iter()
                    .zip(theta_check)
                    .map(|(&a, &b)| a as i64 * b as i64)
                    .sum::<i64>();
            if pairing_x4 < ell_x4 {
                let label: Coords = y.iter().zip(rho.doubled()).map(|(a, b)| a - b).collect();
                let label = Weight::from_doubled(label).expect("uniform parity");
                return Reduced {
                    label: Some(label),
                    sign,
                };
            }
            if pairing_x4 == ell_x4 {
                return Reduced { label: None, sign: 0 };
            }
            debug_assert_eq!(pairing_x4 % 4, 0);
            let shift = ((ell_x4 - pairing_x4) / 4) as i32;
            for (yi, ti) in y.iter_mut().zip(theta) {
                *yi += shift * ti;
            }
            sign = -sign;
        }
    }

    pub(crate) fn check_label(&self, mu: &Weight) -> Result<()> {
        self.datum.check_weight(mu)?;
        if !self.contains(mu) {
            return Err(Error::Domain(format!(
                "{mu} is not in the alcove at level {}",
                self.ell
            )));
        }
        Ok(())
    }

    /// `N_λμ^ν` for all `ν`, by one Racah–Speiser pass over the weights of
    /// the smaller factor with affine reduction.
    pub fn fuse(&self, lambda: &Weight, mu: &Weight) -> Result<BTreeMap<Weight, u64>> {
        self.check_label(lambda)?;
        self.check_label(mu)?;
        let (small, large) = order_factors(lambda, mu);
        let weights = self.datum.weight_multiplicities(small)?;
        Ok(self.fuse_with_weights(&weights, large))
    }

    fn fuse_with_weights(&self, weights: &BTreeMap<Weight, u64>, mu: &Weight) -> BTreeMap<Weight, u64> {
        let mut acc: BTreeMap<Weight, i64> = BTreeMap::new();
        for (kappa, &m) in weights {
            let r = self.affine_reduce(&(mu + kappa));
            if let Some(label) = r.label {
                *acc.entry(label).or_default() += r.sign as i64 * m as i64;
            }
        }
        finish_signed(acc)
    }

    /// The same coefficients computed as `Σ_w ε(w) m_λμ^{w·ν}`: classical
    /// decomposition first, then each summand moved into the alcove.
    pub fn fuse_antisymmetrized(&self, lambda: &Weight, mu: &Weight) -> Result<BTreeMap<Weight, u64>> {
        self.check_label(lambda)?;
        self.check_label(mu)?;
        let classical = classical_tensor(&self.datum, lambda, mu)?;
        let mut acc: BTreeMap<Weight, i64> = BTreeMap::new();
        for (kappa, m) in classical {
            let r = self.affine_reduce(&kappa);
            if let Some(label) = r.label {
                *acc.entry(label).or_default() += r.sign as i64 * m as i64;
            }
        }
        Ok(finish_signed(acc))
    }
}

fn order_factors<'a>(lambda: &'a Weight, mu: &'a Weight) -> (&'a Weight, &'a Weight) {
    if lambda.norm_sq_x4() <= mu.norm_sq_x4() {
        (lambda, mu)
    } else {
        (mu, lambda)
    }
}

fn finish_signed(acc: BTreeMap<Weight, i64>) -> BTreeMap<Weight, u64> {
    acc.into_iter()
        .filter(|(_, v)| *v != 0)
        .map(|(w, v)| {
            assert!(v > 0, "negative multiplicity {v} at {w}");
            (w, v as u64)
        })
        .collect()
}

/// Classical outer multiplicities `m_λμ^ν` by Racah–Speiser with the finite
/// Weyl group.
pub fn classical_tensor(datum: &RootDatum, lambda: &Weight, mu: &Weight) -> Result<BTreeMap<Weight, u64>> {
    datum.check_dominant(lambda)?;
    datum.check_dominant(mu)?;
    let (small, large) = order_factors(lambda, mu);
    let rho = datum.rho();
    let mut acc: BTreeMap<Weight, i64> = BTreeMap::new();
    for (kappa, m) in datum.weight_multiplicities(small)? {
        let y = &(large + &kappa) + rho;
        if let Some((sign, sorted)) = strict_dominant_coords(y.doubled()) {
            let nu: Coords = sorted.iter().zip(rho.doubled()).map(|(a, b)| a - b).collect();
            let nu = Weight::from_doubled(nu).expect("uniform parity");
            *acc.entry(nu).or_default() += sign as i64 * m as i64;
        }
    }
    Ok(finish_signed(acc))
}

/// Fusion coefficients over the alcove, indexed in the canonical order.
#[derive(Debug, Clone)]
pub struct FusionTable {
    params: AlcoveParams,
    labels: Vec<Weight>,
    index: HashMap<Weight, usize>,
    // n × n × n, entry [λ][μ][ν]
    coeffs: Vec<u32>,
    // nonzero (ν, N) for each (λ, μ)
    support: Vec<Vec<(usize, u32)>>,
}

#[derive(Serialize)]
struct TableJson<'a> {
    family: String,
    rank: usize,
    ell: i64,
    labels: Vec<&'a [i32]>,
    #[serde(rename = "N")]
    n: Vec<Vec<Vec<u32>>>,
}

impl FusionTable {
    pub fn build(params: &AlcoveParams) -> Result<Self> {
        let labels = params.alcove_enumerate();
        let n = labels.len();
        let index: HashMap<Weight, usize> = labels.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let weights: Vec<BTreeMap<Weight, u64>> = labels
            .par_iter()
            .map(|l| params.datum().weight_multiplicities(l))
            .collect::<Result<_>>()?;
        let rows: Vec<Vec<(usize, u32)>> = (0..n * n)
            .into_par_iter()
            .map(|pair| {
                let (a, b) = (pair / n, pair % n);
                if a > b {
                    return Vec::new();
                }
                // iterate over the weights of the smaller factor
                let (s, l) = if labels[a].norm_sq_x4() <= labels[b].norm_sq_x4() {
                    (a, b)
                } else {
                    (b, a)
                };
                params
                    .fuse_with_weights(&weights[s], &labels[l])
                    .into_iter()
                    .map(|(w, c)| (index[&w], c as u32))
                    .collect()
            })
            .collect();
        let mut support = vec![Vec::new(); n * n];
        let mut coeffs = vec![0u32; n * n * n];
        for a in 0..n {
            for b in a..n {
                let row = &rows[a * n + b];
                for &(c, v) in row {
                    coeffs[(a * n + b) * n + c] = v;
                    coeffs[(b * n + a) * n + c] = v;
                }
                support[a * n + b] = row.clone();
                support[b * n + a] = row.clone();
            }
        }
        Ok(Self {
            params: params.clone(),
            labels,
            index,
            coeffs,
            support,
        })
    }

    pub fn params(&self) -> &AlcoveParams {
        &self.params
    }

    pub fn labels(&self) -> &[Weight] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn index_of(&self, w: &Weight) -> Result<usize> {
        self.index
            .get(w)
            .copied()
            .ok_or_else(|| Error::Domain(format!("{w} is not an alcove label")))
    }

    pub fn unit_index(&self) -> usize {
        self.index[&self.params.unit()]
    }

    /// `N_{ab}^c` by label index.
    pub fn n(&self, a: usize, b: usize, c: usize) -> u32 {
        let n = self.len();
        self.coeffs[(a * n + b) * n + c]
    }

    pub fn coefficient(&self, lambda: &Weight, mu: &Weight, nu: &Weight) -> Result<u32> {
        Ok(self.n(self.index_of(lambda)?, self.index_of(mu)?, self.index_of(nu)?))
    }

    /// Nonzero `(ν, N_ab^ν)` pairs.
    pub fn product(&self, a: usize, b: usize) -> &[(usize, u32)] {
        &self.support[a * self.len() + b]
    }

    /// `(N_λ)_{νμ} = N_λμ^ν`.
    pub fn fusion_matrix(&self, lambda: &Weight) -> Result<DMatrix<i64>> {
        let a = self.index_of(lambda)?;
        Ok(self.fusion_matrix_at(a))
    }

    pub fn fusion_matrix_at(&self, a: usize) -> DMatrix<i64> {
        let n = self.len();
        DMatrix::from_fn(n, n, |nu, mu| self.n(a, mu, nu) as i64)
    }

    pub fn check_unit(&self) -> bool {
        let u = self.unit_index();
        let n = self.len();
        (0..n).all(|b| (0..n).all(|c| self.n(u, b, c) == u32::from(b == c)))
    }

    pub fn check_symmetry(&self) -> bool {
        let n = self.len();
        (0..n).into_par_iter().all(|a| {
            (0..n).all(|b| {
                (0..n).all(|c| {
                    let v = self.n(a, b, c);
                    v == self.n(b, a, c) && v == self.n(a, c, b)
                })
            })
        })
    }

    /// `Σ_σ N_λμ^σ N_σν^τ = Σ_σ N_μν^σ N_λσ^τ` for all quadruples.
    pub fn check_associativity(&self) -> bool {
        let n = self.len();
        if !self.check_symmetry() {
            return false;
        }
        // with commutativity the triples (a,b,c) and (c,b,a) give the same condition
        (0..n * n).into_par_iter().all(|pair| {
            let (a, b) = (pair / n, pair % n);
            let mut lhs = vec![0u64; n];
            let mut rhs = vec![0u64; n];
            (a..n).all(|c| {
                lhs.iter_mut().for_each(|v| *v = 0);
                rhs.iter_mut().for_each(|v| *v = 0);
                for &(s, m) in self.product(a, b) {
                    for &(t, m2) in self.product(s, c) {
                        lhs[t] += m as u64 * m2 as u64;
                    }
                }
                for &(s, m) in self.product(b, c) {
                    for &(t, m2) in self.product(a, s) {
                        rhs[t] += m as u64 * m2 as u64;
                    }
                }
                lhs == rhs
            })
        })
    }

    /// `N_λμ^ν = 0` unless `p(ν) = p(λ)p(μ)`.
    pub fn check_grading(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| {
            (0..n).all(|b| {
                self.product(a, b)
                    .iter()
                    .all(|&(c, _)| self.labels[c].parity() == self.labels[a].parity() * self.labels[b].parity())
            })
        })
    }

    /// Number of length-`n` walks from the unit in the fusion graph of
    /// `generator`, per endpoint, and the sum of their squares.
    pub fn bratteli_endo_dim(&self, generator: &Weight, steps: usize) -> Result<(Vec<u128>, u128)> {
        let g = self.index_of(generator)?;
        let size = self.len();
        let mut counts = vec![0u128; size];
        counts[self.unit_index()] = 1;
        for _ in 0..steps {
            let mut next = vec![0u128; size];
            for (s, &c) in counts.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for &(t, m) in self.product(g, s) {
                    next[t] += c * m as u128;
                }
            }
            counts = next;
        }
        let total = counts.iter().map(|c| c * c).sum();
        Ok((counts, total))
    }

    pub fn to_json(&self) -> String {
        let n = self.len();
        let doc = TableJson {
            family: self.params.datum().family().to_string(),
            rank: self.params.rank(),
            ell: self.params.ell(),
            labels: self.labels.iter().map(|w| w.doubled()).collect(),
            n: (0..n)
                .map(|a| (0..n).map(|b| (0..n).map(|c| self.n(a, b, c)).collect()).collect())
                .collect(),
        };
        serde_json::to_string(&doc).expect("fusion table serializes")
    }
}
