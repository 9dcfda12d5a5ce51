//! The BMW-side description of the type B category: Young diagram labels
//! `Γ(k,ℓ)`, the relabeling `Ψ` onto the alcove, the box-rule fusion graph,
//! scalar consequences of the BMW relations, and the comparison with type
//! `C_r` at `r = (ℓ-2k-1)/2`.

use std::collections::HashMap;
use std::fmt;

use num_complex::Complex64;
use petgraph::graph::UnGraph;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fusion::{AlcoveParams, FusionTable};
use crate::qchar::QuantumParams;
use crate::rootdata::{Family, Weight};
use crate::symmetry::InvolutionData;

/// A partition given by its weakly decreasing positive rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct FerrersDiagram {
    rows: Vec<u32>,
}

impl FerrersDiagram {
    pub fn new(mut rows: Vec<u32>) -> Result<Self> {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        if rows.windows(2).any(|w| w[0] < w[1]) || rows.contains(&0) {
            return Err(Error::Domain(format!("{rows:?} is not a partition")));
        }
        Ok(Self { rows })
    }

    pub fn empty() -> Self {
        Self { rows: Vec::new() }
    }

    pub fn from_columns(columns: &[u32]) -> Self {
        let height = columns.first().copied().unwrap_or(0);
        let rows = (0..height)
            .map(|i| columns.iter().filter(|&&c| c > i).count() as u32)
            .collect();
        Self { rows }
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    /// Column lengths `λ'_1 ≥ λ'_2 ≥ …`.
    pub fn columns(&self) -> Vec<u32> {
        let width = self.rows.first().copied().unwrap_or(0);
        (0..width)
            .map(|j| self.rows.iter().filter(|&&r| r > j).count() as u32)
            .collect()
    }

    pub fn size(&self) -> u32 {
        self.rows.iter().sum()
    }

    pub fn transpose(&self) -> Self {
        Self { rows: self.columns() }
    }

    fn column(&self, j: usize) -> u32 {
        self.columns().get(j).copied().unwrap_or(0)
    }

    /// Every diagram obtained by adding or removing one box.
    fn one_box_moves(&self) -> Vec<FerrersDiagram> {
        let mut out = Vec::new();
        let len = self.rows.len();
        for i in 0..=len {
            let current = self.rows.get(i).copied().unwrap_or(0);
            let above = if i == 0 { u32::MAX } else { self.rows[i - 1] };
            if current < above {
                let mut rows = self.rows.clone();
                if i == len {
                    rows.push(1);
                } else {
                    rows[i] += 1;
                }
                out.push(Self { rows });
            }
        }
        for i in 0..len {
            let below = self.rows.get(i + 1).copied().unwrap_or(0);
            if self.rows[i] > below {
                let mut rows = self.rows.clone();
                rows[i] -= 1;
                if rows[i] == 0 {
                    rows.pop();
                }
                out.push(Self { rows });
            }
        }
        out
    }
}

impl Ord for FerrersDiagram {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.size().cmp(&other.size()).then_with(|| self.rows.cmp(&other.rows))
    }
}

impl PartialOrd for FerrersDiagram {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FerrersDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            write!(f, "∅")
        } else {
            let rows: Vec<String> = self.rows.iter().map(u32::to_string).collect();
            write!(f, "[{}]", rows.join(","))
        }
    }
}

fn check_level(k: usize, ell: i64) -> Result<()> {
    if ell % 2 == 0 || ell <= 2 * k as i64 + 1 {
        return Err(Error::Configuration(format!("Γ({k},{ell}) needs odd ℓ > 2k+1")));
    }
    Ok(())
}

/// `λ'_1 + λ'_2 ≤ 2k+1` and `λ_1 ≤ (ℓ-2k-1)/2`.
pub fn in_gamma(k: usize, ell: i64, lambda: &FerrersDiagram) -> bool {
    let width = lambda.rows.first().copied().unwrap_or(0) as i64;
    lambda.column(0) + lambda.column(1) <= 2 * k as u32 + 1 && width <= (ell - 2 * k as i64 - 1) / 2
}

/// `Γ(k,ℓ)` ordered by size, then rows lexicographically.
pub fn gamma_set(k: usize, ell: i64) -> Result<Vec<FerrersDiagram>> {
    check_level(k, ell)?;
    let width = ((ell - 2 * k as i64 - 1) / 2) as usize;
    let cap = 2 * k as u32 + 1;
    let mut out = Vec::new();
    let mut columns = Vec::new();
    column_rec(width, cap, cap, &mut columns, &mut out);
    out.sort();
    Ok(out)
}

fn column_rec(width: usize, cap: u32, bound: u32, columns: &mut Vec<u32>, out: &mut Vec<FerrersDiagram>) {
    out.push(FerrersDiagram::from_columns(columns));
    if columns.len() == width {
        return;
    }
    let upper = match columns.len() {
        0 => cap,
        1 => bound.min(cap - columns[0]),
        _ => bound,
    };
    for c in 1..=upper {
        columns.push(c);
        column_rec(width, cap, c, columns, out);
        columns.pop();
    }
}

/// Replaces the first column height `λ'_1` by `min(2k+1-λ'_1, λ'_1)` and
/// reads the rows as a dominant weight of `so(2k+1)`.
pub fn bar_map(k: usize, lambda: &FerrersDiagram) -> Result<Weight> {
    let mut columns = lambda.columns();
    let cap = 2 * k as u32 + 1;
    if lambda.column(0) + lambda.column(1) > cap {
        return Err(Error::Domain(format!("{lambda} violates λ'_1 + λ'_2 ≤ {cap}")));
    }
    if let Some(first) = columns.first_mut() {
        *first = (*first).min(cap - *first);
    }
    columns.retain(|&c| c > 0);
    let rows = FerrersDiagram::from_columns(&columns).rows;
    let mut coords = vec![0i32; k];
    for (c, r) in coords.iter_mut().zip(rows) {
        *c = r as i32;
    }
    Ok(Weight::integral(&coords))
}

/// `Ψ(λ) = bar(λ)` for `|λ|` even and `φ(bar(λ))` for `|λ|` odd.
pub fn psi(alcove: &AlcoveParams, involution: &InvolutionData, lambda: &FerrersDiagram) -> Result<Weight> {
    let k = alcove.rank();
    if !in_gamma(k, alcove.ell(), lambda) {
        return Err(Error::Domain(format!("{lambda} is not in Γ({k},{})", alcove.ell())));
    }
    let bar = bar_map(k, lambda)?;
    if lambda.size().is_multiple_of(2) {
        Ok(bar)
    } else {
        involution.phi(&bar)
    }
}

pub fn box_neighbors(k: usize, ell: i64, lambda: &FerrersDiagram) -> Vec<FerrersDiagram> {
    let mut out: Vec<_> = lambda
        .one_box_moves()
        .into_iter()
        .filter(|m| in_gamma(k, ell, m))
        .collect();
    out.sort();
    out
}

/// `Γ(k,ℓ)` with `Ψ` evaluated, and the alcove side it maps to.
#[derive(Debug, Clone)]
pub struct PsiMap {
    pub diagrams: Vec<FerrersDiagram>,
    pub images: Vec<Weight>,
    /// Index of `Ψ(diagrams[i])` in the table labels.
    pub image_index: Vec<usize>,
}

impl PsiMap {
    pub fn new(table: &FusionTable, involution: &InvolutionData) -> Result<Self> {
        let alcove = table.params();
        let diagrams = gamma_set(alcove.rank(), alcove.ell())?;
        let images = diagrams
            .iter()
            .map(|d| psi(alcove, involution, d))
            .collect::<Result<Vec<_>>>()?;
        let image_index = images.iter().map(|w| table.index_of(w)).collect::<Result<Vec<_>>>()?;
        Ok(Self {
            diagrams,
            images,
            image_index,
        })
    }

    pub fn is_bijective(&self, alcove_size: usize) -> bool {
        let mut seen = vec![false; alcove_size];
        for &i in &self.image_index {
            if seen[i] {
                return false;
            }
            seen[i] = true;
        }
        self.diagrams.len() == alcove_size
    }
}

/// The object `V` labelled by `Ψ(□) = φ(Λ_1)`.
pub fn generator_label(involution: &InvolutionData, alcove: &AlcoveParams) -> Result<Weight> {
    involution.phi(&alcove.datum().vector_weight())
}

/// Checks that adding or removing a box in `Γ(k,ℓ)` corresponds under `Ψ`
/// exactly to the multiplicity-free fusion graph of `V = φ(Λ_1)`.
pub fn verify_psi_fusion(table: &FusionTable) -> Result<bool> {
    let alcove = table.params();
    let (k, ell) = (alcove.rank(), alcove.ell());
    let involution = InvolutionData::new(alcove)?;
    let map = PsiMap::new(table, &involution)?;
    if !map.is_bijective(table.len()) {
        return Ok(false);
    }
    let v = table.index_of(&generator_label(&involution, alcove)?)?;
    let position: HashMap<&FerrersDiagram, usize> = map.diagrams.iter().enumerate().map(|(i, d)| (d, i)).collect();
    for (i, lambda) in map.diagrams.iter().enumerate() {
        let neighbors: Vec<usize> = box_neighbors(k, ell, lambda).iter().map(|d| position[d]).collect();
        for j in 0..map.diagrams.len() {
            let n = table.n(v, map.image_index[i], map.image_index[j]);
            let adjacent = neighbors.contains(&j);
            if n > 1 || adjacent != (n == 1) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Walks of length `n` from `∅` in the box-rule graph, indexed like
/// [`gamma_set`], and the sum of their squares.
pub fn box_walk_counts(k: usize, ell: i64, steps: usize) -> Result<(Vec<u128>, u128)> {
    let diagrams = gamma_set(k, ell)?;
    let position: HashMap<&FerrersDiagram, usize> = diagrams.iter().enumerate().map(|(i, d)| (d, i)).collect();
    let adjacency: Vec<Vec<usize>> = diagrams
        .iter()
        .map(|d| box_neighbors(k, ell, d).iter().map(|m| position[m]).collect())
        .collect();
    let mut counts = vec![0u128; diagrams.len()];
    counts[position[&FerrersDiagram::empty()]] = 1;
    for _ in 0..steps {
        let mut next = vec![0u128; diagrams.len()];
        for (i, &c) in counts.iter().enumerate() {
            for &j in &adjacency[i] {
                next[j] += c;
            }
        }
        counts = next;
    }
    let total = counts.iter().map(|c| c * c).sum();
    Ok((counts, total))
}

/// Per-label and total agreement of walk counts for `n = 0..=max_steps`.
pub fn bratteli_agree(table: &FusionTable, max_steps: usize) -> Result<bool> {
    let alcove = table.params();
    let involution = InvolutionData::new(alcove)?;
    let map = PsiMap::new(table, &involution)?;
    let v = generator_label(&involution, alcove)?;
    for n in 0..=max_steps {
        let (boxes, box_total) = box_walk_counts(alcove.rank(), alcove.ell(), n)?;
        let (fused, fused_total) = table.bratteli_endo_dim(&v, n)?;
        if box_total != fused_total {
            return Ok(false);
        }
        if boxes.iter().zip(&map.image_index).any(|(&b, &i)| fused[i] != b) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(x^n - x^{-n}) / (x - x^{-1})` for complex `x`.
pub fn quantum_number_at(x: Complex64, n: i32) -> Complex64 {
    (x.powi(n) - x.powi(-n)) / (x - x.inv())
}

/// BMW parameters `(q, r)`; the braid generators have eigenvalues
/// `r^{-1}, q, -q^{-1}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BmwParams {
    pub q: Complex64,
    pub r: Complex64,
}

impl BmwParams {
    pub fn new(q: Complex64, r: Complex64) -> Result<Self> {
        let close = |a: Complex64, b: Complex64| (a - b).norm() < 1e-12;
        let qi = q.inv();
        if close(q * q, Complex64::new(-1.0, 0.0)) || [q, -q, qi, -qi].iter().any(|&c| close(r, c)) {
            return Err(Error::SingularEvaluation("the BMW cubic has a repeated root".into()));
        }
        Ok(Self { q, r })
    }

    /// The parameters of the centralizer algebras of `V = φ(Λ_1)`:
    /// `q̃ = -q²` and `r = -q̃^{2k}`.
    pub fn from_quantum(params: &QuantumParams) -> Result<Self> {
        let k = params.alcove().rank() as i32;
        let x = -params.q_pow(2);
        Self::new(x, -x.powi(2 * k))
    }

    pub fn eigenvalues(&self) -> [Complex64; 3] {
        [self.r.inv(), self.q, -self.q.inv()]
    }

    /// `(x - r^{-1})(x - q)(x + q^{-1})`.
    pub fn cubic(&self, x: Complex64) -> Complex64 {
        (x - self.r.inv()) * (x - self.q) * (x + self.q.inv())
    }
}

/// The Markov trace of a braid generator,
/// `tr(g) = r (q - q^{-1}) / (r - r^{-1} + q - q^{-1})`.
pub fn bmw_trace_g(params: &BmwParams) -> Result<Complex64> {
    let BmwParams { q, r } = *params;
    let denom = r - r.inv() + q - q.inv();
    if denom.norm() < 1e-12 {
        return Err(Error::SingularEvaluation("r - r^-1 + q - q^-1 vanishes".into()));
    }
    Ok(r * (q - q.inv()) / denom)
}

/// `±dim(X)` from the three eigenvalues of the braiding on `X ⊗ X`:
/// `(c_3² + c_1c_2 - c_3(c_1+c_2)) / (c_3(c_1^{-1} + c_2^{-1}))`.
pub fn dim_from_eigs(c1: Complex64, c2: Complex64, c3: Complex64) -> Result<Complex64> {
    let denom = c3 * (c1.inv() + c2.inv());
    if c3.norm() < 1e-12 || denom.norm() < 1e-12 {
        return Err(Error::SingularEvaluation(
            "dimension formula has a vanishing denominator".into(),
        ));
    }
    Ok((c3 * c3 + c1 * c2 - c3 * (c1 + c2)) / denom)
}

#[derive(Debug, Clone, Serialize)]
pub struct TraceCheck {
    pub trace: [f64; 2],
    /// Weighted sums for the eigenvalue triple scaled by `1, -1, i, -i`.
    pub candidates: Vec<[f64; 2]>,
    pub matched: Option<usize>,
    pub defect: f64,
}

/// Compares `Σ_ν qdim(ν) c_ν / qdim(V)²` over `V ⊗ V = 1 ⊕ V_{(2,0,…)} ⊕
/// V_{(1,1,0,…)}` with the Markov trace, for the four unit scalings of the
/// eigenvalues `{r^{-1}, q̃, -q̃^{-1}}`.
pub fn categorical_trace_check(params: &QuantumParams) -> Result<TraceCheck> {
    let alcove = params.alcove();
    let k = alcove.rank();
    let bmw = BmwParams::from_quantum(params)?;
    let trace = bmw_trace_g(&bmw)?;
    let involution = InvolutionData::new(alcove)?;
    let v = generator_label(&involution, alcove)?;
    let mut sym = vec![0; k];
    sym[0] = 2;
    let mut alt = vec![0; k];
    alt[0] = 1;
    alt[1] = 1;
    let summands = [alcove.unit(), Weight::integral(&sym), Weight::integral(&alt)];
    let [c_unit, c_sym, c_alt] = bmw.eigenvalues();
    let eig = [c_unit, c_sym, c_alt];
    let dim_v = params.qdim(&v);
    let base: Complex64 = summands
        .iter()
        .zip(eig)
        .map(|(nu, c)| c * params.qdim(nu))
        .sum::<Complex64>()
        / (dim_v * dim_v);
    let units = [
        Complex64::new(1.0, 0.0),
        Complex64::new(-1.0, 0.0),
        Complex64::new(0.0, 1.0),
        Complex64::new(0.0, -1.0),
    ];
    let values: Vec<Complex64> = units.iter().map(|u| base * u).collect();
    let (best, defect) = values
        .iter()
        .enumerate()
        .map(|(i, v)| (i, (v - trace).norm()))
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .expect("four candidates");
    Ok(TraceCheck {
        trace: [trace.re, trace.im],
        candidates: values.iter().map(|v| [v.re, v.im]).collect(),
        matched: (defect < 1e-9).then_some(best),
        defect,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct EigenSquareCheck {
    /// `q^{c_ν - 2c_V}` for `ν = 0, (2,0,…), (1,1,0,…)`, as angles `a` with
    /// value `exp(aπi/2ℓ)`.
    pub computed: Vec<i64>,
    pub expected: Vec<i64>,
    pub sign: i32,
    pub equal: bool,
}

/// The squares of the braiding eigenvalues on `V ⊗ V` against
/// `{s q^{-8k}, s q^4, s q^{-4}}`, where `s = -1` iff `k` is odd and
/// `q^ℓ = -1`. Compared exactly as sets of roots of unity.
pub fn eigen_square_check(params: &QuantumParams, table: &FusionTable) -> Result<EigenSquareCheck> {
    let alcove = params.alcove();
    let k = alcove.rank();
    let ell = alcove.ell();
    let involution = InvolutionData::new(alcove)?;
    let v = generator_label(&involution, alcove)?;
    let mut sym = vec![0; k];
    sym[0] = 2;
    let mut alt = vec![0; k];
    alt[0] = 1;
    alt[1] = 1;
    let angle = |doubled: i64| (doubled * params.z()).rem_euclid(4 * ell);
    let mut computed = Vec::new();
    for nu in [alcove.unit(), Weight::integral(&sym), Weight::integral(&alt)] {
        let p = params.braiding_eig_sq(table, &v, &v, &nu)?;
        computed.push(angle(p.doubled));
    }
    let sign = if k % 2 == 1 && params.q_ell_sign() == -1 { -1 } else { 1 };
    // -1 = exp(2ℓ · πi/2ℓ)
    let shift = if sign == -1 { 2 * ell } else { 0 };
    let mut expected: Vec<i64> = [-16 * k as i64, 8, -8]
        .iter()
        .map(|&d| (angle(d) + shift).rem_euclid(4 * ell))
        .collect();
    computed.sort();
    expected.sort();
    Ok(EigenSquareCheck {
        equal: computed == expected,
        computed,
        expected,
        sign,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct RankLevelReport {
    pub k: usize,
    pub ell: i64,
    pub r: usize,
    pub c_alcove_size: usize,
    pub gamma_size: usize,
    pub cardinalities_equal: bool,
    pub transpose_is_graph_iso: bool,
    /// Result of a general isomorphism search, run only when transposition
    /// fails.
    pub graph_iso_fallback: Option<bool>,
}

impl RankLevelReport {
    pub fn isomorphic(&self) -> bool {
        self.transpose_is_graph_iso || self.graph_iso_fallback == Some(true)
    }
}

/// Compares `Γ(k,ℓ)` and its box graph with the alcove of `C_r`,
/// `r = (ℓ-2k-1)/2`, and the fusion graph of the vector representation.
pub fn ranklevel_check(k: usize, ell: i64) -> Result<RankLevelReport> {
    check_level(k, ell)?;
    let r = ((ell - 2 * k as i64 - 1) / 2) as usize;
    let diagrams = gamma_set(k, ell)?;
    if r < 2 {
        return Err(Error::Configuration(format!("C_{r} is below the supported rank")));
    }
    let c_alcove = AlcoveParams::from_family(Family::C, r, ell)?;
    let c_table = FusionTable::build(&c_alcove)?;
    let generator = c_alcove.datum().vector_weight();
    let g = c_table.index_of(&generator)?;
    let n = c_table.len();

    let position: HashMap<&FerrersDiagram, usize> = diagrams.iter().enumerate().map(|(i, d)| (d, i)).collect();
    let box_edges: Vec<(usize, usize)> = diagrams
        .iter()
        .enumerate()
        .flat_map(|(i, d)| {
            box_neighbors(k, ell, d)
                .into_iter()
                .map(|m| (i, position[&m]))
                .collect::<Vec<_>>()
        })
        .collect();
    let mut fusion_edges = Vec::new();
    for a in 0..n {
        for &(b, m) in c_table.product(g, a) {
            for _ in 0..m {
                fusion_edges.push((a, b));
            }
        }
    }

    let cardinalities_equal = diagrams.len() == n;
    let transpose_is_graph_iso = cardinalities_equal && {
        let image: Option<Vec<usize>> = diagrams
            .iter()
            .map(|d| {
                let t = d.transpose();
                if t.rows.len() > r {
                    return None;
                }
                let mut coords = vec![0i32; r];
                for (c, &v) in coords.iter_mut().zip(&t.rows) {
                    *c = v as i32;
                }
                c_table.index_of(&Weight::integral(&coords)).ok()
            })
            .collect();
        match image {
            Some(image) => {
                let mut mapped: Vec<(usize, usize)> = box_edges.iter().map(|&(a, b)| (image[a], image[b])).collect();
                let mut target = fusion_edges.clone();
                mapped.sort();
                target.sort();
                let mut hit = vec![false; n];
                image.iter().for_each(|&i| hit[i] = true);
                mapped == target && hit.iter().all(|&h| h)
            }
            None => false,
        }
    };
    let graph_iso_fallback = (!transpose_is_graph_iso).then(|| {
        let build = |size: usize, edges: &[(usize, usize)]| {
            let mut graph = UnGraph::<(), ()>::new_undirected();
            let nodes: Vec<_> = (0..size).map(|_| graph.add_node(())).collect();
            for &(a, b) in edges {
                // each undirected edge appears in both directions
                if a <= b {
                    graph.add_edge(nodes[a], nodes[b], ());
                }
            }
            graph
        };
        let lhs = build(diagrams.len(), &box_edges);
        let rhs = build(n, &fusion_edges);
        petgraph::algo::is_isomorphic(&lhs, &rhs)
    });
    Ok(RankLevelReport {
        k,
        ell,
        r,
        c_alcove_size: n,
        gamma_size: diagrams.len(),
        cardinalities_equal,
        transpose_is_graph_iso,
        graph_iso_fallback,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct DualityReport {
    pub k: usize,
    pub ell: i64,
    pub r: usize,
    pub gamma_size: usize,
    pub alcove_size: usize,
    pub psi: Vec<(Vec<u32>, Vec<i32>)>,
    pub homeq_ok: bool,
    pub ranklevel: RankLevelReport,
}

impl DualityReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("duality report serializes")
    }
}

pub fn duality_report(table: &FusionTable) -> Result<DualityReport> {
    let alcove = table.params();
    let (k, ell) = (alcove.rank(), alcove.ell());
    let involution = InvolutionData::new(alcove)?;
    let map = PsiMap::new(table, &involution)?;
    let psi = map
        .diagrams
        .iter()
        .zip(&map.images)
        .map(|(d, w)| (d.rows.clone(), w.doubled().to_vec()))
        .collect();
    Ok(DualityReport {
        k,
        ell,
        r: ((ell - 2 * k as i64 - 1) / 2) as usize,
        gamma_size: map.diagrams.len(),
        alcove_size: table.len(),
        psi,
        homeq_ok: verify_psi_fusion(table)?,
        ranklevel: ranklevel_check(k, ell)?,
    })
}

/// Vector-representation dimension of `C_r` from the eigenvalues
/// `{-q^{-1}, q, -q^{-2r-1}}`.
pub fn type_c_vector_dim(params: &QuantumParams, r: usize) -> Result<Complex64> {
    let q = params.q();
    dim_from_eigs(-q.inv(), q, -q.powi(-(2 * r as i32) - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::parse_weight;

    fn w(s: &str) -> Weight {
        parse_weight(s).unwrap()
    }

    fn d(rows: &[u32]) -> FerrersDiagram {
        FerrersDiagram::new(rows.to_vec()).unwrap()
    }

    fn setup(k: usize, ell: i64) -> (FusionTable, InvolutionData) {
        let alcove = AlcoveParams::from_family(Family::B, k, ell).unwrap();
        (
            FusionTable::build(&alcove).unwrap(),
            InvolutionData::new(&alcove).unwrap(),
        )
    }

    #[test]
    fn gamma_sets() {
        let g = gamma_set(2, 9).unwrap();
        assert_eq!(g.len(), 12);
        assert_eq!(g[0], FerrersDiagram::empty());
        assert!(g.iter().all(|x| x.columns().len() <= 2));
        let g7 = gamma_set(2, 7).unwrap();
        let expected: Vec<_> = (0..=5).map(|h| d(&vec![1; h])).collect();
        assert_eq!(g7, expected);
        assert!(matches!(gamma_set(2, 5), Err(Error::Configuration(_))));
    }

    #[test]
    fn bar_examples() {
        assert_eq!(bar_map(2, &d(&[1, 1, 1, 1, 1])).unwrap(), w("0,0"));
        assert_eq!(bar_map(2, &d(&[1])).unwrap(), w("1,0"));
        assert_eq!(bar_map(2, &FerrersDiagram::empty()).unwrap(), w("0,0"));
        assert!(bar_map(2, &d(&[2, 2, 2])).is_err());
    }

    #[test]
    fn psi_examples() {
        let (t9, i9) = setup(2, 9);
        assert_eq!(psi(t9.params(), &i9, &d(&[1])).unwrap(), w("5/2,3/2"));
        assert_eq!(psi(t9.params(), &i9, &FerrersDiagram::empty()).unwrap(), w("0,0"));
        let (t7, i7) = setup(2, 7);
        assert_eq!(psi(t7.params(), &i7, &d(&[1, 1, 1, 1, 1])).unwrap(), w("3/2,3/2"));
        assert!(psi(t7.params(), &i7, &d(&[2])).is_err());
    }

    #[test]
    fn neighbors() {
        assert_eq!(box_neighbors(2, 9, &FerrersDiagram::empty()), vec![d(&[1])]);
        assert_eq!(
            box_neighbors(2, 9, &d(&[1])),
            vec![FerrersDiagram::empty(), d(&[1, 1]), d(&[2])]
        );
        assert_eq!(box_neighbors(2, 7, &d(&[1])), vec![FerrersDiagram::empty(), d(&[1, 1])]);
    }

    #[test]
    fn psi_fusion_and_paths() {
        for (k, ell) in [(2, 7), (2, 9)] {
            let (t, _) = setup(k, ell);
            assert!(verify_psi_fusion(&t).unwrap(), "({k},{ell})");
            assert!(bratteli_agree(&t, 6).unwrap());
        }
        let (t, _) = setup(2, 9);
        let g = gamma_set(2, 9).unwrap();
        let (_, box_total) = box_walk_counts(2, 9, 3).unwrap();
        assert_eq!(box_total, t.bratteli_endo_dim(&w("5/2,3/2"), 3).unwrap().1);
        assert_eq!(g.len(), t.len());
    }

    #[test]
    fn trace_identity_and_cubic() {
        let q = Complex64::from_polar(1.0, 0.3);
        let r = Complex64::from_polar(1.3, -0.7);
        let p = BmwParams::new(q, r).unwrap();
        let lhs = bmw_trace_g(&p).unwrap() * (r - r.inv() + q - q.inv());
        assert!((lhs - r * (q - q.inv())).norm() < 1e-12);
        for e in p.eigenvalues() {
            assert!(p.cubic(e).norm() < 1e-12);
        }
        assert!(BmwParams::new(q, q).is_err());
    }

    #[test]
    fn dim_from_eigs_matches_quantum_number() {
        let x = Complex64::from_polar(1.0, 1.1);
        let k = 3;
        let value = dim_from_eigs(-x.inv(), x, -x.powi(-2 * k)).unwrap();
        let expected = quantum_number_at(x, -2 * k) + 1.0;
        assert!((value - expected).norm() < 1e-12);
        let u = Complex64::from_polar(1.0, 0.4);
        let scaled = dim_from_eigs(-x.inv() * u, x * u, -x.powi(-2 * k) * u).unwrap();
        assert!((scaled.norm() - value.norm()).abs() < 1e-12);
    }

    #[test]
    fn ranklevel_small() {
        let report = ranklevel_check(2, 9).unwrap();
        assert_eq!(report.c_alcove_size, 12);
        assert!(report.cardinalities_equal);
        assert!(report.isomorphic());
    }
}
