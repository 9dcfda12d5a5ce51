//! Root data for the families B_k and C_r with the normalized form
//! (short roots have squared length 2), weights with doubled coordinates,
//! the hyperoctahedral Weyl group and Freudenthal weight multiplicities.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use itertools::Itertools;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Coords = SmallVec<[i32; 8]>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    B,
    C,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::B => write!(f, "B"),
            Family::C => write!(f, "C"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            other => Err(Error::Parse(format!("unknown family `{other}`"))),
        }
    }
}

/// A weight in `R^k` whose coordinates are all integers or all
/// half-integers, stored as `2 * coordinate`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight {
    doubled: Coords,
}

impl Weight {
    pub fn from_doubled<I: IntoIterator<Item = i32>>(doubled: I) -> Result<Self> {
        let doubled: Coords = doubled.into_iter().collect();
        if doubled.is_empty() {
            return Err(Error::Domain("weight of rank 0".into()));
        }
        let parity = doubled[0].rem_euclid(2);
        if doubled.iter().any(|d| d.rem_euclid(2) != parity) {
            return Err(Error::Domain(format!(
                "mixed integral and half-integral coordinates in {doubled:?}"
            )));
        }
        Ok(Self { doubled })
    }

    /// Builds an integral weight from ordinary integer coordinates.
    pub fn integral(coords: &[i32]) -> Self {
        Self {
            doubled: coords.iter().map(|c| 2 * c).collect(),
        }
    }

    pub fn zero(rank: usize) -> Self {
        Self {
            doubled: SmallVec::from_elem(0, rank),
        }
    }

    /// `e_i` (0-based).
    pub fn unit_vector(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.doubled[i] = 2;
        w
    }

    // Callers guarantee uniform parity.
    pub(crate) fn from_coords_unchecked(doubled: Coords) -> Self {
        debug_assert!(doubled.iter().map(|d| d.rem_euclid(2)).all_equal());
        Self { doubled }
    }

    pub fn doubled(&self) -> &[i32] {
        &self.doubled
    }

    pub fn rank(&self) -> usize {
        self.doubled.len()
    }

    /// `p(λ)`: `+1` for integral weights, `-1` for half-integral ones.
    pub fn parity(&self) -> i32 {
        if self.doubled[0].rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }

    pub fn is_integral(&self) -> bool {
        self.parity() == 1
    }

    pub fn is_dominant(&self) -> bool {
        self.doubled.windows(2).all(|w| w[0] >= w[1]) && self.doubled.iter().all(|&d| d >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.doubled.iter().all(|&d| d == 0)
    }

    /// Four times the squared Euclidean norm.
    pub fn norm_sq_x4(&self) -> i64 {
        self.doubled.iter().map(|&d| (d as i64) * (d as i64)).sum()
    }

    /// Sum of the doubled coordinates; used as the grade in label orderings.
    pub fn doubled_sum(&self) -> i64 {
        self.doubled.iter().map(|&d| d as i64).sum()
    }

    pub fn checked_add(&self, other: &Weight) -> Result<Weight> {
        self.check_rank(other)?;
        Weight::from_doubled(self.doubled.iter().zip(&other.doubled).map(|(a, b)| a + b))
    }

    pub fn checked_sub(&self, other: &Weight) -> Result<Weight> {
        self.check_rank(other)?;
        Weight::from_doubled(self.doubled.iter().zip(&other.doubled).map(|(a, b)| a - b))
    }

    pub fn scale(&self, factor: i32) -> Weight {
        Weight::from_coords_unchecked(self.doubled.iter().map(|d| d * factor).collect())
    }

    /// Coordinate reversal `w_1`.
    pub fn reversed(&self) -> Weight {
        Weight::from_coords_unchecked(self.doubled.iter().rev().copied().collect())
    }

    pub(crate) fn check_rank(&self, other: &Weight) -> Result<()> {
        if self.rank() != other.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: other.rank(),
            });
        }
        Ok(())
    }

    /// Graded lexicographic order on doubled coordinates: first by the sum
    /// of coordinates, then lexicographically.
    pub fn graded_cmp(&self, other: &Weight) -> Ordering {
        self.doubled_sum()
            .cmp(&other.doubled_sum())
            .then_with(|| self.doubled.cmp(&other.doubled))
    }
}

impl std::ops::Add for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank(), "weight rank mismatch");
        let doubled: Coords = self.doubled.iter().zip(&rhs.doubled).map(|(a, b)| a + b).collect();
        Weight::from_doubled(doubled).expect("sum of weights mixes parities")
    }
}

impl std::ops::Sub for &Weight {
    type Output = Weight;

    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank(), "weight rank mismatch");
        let doubled: Coords = self.doubled.iter().zip(&rhs.doubled).map(|(a, b)| a - b).collect();
        Weight::from_doubled(doubled).expect("difference of weights mixes parities")
    }
}

fn format_coord(d: i32) -> String {
    if d % 2 == 0 {
        (d / 2).to_string()
    } else {
        format!("{d}/2")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.doubled.iter().map(|&d| format_coord(d)).join(","))
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Formats a weight as comma separated entries (`3/2,1/2`), the inverse of
/// [`parse_weight`].
pub fn format_weight(w: &Weight) -> String {
    w.doubled.iter().map(|&d| format_coord(d)).join(",")
}

/// Parses comma separated entries, each an integer or a fraction `n/2`.
pub fn parse_weight(text: &str) -> Result<Weight> {
    let trimmed = text.trim().trim_start_matches('(').trim_end_matches(')');
    if trimmed.is_empty() {
        return Err(Error::Parse("empty weight".into()));
    }
    let mut doubled = Coords::new();
    for entry in trimmed.split(',') {
        let entry = entry.trim();
        let value = match entry.split_once('/') {
            Some((num, den)) => {
                let num: i32 = num
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("malformed entry `{entry}`")))?;
                match den.trim() {
                    "2" => num,
                    "1" => 2 * num,
                    _ => return Err(Error::Parse(format!("denominator must be 2 in `{entry}`"))),
                }
            }
            None => {
                let v: i32 = entry
                    .parse()
                    .map_err(|_| Error::Parse(format!("malformed entry `{entry}`")))?;
                2 * v
            }
        };
        doubled.push(value);
    }
    Weight::from_doubled(doubled).map_err(|e| Error::Parse(e.to_string()))
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_weight(s)
    }
}

/// Element of `W = S_k ⋉ (Z_2)^k` acting by `(w x)_i = signs[i] * x[perm[i]]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl WeylElement {
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let k = perm.len();
        if signs.len() != k {
            return Err(Error::DimensionMismatch {
                expected: k,
                found: signs.len(),
            });
        }
        let mut seen = vec![false; k];
        for &p in &perm {
            if p >= k || seen[p] {
                return Err(Error::Domain(format!("{perm:?} is not a permutation")));
            }
            seen[p] = true;
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::Domain("signs must be ±1".into()));
        }
        Ok(Self { perm, signs })
    }

    pub fn identity(rank: usize) -> Self {
        Self {
            perm: (0..rank).collect(),
            signs: vec![1; rank],
        }
    }

    /// The reversal `w_1(μ_1, …, μ_k) = (μ_k, …, μ_1)`.
    pub fn reversal(rank: usize) -> Self {
        Self {
            perm: (0..rank).rev().collect(),
            signs: vec![1; rank],
        }
    }

    /// `-1` (the longest element for B and C).
    pub fn negation(rank: usize) -> Self {
        Self {
            perm: (0..rank).collect(),
            signs: vec![-1; rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// `ε(w) = sign(perm) · ∏ signs`.
    pub fn signature(&self) -> i32 {
        let flips = self.signs.iter().filter(|&&s| s < 0).count();
        let flip_sign = if flips % 2 == 0 { 1 } else { -1 };
        permutation_sign(&self.perm) * flip_sign
    }

    pub fn apply_coords(&self, x: &[i32]) -> Coords {
        self.perm
            .iter()
            .zip(&self.signs)
            .map(|(&p, &s)| s as i32 * x[p])
            .collect()
    }

    pub fn apply(&self, x: &Weight) -> Weight {
        assert_eq!(x.rank(), self.rank(), "Weyl element rank mismatch");
        Weight::from_coords_unchecked(self.apply_coords(x.doubled()))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let perm = self.perm.iter().map(|&p| other.perm[p]).collect();
        let signs = self
            .perm
            .iter()
            .zip(&self.signs)
            .map(|(&p, &s)| s * other.signs[p])
            .collect();
        WeylElement { perm, signs }
    }

    pub fn inverse(&self) -> WeylElement {
        let k = self.rank();
        let mut perm = vec![0; k];
        let mut signs = vec![1; k];
        for i in 0..k {
            perm[self.perm[i]] = i;
            signs[self.perm[i]] = self.signs[i];
        }
        WeylElement { perm, signs }
    }
}

fn permutation_sign(perm: &[usize]) -> i32 {
    let mut visited = vec![false; perm.len()];
    let mut sign = 1;
    for start in 0..perm.len() {
        if visited[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !visited[i] {
            visited[i] = true;
            i = perm[i];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// Canonical dominant representative under signed permutations: negatives
/// are flipped, then a stable descending sort by absolute value.
pub fn dominant_reduce(x: &Weight) -> (WeylElement, Weight) {
    let (w, coords) = dominant_reduce_coords(x.doubled());
    (w, Weight::from_coords_unchecked(coords))
}

pub(crate) fn dominant_reduce_coords(x: &[i32]) -> (WeylElement, Coords) {
    let mut order: Vec<usize> = (0..x.len()).collect();
    order.sort_by(|&a, &b| x[b].abs().cmp(&x[a].abs()));
    let signs: Vec<i8> = order.iter().map(|&i| if x[i] < 0 { -1 } else { 1 }).collect();
    let coords = order.iter().map(|&i| x[i].abs()).collect();
    (WeylElement { perm: order, signs }, coords)
}

/// Sign of the element sorting `x` into the dominant chamber, and the sorted
/// coordinates. Returns `None` when `x` lies on a reflecting hyperplane of
/// the finite Weyl group (a zero or a repeated absolute value).
pub(crate) fn strict_dominant_coords(x: &[i32]) -> Option<(i32, Coords)> {
    let mut abs: Coords = x.iter().map(|v| v.abs()).collect();
    if abs.contains(&0) {
        return None;
    }
    let mut sign = if x.iter().filter(|&&v| v < 0).count() % 2 == 0 {
        1
    } else {
        -1
    };
    // insertion sort, counting transpositions
    for i in 1..abs.len() {
        let mut j = i;
        while j > 0 && abs[j - 1] < abs[j] {
            abs.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if abs.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((sign, abs))
}

/// A coroot in doubled coordinates. Coroots of long roots of B have
/// coordinates in `½Z` that need not share a parity, so they are kept apart
/// from [`Weight`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Coroot(Coords);

impl Coroot {
    pub fn doubled(&self) -> &[i32] {
        &self.0
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RootDatum {
    family: Family,
    rank: usize,
    positive_roots: Vec<Weight>,
    positive_coroots: Vec<Coroot>,
    simple_roots: Vec<Weight>,
    rho: Weight,
    theta: Weight,
    theta_check: Coroot,
    form_scale: i64,
    #[serde(skip)]
    weyl_group: OnceLock<Vec<WeylElement>>,
}

impl PartialEq for RootDatum {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family && self.rank == other.rank
    }
}

impl Eq for RootDatum {}

impl RootDatum {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if rank < 2 {
            return Err(Error::InvalidRank(rank));
        }
        let e = |i: usize| Weight::unit_vector(rank, i);
        let mut positive_roots = Vec::with_capacity(rank * rank);
        for s in 0..rank {
            for t in (s + 1)..rank {
                positive_roots.push(&e(s) - &e(t));
                positive_roots.push(&e(s) + &e(t));
            }
        }
        for u in 0..rank {
            positive_roots.push(match family {
                Family::B => e(u),
                Family::C => e(u).scale(2),
            });
        }
        let mut simple_roots: Vec<Weight> = (0..rank - 1).map(|i| &e(i) - &e(i + 1)).collect();
        simple_roots.push(match family {
            Family::B => e(rank - 1),
            Family::C => e(rank - 1).scale(2),
        });
        let form_scale = match family {
            Family::B => 2,
            Family::C => 1,
        };
        // ρ = half the sum of positive roots; in doubled coordinates that is
        // the plain sum.
        let mut rho_doubled: Coords = SmallVec::from_elem(0, rank);
        for alpha in &positive_roots {
            for (r, a) in rho_doubled.iter_mut().zip(alpha.doubled()) {
                *r += a / 2;
            }
        }
        let rho = Weight::from_doubled(rho_doubled)?;
        let theta = match family {
            Family::B => e(0),
            Family::C => &e(0) + &e(1),
        };
        let mut datum = RootDatum {
            family,
            rank,
            positive_roots,
            positive_coroots: Vec::new(),
            simple_roots,
            rho,
            theta: theta.clone(),
            theta_check: Coroot(SmallVec::new()),
            form_scale,
            weyl_group: OnceLock::new(),
        };
        datum.positive_coroots = datum.positive_roots.iter().map(|a| datum.coroot(a)).collect();
        datum.theta_check = datum.coroot(&theta);
        Ok(datum)
    }

    /// `α̌ = 2α / ⟨α, α⟩`.
    pub fn coroot(&self, alpha: &Weight) -> Coroot {
        let len = self.form_x4(alpha, alpha);
        // ⟨α,α⟩ ∈ {2, 4}: short roots are their own coroots, long ones halve.
        match len {
            8 => Coroot(alpha.doubled().iter().copied().collect()),
            16 => Coroot(alpha.doubled().iter().map(|d| d / 2).collect()),
            _ => panic!("{alpha} is not a root of {}{}", self.family, self.rank),
        }
    }

    /// `⟨x, α̌⟩`, an integer whenever `x` is a weight.
    pub fn pair_coroot(&self, x: &Weight, coroot: &Coroot) -> Ratio<i64> {
        Ratio::new(self.form_scale * dot_coords(x.doubled(), &coroot.0), 4)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    pub fn positive_coroots(&self) -> &[Coroot] {
        &self.positive_coroots
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn theta(&self) -> &Weight {
        &self.theta
    }

    pub fn theta_check(&self) -> &Coroot {
        &self.theta_check
    }

    pub fn form_scale(&self) -> i64 {
        self.form_scale
    }

    pub fn zero(&self) -> Weight {
        Weight::zero(self.rank)
    }

    /// Highest weight of the defining representation, `Λ_1 = ε_1`.
    pub fn vector_weight(&self) -> Weight {
        Weight::unit_vector(self.rank, 0)
    }

    /// `Λ_k = (1/2, …, 1/2)` for type B.
    pub fn spin_weight(&self) -> Result<Weight> {
        match self.family {
            Family::B => Weight::from_doubled(std::iter::repeat_n(1, self.rank)),
            Family::C => Err(Error::Domain("type C has no spin weight".into())),
        }
    }

    /// `4 ⟨a, b⟩`, an exact integer.
    pub fn form_x4(&self, a: &Weight, b: &Weight) -> i64 {
        self.form_scale * dot_coords(a.doubled(), b.doubled())
    }

    pub fn form(&self, a: &Weight, b: &Weight) -> Result<Ratio<i64>> {
        if a.rank() != self.rank || b.rank() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                found: if a.rank() != self.rank { a.rank() } else { b.rank() },
            });
        }
        Ok(Ratio::new(self.form_x4(a, b), 4))
    }

    pub fn check_weight(&self, x: &Weight) -> Result<()> {
        if x.rank() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                found: x.rank(),
            });
        }
        if self.family == Family::C && !x.is_integral() {
            return Err(Error::Domain(format!("{x} is not a weight of type C")));
        }
        Ok(())
    }

    /// All `2^k · k!` elements of `W`, computed once.
    pub fn weyl_group(&self) -> &[WeylElement] {
        self.weyl_group.get_or_init(|| {
            let k = self.rank;
            let mut out = Vec::new();
            for perm in (0..k).permutations(k) {
                for mask in 0u32..(1 << k) {
                    let signs = (0..k).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
                    out.push(WeylElement {
                        perm: perm.clone(),
                        signs,
                    });
                }
            }
            out
        })
    }

    /// Coefficients of `x` in the simple-root basis, or `None` if `x` is not
    /// in the root lattice.
    pub fn simple_root_coefficients(&self, x: &Weight) -> Option<Vec<i64>> {
        if !x.is_integral() {
            return None;
        }
        let coords: Vec<i64> = x.doubled().iter().map(|&d| d as i64 / 2).collect();
        let mut coeffs = Vec::with_capacity(self.rank);
        let mut partial = 0;
        for (i, c) in coords.iter().enumerate() {
            partial += c;
            if i + 1 == self.rank && self.family == Family::C {
                if partial % 2 != 0 {
                    return None;
                }
                coeffs.push(partial / 2);
            } else {
                coeffs.push(partial);
            }
        }
        Some(coeffs)
    }

    /// Height of `x` over the positive root cone, if `x ∈ Q_+`.
    pub fn positive_cone_height(&self, x: &Weight) -> Option<i64> {
        let coeffs = self.simple_root_coefficients(x)?;
        if coeffs.iter().any(|&c| c < 0) {
            return None;
        }
        Some(coeffs.iter().sum())
    }

    /// `∏_{α>0} ⟨λ+ρ, α⟩ / ⟨ρ, α⟩`.
    pub fn weyl_dimension(&self, lambda: &Weight) -> Result<u128> {
        self.check_dominant(lambda)?;
        let shifted = lambda + &self.rho;
        let mut value = Ratio::<i128>::from_integer(1);
        for alpha in &self.positive_roots {
            value *= Ratio::new(
                self.form_x4(&shifted, alpha) as i128,
                self.form_x4(&self.rho, alpha) as i128,
            );
        }
        debug_assert!(value.is_integer());
        Ok(value.to_integer() as u128)
    }

    pub(crate) fn check_dominant(&self, lambda: &Weight) -> Result<()> {
        self.check_weight(lambda)?;
        if !lambda.is_dominant() {
            return Err(Error::Domain(format!("{lambda} is not dominant")));
        }
        Ok(())
    }

    /// Dominant weights of `V_λ` with multiplicities (Freudenthal), ordered
    /// by depth below `λ`.
    pub fn dominant_multiplicities(&self, lambda: &Weight) -> Result<Vec<(Weight, u64)>> {
        self.check_dominant(lambda)?;
        let top = lambda.doubled()[0];
        let parity = top.rem_euclid(2);
        let mut candidates: Vec<(i64, Weight)> = Vec::new();
        let mut buf = Coords::new();
        enumerate_dominant(self.rank, top, parity, &mut buf, &mut |coords| {
            let mu = Weight::from_coords_unchecked(coords.iter().copied().collect());
            if let Some(h) = self.positive_cone_height(&(lambda - &mu)) {
                candidates.push((h, mu));
            }
        });
        candidates.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cmp(&a.1)));

        let lambda_rho = lambda + &self.rho;
        let top_norm = self.form_x4(&lambda_rho, &lambda_rho);
        let lambda_norm = lambda.norm_sq_x4();
        let mut mult: HashMap<Weight, u64> = HashMap::new();
        let mut out = Vec::with_capacity(candidates.len());
        for (height, mu) in candidates {
            let m = if height == 0 {
                1
            } else {
                let mu_rho = &mu + &self.rho;
                let denom = top_norm - self.form_x4(&mu_rho, &mu_rho);
                let mut numer: i64 = 0;
                for alpha in &self.positive_roots {
                    let mut shifted = &mu + alpha;
                    while shifted.norm_sq_x4() <= lambda_norm {
                        let (_, dom) = dominant_reduce(&shifted);
                        if let Some(&m) = mult.get(&dom) {
                            numer += 2 * self.form_x4(&shifted, alpha) * m as i64;
                        }
                        shifted = &shifted + alpha;
                    }
                }
                assert!(denom > 0 && numer % denom == 0, "Freudenthal recursion is not integral");
                (numer / denom) as u64
            };
            if m > 0 {
                mult.insert(mu.clone(), m);
                out.push((mu, m));
            }
        }
        Ok(out)
    }

    /// Every weight of `V_λ` with its multiplicity.
    pub fn weight_multiplicities(&self, lambda: &Weight) -> Result<BTreeMap<Weight, u64>> {
        let mut out = BTreeMap::new();
        for (mu, m) in self.dominant_multiplicities(lambda)? {
            for w in weyl_orbit(&mu) {
                out.insert(w, m);
            }
        }
        Ok(out)
    }
}

fn dot_coords(a: &[i32], b: &[i32]) -> i64 {
    a.iter().zip(b).map(|(&x, &y)| x as i64 * y as i64).sum()
}

/// Weakly decreasing nonnegative doubled tuples bounded by `top` with the
/// given parity.
pub(crate) fn enumerate_dominant(rank: usize, top: i32, parity: i32, buf: &mut Coords, visit: &mut dyn FnMut(&[i32])) {
    if buf.len() == rank {
        visit(buf);
        return;
    }
    let upper = buf.last().copied().unwrap_or(top);
    let mut v = upper;
    while v >= 0 {
        if v.rem_euclid(2) == parity {
            buf.push(v);
            enumerate_dominant(rank, top, parity, buf, visit);
            buf.pop();
        }
        v -= 1;
    }
}

/// Distinct images of `x` under signed permutations.
pub fn weyl_orbit(x: &Weight) -> Vec<Weight> {
    let (_, dom) = dominant_reduce(x);
    let abs = dom.doubled();
    let k = abs.len();
    let mut out = Vec::new();
    let mut used = vec![false; k];
    let mut buf = Coords::new();
    orbit_rec(abs, &mut used, &mut buf, &mut out);
    out.sort();
    out.dedup();
    debug_assert!(out.len() <= (1..=k).product::<usize>() << k);
    out
}

fn orbit_rec(abs: &[i32], used: &mut [bool], buf: &mut Coords, out: &mut Vec<Weight>) {
    if buf.len() == abs.len() {
        out.push(Weight::from_coords_unchecked(buf.clone()));
        return;
    }
    for i in 0..abs.len() {
        // equal values are interchangeable; only the first unused one branches
        if used[i] || (i > 0 && abs[i] == abs[i - 1] && !used[i - 1]) {
            continue;
        }
        used[i] = true;
        buf.push(abs[i]);
        orbit_rec(abs, used, buf, out);
        buf.pop();
        if abs[i] != 0 {
            buf.push(-abs[i]);
            orbit_rec(abs, used, buf, out);
            buf.pop();
        }
        used[i] = false;
    }
}
