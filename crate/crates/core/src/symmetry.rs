//! The simple current `V_γ` of type B and the involution `φ(λ) = γ - w_1(λ)`
//! it induces on the alcove.

use crate::error::{Error, Result};
use crate::fusion::{AlcoveParams, FusionTable};
use crate::rootdata::{Family, Weight, WeylElement};

#[derive(Debug, Clone)]
pub struct InvolutionData {
    gamma: Weight,
    w1: WeylElement,
    labels: Vec<Weight>,
    // phi as a permutation of label indices
    perm: Vec<usize>,
}

impl InvolutionData {
    pub fn new(alcove: &AlcoveParams) -> Result<Self> {
        if alcove.datum().family() != Family::B {
            return Err(Error::Domain("the involution φ is defined for type B".into()));
        }
        let gamma = alcove.gamma()?;
        let w1 = WeylElement::reversal(alcove.rank());
        let labels = alcove.alcove_enumerate();
        let mut perm = Vec::with_capacity(labels.len());
        for l in &labels {
            let image = &gamma - &w1.apply(l);
            let j = labels
                .iter()
                .position(|m| *m == image)
                .ok_or_else(|| Error::Domain(format!("φ{l} = {image} left the alcove")))?;
            perm.push(j);
        }
        Ok(Self {
            gamma,
            w1,
            labels,
            perm,
        })
    }

    pub fn gamma(&self) -> &Weight {
        &self.gamma
    }

    pub fn w1(&self) -> &WeylElement {
        &self.w1
    }

    pub fn labels(&self) -> &[Weight] {
        &self.labels
    }

    /// `φ` on label indices.
    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }

    pub fn phi(&self, lambda: &Weight) -> Result<Weight> {
        let i = self
            .labels
            .iter()
            .position(|l| l == lambda)
            .ok_or_else(|| Error::Domain(format!("{lambda} is not an alcove label")))?;
        Ok(self.labels[self.perm[i]].clone())
    }

    pub fn is_involution(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &j)| self.perm[j] == i)
    }

    pub fn has_fixed_point(&self) -> bool {
        self.perm.iter().enumerate().any(|(i, &j)| i == j)
    }
}

/// True iff `N_γ` is the permutation matrix of `φ` and `N_γ² = I`.
pub fn verify_simple_current(table: &FusionTable, data: &InvolutionData) -> bool {
    if table.labels() != data.labels() {
        return false;
    }
    let Ok(g) = table.index_of(data.gamma()) else {
        return false;
    };
    let n = table.len();
    let is_perm = (0..n).all(|mu| table.product(g, mu) == [(data.perm[mu], 1)]);
    let ng = table.fusion_matrix_at(g);
    is_perm && &ng * &ng == nalgebra::DMatrix::identity(n, n)
}

/// `N_{φ(λ)} = N_γ N_λ` for every label.
pub fn verify_current_shift(table: &FusionTable, data: &InvolutionData) -> bool {
    let Ok(g) = table.index_of(data.gamma()) else {
        return false;
    };
    let ng = table.fusion_matrix_at(g);
    (0..table.len()).all(|a| table.fusion_matrix_at(data.perm[a]) == &ng * table.fusion_matrix_at(a))
}

/// The sign `s` with `dim(V_{φ(λ)}) = s · dim(V_λ)`, read off the table:
/// for `q^ℓ = -1` it is `+1` iff `k ≡ 0, 1 (mod 4)`, for `q^ℓ = +1` it is
/// `+1` iff `k ≡ 0, 3 (mod 4)`.
pub fn phi_sign(k: usize, q_ell_sign: i32) -> i32 {
    let positive = match (q_ell_sign, k % 4) {
        (-1, 0 | 1) => true,
        (-1, _) => false,
        (_, 0 | 3) => true,
        _ => false,
    };
    if positive {
        1
    } else {
        -1
    }
}

/// The same sign derived from the Weyl group: `ε(-w_1) · (q^ℓ)^k`.
pub fn phi_sign_from_weyl(k: usize, q_ell_sign: i32) -> i32 {
    let minus_w1 = WeylElement::negation(k).compose(&WeylElement::reversal(k));
    minus_w1.signature() * q_ell_sign.pow(k as u32)
}
