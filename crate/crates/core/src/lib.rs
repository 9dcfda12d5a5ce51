//! Fusion rings, q-characters, the simple-current involution and BMW-side
//! duality for quantum group categories of Lie type B (and the dual type C)
//! at odd roots of unity.
//!
//! Weights are stored with doubled integer coordinates so every alcove and
//! wall test is exact. Fusion coefficients are exact integers; character
//! values are `f64`.

pub mod bmwdual;
pub mod error;
pub mod fusion;
pub mod qchar;
pub mod rootdata;
pub mod suite;
pub mod symmetry;
pub mod unitarity;

pub use error::{Error, Result};
pub use fusion::{AlcoveParams, FusionTable};
pub use qchar::{CharacterVector, QuantumParams};
pub use rootdata::{Family, RootDatum, Weight, WeylElement};
