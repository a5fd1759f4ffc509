//! GF(2) models of `H_2(X \ L; Z/2)` for real rational surfaces: invariant
//! classes, the subgroup `G`, and the quotient `H(X, L)`.

mod blowup;
mod builtin;
mod gf2;
mod model;

use thiserror::Error;

pub use blowup::{blowup_transform, BlowupKind};
pub use builtin::{builtin_model, conic_bundle, cp2, dp1, dp2, f0_el, f0_hy, BUILTIN_MODELS};
pub use gf2::{rank_of, BitVec, GF2Matrix};
pub use model::{
    betti_x_minus_l, invariant_subspace, quotient_dimension, verify_claimed_basis, RealHomologyModel,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("inconsistent model: {0}")]
    Consistency(String),
    #[error("generator {0} is not invariant under the involution")]
    GeneratorNotInvariant(String),
    #[error("unknown model `{0}`")]
    UnknownModel(String),
    #[error("malformed model file: {0}")]
    Malformed(String),
}

impl RealHomologyModel {
    pub fn from_json(text: &str) -> Result<Self, HomologyError> {
        let model: RealHomologyModel =
            serde_json::from_str(text).map_err(|e| HomologyError::Malformed(e.to_string()))?;
        model.validate()?;
        Ok(model)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("models always serialize")
    }
}
