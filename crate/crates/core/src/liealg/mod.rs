//! Weight-graded computations in the Lie algebra dual to a model.

mod ce;
mod enveloping;
pub mod free;
mod stage;

pub use ce::{ce_stage, check_stage_quasi_iso, dga_cohomology_dims, CeStage, QuasiIsoReport};
pub use enveloping::{Enveloping, UElem, WordKey};
pub use free::{free_lie_basis, lyndon_words, standard_bracketing, witt_dimension, LieWord};
pub use stage::{lcs_dims, lcs_quotient, lcs_quotient_capped, GradedLieStage, LieBasisElement, DEFAULT_DIM_CAP};
