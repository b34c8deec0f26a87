//! Logarithmic vector fields of a divisor `f = 0`: generators, Saito
//! certification, multipliers, structure constants, and the Koszul and
//! holonomicity tests.

mod basis;
mod checks;
mod derlog;
mod forms;

pub use basis::{
    alpha_closed_form, lemma_det_check, lemma_det_sides, logarithmic_membership, saito_check, saito_matrix,
    structure_constants, LogBasis, SaitoCheck,
};
pub(crate) use basis::derive;
pub use checks::{holonomicity_check, koszul_check, KoszulVerdict};
pub(crate) use derlog::combinations;
pub use derlog::{derlog, field_degree, tidy_basis, DerlogOutcome};
pub use forms::{logarithmic_form_check, wedge_differential, LogForm};
