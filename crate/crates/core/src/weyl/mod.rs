//! The Weyl algebra of differential operators with polynomial coefficients.

mod gb;
mod op;

pub use gb::{
    graded_ideal_dimension, weyl_groebner, weyl_module_syzygies, weyl_syzygies, LeftIdealGB, LeftModuleGB,
    LeftNormalForm,
};
pub use op::{parse_weyl, WeylOp};
