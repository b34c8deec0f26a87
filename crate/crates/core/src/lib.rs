//! Exact analysis of free divisors and their logarithmic D-modules.
//!
//! Starting from a reduced polynomial `f`, the crate computes the module of
//! logarithmic vector fields, certifies a free basis with Saito's criterion,
//! tests Koszul freeness and holonomicity through commutative and Weyl
//! algebra Groebner bases, builds the logarithmic Spencer complex, and checks
//! that the formal adjoint of its last differential presents the module
//! `D / (delta_i + m_i)`.

pub mod algebra;
pub mod divisor;
pub mod duality;
pub mod error;
pub mod groebner;
pub mod report;
pub mod weyl;

pub use algebra::{parse_poly, rat, Monomial, Poly, Rational, RationalFunction, WeightVector};
pub use error::{Error, Result};
pub use divisor::{derlog, LogBasis};
pub use report::{analyze, analyze_text, AnalyzeOptions, DivisorReport, Stage};
pub use weyl::{parse_weyl, WeylOp};
