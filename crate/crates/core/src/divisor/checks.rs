use super::LogBasis;
use crate::error::Result;
use crate::groebner::is_regular_sequence;
use crate::weyl::graded_ideal_dimension;
use crate::Poly;

/// Outcome of [`koszul_check`]. Regularity is decided in the global
/// polynomial ring, not in the local ring at the origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulVerdict {
    pub koszul_free: bool,
    /// Principal symbols `sigma(delta_i)` in `(x, xi)`.
    pub symbols: Vec<Poly>,
    pub failure_index: Option<usize>,
    /// Reduced element `q` outside `(sigma_1..sigma_i)` with
    /// `q * sigma_{i+1}` inside it.
    pub witness: Option<Poly>,
    pub scope: &'static str,
}

pub fn koszul_check(basis: &LogBasis) -> Result<KoszulVerdict> {
    let symbols = basis.fields.iter().map(|d| d.principal_symbol()).collect::<Result<Vec<_>>>()?;
    let r = is_regular_sequence(&symbols);
    Ok(KoszulVerdict {
        koszul_free: r.regular,
        symbols,
        failure_index: r.failure_index,
        witness: r.witness,
        scope: "global",
    })
}

/// True when the characteristic variety of `D / D(delta_1..delta_n)` has
/// dimension `n`.
pub fn holonomicity_check(basis: &LogBasis) -> bool {
    graded_ideal_dimension(&basis.fields) == Some(basis.n())
}
