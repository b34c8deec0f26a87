use std::cmp::Ordering;

use crate::algebra::grevlex_cmp;

/// Term order on exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic, variable 0 largest.
    #[default]
    GrevLex,
    /// Pure lexicographic, variable 0 largest.
    Lex,
    /// Compare `weights . e` first, then fall back to `tie_break`.
    Weighted { weights: Vec<u32>, tie_break: Box<MonomialOrder> },
}

impl MonomialOrder {
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::GrevLex => grevlex_cmp(a, b),
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Weighted { weights, tie_break } => {
                let wa: u64 = weights.iter().zip(a).map(|(w, e)| *w as u64 * *e as u64).sum();
                let wb: u64 = weights.iter().zip(b).map(|(w, e)| *w as u64 * *e as u64).sum();
                wa.cmp(&wb).then_with(|| tie_break.cmp(a, b))
            }
        }
    }

    /// The order on `(x, d)` exponents of the Weyl algebra in `n` variables
    /// that weighs only the derivatives, refined by grevlex. Leading terms
    /// under it carry principal symbols.
    pub fn derivative_weighted(n: usize) -> Self {
        let mut weights = vec![0; n];
        weights.extend(std::iter::repeat_n(1, n));
        MonomialOrder::Weighted { weights, tie_break: Box::new(MonomialOrder::GrevLex) }
    }

    /// True when the order refines total degree, or is a weight order whose
    /// tie-break does. Such orders are the ones accepted for Weyl bases.
    pub fn is_degree_compatible(&self) -> bool {
        match self {
            MonomialOrder::GrevLex => true,
            MonomialOrder::Lex => false,
            MonomialOrder::Weighted { tie_break, .. } => tie_break.is_degree_compatible(),
        }
    }
}
