use std::collections::BTreeMap;

use crate::algebra::gcd;
use crate::error::{Error, Result};
use crate::{Poly, RationalFunction};

/// A meromorphic `p`-form `sum_I w_I dx_I`, keyed by increasing index sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogForm {
    pub degree: usize,
    pub coefficients: BTreeMap<Vec<usize>, RationalFunction>,
}

impl LogForm {
    pub fn new(degree: usize) -> Self {
        LogForm { degree, coefficients: BTreeMap::new() }
    }

    /// Adds `w dx_I`; `I` must be strictly increasing with `degree` entries.
    pub fn with(mut self, index: Vec<usize>, w: RationalFunction) -> Self {
        assert_eq!(index.len(), self.degree);
        assert!(index.windows(2).all(|p| p[0] < p[1]), "index set must be increasing");
        self.coefficients.insert(index, w);
        self
    }
}

/// True when `den` divides a power of `f`.
fn divides_power_of(den: &Poly, f: &Poly) -> bool {
    let mut d = den.clone();
    while !d.is_constant() {
        let g = gcd(&d, f);
        if g.is_constant() {
            return false;
        }
        d = d.exact_divide(&g).expect("gcd divides");
    }
    true
}

/// `df ^ w`.
pub fn wedge_differential(f: &Poly, w: &LogForm) -> LogForm {
    let n = f.nvars();
    let grad = f.gradient();
    let mut out: BTreeMap<Vec<usize>, RationalFunction> = BTreeMap::new();
    for (idx, c) in &w.coefficients {
        for (j, fj) in grad.iter().enumerate() {
            if fj.is_zero() || idx.contains(&j) {
                continue;
            }
            let below = idx.iter().filter(|&&i| i < j).count();
            let mut term = c.mul_poly(fj);
            if below % 2 == 1 {
                term = term.neg();
            }
            let mut key = idx.clone();
            key.insert(below, j);
            let e = out.entry(key).or_insert_with(|| RationalFunction::from_poly(Poly::zero(n)));
            *e = e.add(&term);
        }
    }
    out.retain(|_, v| !v.is_zero());
    LogForm { degree: w.degree + 1, coefficients: out }
}

/// `w` is logarithmic along `f` when `f w` and `df ^ w` are both regular.
pub fn logarithmic_form_check(w: &LogForm, f: &Poly) -> Result<bool> {
    if let Some((idx, _)) = w.coefficients.iter().find(|(_, c)| !divides_power_of(c.denominator(), f)) {
        return Err(Error::Precondition(format!("pole of the coefficient at {idx:?} lies off f = 0")));
    }
    let f_w_regular = w.coefficients.values().all(|c| c.mul_poly(f).is_polynomial());
    Ok(f_w_regular && wedge_differential(f, w).coefficients.values().all(RationalFunction::is_polynomial))
}
