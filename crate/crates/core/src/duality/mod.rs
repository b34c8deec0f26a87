//! The logarithmic Spencer complex and the duality between
//! `D / D(delta_i)` and `D / D(delta_i + m_i)`, checked term by term.

mod spencer;

use crate::algebra::cofactor_matrix;
use crate::divisor::{derive, lemma_det_sides, LogBasis};
use crate::error::{Error, Result};
use crate::weyl::WeylOp;
use crate::{Poly, RationalFunction};

pub use spencer::{spencer_complex, spencer_vs_syzygies, SpencerComplex};

/// `(delta_1 + m_1, .., delta_n + m_n)`.
pub fn tilde_generators(basis: &LogBasis) -> Vec<WeylOp> {
    basis.fields.iter().zip(&basis.multipliers).map(|(d, m)| d + &WeylOp::from_coefficient(m)).collect()
}

/// Generators of the left module obtained by transposing the last Spencer
/// differential with the formal adjoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualPresentation {
    pub generators: Vec<WeylOp>,
    /// Sign-normalized components `-delta_i + sum_{k != i} alpha^{ik}_k`.
    pub components: Vec<WeylOp>,
}

/// Adjoints of the sign-normalized components of `d_n`; fails with
/// `MismatchWithTilde` unless they equal the tilde generators.
pub fn dual_presentation(basis: &LogBasis, complex: &SpencerComplex) -> Result<DualPresentation> {
    let tilde = tilde_generators(basis);
    let components: Vec<WeylOp> = complex
        .last_map_components()
        .into_iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 0 { -c } else { c })
        .collect();
    let generators: Vec<WeylOp> = components.iter().map(WeylOp::adjoint).collect();
    for (i, (g, t)) in generators.iter().zip(&tilde).enumerate() {
        if g != t {
            return Err(Error::MismatchWithTilde { index: i + 1, detail: format!("{g} != {t}") });
        }
    }
    Ok(DualPresentation { generators, components })
}

/// Result of the identity chain for one index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub index: usize,
    pub holds: bool,
    /// Label of the first sub-identity that failed.
    pub failed: Option<&'static str>,
}

/// Verifies, for each `i` with `|A| = det(A)`:
/// `multiplier`: `delta_i(|A|) = m_i |A|`;
/// `lemma-det`: the cofactor expansion of `delta_i(|A|)`;
/// `divergence`: `sum_k |A| d_k(a_ik) = sum_k delta_k(a_i.) . C_k.`;
/// `alpha-sum`: `sum_{k != i} |A| alpha^{ik}_k = sum_k delta_i(a_k.) . C_k. - sum_k delta_k(a_i.) . C_k.`;
/// `trace`: `m_i = sum_k d_k(a_ik) + sum_{k != i} alpha^{ik}_k`.
pub fn duality_identity_check(basis: &LogBasis) -> Vec<IdentityCheck> {
    let n = basis.n();
    let a = &basis.saito;
    let det = &basis.det;
    let cof = cofactor_matrix(a);
    let zero = Poly::zero(n);
    let dot = |row: &[Poly], k: usize| row.iter().zip(&cof[k]).fold(zero.clone(), |acc, (x, c)| &acc + &(x * c));
    (0..n)
        .map(|i| {
            let di_det = derive(&a[i], det);
            let divergence = (0..n).fold(zero.clone(), |acc, k| &acc + &a[i][k].partial_derivative(k));
            let alpha_sum = (0..n).filter(|&k| k != i).fold(zero.clone(), |acc, k| &acc + &basis.alpha[i][k][k]);
            let lemma_rhs = (0..n).fold(zero.clone(), |acc, k| {
                let row: Vec<Poly> = a[k].iter().map(|e| derive(&a[i], e)).collect();
                &acc + &dot(&row, k)
            });
            let cross = (0..n).fold(zero.clone(), |acc, k| {
                let row: Vec<Poly> = a[i].iter().map(|e| derive(&a[k], e)).collect();
                &acc + &dot(&row, k)
            });
            let checks: [(&'static str, bool); 5] = [
                ("multiplier", di_det == &basis.multipliers[i] * det),
                ("lemma-det", lemma_det_sides(a, &basis.fields[i]).map(|(l, r)| l == r).unwrap_or(false)),
                ("divergence", &divergence * det == cross),
                ("alpha-sum", &alpha_sum * det == &lemma_rhs - &cross),
                ("trace", basis.multipliers[i] == &divergence + &alpha_sum),
            ];
            let failed = checks.iter().find(|(_, ok)| !ok).map(|(l, _)| *l);
            IdentityCheck { index: i + 1, holds: failed.is_none(), failed }
        })
        .collect()
}

/// `(delta_i + m_i)(1/f) = 0` for every `i`.
pub fn annihilator_check(basis: &LogBasis) -> Result<bool> {
    let inv = RationalFunction::reciprocal_of(&basis.f)?;
    Ok(tilde_generators(basis).iter().all(|t| t.apply(&inv).is_zero()))
}

/// `P(1/f)` for an arbitrary operator, mostly for negative controls.
pub fn apply_to_reciprocal(p: &WeylOp, f: &Poly) -> Result<RationalFunction> {
    Ok(p.apply(&RationalFunction::reciprocal_of(f)?))
}

/// `sum_k d_k(a_ik)` for each row of the Saito matrix.
pub fn divergences(basis: &LogBasis) -> Vec<Poly> {
    let n = basis.n();
    basis
        .saito
        .iter()
        .map(|row| row.iter().enumerate().fold(Poly::zero(n), |acc, (k, a)| &acc + &a.partial_derivative(k)))
        .collect()
}
