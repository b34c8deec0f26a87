use num_traits::Zero;

use crate::algebra::{cofactor_matrix, determinant, is_squarefree, PolyMatrix};
use crate::error::{Error, Result};
use crate::weyl::WeylOp;
use crate::{Poly, Rational};

/// A free basis of the logarithmic vector fields along `f = 0`, certified
/// by Saito's criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogBasis {
    pub f: Poly,
    pub fields: Vec<WeylOp>,
    /// `saito[i][k]` is the coefficient of `d_k` in `fields[i]`.
    pub saito: PolyMatrix,
    pub det: Poly,
    /// `det = det_constant * f`.
    pub det_constant: Rational,
    /// `fields[i](f) = multipliers[i] * f`.
    pub multipliers: Vec<Poly>,
    /// `[fields[i], fields[j]] = sum_k alpha[i][j][k] * fields[k]`.
    pub alpha: Vec<Vec<Vec<Poly>>>,
}

/// Outcome of [`saito_check`].
#[derive(Clone, Debug)]
pub enum SaitoCheck {
    Certified(Box<LogBasis>),
    Rejected(String),
}

impl SaitoCheck {
    pub fn is_certified(&self) -> bool {
        matches!(self, SaitoCheck::Certified(_))
    }

    pub fn basis(self) -> Option<LogBasis> {
        match self {
            SaitoCheck::Certified(b) => Some(*b),
            SaitoCheck::Rejected(_) => None,
        }
    }

    pub fn reason(&self) -> Option<&str> {
        match self {
            SaitoCheck::Certified(_) => None,
            SaitoCheck::Rejected(r) => Some(r),
        }
    }
}

/// Coefficient rows of derivations: each field must be `sum a_k d_k` with
/// no zeroth-order part.
pub fn saito_matrix(fields: &[WeylOp]) -> Result<PolyMatrix> {
    fields
        .iter()
        .enumerate()
        .map(|(i, d)| {
            d.vector_field_coefficients()
                .ok_or_else(|| Error::Precondition(format!("field {} is not a derivation", i + 1)))
        })
        .collect()
}

/// Applies the derivation with coefficient row `a` to `g`.
pub(crate) fn derive(a: &[Poly], g: &Poly) -> Poly {
    a.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .fold(Poly::zero(g.nvars()), |acc, (k, c)| &acc + &(c * &g.partial_derivative(k)))
}

/// `Sum_l b[l] * C[k][l]` for every `k`: the row vector `b * adj(A)`.
pub(crate) fn times_adjugate(b: &[Poly], cof: &PolyMatrix) -> Vec<Poly> {
    let nvars = b[0].nvars();
    (0..b.len())
        .map(|k| b.iter().zip(&cof[k]).map(|(x, c)| x * c).fold(Poly::zero(nvars), |a, t| &a + &t))
        .collect()
}

/// Structure constants from the closed form
/// `det(A) * alpha^{ij} = (delta_i(a_j.) - delta_j(a_i.)) * adj(A)`.
/// `NotDivisible` when some bracket leaves the O-span of the fields.
pub fn alpha_closed_form(a: &PolyMatrix, det: &Poly) -> Result<Vec<Vec<Vec<Poly>>>> {
    let n = a.len();
    let nvars = det.nvars();
    if det.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let cof = cofactor_matrix(a);
    let mut alpha = vec![vec![vec![Poly::zero(nvars); n]; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let b: Vec<Poly> = (0..n).map(|l| &derive(&a[i], &a[j][l]) - &derive(&a[j], &a[i][l])).collect();
            for (k, num) in times_adjugate(&b, &cof).into_iter().enumerate() {
                let v = num.exact_divide(det)?;
                alpha[j][i][k] = -&v;
                alpha[i][j][k] = v;
            }
        }
    }
    Ok(alpha)
}

/// Saito's criterion for `fields` along `f`: brackets close over the
/// polynomial ring and `det(A)` is a squarefree constant multiple of `f`.
pub fn saito_check(fields: &[WeylOp], f: &Poly) -> Result<SaitoCheck> {
    let n = f.nvars();
    if fields.len() != n {
        return Err(Error::DimensionMismatch(format!("{} fields in {} variables", fields.len(), n)));
    }
    if let Some(bad) = fields.iter().position(|d| d.nvars() != n) {
        return Err(Error::DimensionMismatch(format!("field {} lives in another ring", bad + 1)));
    }
    let a = saito_matrix(fields)?;
    let det = determinant(&a);
    if det.is_zero() {
        return Ok(SaitoCheck::Rejected("determinant vanishes".into()));
    }
    // A is invertible over the fraction field, so the closed form is the only
    // candidate; a failed division means the bracket leaves the span
    let alpha = match alpha_closed_form(&a, &det) {
        Ok(al) => al,
        Err(Error::NotDivisible) => return Ok(SaitoCheck::Rejected("brackets not in the span of the fields".into())),
        Err(e) => return Err(e),
    };
    if is_squarefree(&det).is_err() {
        return Ok(SaitoCheck::Rejected("determinant not reduced".into()));
    }
    let det_constant = match det.exact_divide(f).ok().and_then(|q| q.constant_value()) {
        Some(c) if !c.is_zero() => c,
        _ => return Ok(SaitoCheck::Rejected("determinant is not a constant multiple of f".into())),
    };
    let multipliers = a
        .iter()
        .map(|row| derive(row, f).exact_divide(f))
        .collect::<Result<Vec<_>>>()
        .map_err(|_| Error::Invariant("certified field is not logarithmic".into()))?;
    Ok(SaitoCheck::Certified(Box::new(LogBasis {
        f: f.clone(),
        fields: fields.to_vec(),
        saito: a,
        det,
        det_constant,
        multipliers,
        alpha,
    })))
}

impl LogBasis {
    /// Runs [`saito_check`] and fails with `Precondition` on rejection.
    pub fn certify(fields: &[WeylOp], f: &Poly) -> Result<LogBasis> {
        match saito_check(fields, f)? {
            SaitoCheck::Certified(b) => Ok(*b),
            SaitoCheck::Rejected(r) => Err(Error::Precondition(format!("not a free basis: {r}"))),
        }
    }

    pub fn n(&self) -> usize {
        self.fields.len()
    }

    /// The bracket `[delta_i, delta_j]` rebuilt from the structure constants.
    pub fn bracket_from_alpha(&self, i: usize, j: usize) -> WeylOp {
        let n = self.n();
        self.alpha[i][j]
            .iter()
            .zip(&self.fields)
            .fold(WeylOp::zero(n), |acc, (c, d)| &acc + &(&WeylOp::from_coefficient(c) * d))
    }

    /// Checks the structure constants against direct commutator expansion.
    pub fn alpha_matches_commutators(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| (0..n).all(|j| self.fields[i].commutator(&self.fields[j]) == self.bracket_from_alpha(i, j)))
    }
}

/// The structure constants of a certified basis, recomputed by the closed
/// form and verified against the commutators.
pub fn structure_constants(basis: &LogBasis) -> Result<Vec<Vec<Vec<Poly>>>> {
    let alpha = alpha_closed_form(&basis.saito, &basis.det)?;
    let check = LogBasis { alpha: alpha.clone(), ..basis.clone() };
    if !check.alpha_matches_commutators() {
        return Err(Error::Invariant("structure constants disagree with commutators".into()));
    }
    Ok(alpha)
}

/// `delta(f) / f` when `delta` is logarithmic along `f`.
pub fn logarithmic_membership(delta: &WeylOp, f: &Poly) -> Result<Option<Poly>> {
    let a = delta
        .vector_field_coefficients()
        .ok_or_else(|| Error::Precondition("not a derivation".into()))?;
    if a.len() != f.nvars() {
        return Err(Error::DimensionMismatch("field and f live in different rings".into()));
    }
    Ok(derive(&a, f).exact_divide(f).ok())
}

/// Both sides of `delta(|A|) = sum_k (delta(a_k1), .., delta(a_kn)) . (C_k1, .., C_kn)`.
pub fn lemma_det_sides(a: &PolyMatrix, delta: &WeylOp) -> Result<(Poly, Poly)> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch("matrix is not square".into()));
    }
    let coeffs = delta
        .vector_field_coefficients()
        .ok_or_else(|| Error::Precondition("not a derivation".into()))?;
    let lhs = derive(&coeffs, &determinant(a));
    let cof = cofactor_matrix(a);
    let mut rhs = Poly::zero(lhs.nvars());
    for k in 0..n {
        for l in 0..n {
            rhs = &rhs + &(&derive(&coeffs, &a[k][l]) * &cof[k][l]);
        }
    }
    Ok((lhs, rhs))
}

pub fn lemma_det_check(a: &PolyMatrix, delta: &WeylOp) -> Result<bool> {
    let (l, r) = lemma_det_sides(a, delta)?;
    Ok(l == r)
}
