use num_traits::Zero;

use super::basis::{saito_check, LogBasis};
use crate::algebra::{determinant, is_squarefree};
use crate::error::{Error, Result};
use crate::groebner::engine::{Engine, RingKind, Vector};
use crate::groebner::{syzygy_module, MonomialOrder};
use crate::weyl::WeylOp;
use crate::Poly;

/// Result of [`derlog`]: the logarithmic fields read off the syzygies of
/// `(f, f_1, .., f_n)`, and a Saito-certified basis among them when found.
#[derive(Clone, Debug)]
pub struct DerlogOutcome {
    /// Candidate generators, by increasing degree.
    pub generators: Vec<WeylOp>,
    /// `generators[i](f) = multipliers[i] * f`.
    pub multipliers: Vec<Poly>,
    pub basis: Option<LogBasis>,
    /// Set when no basis was certified.
    pub diagnostic: Option<String>,
}

/// Largest total degree among the coefficients of a field.
pub fn field_degree(d: &WeylOp) -> u32 {
    d.vector_field_coefficients()
        .map(|a| a.iter().filter_map(Poly::total_degree).max().unwrap_or(0))
        .unwrap_or(0)
}

/// Generators of `Der(log f)` and, when `f` is free with a basis among the
/// minimal generators of degree at most `max_degree`, a certified basis.
pub fn derlog(f: &Poly, max_degree: u32) -> Result<DerlogOutcome> {
    if f.is_zero() {
        return Err(Error::Precondition("f is zero".into()));
    }
    if let Err(w) = is_squarefree(f) {
        return Err(Error::NotReduced { witness: w.to_string() });
    }
    let n = f.nvars();
    let mut gens = vec![f.clone()];
    gens.extend(f.gradient());
    let mut cands: Vec<(WeylOp, Poly)> = syzygy_module(&gens)
        .generators
        .into_iter()
        .filter_map(|s| {
            let coeffs = s[1..].to_vec();
            let last = coeffs.iter().rev().find(|c| !c.is_zero())?;
            let scale = last.leading_coeff().unwrap().recip();
            let a: Vec<Poly> = coeffs.iter().map(|c| c.scale(&scale)).collect();
            Some((WeylOp::vector_field(&a), -s[0].scale(&scale)))
        })
        .collect();
    cands.sort_by_key(|(d, _)| field_degree(d));
    let (generators, multipliers): (Vec<_>, Vec<_>) = cands.into_iter().unzip();

    let usable: Vec<usize> = (0..generators.len()).filter(|&i| field_degree(&generators[i]) <= max_degree).collect();
    let mut basis = None;
    if usable.len() >= n {
        for subset in combinations(usable.len(), n) {
            let fields: Vec<WeylOp> = subset.iter().map(|&k| generators[usable[k]].clone()).collect();
            let a: Vec<Vec<Poly>> = fields.iter().map(|d| d.vector_field_coefficients().unwrap()).collect();
            let det = determinant(&a);
            let proportional = !det.is_zero()
                && det.exact_divide(f).ok().and_then(|q| q.constant_value()).is_some_and(|c| !c.is_zero());
            if !proportional {
                continue;
            }
            if saito_check(&fields, f)?.is_certified() {
                basis = saito_check(&tidy_basis(&fields), f)?.basis();
                if basis.is_none() {
                    return Err(Error::Invariant("autoreduction broke a certified basis".into()));
                }
                break;
            }
        }
    }
    let diagnostic = basis.is_none().then(|| "freeness not certified".to_string());
    Ok(DerlogOutcome { generators, multipliers, basis, diagnostic })
}

/// Scales a field so the last nonzero coefficient has leading coefficient 1.
fn normalize_field(a: &[Poly]) -> Vec<Poly> {
    match a.iter().rev().find(|c| !c.is_zero()) {
        Some(last) => {
            let s = last.leading_coeff().unwrap().recip();
            a.iter().map(|c| c.scale(&s)).collect()
        }
        None => a.to_vec(),
    }
}

/// Autoreduces a basis of fields as vectors in `R^n` (term over position,
/// grevlex): each field loses every term divisible by the leading term of
/// another. Only unimodular row operations are used, so the module and the
/// determinant up to sign are unchanged. Sorted by degree, then by the
/// last nonzero component.
pub fn tidy_basis(fields: &[WeylOp]) -> Vec<WeylOp> {
    let n = fields.first().map_or(0, WeylOp::nvars);
    let e = Engine::new(RingKind::Commutative, MonomialOrder::GrevLex, false, n);
    let mut vs: Vec<Vector> = fields
        .iter()
        .map(|d| e.vector_from_polys(&d.vector_field_coefficients().expect("derivation"), 0))
        .collect();
    loop {
        let mut changed = false;
        for i in 0..vs.len() {
            let others: Vec<Vector> = (0..vs.len()).filter(|&j| j != i).map(|j| vs[j].clone()).collect();
            let r = e.reduce(vs[i].clone(), &others, true, None);
            if r != vs[i] {
                vs[i] = r;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let mut out: Vec<WeylOp> =
        vs.iter().map(|v| WeylOp::vector_field(&normalize_field(&e.polys_from_vector(v, 0, n)))).collect();
    out.sort_by_key(|d| {
        let a = d.vector_field_coefficients().unwrap();
        let last = a.iter().rposition(|c| !c.is_zero());
        (field_degree(d), last, a.iter().map(Poly::num_terms).sum::<usize>())
    });
    out
}

/// `k`-subsets of `0..m` in lexicographic order.
pub(crate) fn combinations(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > m {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < m - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in (i + 1)..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}
