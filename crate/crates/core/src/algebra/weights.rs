//! Global weight search: positive weights making a polynomial weighted
//! homogeneous.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::linalg::kernel_basis;
use super::{Poly, Rational};

/// Positive weights `w` and degree `d` with `w . e = d` for every exponent `e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector {
    pub weights: Vec<Rational>,
    pub degree: Rational,
}

impl WeightVector {
    /// Re-checks `w . e = d` on every term of `p`.
    pub fn certifies(&self, p: &Poly) -> bool {
        self.weights.iter().all(|w| w.is_positive())
            && p.terms().all(|(m, _)| weighted_degree(&self.weights, m.exps()) == self.degree)
    }
}

fn weighted_degree(w: &[Rational], e: &[u32]) -> Rational {
    w.iter().zip(e).map(|(w, &k)| w * Rational::from_integer(BigInt::from(k))).sum()
}

/// Finds coprime positive integer weights under which `p` is weighted
/// homogeneous, or `None` when no positive solution exists.
pub fn weighted_homogeneity(p: &Poly) -> Option<WeightVector> {
    assert!(!p.is_zero(), "weighted homogeneity of the zero polynomial");
    let n = p.nvars();
    let exps: Vec<&[u32]> = p.terms().map(|(m, _)| m.exps()).collect();
    let base = exps[0];
    let rows: Vec<Vec<Rational>> = exps[1..]
        .iter()
        .map(|e| {
            e.iter()
                .zip(base)
                .map(|(&a, &b)| Rational::from_integer(BigInt::from(a as i64 - b as i64)))
                .collect()
        })
        .collect();

    let ones = vec![Rational::one(); n];
    let w = if rows.iter().all(|r| dot(r, &ones).is_zero()) {
        ones
    } else {
        let kernel = kernel_basis(&rows, n);
        positive_point(&kernel, n)?
    };
    let w = normalize(w);
    let degree = weighted_degree(&w, base);
    Some(WeightVector { weights: w, degree })
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// A point `w = sum t_j k_j` with every coordinate strictly positive, by
/// Fourier-Motzkin elimination on the strict homogeneous system in `t`.
fn positive_point(kernel: &[Vec<Rational>], n: usize) -> Option<Vec<Rational>> {
    let dim = kernel.len();
    if dim == 0 {
        return None;
    }
    // constraint i: sum_j kernel[j][i] * t_j > 0
    let constraints: Vec<Vec<Rational>> =
        (0..n).map(|i| (0..dim).map(|j| kernel[j][i].clone()).collect()).collect();
    let t = solve_strict(constraints, dim)?;
    let w: Vec<Rational> = (0..n)
        .map(|i| (0..dim).map(|j| &kernel[j][i] * &t[j]).sum())
        .collect();
    debug_assert!(w.iter().all(|x| x.is_positive()));
    Some(w)
}

/// Solves `c . t > 0` for all rows `c`; returns a witness if feasible.
fn solve_strict(constraints: Vec<Vec<Rational>>, dim: usize) -> Option<Vec<Rational>> {
    // levels[k] holds the constraints involving only t_0..=t_k
    let mut levels: Vec<Vec<Vec<Rational>>> = vec![Vec::new(); dim];
    let mut current = constraints;
    for k in (0..dim).rev() {
        let (pos, neg, zero): (Vec<_>, Vec<_>, Vec<_>) = {
            let mut p = Vec::new();
            let mut q = Vec::new();
            let mut z = Vec::new();
            for c in current {
                if c[k].is_positive() {
                    p.push(c);
                } else if c[k].is_negative() {
                    q.push(c);
                } else {
                    z.push(c);
                }
            }
            (p, q, z)
        };
        levels[k] = pos.iter().chain(neg.iter()).cloned().collect();
        let mut next = zero;
        for a in &pos {
            for b in &neg {
                // a[k] > 0 > b[k]: combine to cancel t_k
                let fa = -b[k].clone();
                let fb = a[k].clone();
                next.push(a.iter().zip(b).map(|(x, y)| x * &fa + y * &fb).collect());
            }
        }
        current = next;
    }
    // everything left has all-zero coefficients: 0 > 0 is infeasible
    if !current.is_empty() {
        return None;
    }
    let mut t = vec![Rational::zero(); dim];
    for k in 0..dim {
        let mut lo: Option<Rational> = None;
        let mut hi: Option<Rational> = None;
        for c in &levels[k] {
            let rest: Rational = (0..k).map(|j| &c[j] * &t[j]).sum();
            let bound = -rest / &c[k];
            if c[k].is_positive() {
                lo = Some(lo.map_or(bound.clone(), |l| l.max(bound)));
            } else {
                hi = Some(hi.map_or(bound.clone(), |h| h.min(bound)));
            }
        }
        t[k] = match (lo, hi) {
            (None, None) => Rational::one(),
            (Some(l), None) => l.floor() + Rational::one(),
            (None, Some(h)) => h.ceil() - Rational::one(),
            (Some(l), Some(h)) => {
                if l >= h {
                    return None;
                }
                (l + h) / Rational::from_integer(BigInt::from(2))
            }
        };
    }
    Some(t)
}

/// Scales a positive rational vector to coprime integers.
fn normalize(w: Vec<Rational>) -> Vec<Rational> {
    let den = w.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = w.iter().map(|x| (x * Rational::from_integer(den.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    ints.into_iter().map(|x| Rational::from_integer(x / &g)).collect()
}
