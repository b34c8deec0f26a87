//! Exact polynomial and rational-function arithmetic over Q.

mod gcd;
pub mod linalg;
mod parse;
mod poly;
mod ratfun;
mod weights;

use num_bigint::BigInt;

pub use gcd::{gcd, gcd_many, lcm};
pub use linalg::{cofactor_matrix, determinant, PolyMatrix};
pub use parse::parse_poly;
pub(crate) use parse::{eval, parse_expr, EvalRing};
pub use poly::{rational_string, Monomial, Poly};
pub(crate) use poly::{coeff_times, grevlex_cmp, monomial_string};
pub use ratfun::RationalFunction;
pub use weights::{weighted_homogeneity, WeightVector};

/// Arbitrary-precision rational; always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for the rational `n/d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Squarefreeness test: `p` is squarefree iff the gcd of `p` and its whole
/// gradient is constant. On failure the nonconstant gcd is returned as the
/// repeated-factor witness.
pub fn is_squarefree(p: &Poly) -> Result<(), Poly> {
    assert!(!p.is_zero(), "squarefree test on the zero polynomial");
    let grad = p.gradient();
    let g = gcd_many(p.nvars(), std::iter::once(p).chain(grad.iter()));
    if g.is_constant() {
        Ok(())
    } else {
        Err(g)
    }
}
