//! Multivariate gcd over Q by a recursive univariate view: split off the
//! content in the main variable, run a primitive pseudo-remainder sequence
//! on the primitive parts, and recurse on the contents.

use num_traits::One;

use super::{Monomial, Poly, Rational};

/// Greatest common divisor, normalized to a positive leading coefficient
/// with coprime integer coefficients. `gcd(0, 0) = 0`.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    assert_eq!(a.nvars(), b.nvars());
    if a.is_zero() {
        return b.primitive_part();
    }
    if b.is_zero() {
        return a.primitive_part();
    }
    match main_var(a, b) {
        None => Poly::one(a.nvars()),
        Some(v) => gcd_in(a, b, v).primitive_part(),
    }
}

/// Gcd of a whole list; the gcd of an empty list is zero.
pub fn gcd_many<'a, I: IntoIterator<Item = &'a Poly>>(nvars: usize, it: I) -> Poly {
    let mut g = Poly::zero(nvars);
    for p in it {
        g = gcd(&g, p);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Least common multiple, normalized like [`gcd`].
pub fn lcm(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() || b.is_zero() {
        return Poly::zero(a.nvars());
    }
    let g = gcd(a, b);
    (a * &b.exact_divide(&g).expect("gcd divides")).primitive_part()
}

fn main_var(a: &Poly, b: &Poly) -> Option<usize> {
    (0..a.nvars()).rev().find(|&v| a.uses_var(v) || b.uses_var(v))
}

/// Content of `p` viewed as a univariate polynomial in `x_v`.
fn content_in(p: &Poly, v: usize) -> Poly {
    let deg = p.degree_in(v).unwrap_or(0);
    let coeffs: Vec<Poly> = (0..=deg).map(|k| p.coeff_in(v, k)).filter(|c| !c.is_zero()).collect();
    gcd_many(p.nvars(), coeffs.iter())
}

fn primitive_in(p: &Poly, v: usize) -> (Poly, Poly) {
    let c = content_in(p, v);
    let pp = p.exact_divide(&c).expect("content divides");
    (c, pp)
}

fn leading_coeff_in(p: &Poly, v: usize) -> (u32, Poly) {
    let d = p.degree_in(v).unwrap_or(0);
    (d, p.coeff_in(v, d))
}

fn pseudo_remainder(a: &Poly, b: &Poly, v: usize) -> Poly {
    let (db, lb) = leading_coeff_in(b, v);
    let mut r = a.clone();
    loop {
        if r.is_zero() {
            return r;
        }
        let (dr, lr) = leading_coeff_in(&r, v);
        if dr < db {
            return r;
        }
        let mut shift = Monomial::one(a.nvars());
        shift.0[v] = dr - db;
        r = &(&r * &lb) - &(&lr * b).mul_monomial(&shift, &Rational::one());
    }
}

fn gcd_in(a: &Poly, b: &Poly, v: usize) -> Poly {
    let (ca, mut pa) = primitive_in(a, v);
    let (cb, mut pb) = primitive_in(b, v);
    let c = gcd(&ca, &cb);
    if pa.degree_in(v) < pb.degree_in(v) {
        std::mem::swap(&mut pa, &mut pb);
    }
    while !pb.is_zero() {
        if pb.degree_in(v) == Some(0) {
            // pb is primitive in v and free of v, so it is a unit here
            pa = Poly::one(a.nvars());
            break;
        }
        let r = pseudo_remainder(&pa, &pb, v);
        pa = pb;
        pb = if r.is_zero() { r } else { primitive_in(&r, v).1 };
    }
    &c * &pa
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;

    fn p(s: &str) -> Poly {
        parse_poly(s, &["x", "y", "z"]).unwrap()
    }

    #[test]
    fn simple_gcds() {
        assert_eq!(gcd(&p("x^2*y"), &p("x*y^2")), p("x*y"));
        assert_eq!(gcd(&p("x^2-y^2"), &p("x^2+2*x*y+y^2")), p("x+y"));
        assert_eq!(gcd(&p("x+1"), &p("y")), p("1"));
        assert_eq!(gcd(&p("6*x"), &Poly::zero(3)), p("x"));
        assert_eq!(gcd(&p("(1/2)*x*z + (1/2)*y"), &p("x^2*z + x*y")), p("x*z+y"));
    }

    #[test]
    fn multivariate_common_factor() {
        let c = p("x^2*z + y");
        let a = &c * &p("y - x*z + 3");
        let b = &c * &p("x^2 + y^2 + z^2");
        assert_eq!(gcd(&a, &b), c);
    }

    #[test]
    fn lcm_of_coprime_is_product() {
        assert_eq!(lcm(&p("x"), &p("y+1")), p("x*y + x"));
    }
}
