//! Fixtures, independent oracles and random generators shared by the
//! integration tests. The oracles avoid the crate's Weyl multiplication and
//! cofactor code: they work with the action of operators on polynomials and
//! with the permutation expansion of determinants.

#![allow(dead_code)]

pub mod props;

use freediv::divisor::LogBasis;
use freediv::{derlog, parse_poly, parse_weyl, rat, Poly, Rational, WeylOp};
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub struct Fixture {
    pub name: &'static str,
    pub vars: Vec<&'static str>,
    pub f: &'static str,
}

impl Fixture {
    pub fn poly(&self) -> Poly {
        parse_poly(self.f, &self.vars).unwrap()
    }

    pub fn basis(&self) -> LogBasis {
        derlog(&self.poly(), 12).unwrap().basis.unwrap_or_else(|| panic!("{} not certified", self.name))
    }
}

pub const SURFACE: &str = "y*(x^2+y)*(x^2*z+y)";

pub fn fixtures() -> Vec<Fixture> {
    vec![
        Fixture { name: "normal crossing n=2", vars: vec!["x", "y"], f: "x*y" },
        Fixture { name: "normal crossing n=3", vars: vec!["x", "y", "z"], f: "x*y*z" },
        Fixture { name: "normal crossing n=4", vars: vec!["x", "y", "z", "w"], f: "x*y*z*w" },
        Fixture { name: "smooth f=x", vars: vec!["x"], f: "x" },
        Fixture { name: "cusp", vars: vec!["x", "y"], f: "x^2-y^3" },
        Fixture { name: "four lines", vars: vec!["x", "y"], f: "x*y*(x+y)*(x+2*y)" },
        Fixture { name: "surface", vars: vec!["x", "y", "z"], f: SURFACE },
    ]
}

pub const XYZ: [&str; 3] = ["x", "y", "z"];

pub fn p3(s: &str) -> Poly {
    parse_poly(s, &XYZ).unwrap()
}

pub fn w3(s: &str) -> WeylOp {
    parse_weyl(s, &XYZ).unwrap()
}

/// A hand-written basis of the surface.
pub fn reference_triple() -> Vec<WeylOp> {
    ["(1/2)*x*Dx + y*Dy", "(x^2*z + y)*Dz", "((1/2)*x^2 + (1/2)*y)*Dx + (x*z^2 - x*z)*Dz"].iter().map(|s| w3(s)).collect()
}

// ---- oracles -------------------------------------------------------------

/// Determinant by the permutation expansion.
pub fn leibniz_det(a: &[Vec<Poly>]) -> Poly {
    let n = a.len();
    let nvars = a[0][0].nvars();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut acc = Poly::zero(nvars);
    permute(&mut perm, 0, &mut |p| {
        let inversions = (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        let prod = (0..n).fold(Poly::one(nvars), |acc, i| &acc * &a[i][p[i]]);
        acc = if inversions % 2 == 0 { &acc + &prod } else { &acc - &prod };
    });
    acc
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

/// `sum_k a_k d_k (g)` by plain differentiation.
pub fn derivation(a: &[Poly], g: &Poly) -> Poly {
    a.iter().enumerate().fold(Poly::zero(g.nvars()), |acc, (k, c)| &acc + &(c * &g.partial_derivative(k)))
}

/// Action of a normal-ordered operator on a polynomial, read directly off
/// its `(x, d)` exponent table.
pub fn act(p: &WeylOp, g: &Poly) -> Poly {
    let n = p.nvars();
    let mut acc = Poly::zero(n);
    for (m, c) in p.as_poly().terms() {
        let e = m.exps();
        let mut h = g.clone();
        for (k, &times) in e[n..].iter().enumerate() {
            for _ in 0..times {
                h = h.partial_derivative(k);
            }
        }
        let mut xm = vec![0; n];
        xm.copy_from_slice(&e[..n]);
        acc = &acc + &(&Poly::from_terms(n, [(xm, c.clone())]) * &h);
    }
    acc
}

/// Monomials of total degree at most `max_deg`. An operator of order at
/// most `r` that kills every monomial of degree at most `r` is zero
/// (induct on the monomial degree), so equal action on these probes with
/// `max_deg >= r` is an equality test.
pub fn probes(n: usize, max_deg: u32) -> Vec<Poly> {
    let mut out = Vec::new();
    let mut e = vec![0u32; n];
    loop {
        if e.iter().sum::<u32>() <= max_deg {
            out.push(Poly::from_terms(n, [(e.clone(), Rational::from_integer(1.into()))]));
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            e[i] += 1;
            if e[i] <= max_deg {
                break;
            }
            e[i] = 0;
            i += 1;
        }
    }
}

/// Equal action of `lhs` and `rhs` on every probe.
pub fn same_action(lhs: &dyn Fn(&Poly) -> Poly, rhs: &dyn Fn(&Poly) -> Poly, n: usize, max_deg: u32) -> bool {
    probes(n, max_deg).iter().all(|g| lhs(g) == rhs(g))
}

/// `(delta + m)(1/f) = (m f - delta(f)) / f^2`; returns the numerator.
pub fn tilde_on_reciprocal_numerator(a: &[Poly], m: &Poly, f: &Poly) -> Poly {
    &(m * f) - &derivation(a, f)
}

// ---- random data ---------------------------------------------------------

pub fn random_poly(rng: &mut ChaCha8Rng, n: usize, max_deg: u32, terms: usize) -> Poly {
    Poly::from_terms(
        n,
        (0..terms).map(|_| {
            let mut e = vec![0u32; n];
            let d = rng.gen_range(0..=max_deg);
            for _ in 0..d {
                e[rng.gen_range(0..n)] += 1;
            }
            (e, rat(rng.gen_range(-3..=3), rng.gen_range(1..=2)))
        }),
    )
}

/// A random `n x n` polynomial matrix with nonzero constant determinant:
/// a product of elementary row operations, a permutation and a scaling.
pub fn random_unimodular(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<Poly>> {
    let mut u: Vec<Vec<Poly>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { Poly::one(n) } else { Poly::zero(n) }).collect()).collect();
    if n > 1 {
        for _ in 0..3 {
            let i = rng.gen_range(0..n);
            let mut j = rng.gen_range(0..n - 1);
            if j >= i {
                j += 1;
            }
            let g = random_poly(rng, n, 1, 2);
            let row_j = u[j].clone();
            for (x, y) in u[i].iter_mut().zip(&row_j) {
                *x = &*x + &(&g * y);
            }
        }
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        u.swap(a, b);
    }
    let k = rng.gen_range(0..n);
    let c = [rat(2, 1), rat(-1, 3), rat(3, 2)][rng.gen_range(0..3)].clone();
    u[k] = u[k].iter().map(|x| x.scale(&c)).collect();
    u
}

pub fn change_basis(u: &[Vec<Poly>], fields: &[WeylOp]) -> Vec<WeylOp> {
    let n = fields.len();
    u.iter()
        .map(|row| row.iter().zip(fields).fold(WeylOp::zero(n), |acc, (c, d)| &acc + &(&WeylOp::from_coefficient(c) * d)))
        .collect()
}

// ---- proptest strategies -------------------------------------------------

fn coeff() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(a, b)| rat(a, b))
}

pub fn poly_strategy(n: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, n), coeff()), 0..=max_terms)
        .prop_map(move |ts| Poly::from_terms(n, ts))
}

pub fn weyl_strategy(n: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = WeylOp> {
    poly_strategy(2 * n, max_exp, max_terms).prop_map(move |p| WeylOp::from_normal_ordered(n, p))
}
