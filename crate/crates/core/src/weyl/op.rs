use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed};

use crate::algebra::{
    coeff_times, eval, monomial_string, parse_expr, EvalRing, Monomial, Poly, Rational, RationalFunction,
};
use crate::error::{Error, Result};
use crate::groebner::engine::weyl_monomial_product;

/// Differential operator `sum a_(alpha,beta) x^alpha d^beta` with polynomial
/// coefficients, stored normal-ordered (coefficients left of derivatives) as
/// a polynomial in `2n` commuting slots `(x_1..x_n, d_1..d_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylOp {
    n: usize,
    poly: Poly,
}

impl WeylOp {
    pub fn zero(n: usize) -> Self {
        WeylOp { n, poly: Poly::zero(2 * n) }
    }

    pub fn one(n: usize) -> Self {
        WeylOp::constant(n, Rational::one())
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        WeylOp { n, poly: Poly::constant(2 * n, c) }
    }

    pub fn x(n: usize, i: usize) -> Self {
        WeylOp { n, poly: Poly::var(2 * n, i) }
    }

    pub fn d(n: usize, i: usize) -> Self {
        WeylOp { n, poly: Poly::var(2 * n, n + i) }
    }

    /// Multiplication operator by a polynomial in the `n` coordinates.
    pub fn from_coefficient(p: &Poly) -> Self {
        let n = p.nvars();
        WeylOp { n, poly: p.embed(2 * n, &(0..n).collect::<Vec<_>>()) }
    }

    /// The vector field `sum_k a_k d_k`.
    pub fn vector_field(coeffs: &[Poly]) -> Self {
        let n = coeffs.len();
        let mut out = WeylOp::zero(n);
        for (k, a) in coeffs.iter().enumerate() {
            assert_eq!(a.nvars(), n, "vector field coefficients must live in n variables");
            out = &out + &(&WeylOp::from_coefficient(a) * &WeylOp::d(n, k));
        }
        out
    }

    /// Wraps a term map in `2n` slots that is already normal-ordered.
    pub fn from_normal_ordered(n: usize, poly: Poly) -> Self {
        assert_eq!(poly.nvars(), 2 * n);
        WeylOp { n, poly }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    /// The normal-ordered term map, as a polynomial in `(x, d)` slots.
    pub fn as_poly(&self) -> &Poly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Maximal total derivative degree; `None` for the zero operator.
    pub fn order(&self) -> Option<u32> {
        self.poly.terms().map(|(m, _)| self.d_degree(m)).max()
    }

    fn d_degree(&self, m: &Monomial) -> u32 {
        m.exps()[self.n..].iter().sum()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        WeylOp { n: self.n, poly: self.poly.scale(c) }
    }

    pub fn commutator(&self, o: &WeylOp) -> WeylOp {
        &(self * o) - &(o * self)
    }

    /// `sigma(P)`: the top-order part with `d_i` read as commuting `xi_i`,
    /// as a polynomial in `(x, xi)`.
    pub fn principal_symbol(&self) -> Result<Poly> {
        let d = self.order().ok_or(Error::ZeroOperator)?;
        Ok(Poly::from_terms(
            2 * self.n,
            self.poly
                .terms()
                .filter(|(m, _)| self.d_degree(m) == d)
                .map(|(m, c)| (m.exps().to_vec(), c.clone())),
        ))
    }

    /// Formal adjoint: the anti-automorphism fixing `x_i` and sending
    /// `d_i` to `-d_i`.
    pub fn adjoint(&self) -> WeylOp {
        let n = self.n;
        let mut out = Poly::zero(2 * n);
        for (m, c) in self.poly.terms() {
            let e = m.exps();
            // (x^a d^b)* = (-1)^|b| d^b x^a
            let mut dpart = vec![0; 2 * n];
            dpart[n..].copy_from_slice(&e[n..]);
            let mut xpart = vec![0; 2 * n];
            xpart[..n].copy_from_slice(&e[..n]);
            let sign = if self.d_degree(m).is_multiple_of(2) { c.clone() } else { -c };
            for (ex, k) in weyl_monomial_product(n, &dpart, &xpart) {
                out.add_term(Monomial(ex), &sign * Rational::from_integer(k));
            }
        }
        WeylOp { n, poly: out }
    }

    /// Action on polynomials by differentiation and multiplication.
    pub fn apply_poly(&self, g: &Poly) -> Poly {
        let n = self.n;
        assert_eq!(g.nvars(), n);
        let mut cache: HashMap<Vec<u32>, Poly> = HashMap::new();
        let mut acc = Poly::zero(n);
        for (m, c) in self.poly.terms() {
            let e = m.exps();
            let dg = derivative_cached(&mut cache, &e[n..], g, |p, v| p.partial_derivative(v));
            let xm = Monomial(e[..n].to_vec());
            acc = &acc + &dg.mul_monomial(&xm, c);
        }
        acc
    }

    /// Action on rational functions, result in lowest terms.
    pub fn apply(&self, g: &RationalFunction) -> RationalFunction {
        let n = self.n;
        assert_eq!(g.nvars(), n);
        let mut cache: HashMap<Vec<u32>, RationalFunction> = HashMap::new();
        // group by derivative part so each derivative is multiplied once
        let mut groups: Vec<(Vec<u32>, Poly)> = Vec::new();
        for (m, c) in self.poly.terms() {
            let e = m.exps();
            let coeff = Poly::term(Monomial(e[..n].to_vec()), c.clone());
            match groups.iter_mut().find(|(d, _)| d[..] == e[n..]) {
                Some((_, p)) => *p = &*p + &coeff,
                None => groups.push((e[n..].to_vec(), coeff)),
            }
        }
        let mut acc = RationalFunction::from_poly(Poly::zero(n));
        for (d, coeff) in groups {
            let dg = derivative_cached(&mut cache, &d, g, |p, v| p.partial_derivative(v));
            acc = acc.add(&dg.mul_poly(&coeff));
        }
        acc
    }

    /// `(a_1..a_n, c)` with `self = sum a_k d_k + c`, when the order is at
    /// most one.
    pub fn split_first_order(&self) -> Option<(Vec<Poly>, Poly)> {
        let n = self.n;
        let mut coeffs = vec![Poly::zero(n); n];
        let mut constant = Poly::zero(n);
        for (m, c) in self.poly.terms() {
            let e = m.exps();
            let xm = Monomial(e[..n].to_vec());
            match self.d_degree(m) {
                0 => constant.add_term(xm, c.clone()),
                1 => {
                    let k = e[n..].iter().position(|&x| x == 1).unwrap();
                    coeffs[k].add_term(xm, c.clone());
                }
                _ => return None,
            }
        }
        Some((coeffs, constant))
    }

    /// Coefficients `a_k` when `self = sum a_k d_k` exactly.
    pub fn vector_field_coefficients(&self) -> Option<Vec<Poly>> {
        match self.split_first_order() {
            Some((a, c)) if c.is_zero() => Some(a),
            _ => None,
        }
    }

    /// Grouped by derivative monomial, e.g. `(1/2)*x*Dx + y*Dy`.
    pub fn to_string_with(&self, names: &[impl AsRef<str>]) -> String {
        let n = self.n;
        if self.is_zero() {
            return "0".to_string();
        }
        let dnames: Vec<String> = names.iter().map(|v| format!("D{}", v.as_ref())).collect();
        let mut groups: Vec<(Monomial, Poly)> = Vec::new();
        for (m, c) in self.poly.terms() {
            let e = m.exps();
            let dm = Monomial(e[n..].to_vec());
            let term = Poly::term(Monomial(e[..n].to_vec()), c.clone());
            match groups.iter_mut().find(|(d, _)| *d == dm) {
                Some((_, p)) => *p = &*p + &term,
                None => groups.push((dm, term)),
            }
        }
        groups.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out = String::new();
        for (i, (dm, coeff)) in groups.iter().enumerate() {
            let dstr = monomial_string(dm, &dnames);
            let (neg, body) = match (&dstr, coeff.num_terms()) {
                (None, _) => {
                    let s = coeff.to_string_with(names);
                    match s.strip_prefix('-') {
                        Some(rest) => (true, rest.to_string()),
                        None => (false, s),
                    }
                }
                (Some(d), 1) => {
                    let (m, c) = coeff.leading_term().unwrap();
                    let xs = monomial_string(m, names);
                    let joined = match xs {
                        Some(x) => format!("{x}*{d}"),
                        None => d.clone(),
                    };
                    (c.is_negative(), coeff_times(&c.abs(), Some(&joined)))
                }
                (Some(d), _) => (false, format!("({})*{d}", coeff.to_string_with(names))),
            };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        out
    }
}

fn derivative_cached<T: Clone>(
    cache: &mut HashMap<Vec<u32>, T>,
    d: &[u32],
    g: &T,
    diff: impl Fn(&T, usize) -> T + Copy,
) -> T {
    if let Some(v) = cache.get(d) {
        return v.clone();
    }
    let out = match d.iter().position(|&k| k > 0) {
        None => g.clone(),
        Some(v) => {
            let mut lower = d.to_vec();
            lower[v] -= 1;
            let base = derivative_cached(cache, &lower, g, diff);
            diff(&base, v)
        }
    };
    cache.insert(d.to_vec(), out.clone());
    out
}

impl EvalRing for WeylOp {
    fn lift_rational(&self, c: Rational) -> Self {
        WeylOp::constant(self.n, c)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
}

/// Parses an operator in the polynomial grammar where `D<var>` denotes the
/// derivative in `var`; products are evaluated in the order written.
pub fn parse_weyl(text: &str, vars: &[impl AsRef<str>]) -> Result<WeylOp> {
    let n = vars.len();
    let e = parse_expr(text)?;
    let leaf = |name: &str, pos: usize| -> Result<WeylOp> {
        if let Some(i) = vars.iter().position(|v| v.as_ref() == name) {
            return Ok(WeylOp::x(n, i));
        }
        if let Some(rest) = name.strip_prefix('D') {
            if let Some(i) = vars.iter().position(|v| v.as_ref() == rest) {
                return Ok(WeylOp::d(n, i));
            }
        }
        Err(Error::UnknownVariable { name: name.to_string(), pos })
    };
    eval(&e, &WeylOp::zero(n), &leaf)
}

impl fmt::Display for WeylOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.n).map(|i| format!("x{i}")).collect();
        f.write_str(&self.to_string_with(&names))
    }
}

impl Add<&WeylOp> for &WeylOp {
    type Output = WeylOp;
    fn add(self, o: &WeylOp) -> WeylOp {
        WeylOp { n: self.n, poly: &self.poly + &o.poly }
    }
}

impl Sub<&WeylOp> for &WeylOp {
    type Output = WeylOp;
    fn sub(self, o: &WeylOp) -> WeylOp {
        WeylOp { n: self.n, poly: &self.poly - &o.poly }
    }
}

impl Neg for &WeylOp {
    type Output = WeylOp;
    fn neg(self) -> WeylOp {
        WeylOp { n: self.n, poly: -&self.poly }
    }
}

impl Mul<&WeylOp> for &WeylOp {
    type Output = WeylOp;
    fn mul(self, o: &WeylOp) -> WeylOp {
        assert_eq!(self.n, o.n, "operators over different variable sets");
        let n = self.n;
        let mut out = Poly::zero(2 * n);
        for (m1, c1) in self.poly.terms() {
            for (m2, c2) in o.poly.terms() {
                let c = c1 * c2;
                for (e, k) in weyl_monomial_product(n, m1.exps(), m2.exps()) {
                    out.add_term(Monomial(e), &c * Rational::from_integer(k));
                }
            }
        }
        WeylOp { n, poly: out }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<WeylOp> for WeylOp {
            type Output = WeylOp;
            fn $f(self, rhs: WeylOp) -> WeylOp {
                <&WeylOp as $tr<&WeylOp>>::$f(&self, &rhs)
            }
        }
        impl $tr<&WeylOp> for WeylOp {
            type Output = WeylOp;
            fn $f(self, rhs: &WeylOp) -> WeylOp {
                <&WeylOp as $tr<&WeylOp>>::$f(&self, rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for WeylOp {
    type Output = WeylOp;
    fn neg(self) -> WeylOp {
        -&self
    }
}
