use std::fmt;

use num_traits::Zero;

use super::{gcd, Poly, Rational};
use crate::error::{Error, Result};

/// Quotient of polynomials kept in lowest terms with a monic denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn from_poly(p: Poly) -> Self {
        let n = p.nvars();
        RationalFunction { num: p, den: Poly::one(n) }
    }

    /// `1 / f` for nonzero `f`.
    pub fn reciprocal_of(f: &Poly) -> Result<Self> {
        Self::new(Poly::one(f.nvars()), f.clone())
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        let n = num.nvars();
        if num.is_zero() {
            return RationalFunction { num, den: Poly::one(n) };
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (num.exact_divide(&g).expect("gcd divides"), den.exact_divide(&g).expect("gcd divides"))
            }
        };
        let lc = den.leading_coeff().expect("nonzero denominator").clone();
        let inv = lc.recip();
        RationalFunction { num: num.scale(&inv), den: den.scale(&inv) }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial value when the denominator is a unit.
    pub fn as_poly(&self) -> Option<Poly> {
        if self.den.is_one() {
            Some(self.num.clone())
        } else {
            None
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self::reduce(&self.num + &o.num, self.den.clone());
        }
        Self::reduce(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::reduce(&self.num * &o.num, &self.den * &o.den)
    }

    pub fn mul_poly(&self, p: &Poly) -> Self {
        Self::reduce(&self.num * p, self.den.clone())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::from_poly(Poly::zero(self.nvars()));
        }
        RationalFunction { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Quotient rule.
    pub fn partial_derivative(&self, v: usize) -> Self {
        let dn = self.num.partial_derivative(v);
        if self.den.is_one() {
            return Self::from_poly(dn);
        }
        let dd = self.den.partial_derivative(v);
        Self::reduce(&(&dn * &self.den) - &(&self.num * &dd), &self.den * &self.den)
    }

    pub fn to_string_with(&self, names: &[impl AsRef<str>]) -> String {
        if self.den.is_one() {
            return self.num.to_string_with(names);
        }
        format!("({})/({})", self.num.to_string_with(names), self.den.to_string_with(names))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars()).map(|i| format!("x{i}")).collect();
        f.write_str(&self.to_string_with(&names))
    }
}

impl From<Poly> for RationalFunction {
    fn from(p: Poly) -> Self {
        Self::from_poly(p)
    }
}
