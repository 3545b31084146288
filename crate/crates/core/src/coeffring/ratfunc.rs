//! Rational functions: quotients of multivariate polynomials.
//!
//! No multivariate gcd is computed. A quotient is normalized only up to
//! integer content and sign: the denominator is a primitive integer
//! polynomial with positive leading coefficient (so a constant denominator
//! is always exactly 1). Equality is decided by cross-multiplication, which
//! is exact without reduction.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::One;

use super::chart::Chart;
use super::poly::Poly;
use super::Rational;
use crate::error::{Error, Result};

/// An exact rational function `num/den` on a chart.
///
/// Equality (`==` and [`RatFunc::is_equal`]) is *value* equality decided by
/// cross-multiplication, so unreduced representatives compare equal.
#[derive(Clone)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        self.chart() == other.chart() && self.is_equal(other)
    }
}

impl Eq for RatFunc {}

impl RatFunc {
    /// Build `num/den`, normalizing. Errors when `den` is the zero polynomial.
    pub fn new(num: Poly, den: Poly) -> Result<RatFunc> {
        num.chart().ensure_same(den.chart())?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut r = RatFunc { num, den };
        r.normalize();
        Ok(r)
    }

    pub fn from_poly(p: Poly) -> RatFunc {
        let den = Poly::one(p.chart());
        RatFunc { num: p, den }
    }

    pub fn zero(chart: &Chart) -> RatFunc {
        RatFunc::from_poly(Poly::zero(chart))
    }

    pub fn one(chart: &Chart) -> RatFunc {
        RatFunc::from_poly(Poly::one(chart))
    }

    pub fn constant(chart: &Chart, c: Rational) -> RatFunc {
        RatFunc::from_poly(Poly::constant(chart, c))
    }

    pub fn int(chart: &Chart, c: i64) -> RatFunc {
        RatFunc::from_poly(Poly::int(chart, c))
    }

    pub fn var(chart: &Chart, index: usize) -> Result<RatFunc> {
        Ok(RatFunc::from_poly(Poly::var(chart, index)?))
    }

    pub fn chart(&self) -> &Chart {
        self.num.chart()
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `Some(c)` when the value is the constant `c`.
    pub fn as_constant(&self) -> Option<Rational> {
        let d = self.den.as_constant()?;
        let n = self.num.as_constant()?;
        Some(n / d)
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one(self.num.chart());
            return;
        }
        let content = self.den.rational_content();
        let inv = Rational::one() / content;
        self.den = self.den.scale(&inv);
        self.num = self.num.scale(&inv);
    }

    /// Checked arithmetic used at input boundaries; `ChartMismatch` when the
    /// operands live on different charts.
    pub fn try_add(&self, other: &RatFunc) -> Result<RatFunc> {
        self.chart().ensure_same(other.chart())?;
        Ok(self + other)
    }

    pub fn try_mul(&self, other: &RatFunc) -> Result<RatFunc> {
        self.chart().ensure_same(other.chart())?;
        Ok(self * other)
    }

    /// Multiplicative inverse. Errors on zero.
    pub fn invert(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut r = RatFunc { num: self.den.clone(), den: self.num.clone() };
        r.normalize();
        Ok(r)
    }

    pub fn pow(&self, exp: u32) -> RatFunc {
        let mut acc = RatFunc::one(self.chart());
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> RatFunc {
        let mut r = RatFunc { num: self.num.scale(c), den: self.den.clone() };
        r.normalize();
        r
    }

    /// Exact equality of values: `num·s.den − s.num·den = 0`.
    pub fn is_equal(&self, other: &RatFunc) -> bool {
        self.chart().assert_same(other.chart());
        (&(&self.num * &other.den) - &(&other.num * &self.den)).is_zero()
    }

    /// Exact evaluation; errors when the denominator vanishes at the point.
    pub fn eval_at(&self, point: &[Rational]) -> Result<Rational> {
        let d = self.den.eval(point)?;
        if num_traits::Zero::is_zero(&d) {
            return Err(Error::PoleAtPoint);
        }
        Ok(self.num.eval(point)? / d)
    }

    /// Quotient-rule partial derivative.
    pub fn partial_derivative(&self, index: usize) -> Result<RatFunc> {
        let dn = self.num.partial_derivative(index)?;
        let dd = self.den.partial_derivative(index)?;
        let num = &(&dn * &self.den) - &(&self.num * &dd);
        let den = &self.den * &self.den;
        RatFunc::new(num, den)
    }

    /// Substitute polynomials for the chart variables. Errors when the
    /// substituted denominator vanishes identically.
    pub fn compose(&self, args: &[Poly]) -> Result<RatFunc> {
        let num = self.num.compose(args)?;
        let den = self.den.compose(args)?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFunc::new(num, den)
    }

    /// Embed into a larger chart by renaming variable `i` to `map[i]`.
    pub fn embed(&self, target: &Chart, map: &[usize]) -> Result<RatFunc> {
        RatFunc::new(self.num.embed(target, map)?, self.den.embed(target, map)?)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        self.chart().assert_same(rhs.chart());
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        let mut r = RatFunc { num, den };
        r.normalize();
        r
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        self.chart().assert_same(rhs.chart());
        let mut r = RatFunc { num: &self.num * &rhs.num, den: &self.den * &rhs.den };
        r.normalize();
        r
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self * &rhs.invert().expect("division by zero rational function")
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.as_constant().map(|c| c.is_one()).unwrap_or(false) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}
