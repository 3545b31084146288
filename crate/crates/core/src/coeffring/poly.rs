//! Sparse multivariate polynomials over the rationals.
//!
//! Terms are stored in a `BTreeMap` keyed by exponent multi-index with a
//! graded-lexicographic order, so every polynomial has one canonical form:
//! no zero coefficients are stored and iteration order is deterministic.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::chart::Chart;
use super::Rational;
use crate::error::{Error, Result};

/// Exponent multi-index of one monomial. Length always equals the chart
/// dimension. Ordered graded-lexicographically: total degree first, then
/// lexicographic on the exponent vector.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn constant(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    pub fn var(n: usize, index: usize) -> Self {
        let mut exps = vec![0; n];
        exps[index] = 1;
        Monomial { exps }
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.exps[index]
    }

    pub fn is_constant(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect() }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A multivariate polynomial with exact rational coefficients on a chart.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    chart: Chart,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero(chart: &Chart) -> Poly {
        Poly { chart: chart.clone(), terms: BTreeMap::new() }
    }

    pub fn one(chart: &Chart) -> Poly {
        Poly::constant(chart, Rational::one())
    }

    pub fn constant(chart: &Chart, c: Rational) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::constant(chart.dim()), c);
        }
        Poly { chart: chart.clone(), terms }
    }

    pub fn int(chart: &Chart, c: i64) -> Poly {
        Poly::constant(chart, Rational::from_integer(BigInt::from(c)))
    }

    /// The coordinate function `x_index`.
    pub fn var(chart: &Chart, index: usize) -> Result<Poly> {
        chart.check_index(index)?;
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(chart.dim(), index), Rational::one());
        Ok(Poly { chart: chart.clone(), terms })
    }

    pub fn from_terms(chart: &Chart, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Poly {
        let mut p = Poly::zero(chart);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(c)` when the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_constant().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Coefficient of the graded-lex greatest monomial; zero for the zero
    /// polynomial.
    pub fn leading_coefficient(&self) -> Rational {
        self.terms.iter().next_back().map(|(_, c)| c.clone()).unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Checked addition; `ChartMismatch` when the variable lists differ.
    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.chart.ensure_same(&other.chart)?;
        Ok(self + other)
    }

    /// Checked multiplication; `ChartMismatch` when the variable lists differ.
    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.chart.ensure_same(&other.chart)?;
        Ok(self * other)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.chart);
        }
        Poly {
            chart: self.chart.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Poly {
        let mut acc = Poly::one(&self.chart);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative with respect to the variable at `index`.
    pub fn partial_derivative(&self, index: usize) -> Result<Poly> {
        self.chart.check_index(index)?;
        let mut out = Poly::zero(&self.chart);
        for (m, c) in &self.terms {
            let e = m.exponent(index);
            if e == 0 {
                continue;
            }
            let mut exps = m.exps.clone();
            exps[index] = e - 1;
            out.add_term(Monomial { exps }, c * Rational::from_integer(BigInt::from(e)));
        }
        Ok(out)
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.chart.dim() {
            return Err(Error::BadIndex { index: point.len(), dim: self.chart.dim() });
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps.iter().enumerate() {
                for _ in 0..e {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Substitute `args[i]` (polynomials on a common chart) for variable `i`.
    pub fn compose(&self, args: &[Poly]) -> Result<Poly> {
        if args.len() != self.chart.dim() {
            return Err(Error::BadIndex { index: args.len(), dim: self.chart.dim() });
        }
        let target = match args.first() {
            Some(a) => a.chart().clone(),
            None => return Err(Error::InvalidChart("substitution needs at least one argument".into())),
        };
        for a in args {
            target.ensure_same(a.chart())?;
        }
        let mut acc = Poly::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(&target, c.clone());
            for (i, &e) in m.exps.iter().enumerate() {
                if e > 0 {
                    t = &t * &args[i].pow(e);
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Rename-style substitution: embed into `target` sending variable `i` of
    /// `self` to variable `map[i]` of the target chart.
    pub fn embed(&self, target: &Chart, map: &[usize]) -> Result<Poly> {
        if map.len() != self.chart.dim() {
            return Err(Error::BadIndex { index: map.len(), dim: self.chart.dim() });
        }
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; target.dim()];
            for (i, &e) in m.exps.iter().enumerate() {
                target.check_index(map[i])?;
                exps[map[i]] += e;
            }
            out.add_term(Monomial { exps }, c.clone());
        }
        Ok(out)
    }

    /// gcd of the integer coefficient numerators divided by the lcm of the
    /// denominators, signed like the leading coefficient. Dividing by it
    /// leaves a primitive integer polynomial with positive leading term.
    pub(crate) fn rational_content(&self) -> Rational {
        if self.is_zero() {
            return Rational::one();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_bigint::BigInt::from(num_integer_gcd(&num_gcd, c.numer()));
            den_lcm = num_integer_lcm(&den_lcm, c.denom());
        }
        let mut content = Rational::new(num_gcd, den_lcm);
        if self.leading_coefficient().is_negative() {
            content = -content;
        }
        content
    }
}

fn num_integer_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    use num_integer::Integer;
    a.gcd(b)
}

fn num_integer_lcm(a: &BigInt, b: &BigInt) -> BigInt {
    use num_integer::Integer;
    a.lcm(b)
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.chart.assert_same(&rhs.chart);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            chart: self.chart.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.chart.assert_same(&rhs.chart);
        let mut out = Poly::zero(&self.chart);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

pub(crate) fn format_rational(c: &Rational) -> String {
    if c.denom().is_one() {
        format!("{}", c.numer())
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // Descending graded-lex order for display.
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || m.is_constant() {
                factors.push(format_rational(&mag));
            }
            for (i, &e) in m.exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.chart.name(i).to_string()),
                    _ => factors.push(format!("{}^{}", self.chart.name(i), e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chart2() -> Chart {
        Chart::new(&["x", "y"]).unwrap()
    }

    #[test]
    fn additive_inverse_cancels() {
        let c = chart2();
        let x = Poly::var(&c, 0).unwrap();
        assert!((&x + &(-&x)).is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let c = chart2();
        let x = Poly::var(&c, 0).unwrap();
        let y = Poly::var(&c, 1).unwrap();
        let lhs = &(&x + &y) * &(&x - &y);
        let rhs = &(&x * &x) - &(&y * &y);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn mul_by_zero_absorbs() {
        let c = chart2();
        let x = Poly::var(&c, 0).unwrap();
        let p = &(&x * &x) + &Poly::int(&c, 7);
        assert!((&p * &Poly::zero(&c)).is_zero());
    }

    #[test]
    fn partial_derivative_examples() {
        let c = chart2();
        let x = Poly::var(&c, 0).unwrap();
        let y = Poly::var(&c, 1).unwrap();
        // d/dx (x^2 y) = 2xy
        let p = &(&x * &x) * &y;
        let expect = &Poly::int(&c, 2) * &(&x * &y);
        assert_eq!(p.partial_derivative(0).unwrap(), expect);
        // d/dy (x^2) = 0
        assert!((&x * &x).partial_derivative(1).unwrap().is_zero());
        // d/dx (x+y)^3 = 3 (x+y)^2, both sides expanded
        let s = &x + &y;
        let lhs = s.pow(3).partial_derivative(0).unwrap();
        let rhs = &Poly::int(&c, 3) * &s.pow(2);
        assert_eq!(lhs, rhs);
        assert!(p.partial_derivative(5).is_err());
    }

    #[test]
    fn chart_mismatch_is_reported() {
        let a = Poly::var(&chart2(), 0).unwrap();
        let b = Poly::var(&Chart::new(&["u"]).unwrap(), 0).unwrap();
        assert!(matches!(a.try_add(&b), Err(Error::ChartMismatch { .. })));
        assert!(matches!(a.try_mul(&b), Err(Error::ChartMismatch { .. })));
    }

    #[test]
    fn display_is_canonical() {
        let c = chart2();
        let x = Poly::var(&c, 0).unwrap();
        let y = Poly::var(&c, 1).unwrap();
        let p = &(&(&x * &x) - &(&Poly::int(&c, 3) * &y)) + &Poly::constant(&c, Rational::new(1.into(), 2.into()));
        assert_eq!(p.to_string(), "x^2 - 3*y + 1/2");
    }
}
