//! Vector fields on a chart.

use std::fmt;

use crate::coeffring::{Chart, RatFunc};
use crate::error::Result;

/// A vector field, stored as its components against the coordinate frame.
#[derive(Clone, PartialEq, Eq)]
pub struct VectorField {
    chart: Chart,
    components: Vec<RatFunc>,
}

impl VectorField {
    pub fn zero(chart: &Chart) -> VectorField {
        VectorField { chart: chart.clone(), components: vec![RatFunc::zero(chart); chart.dim()] }
    }

    /// The coordinate field for the variable at `index`.
    pub fn coordinate(chart: &Chart, index: usize) -> Result<VectorField> {
        chart.check_index(index)?;
        let mut v = VectorField::zero(chart);
        v.components[index] = RatFunc::one(chart);
        Ok(v)
    }

    pub fn from_components(chart: &Chart, components: Vec<RatFunc>) -> VectorField {
        assert_eq!(components.len(), chart.dim(), "component count mismatch");
        for c in &components {
            chart.assert_same(c.chart());
        }
        VectorField { chart: chart.clone(), components }
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn components(&self) -> &[RatFunc] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &RatFunc {
        &self.components[i]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &VectorField) -> VectorField {
        self.chart.assert_same(&other.chart);
        VectorField {
            chart: self.chart.clone(),
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &VectorField) -> VectorField {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> VectorField {
        VectorField {
            chart: self.chart.clone(),
            components: self.components.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, f: &RatFunc) -> VectorField {
        VectorField {
            chart: self.chart.clone(),
            components: self.components.iter().map(|c| c * f).collect(),
        }
    }

    /// Apply the field to a function as a derivation: `X(f) = sum X^i d_i f`.
    pub fn derive(&self, f: &RatFunc) -> RatFunc {
        self.chart.assert_same(f.chart());
        let mut acc = RatFunc::zero(&self.chart);
        for (i, x) in self.components.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            acc = &acc + &(x * &f.partial_derivative(i).expect("index in range"));
        }
        acc
    }
}

/// Lie bracket of vector fields: `[X,Y]^i = X^j d_j Y^i - Y^j d_j X^i`.
pub fn lie_bracket(x: &VectorField, y: &VectorField) -> VectorField {
    x.chart().assert_same(y.chart());
    let chart = x.chart().clone();
    let components = (0..chart.dim())
        .map(|i| &x.derive(y.component(i)) - &y.derive(x.component(i)))
        .collect();
    VectorField { chart, components }
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (i, c) in self.components.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let name = format!("∂{}", self.chart.name(i));
            let cs = c.to_string();
            if cs == "1" {
                parts.push(name);
            } else if cs == "-1" {
                parts.push(format!("-{name}"));
            } else if cs.contains(' ') || cs.contains('/') {
                parts.push(format!("({cs}) {name}"));
            } else {
                parts.push(format!("{cs} {name}"));
            }
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VectorField({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::Poly;

    fn chart2() -> Chart {
        Chart::new(&["x", "y"]).unwrap()
    }

    #[test]
    fn lie_bracket_examples() {
        let c = chart2();
        let dx = VectorField::coordinate(&c, 0).unwrap();
        let dy = VectorField::coordinate(&c, 1).unwrap();
        let x = RatFunc::var(&c, 0).unwrap();
        let y = RatFunc::var(&c, 1).unwrap();
        // [d/dx, x d/dy] = d/dy
        assert_eq!(lie_bracket(&dx, &dy.scale(&x)), dy);
        // [d/dx, d/dy] = 0
        assert!(lie_bracket(&dx, &dy).is_zero());
        // [x d/dx, y d/dy] = 0
        assert!(lie_bracket(&dx.scale(&x), &dy.scale(&y)).is_zero());
    }

    #[test]
    fn bracket_is_antisymmetric_and_jacobi_holds() {
        let c = chart2();
        let x = RatFunc::var(&c, 0).unwrap();
        let y = RatFunc::var(&c, 1).unwrap();
        let a = VectorField::from_components(&c, vec![x.clone(), &y * &y]);
        let b = VectorField::from_components(&c, vec![&x * &y, RatFunc::one(&c)]);
        let d = VectorField::from_components(&c, vec![y.clone(), x.clone()]);
        assert_eq!(lie_bracket(&a, &b), lie_bracket(&b, &a).neg());
        let jac = lie_bracket(&a, &lie_bracket(&b, &d))
            .add(&lie_bracket(&b, &lie_bracket(&d, &a)))
            .add(&lie_bracket(&d, &lie_bracket(&a, &b)));
        assert!(jac.is_zero());
    }

    #[test]
    fn derivation_on_polynomials() {
        let c = chart2();
        let x = RatFunc::var(&c, 0).unwrap();
        let dx = VectorField::coordinate(&c, 0).unwrap();
        let xy = &x * &RatFunc::var(&c, 1).unwrap();
        assert!(dx.derive(&xy).is_equal(&RatFunc::var(&c, 1).unwrap()));
        let _ = Poly::zero(&c);
    }
}
