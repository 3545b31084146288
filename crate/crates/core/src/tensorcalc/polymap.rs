//! Polynomial maps between charts and pullbacks along them.

use std::fmt;

use super::alt::Alt;
use super::form::KForm;
use super::matrix::Matrix;
use crate::coeffring::{Chart, Poly, RatFunc};
use crate::error::{Error, Result};

/// A map between charts whose target coordinates are polynomials in the
/// source coordinates.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMap {
    source: Chart,
    target: Chart,
    components: Vec<Poly>,
}

impl PolyMap {
    pub fn new(source: &Chart, target: &Chart, components: Vec<Poly>) -> Result<PolyMap> {
        if components.len() != target.dim() {
            return Err(Error::ChartMismatch {
                left: format!("{} components", components.len()),
                right: format!("target dimension {}", target.dim()),
            });
        }
        for c in &components {
            source.ensure_same(c.chart())?;
        }
        Ok(PolyMap { source: source.clone(), target: target.clone(), components })
    }

    pub fn identity(chart: &Chart) -> PolyMap {
        let components = (0..chart.dim()).map(|i| Poly::var(chart, i).unwrap()).collect();
        PolyMap { source: chart.clone(), target: chart.clone(), components }
    }

    /// The map picking source variables by index: component `i` of the
    /// result is the source variable `picks[i]`.
    pub fn projection(source: &Chart, target: &Chart, picks: &[usize]) -> Result<PolyMap> {
        let mut components = Vec::with_capacity(picks.len());
        for &p in picks {
            components.push(Poly::var(source, p)?);
        }
        PolyMap::new(source, target, components)
    }

    pub fn source(&self) -> &Chart {
        &self.source
    }

    pub fn target(&self) -> &Chart {
        &self.target
    }

    pub fn components(&self) -> &[Poly] {
        &self.components
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &PolyMap) -> Result<PolyMap> {
        other.target.ensure_same(&self.source)?;
        let components = self
            .components
            .iter()
            .map(|c| c.compose(other.components()))
            .collect::<Result<Vec<_>>>()?;
        PolyMap::new(&other.source, &self.target, components)
    }

    /// Jacobian matrix over the source chart: `J[i][j] = d F^i / d s_j`.
    pub fn jacobian(&self) -> Matrix {
        Matrix::from_fn(&self.source, self.target.dim(), self.source.dim(), |i, j| {
            RatFunc::from_poly(self.components[i].partial_derivative(j).expect("index in range"))
        })
    }

    /// Pull a function on the target back to the source.
    pub fn pullback_scalar(&self, f: &RatFunc) -> Result<RatFunc> {
        self.target.ensure_same(f.chart())?;
        f.compose(&self.components)
    }

    /// Pull a k-form on the target back to the source: substitute the map
    /// into coefficients and push differentials through the Jacobian.
    pub fn pullback_form(&self, u: &KForm) -> Result<KForm> {
        self.target.ensure_same(u.chart())?;
        // d F^i as 1-forms on the source
        let dif: Vec<KForm> = (0..self.target.dim())
            .map(|i| {
                KForm::from_coeffs(
                    &self.source,
                    1,
                    (0..self.source.dim()).map(|j| {
                        (
                            vec![j],
                            RatFunc::from_poly(
                                self.components[i].partial_derivative(j).expect("index in range"),
                            ),
                        )
                    }),
                )
            })
            .collect();
        let mut out = Alt::zero(&self.source, u.degree());
        for (index, c) in u.coeffs() {
            let coeff = c.compose(&self.components)?;
            if coeff.is_zero() {
                continue;
            }
            let mut blade = KForm::scalar(coeff);
            for &i in index {
                blade = super::form::wedge(&blade, &dif[i]);
            }
            out = out.add(&blade.inner);
        }
        Ok(KForm { inner: out })
    }
}

impl fmt::Debug for PolyMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        write!(f, "PolyMap[{}] -> [{}]: ({})", self.source, self.target, comps.join(", "))
    }
}
