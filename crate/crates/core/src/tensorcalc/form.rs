//! Differential forms: wedge, exterior derivative, interior product, Lie
//! derivative, musical map and inversion of 2-forms.

use std::fmt;

use super::alt::Alt;
use super::matrix::Matrix;
use super::vector::VectorField;
use crate::coeffring::{Chart, RatFunc};
use crate::error::{Error, Result};

/// An antisymmetric covariant tensor field of fixed degree. Coefficients are
/// indexed by strictly increasing multi-indices; a degree above the chart
/// dimension is the canonical zero.
#[derive(Clone, PartialEq, Eq)]
pub struct KForm {
    pub(crate) inner: Alt,
}

impl KForm {
    pub fn zero(chart: &Chart, degree: usize) -> KForm {
        KForm { inner: Alt::zero(chart, degree) }
    }

    /// The 0-form given by a function.
    pub fn scalar(f: RatFunc) -> KForm {
        let chart = f.chart().clone();
        let mut inner = Alt::zero(&chart, 0);
        inner.insert(vec![], f);
        KForm { inner }
    }

    /// The coordinate 1-form `dx_index`.
    pub fn coordinate(chart: &Chart, index: usize) -> Result<KForm> {
        chart.check_index(index)?;
        let mut inner = Alt::zero(chart, 1);
        inner.insert(vec![index], RatFunc::one(chart));
        Ok(KForm { inner })
    }

    /// Build from (strictly increasing index, coefficient) pairs.
    pub fn from_coeffs(
        chart: &Chart,
        degree: usize,
        coeffs: impl IntoIterator<Item = (Vec<usize>, RatFunc)>,
    ) -> KForm {
        let mut inner = Alt::zero(chart, degree);
        for (i, c) in coeffs {
            inner.insert(i, c);
        }
        KForm { inner }
    }

    pub fn chart(&self) -> &Chart {
        &self.inner.chart
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    pub fn coeff(&self, index: &[usize]) -> RatFunc {
        self.inner.coeff(index)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&Vec<usize>, &RatFunc)> {
        self.inner.coeffs.iter()
    }

    /// The coefficient of a 1-form as a vector, or of a 0-form as a scalar.
    pub fn as_scalar(&self) -> RatFunc {
        assert_eq!(self.degree(), 0, "not a 0-form");
        self.inner.coeff(&[])
    }

    pub fn one_form_components(&self) -> Vec<RatFunc> {
        assert_eq!(self.degree(), 1, "not a 1-form");
        (0..self.chart().dim()).map(|i| self.inner.coeff(&[i])).collect()
    }

    pub fn add(&self, other: &KForm) -> KForm {
        KForm { inner: self.inner.add(&other.inner) }
    }

    pub fn sub(&self, other: &KForm) -> KForm {
        KForm { inner: self.inner.sub(&other.inner) }
    }

    pub fn neg(&self) -> KForm {
        KForm { inner: self.inner.neg() }
    }

    pub fn scale(&self, f: &RatFunc) -> KForm {
        KForm { inner: self.inner.scale(f) }
    }

    /// The antisymmetric component matrix `M[i][j] = u(e_i, e_j)` of a 2-form.
    pub fn two_form_matrix(&self) -> Matrix {
        assert_eq!(self.degree(), 2, "not a 2-form");
        let chart = self.chart().clone();
        let mut m = Matrix::zero(&chart, chart.dim(), chart.dim());
        for (index, c) in &self.inner.coeffs {
            let (i, j) = (index[0], index[1]);
            *m.at_mut(i, j) = c.clone();
            *m.at_mut(j, i) = -c;
        }
        m
    }

    /// Rebuild a 2-form from an antisymmetric component matrix (upper
    /// triangle is read; the caller guarantees antisymmetry).
    pub fn from_two_form_matrix(m: &Matrix) -> KForm {
        let chart = m.chart().clone();
        let n = chart.dim();
        let mut out = Alt::zero(&chart, 2);
        for i in 0..n {
            for j in (i + 1)..n {
                out.insert(vec![i, j], m.at(i, j).clone());
            }
        }
        KForm { inner: out }
    }
}

/// Wedge product of forms (graded-commutative, Koszul signs).
pub fn wedge(u: &KForm, v: &KForm) -> KForm {
    KForm { inner: u.inner.wedge(&v.inner) }
}

/// Exterior derivative.
pub fn exterior_d(u: &KForm) -> KForm {
    let chart = u.chart().clone();
    let n = chart.dim();
    let mut out = Alt::zero(&chart, u.degree() + 1);
    for (index, c) in &u.inner.coeffs {
        for m in 0..n {
            if index.contains(&m) {
                continue;
            }
            let d = c.partial_derivative(m).expect("index in range");
            if d.is_zero() {
                continue;
            }
            let mut full = vec![m];
            full.extend_from_slice(index);
            out.insert_unsorted(&full, d);
        }
    }
    KForm { inner: out }
}

/// Interior product `i_X u` (contraction in the first slot).
pub fn interior(x: &VectorField, u: &KForm) -> Result<KForm> {
    x.chart().ensure_same(u.chart())?;
    if u.degree() < 1 {
        return Err(Error::DegreeError);
    }
    Ok(KForm { inner: u.inner.contract(x.components()) })
}

/// Double contraction `i_{X∧Y} u = i_Y(i_X u) = u(X, Y, ...)`.
pub fn interior_2(x: &VectorField, y: &VectorField, u: &KForm) -> Result<KForm> {
    if u.degree() < 2 {
        return Err(Error::DegreeError);
    }
    interior(y, &interior(x, u)?)
}

/// Full evaluation of a k-form on k vector fields.
pub fn evaluate(u: &KForm, fields: &[&VectorField]) -> RatFunc {
    assert_eq!(fields.len(), u.degree(), "wrong number of arguments");
    let mut acc = u.inner.clone();
    for x in fields {
        u.chart().assert_same(x.chart());
        acc = acc.contract(x.components());
    }
    acc.coeff(&[])
}

/// Lie derivative via the Cartan formula `L_X u = i_X du + d i_X u`.
pub fn lie_derivative(x: &VectorField, u: &KForm) -> KForm {
    x.chart().assert_same(u.chart());
    let d_u = exterior_d(u);
    let first = KForm { inner: d_u.inner.contract(x.components()) };
    if u.degree() == 0 {
        return first;
    }
    let second = exterior_d(&KForm { inner: u.inner.contract(x.components()) });
    first.add(&second)
}

/// The musical map of a 2-form: `omega_flat(X)` is the 1-form
/// `Y -> omega(X, Y)`.
pub fn omega_flat(w: &KForm, x: &VectorField) -> KForm {
    assert_eq!(w.degree(), 2, "omega_flat needs a 2-form");
    w.chart().assert_same(x.chart());
    KForm { inner: w.inner.contract(x.components()) }
}

/// Matrix of `omega_flat` acting on component vectors:
/// `(omega_flat X)_j = sum_i W[j][i] X^i` with `W[j][i] = omega(e_i, e_j)`.
pub fn omega_flat_matrix(w: &KForm) -> Matrix {
    w.two_form_matrix().transpose()
}

impl fmt::Display for KForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.inner.format("d", "∧"))
    }
}

impl fmt::Debug for KForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KForm[deg {}]({self})", self.degree())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chart3() -> Chart {
        Chart::new(&["x", "y", "z"]).unwrap()
    }

    fn dx(c: &Chart, i: usize) -> KForm {
        KForm::coordinate(c, i).unwrap()
    }

    fn var(c: &Chart, i: usize) -> RatFunc {
        RatFunc::var(c, i).unwrap()
    }

    #[test]
    fn wedge_examples() {
        let c = chart3();
        let w = wedge(&dx(&c, 0), &dx(&c, 1));
        assert_eq!(w.coeff(&[0, 1]).to_string(), "1");
        assert!(wedge(&dx(&c, 0), &dx(&c, 0)).is_zero());
        let x = var(&c, 0);
        let u = wedge(&dx(&c, 1).scale(&x), &dx(&c, 2));
        assert!(u.coeff(&[1, 2]).is_equal(&x));
        // graded commutativity for 1-forms: u ∧ v = -v ∧ u
        assert_eq!(wedge(&dx(&c, 0), &dx(&c, 1)), wedge(&dx(&c, 1), &dx(&c, 0)).neg());
    }

    #[test]
    fn exterior_d_examples() {
        let c = chart3();
        let x = var(&c, 0);
        // d(x dy) = dx ∧ dy
        let u = dx(&c, 1).scale(&x);
        assert_eq!(exterior_d(&u), wedge(&dx(&c, 0), &dx(&c, 1)));
        // d(dx ∧ dy) = 0
        assert!(exterior_d(&wedge(&dx(&c, 0), &dx(&c, 1))).is_zero());
        // d(xy) = y dx + x dy
        let xy = &x * &var(&c, 1);
        let d = exterior_d(&KForm::scalar(xy));
        let expect = dx(&c, 0).scale(&var(&c, 1)).add(&dx(&c, 1).scale(&x));
        assert_eq!(d, expect);
    }

    #[test]
    fn d_of_top_form_is_canonical_zero() {
        let c = Chart::new(&["x", "y"]).unwrap();
        let top = wedge(&dx(&c, 0), &dx(&c, 1)).scale(&var(&c, 0));
        let d = exterior_d(&top);
        assert!(d.is_zero());
        assert_eq!(d.degree(), 3);
    }

    #[test]
    fn interior_examples() {
        let c = chart3();
        let ex = VectorField::coordinate(&c, 0).unwrap();
        let ey = VectorField::coordinate(&c, 1).unwrap();
        assert_eq!(interior(&ex, &wedge(&dx(&c, 0), &dx(&c, 1))).unwrap(), dx(&c, 1));
        assert!(interior(&ey, &dx(&c, 0)).unwrap().is_zero());
        // i_{∂x∧∂y}(x dx∧dy∧dz) = x dz
        let x = var(&c, 0);
        let vol = wedge(&wedge(&dx(&c, 0), &dx(&c, 1)), &dx(&c, 2)).scale(&x);
        let got = interior_2(&ex, &ey, &vol).unwrap();
        assert_eq!(got, dx(&c, 2).scale(&x));
        assert!(matches!(interior(&ex, &KForm::scalar(x)), Err(Error::DegreeError)));
    }

    #[test]
    fn lie_derivative_examples() {
        let c = chart3();
        let ex = VectorField::coordinate(&c, 0).unwrap();
        let x = var(&c, 0);
        // L_{∂x}(x dy) = dy
        assert_eq!(lie_derivative(&ex, &dx(&c, 1).scale(&x)), dx(&c, 1));
        // L_{∂x}(dy) = 0
        assert!(lie_derivative(&ex, &dx(&c, 1)).is_zero());
        // L_{x∂x}(dx) = dx
        assert_eq!(lie_derivative(&ex.scale(&x), &dx(&c, 0)), dx(&c, 0));
    }

    #[test]
    fn omega_flat_examples() {
        let c = chart3();
        let w = wedge(&dx(&c, 0), &dx(&c, 1));
        let ex = VectorField::coordinate(&c, 0).unwrap();
        assert_eq!(omega_flat(&w, &ex), dx(&c, 1));
        assert!(omega_flat(&KForm::zero(&c, 2), &ex).is_zero());
        let f = var(&c, 2);
        assert_eq!(omega_flat(&w, &ex.scale(&f)), dx(&c, 1).scale(&f));
    }

    #[test]
    fn evaluation_convention() {
        // dx∧dy (X, Y) = X^x Y^y - X^y Y^x
        let c = chart3();
        let w = wedge(&dx(&c, 0), &dx(&c, 1));
        let ex = VectorField::coordinate(&c, 0).unwrap();
        let ey = VectorField::coordinate(&c, 1).unwrap();
        assert_eq!(evaluate(&w, &[&ex, &ey]).to_string(), "1");
        assert_eq!(evaluate(&w, &[&ey, &ex]).to_string(), "-1");
    }
}
