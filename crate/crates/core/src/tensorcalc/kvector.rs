//! Multivector fields: wedge, the bivector musical map, the Schouten bracket
//! of bivectors, the Poisson bracket oracle, and inversion between
//! nondegenerate bivectors and 2-forms.

use std::fmt;

use super::alt::Alt;
use super::form::{omega_flat_matrix, KForm};
use super::matrix::Matrix;
use super::vector::VectorField;
use crate::coeffring::{Chart, RatFunc};
use crate::error::{Error, Result};

/// An antisymmetric contravariant tensor field of fixed degree.
#[derive(Clone, PartialEq, Eq)]
pub struct KVector {
    pub(crate) inner: Alt,
}

impl KVector {
    pub fn zero(chart: &Chart, degree: usize) -> KVector {
        KVector { inner: Alt::zero(chart, degree) }
    }

    pub fn from_coeffs(
        chart: &Chart,
        degree: usize,
        coeffs: impl IntoIterator<Item = (Vec<usize>, RatFunc)>,
    ) -> KVector {
        let mut inner = Alt::zero(chart, degree);
        for (i, c) in coeffs {
            inner.insert(i, c);
        }
        KVector { inner }
    }

    pub fn from_vector_field(x: &VectorField) -> KVector {
        let chart = x.chart().clone();
        let mut inner = Alt::zero(&chart, 1);
        for (i, c) in x.components().iter().enumerate() {
            inner.insert(vec![i], c.clone());
        }
        KVector { inner }
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

    pub fn add(&self, other: &KVector) -> KVector {
        KVector { inner: self.inner.add(&other.inner) }
    }

    pub fn sub(&self, other: &KVector) -> KVector {
        KVector { inner: self.inner.sub(&other.inner) }
    }

    pub fn neg(&self) -> KVector {
        KVector { inner: self.inner.neg() }
    }

    pub fn scale(&self, f: &RatFunc) -> KVector {
        KVector { inner: self.inner.scale(f) }
    }

    /// The antisymmetric component matrix `P[i][j] = p(dx_i, dx_j)` of a
    /// bivector.
    pub fn bivector_matrix(&self) -> Matrix {
        assert_eq!(self.degree(), 2, "not a bivector");
        let chart = self.chart().clone();
        let mut m = Matrix::zero(&chart, chart.dim(), chart.dim());
        for (index, c) in &self.inner.coeffs {
            let (i, j) = (index[0], index[1]);
            *m.at_mut(i, j) = c.clone();
            *m.at_mut(j, i) = -c;
        }
        m
    }

    pub fn from_bivector_matrix(m: &Matrix) -> KVector {
        let chart = m.chart().clone();
        let n = chart.dim();
        let mut out = Alt::zero(&chart, 2);
        for i in 0..n {
            for j in (i + 1)..n {
                out.insert(vec![i, j], m.at(i, j).clone());
            }
        }
        KVector { inner: out }
    }

    /// Evaluate a bivector on two 1-forms.
    pub fn eval_on_one_forms(&self, alpha: &KForm, beta: &KForm) -> RatFunc {
        assert_eq!(self.degree(), 2, "not a bivector");
        let a = self.inner.contract(&alpha.one_form_components());
        a.contract(&beta.one_form_components()).coeff(&[])
    }
}

/// Wedge product of multivectors.
pub fn wedge_kvector(u: &KVector, v: &KVector) -> KVector {
    KVector { inner: u.inner.wedge(&v.inner) }
}

/// Matrix of the musical map of a bivector on coefficient vectors:
/// `(pi_sharp a)^j = sum_i P[i][j] a_i`, i.e. the transpose of the component
/// matrix. The defining convention is `beta(pi_sharp alpha) = pi(alpha, beta)`.
pub fn pi_sharp_matrix(p: &KVector) -> Matrix {
    p.bivector_matrix().transpose()
}

/// The vector field `pi_sharp(alpha)`.
pub fn pi_sharp(p: &KVector, alpha: &KForm) -> VectorField {
    assert_eq!(alpha.degree(), 1, "pi_sharp needs a 1-form");
    p.chart().assert_same(alpha.chart());
    let m = pi_sharp_matrix(p);
    VectorField::from_components(p.chart(), m.apply(&alpha.one_form_components()))
}

/// Poisson bracket `{f, g} = pi(df, dg)`.
pub fn poisson_bracket(p: &KVector, f: &RatFunc, g: &RatFunc) -> RatFunc {
    let chart = p.chart().clone();
    let df: Vec<RatFunc> = (0..chart.dim()).map(|i| f.partial_derivative(i).unwrap()).collect();
    let dg: Vec<RatFunc> = (0..chart.dim()).map(|i| g.partial_derivative(i).unwrap()).collect();
    p.inner.contract(&df).contract(&dg).coeff(&[])
}

/// Jacobiator of the Poisson bracket: `{f,{g,h}} + {g,{h,f}} + {h,{f,g}}`.
/// Vanishes for all triples exactly when the bivector is Poisson.
pub fn poisson_jacobiator(p: &KVector, f: &RatFunc, g: &RatFunc, h: &RatFunc) -> RatFunc {
    let a = poisson_bracket(p, f, &poisson_bracket(p, g, h));
    let b = poisson_bracket(p, g, &poisson_bracket(p, h, f));
    let c = poisson_bracket(p, h, &poisson_bracket(p, f, g));
    &(&a + &b) + &c
}

/// Schouten bracket of two bivectors (a 3-vector). With `P^{ij}` the
/// component matrices,
/// `[p,q]^{ijk} = sum_l (p^{il} d_l q^{jk} + p^{jl} d_l q^{ki} + p^{kl} d_l q^{ij} + (p <-> q))`
/// normalized so that `[pi,pi](dx_i,dx_j,dx_k)` is twice the Poisson
/// jacobiator on coordinates. Other grades are out of scope.
pub fn schouten_bibivector(p: &KVector, q: &KVector) -> Result<KVector> {
    if p.degree() != 2 || q.degree() != 2 {
        return Err(Error::Unsupported("the Schouten bracket is implemented for bivectors only".into()));
    }
    p.chart().ensure_same(q.chart())?;
    let chart = p.chart().clone();
    let n = chart.dim();
    let pm = p.bivector_matrix();
    let qm = q.bivector_matrix();
    let entry = |m: &Matrix, i: usize, j: usize| m.at(i, j).clone();
    let mut out = Alt::zero(&chart, 3);
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let mut acc = RatFunc::zero(&chart);
                for l in 0..n {
                    // p^{il} d_l q^{jk} + p^{jl} d_l q^{ki} + p^{kl} d_l q^{ij}
                    let cyc = |a: &Matrix, b: &Matrix| {
                        let t1 = &entry(a, i, l) * &entry(b, j, k).partial_derivative(l).unwrap();
                        let t2 = &entry(a, j, l) * &entry(b, k, i).partial_derivative(l).unwrap();
                        let t3 = &entry(a, k, l) * &entry(b, i, j).partial_derivative(l).unwrap();
                        &(&t1 + &t2) + &t3
                    };
                    acc = &acc + &cyc(&pm, &qm);
                    acc = &acc + &cyc(&qm, &pm);
                }
                out.insert(vec![i, j, k], acc);
            }
        }
    }
    Ok(KVector { inner: out })
}

/// Inverse of a nondegenerate 2-form: the bivector with
/// `pi_sharp = omega_flat^{-1}`. The composition is re-verified symbolically.
pub fn invert_two_form(w: &KForm) -> Result<KVector> {
    assert_eq!(w.degree(), 2, "invert_two_form needs a 2-form");
    let chart = w.chart().clone();
    if chart.dim() % 2 != 0 {
        return Err(Error::Degenerate("no nondegenerate 2-form on an odd-dimensional chart".into()));
    }
    let flat = omega_flat_matrix(w);
    let sharp = flat.inverse().map_err(|_| Error::Degenerate("the 2-form is degenerate".into()))?;
    if !sharp.mul(&flat).sub(&Matrix::identity(&chart, chart.dim())).is_zero() {
        return Err(Error::Degenerate("inverse verification failed".into()));
    }
    // sharp[j][i] = pi^{ij}; the component matrix is its transpose.
    Ok(KVector::from_bivector_matrix(&sharp.transpose()))
}

/// Inverse of a nondegenerate bivector: the 2-form with
/// `omega_flat = pi_sharp^{-1}`.
pub fn invert_bivector(p: &KVector) -> Result<KForm> {
    assert_eq!(p.degree(), 2, "invert_bivector needs a bivector");
    let chart = p.chart().clone();
    if chart.dim() % 2 != 0 {
        return Err(Error::Degenerate("no nondegenerate bivector on an odd-dimensional chart".into()));
    }
    let sharp = pi_sharp_matrix(p);
    let flat = sharp.inverse().map_err(|_| Error::Degenerate("the bivector is degenerate".into()))?;
    if !flat.mul(&sharp).sub(&Matrix::identity(&chart, chart.dim())).is_zero() {
        return Err(Error::Degenerate("inverse verification failed".into()));
    }
    // flat[j][i] = omega_{ij}; the component matrix is its transpose.
    Ok(KForm::from_two_form_matrix(&flat.transpose()))
}

impl fmt::Display for KVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.inner.format("∂", "∧"))
    }
}

impl fmt::Debug for KVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KVector[deg {}]({self})", self.degree())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensorcalc::form::wedge;

    fn chart3() -> Chart {
        Chart::new(&["x", "y", "z"]).unwrap()
    }

    fn var(c: &Chart, i: usize) -> RatFunc {
        RatFunc::var(c, i).unwrap()
    }

    fn dxdy(c: &Chart) -> KVector {
        KVector::from_coeffs(c, 2, [(vec![0, 1], RatFunc::one(c))])
    }

    #[test]
    fn pi_sharp_convention() {
        // pi = ∂x∧∂y: dy(pi_sharp dx) = pi(dx, dy) = 1 and dx(pi_sharp dx) = 0.
        let c = chart3();
        let p = dxdy(&c);
        let alpha = KForm::coordinate(&c, 0).unwrap();
        let v = pi_sharp(&p, &alpha);
        assert_eq!(v, VectorField::coordinate(&c, 1).unwrap());
        // zero bivector
        assert!(pi_sharp(&KVector::zero(&c, 2), &alpha).is_zero());
        // pointwise linearity
        let f = var(&c, 2);
        assert_eq!(pi_sharp(&p, &alpha.scale(&f)), v.scale(&f));
    }

    #[test]
    fn schouten_constant_bivector_vanishes() {
        let c = chart3();
        let p = dxdy(&c);
        assert!(schouten_bibivector(&p, &p).unwrap().is_zero());
    }

    #[test]
    fn schouten_on_two_dimensional_chart_vanishes() {
        let c = Chart::new(&["x", "y"]).unwrap();
        let x = var(&c, 0);
        let p = KVector::from_coeffs(&c, 2, [(vec![0, 1], &x * &x)]);
        assert!(schouten_bibivector(&p, &p).unwrap().is_zero());
    }

    #[test]
    fn schouten_matches_jacobiator_for_the_cyclic_bivector() {
        // pi = x ∂x∧∂y + y ∂y∧∂z + z ∂z∧∂x on R^3 has jacobiator x + y + z.
        let c = chart3();
        let p = KVector::from_coeffs(
            &c,
            2,
            [
                (vec![0, 1], var(&c, 0)),
                (vec![1, 2], var(&c, 1)),
                (vec![0, 2], -&var(&c, 2)),
            ],
        );
        let jac = poisson_jacobiator(&p, &var(&c, 0), &var(&c, 1), &var(&c, 2));
        let expect = &(&var(&c, 0) + &var(&c, 1)) + &var(&c, 2);
        assert!(jac.is_equal(&expect));
        let sch = schouten_bibivector(&p, &p).unwrap();
        assert!(!sch.is_zero());
        // normalization: twice the jacobiator on coordinates
        assert!(sch.coeff(&[0, 1, 2]).is_equal(&(&expect + &expect)));
    }

    #[test]
    fn two_form_inversion_round_trip() {
        let c = Chart::new(&["x", "y"]).unwrap();
        let w = wedge(&KForm::coordinate(&c, 0).unwrap(), &KForm::coordinate(&c, 1).unwrap());
        let p = invert_two_form(&w).unwrap();
        // pi_sharp ∘ omega_flat = identity on coordinate fields
        let m = pi_sharp_matrix(&p).mul(&omega_flat_matrix(&w));
        assert_eq!(m, Matrix::identity(&c, 2));
        let w_back = invert_bivector(&p).unwrap();
        assert_eq!(w_back, w);
    }

    #[test]
    fn inversion_with_function_coefficient() {
        // omega = x dx∧dy inverts with denominator x.
        let c = Chart::new(&["x", "y"]).unwrap();
        let x = var(&c, 0);
        let w = KForm::from_coeffs(&c, 2, [(vec![0, 1], x.clone())]);
        let p = invert_two_form(&w).unwrap();
        let got = p.coeff(&[0, 1]);
        // pi = -(1/x) ∂x∧∂y under the stated conventions
        assert!(got.is_equal(&-&x.invert().unwrap()));
        // and the composition is the identity
        let m = pi_sharp_matrix(&p).mul(&omega_flat_matrix(&w));
        assert_eq!(m, Matrix::identity(&c, 2));
    }

    #[test]
    fn degenerate_and_odd_rejected() {
        let c3 = chart3();
        assert!(matches!(invert_two_form(&KForm::zero(&c3, 2)), Err(Error::Degenerate(_))));
        let c2 = Chart::new(&["x", "y"]).unwrap();
        assert!(matches!(invert_two_form(&KForm::zero(&c2, 2)), Err(Error::Degenerate(_))));
    }
}
