//! (1,1)-tensor fields: endomorphisms of the tangent bundle.

use std::fmt;

use super::form::KForm;
use super::matrix::Matrix;
use super::vector::VectorField;
use crate::coeffring::{Chart, RatFunc};
use crate::error::Result;

/// An endomorphism of the tangent bundle, stored as the matrix whose column
/// `j` holds the components of the image of the coordinate field `e_j`.
/// Its dual acts on 1-forms by `(a* xi)(X) = xi(a X)`, i.e. by the transpose
/// on coefficient vectors.
#[derive(Clone, PartialEq, Eq)]
pub struct Endo {
    matrix: Matrix,
}

impl Endo {
    pub fn zero(chart: &Chart) -> Endo {
        Endo { matrix: Matrix::zero(chart, chart.dim(), chart.dim()) }
    }

    pub fn identity(chart: &Chart) -> Endo {
        Endo { matrix: Matrix::identity(chart, chart.dim()) }
    }

    /// `f` times the identity.
    pub fn scalar(chart: &Chart, f: &RatFunc) -> Endo {
        Endo { matrix: Matrix::identity(chart, chart.dim()).scale(f) }
    }

    pub fn from_matrix(matrix: Matrix) -> Endo {
        assert_eq!(matrix.rows(), matrix.cols(), "endomorphism matrix must be square");
        assert_eq!(matrix.rows(), matrix.chart().dim(), "matrix size must match the chart dimension");
        Endo { matrix }
    }

    /// Build by columns: `columns[j]` is the image of the j-th coordinate
    /// field.
    pub fn from_columns(chart: &Chart, columns: Vec<VectorField>) -> Endo {
        assert_eq!(columns.len(), chart.dim(), "column count mismatch");
        let m = Matrix::from_fn(chart, chart.dim(), chart.dim(), |i, j| {
            columns[j].component(i).clone()
        });
        Endo { matrix: m }
    }

    pub fn chart(&self) -> &Chart {
        self.matrix.chart()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn add(&self, other: &Endo) -> Endo {
        Endo { matrix: self.matrix.add(&other.matrix) }
    }

    pub fn sub(&self, other: &Endo) -> Endo {
        Endo { matrix: self.matrix.sub(&other.matrix) }
    }

    pub fn neg(&self) -> Endo {
        Endo { matrix: self.matrix.neg() }
    }

    pub fn scale(&self, f: &RatFunc) -> Endo {
        Endo { matrix: self.matrix.scale(f) }
    }

    /// Apply to a vector field.
    pub fn apply(&self, x: &VectorField) -> VectorField {
        self.chart().assert_same(x.chart());
        VectorField::from_components(self.chart(), self.matrix.apply(x.components()))
    }

    /// Apply the dual to a 1-form: transpose action on coefficients.
    pub fn dual_apply(&self, xi: &KForm) -> KForm {
        assert_eq!(xi.degree(), 1, "dual_apply needs a 1-form");
        self.chart().assert_same(xi.chart());
        let comps = self.matrix.transpose().apply(&xi.one_form_components());
        KForm::from_coeffs(
            self.chart(),
            1,
            comps.into_iter().enumerate().map(|(i, c)| (vec![i], c)),
        )
    }

    /// Composition `self ∘ other` (matrix product).
    pub fn compose(&self, other: &Endo) -> Endo {
        Endo { matrix: self.matrix.mul(&other.matrix) }
    }

    /// The matrix transpose, i.e. the dual map written on coefficient
    /// vectors of 1-forms.
    pub fn transpose(&self) -> Endo {
        Endo { matrix: self.matrix.transpose() }
    }
}

/// Pullback of a 2-form through an endomorphism in both slots:
/// `(a* w)(X, Y) = w(aX, aY)`, with component matrix `A^T W A`.
pub fn pull_two_form_by_endo(a: &Endo, w: &KForm) -> KForm {
    assert_eq!(w.degree(), 2, "pull_two_form_by_endo needs a 2-form");
    a.chart().assert_same(w.chart());
    let m = a.matrix().transpose().mul(&w.two_form_matrix()).mul(a.matrix());
    KForm::from_two_form_matrix(&m)
}

/// The twisted form `w_a(X, Y) = w(aX, Y)`. Only alternating when `w` and
/// `a` commute (`w(aX, Y) = w(X, aY)`); otherwise `NotAlternating` with a
/// witness vector on which `w(aX, X)` is nonzero.
pub fn omega_a(a: &Endo, w: &KForm) -> Result<KForm> {
    assert_eq!(w.degree(), 2, "omega_a needs a 2-form");
    a.chart().assert_same(w.chart());
    let chart = a.chart().clone();
    let n = chart.dim();
    let m = a.matrix().transpose().mul(&w.two_form_matrix());
    // symmetric part: s = (m + m^T)/2; any nonzero entry yields a witness
    for i in 0..n {
        let diag = m.at(i, i);
        if !diag.is_zero() {
            return Err(crate::error::Error::NotAlternating {
                witness: format!("omega(a ∂{0}, ∂{0}) = {1}", chart.name(i), diag),
            });
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let s = &(m.at(i, j) + m.at(j, i));
            if !s.is_zero() {
                return Err(crate::error::Error::NotAlternating {
                    witness: format!(
                        "omega(a(∂{0}+∂{1}), ∂{0}+∂{1}) = {2}",
                        chart.name(i),
                        chart.name(j),
                        s
                    ),
                });
            }
        }
    }
    Ok(KForm::from_two_form_matrix(&m))
}

/// Whether `w(aX, Y) = w(X, aY)` holds identically (`A^T W = W A` on
/// component matrices); returns the first failing coordinate pair.
pub fn commutes_with_form(a: &Endo, w: &KForm) -> Option<(usize, usize, RatFunc)> {
    let wm = w.two_form_matrix();
    let lhs = a.matrix().transpose().mul(&wm);
    let rhs = wm.mul(a.matrix());
    let n = a.chart().dim();
    for i in 0..n {
        for j in 0..n {
            let d = lhs.at(i, j) - rhs.at(i, j);
            if !d.is_zero() {
                return Some((i, j, d));
            }
        }
    }
    None
}

impl fmt::Display for Endo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.matrix)
    }
}

impl fmt::Debug for Endo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Endo({:?})", self.matrix)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensorcalc::form::wedge;

    fn chart2() -> Chart {
        Chart::new(&["x", "y"]).unwrap()
    }

    fn shear(c: &Chart) -> Endo {
        // ∂x -> ∂y, ∂y -> 0
        Endo::from_columns(
            c,
            vec![VectorField::coordinate(c, 1).unwrap(), VectorField::zero(c)],
        )
    }

    #[test]
    fn dual_pairing_on_basis() {
        let c = chart2();
        let a = shear(&c);
        // a*(dy) = dx since (a* dy)(∂x) = dy(a ∂x) = dy(∂y) = 1
        let dy = KForm::coordinate(&c, 1).unwrap();
        assert_eq!(a.dual_apply(&dy), KForm::coordinate(&c, 0).unwrap());
        assert!(Endo::zero(&c).dual_apply(&dy).is_zero());
    }

    #[test]
    fn transpose_of_composition_reverses() {
        let c = chart2();
        let a = shear(&c);
        let x = RatFunc::var(&c, 0).unwrap();
        let b = Endo::scalar(&c, &x);
        let lhs = a.compose(&b).transpose();
        let rhs = b.transpose().compose(&a.transpose());
        assert_eq!(lhs.matrix(), rhs.matrix());
    }

    #[test]
    fn pull_two_form_examples() {
        let c = chart2();
        let w = wedge(&KForm::coordinate(&c, 0).unwrap(), &KForm::coordinate(&c, 1).unwrap());
        // a = c·id pulls omega back to c^2 omega
        let two = RatFunc::int(&c, 2);
        let a = Endo::scalar(&c, &two);
        assert_eq!(pull_two_form_by_endo(&a, &w), w.scale(&RatFunc::int(&c, 4)));
        assert!(pull_two_form_by_endo(&Endo::zero(&c), &w).is_zero());
        // rank-one image kills any 2-form
        assert!(pull_two_form_by_endo(&shear(&c), &w).is_zero());
    }

    #[test]
    fn omega_a_examples() {
        let c = chart2();
        let w = wedge(&KForm::coordinate(&c, 0).unwrap(), &KForm::coordinate(&c, 1).unwrap());
        let p = RatFunc::var(&c, 0).unwrap();
        let wa = omega_a(&Endo::scalar(&c, &p), &w).unwrap();
        assert_eq!(wa, w.scale(&p));
        assert_eq!(omega_a(&Endo::identity(&c), &w).unwrap(), w);
        // the shear does not commute with omega: omega(a ∂x, ∂x) = -1
        match omega_a(&shear(&c), &w) {
            Err(crate::error::Error::NotAlternating { witness }) => {
                assert!(witness.contains("-1"), "witness was {witness}");
            }
            other => panic!("expected NotAlternating, got {other:?}"),
        }
    }
}
