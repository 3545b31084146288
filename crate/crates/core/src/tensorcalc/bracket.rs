//! The brackets: Koszul bracket on 1-forms, Courant bracket on generalized
//! sections, Nijenhuis torsion of a (1,1)-tensor, and the contraction
//! identity used to cross-check them.

use std::fmt;

use super::endo::Endo;
use super::form::{exterior_d, interior, interior_2, lie_derivative, KForm};
use super::kvector::{pi_sharp, KVector};
use super::vector::{lie_bracket, VectorField};
use crate::coeffring::{Chart, RatFunc, Rational};
use crate::error::Result;

/// A section of the generalized tangent bundle: a vector field paired with a
/// 1-form.
#[derive(Clone, PartialEq, Eq)]
pub struct GSection {
    pub vec: VectorField,
    pub form: KForm,
}

impl GSection {
    pub fn new(vec: VectorField, form: KForm) -> GSection {
        assert_eq!(form.degree(), 1, "the form part of a section has degree 1");
        vec.chart().assert_same(form.chart());
        GSection { vec, form }
    }

    pub fn from_vector(vec: VectorField) -> GSection {
        let form = KForm::zero(vec.chart(), 1);
        GSection { vec, form }
    }

    pub fn from_form(form: KForm) -> GSection {
        let vec = VectorField::zero(form.chart());
        GSection::new(vec, form)
    }

    pub fn zero(chart: &Chart) -> GSection {
        GSection { vec: VectorField::zero(chart), form: KForm::zero(chart, 1) }
    }

    pub fn chart(&self) -> &Chart {
        self.vec.chart()
    }

    pub fn is_zero(&self) -> bool {
        self.vec.is_zero() && self.form.is_zero()
    }

    pub fn add(&self, other: &GSection) -> GSection {
        GSection { vec: self.vec.add(&other.vec), form: self.form.add(&other.form) }
    }

    pub fn sub(&self, other: &GSection) -> GSection {
        GSection { vec: self.vec.sub(&other.vec), form: self.form.sub(&other.form) }
    }

    pub fn neg(&self) -> GSection {
        GSection { vec: self.vec.neg(), form: self.form.neg() }
    }

    pub fn scale(&self, f: &RatFunc) -> GSection {
        GSection { vec: self.vec.scale(f), form: self.form.scale(f) }
    }
}

impl fmt::Display for GSection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.vec, self.form)
    }
}

impl fmt::Debug for GSection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GSection{self}")
    }
}

/// Koszul bracket on 1-forms:
/// `[a, b]_pi = L_{pi# a} b - L_{pi# b} a - d(pi(a, b))`.
pub fn koszul_bracket(p: &KVector, alpha: &KForm, beta: &KForm) -> KForm {
    assert_eq!(alpha.degree(), 1, "koszul_bracket needs 1-forms");
    assert_eq!(beta.degree(), 1, "koszul_bracket needs 1-forms");
    let first = lie_derivative(&pi_sharp(p, alpha), beta);
    let second = lie_derivative(&pi_sharp(p, beta), alpha);
    let pairing = p.eval_on_one_forms(alpha, beta);
    let third = exterior_d(&KForm::scalar(pairing));
    first.sub(&second).sub(&third)
}

/// Courant bracket of generalized sections:
/// `[(X,xi),(Y,eta)] = ([X,Y], L_X eta - L_Y xi - 1/2 d(i_X eta - i_Y xi))`.
pub fn courant_bracket(a: &GSection, b: &GSection) -> GSection {
    a.chart().assert_same(b.chart());
    let chart = a.chart().clone();
    let vec = lie_bracket(&a.vec, &b.vec);
    let lie_part = lie_derivative(&a.vec, &b.form).sub(&lie_derivative(&b.vec, &a.form));
    let pair = interior(&a.vec, &b.form)
        .expect("degree 1")
        .sub(&interior(&b.vec, &a.form).expect("degree 1"));
    let half = RatFunc::constant(&chart, Rational::new(1.into(), 2.into()));
    let exact_part = exterior_d(&KForm::scalar(pair.as_scalar())).scale(&half);
    GSection::new(vec, lie_part.sub(&exact_part))
}

/// Nijenhuis torsion with the standard convention:
/// `N_a(X,Y) = [aX, aY] - a[aX, Y] - a[X, aY] + a^2 [X, Y]`.
pub fn nijenhuis(a: &Endo, x: &VectorField, y: &VectorField) -> VectorField {
    let ax = a.apply(x);
    let ay = a.apply(y);
    let t1 = lie_bracket(&ax, &ay);
    let t2 = a.apply(&lie_bracket(&ax, y));
    let t3 = a.apply(&lie_bracket(x, &ay));
    let t4 = a.apply(&a.apply(&lie_bracket(x, y)));
    t1.sub(&t2).sub(&t3).add(&t4)
}

/// Defect of the contraction identity
/// `i_{X∧Y}(d s) = L_X(i_Y s) - L_Y(i_X s) + d(i_{X∧Y} s) - i_{[X,Y]} s`
/// for a 2-form `s`; identically zero for all inputs.
pub fn double_contraction_identity_defect(
    x: &VectorField,
    y: &VectorField,
    sigma: &KForm,
) -> Result<KForm> {
    assert_eq!(sigma.degree(), 2, "the contraction identity is stated for 2-forms");
    let lhs = interior_2(x, y, &exterior_d(sigma))?;
    let t1 = lie_derivative(x, &interior(y, sigma)?);
    let t2 = lie_derivative(y, &interior(x, sigma)?);
    let t3 = exterior_d(&interior_2(x, y, sigma)?);
    let t4 = interior(&lie_bracket(x, y), sigma)?;
    Ok(lhs.sub(&t1.sub(&t2).add(&t3).sub(&t4)))
}
