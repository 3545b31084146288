//! Tensor fields on a single polynomial chart and the brackets and
//! derivatives built from them.
//!
//! Conventions, fixed once and used everywhere:
//!
//! - `beta(pi_sharp(alpha)) = pi(alpha, beta)` for a bivector `pi`;
//! - `omega_flat(X)(Y) = omega(X, Y)` for a 2-form `omega`;
//! - `i_{X∧Y} u = u(X, Y, ...) = i_Y(i_X(u))`;
//! - forms and multivectors evaluate by the determinant convention (no
//!   factorial weights);
//! - the Nijenhuis torsion is `[aX,aY] - a[aX,Y] - a[X,aY] + a^2[X,Y]`.

mod alt;
mod bracket;
mod endo;
mod form;
mod kvector;
mod matrix;
mod polymap;
mod vector;

pub use crate::coeffring::Chart;

pub use bracket::{
    courant_bracket, double_contraction_identity_defect, koszul_bracket, nijenhuis, GSection,
};
pub use endo::{commutes_with_form, omega_a, pull_two_form_by_endo, Endo};
pub use form::{
    evaluate, exterior_d, interior, interior_2, lie_derivative, omega_flat, omega_flat_matrix,
    wedge, KForm,
};
pub use kvector::{
    invert_bivector, invert_two_form, pi_sharp, pi_sharp_matrix, poisson_bracket,
    poisson_jacobiator, schouten_bibivector, wedge_kvector, KVector,
};
pub use matrix::Matrix;
pub use polymap::PolyMap;
pub use vector::{lie_bracket, VectorField};

/// The flat-map matrix of a 2-form `sigma`, `(sigma_flat X)_j = sum_i
/// S[j][i] X^i`; shares the transpose convention of
/// [`omega_flat_matrix`].
pub fn sigma_flat_matrix(sigma: &KForm) -> Matrix {
    omega_flat_matrix(sigma)
}
