//! Generalized almost subtangent structures and their block identities.

use crate::coeffring::{Chart, RatFunc};
use crate::report::{CheckName, ConditionReport};
use crate::tensorcalc::{
    pi_sharp, pi_sharp_matrix, sigma_flat_matrix, Endo, GSection, KForm, KVector, Matrix,
};

/// The endomorphism of the generalized tangent bundle built from a
/// (1,1)-tensor `a`, a bivector `pi` and a 2-form `sigma`, acting in block
/// form as `(X, xi) -> (aX + pi# xi, sigma_flat X - a* xi)`.
///
/// The square-zero block identities are testable via
/// [`check_square_zero`], not assumed.
#[derive(Clone)]
pub struct GASStructure {
    chart: Chart,
    a: Endo,
    pi: KVector,
    sigma: KForm,
}

impl GASStructure {
    pub fn new(a: Endo, pi: KVector, sigma: KForm) -> GASStructure {
        let chart = a.chart().clone();
        chart.assert_same(pi.chart());
        chart.assert_same(sigma.chart());
        assert_eq!(pi.degree(), 2, "pi must be a bivector");
        assert_eq!(sigma.degree(), 2, "sigma must be a 2-form");
        GASStructure { chart, a, pi, sigma }
    }

    pub fn zero(chart: &Chart) -> GASStructure {
        GASStructure::new(Endo::zero(chart), KVector::zero(chart, 2), KForm::zero(chart, 2))
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn a(&self) -> &Endo {
        &self.a
    }

    pub fn pi(&self) -> &KVector {
        &self.pi
    }

    pub fn sigma(&self) -> &KForm {
        &self.sigma
    }

    pub fn pi_sharp_matrix(&self) -> Matrix {
        pi_sharp_matrix(&self.pi)
    }

    pub fn sigma_flat_matrix(&self) -> Matrix {
        sigma_flat_matrix(&self.sigma)
    }

    /// The block action on a generalized section.
    pub fn apply_j(&self, s: &GSection) -> GSection {
        self.chart.assert_same(s.chart());
        let vec = self.a.apply(&s.vec).add(&pi_sharp(&self.pi, &s.form));
        let flat = self.sigma_flat_matrix().apply(s.vec.components());
        let sigma_part = KForm::from_coeffs(
            &self.chart,
            1,
            flat.into_iter().enumerate().map(|(i, c)| (vec![i], c)),
        );
        let form = sigma_part.sub(&self.a.dual_apply(&s.form));
        GSection::new(vec, form)
    }

    /// The coordinate generator sections `(e_i, 0)` and `(0, dx_j)`, with
    /// printable descriptions.
    pub fn generator_sections(&self) -> Vec<(String, GSection)> {
        let n = self.chart.dim();
        let mut out = Vec::with_capacity(2 * n);
        for i in 0..n {
            let v = crate::tensorcalc::VectorField::coordinate(&self.chart, i).unwrap();
            out.push((format!("(∂{}, 0)", self.chart.name(i)), GSection::from_vector(v)));
        }
        for j in 0..n {
            let f = KForm::coordinate(&self.chart, j).unwrap();
            out.push((format!("(0, d{})", self.chart.name(j)), GSection::from_form(f)));
        }
        out
    }
}

/// Report nonzero entries of a matrix-identity defect.
pub(crate) fn report_matrix_defect(report: &mut ConditionReport, label: &str, defect: &Matrix) {
    for i in 0..defect.rows() {
        for j in 0..defect.cols() {
            let e = defect.at(i, j);
            if !e.is_zero() {
                report.add_witness(format!("{label} entry ({i}, {j})"), e.to_string());
            }
        }
    }
}

/// Verify the three block identities of a square-zero endomorphism:
/// `a^2 + pi# sigma_flat = 0`, `a pi# = pi# a*`, `sigma_flat a = a* sigma_flat`
/// (the fourth block is the transpose of the first). Failures are verdicts,
/// not errors.
pub fn check_square_zero(s: &GASStructure) -> ConditionReport {
    let mut report = ConditionReport::new(CheckName::J2);
    let a = s.a().matrix();
    let pi = s.pi_sharp_matrix();
    let sigma = s.sigma_flat_matrix();
    let aa = a.mul(a);
    report_matrix_defect(&mut report, "a² + π♯σ♯", &aa.add(&pi.mul(&sigma)));
    report_matrix_defect(&mut report, "aπ♯ − π♯a*", &a.mul(&pi).sub(&pi.mul(&a.transpose())));
    report_matrix_defect(&mut report, "σ♯a − a*σ♯", &sigma.mul(a).sub(&a.transpose().mul(&sigma)));
    report
}

/// Convenience: a structure is usable by the integrability checkers exactly
/// when the block identities hold.
pub fn is_square_zero(s: &GASStructure) -> bool {
    check_square_zero(s).passed()
}

pub(crate) fn one_form_from_components(chart: &Chart, comps: Vec<RatFunc>) -> KForm {
    KForm::from_coeffs(chart, 1, comps.into_iter().enumerate().map(|(i, c)| (vec![i], c)))
}
