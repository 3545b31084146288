//! Exact symbolic verification of generalized almost subtangent structures
//! on polynomial coordinate charts.
//!
//! The crate is organized in layers:
//!
//! - [`coeffring`]: exact rationals, multivariate polynomials, rational
//!   functions, and the coefficient-expression parser.
//! - [`tensorcalc`]: vector fields, differential forms, multivector fields
//!   and every bracket and derivative the checkers need (exterior and Lie
//!   derivatives, interior products, Lie/Schouten/Koszul/Courant brackets,
//!   musical maps, Nijenhuis torsion, pullbacks along polynomial maps).
//! - [`subtangent`]: generalized almost subtangent structures, the direct
//!   integrability test, the four structural conditions S1-S4, Hitchin
//!   pairs and the related lemma cross-checks.
//! - [`algebroid`]: the cotangent Lie algebroid of a bivector and IM-form
//!   verification.
//! - [`pairgroupoid`]: pair groupoids over a chart, multiplicative forms and
//!   tensors, and the groupoid-level theorem instances.
//!
//! All arithmetic is exact; checkers return [`report::ConditionReport`]
//! values carrying symbolic witnesses for every failure.

pub mod algebroid;
pub mod coeffring;
pub mod error;
pub mod pairgroupoid;
pub mod random;
pub mod report;
pub mod subtangent;
pub mod tensorcalc;

pub use error::{Error, Result};
pub use report::{CheckName, ConditionReport, Witness};
