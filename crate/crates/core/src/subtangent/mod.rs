//! Generalized almost subtangent structures: the block endomorphism, the
//! direct integrability test, the structural conditions S1-S4, Hitchin
//! pairs and the lemma cross-checks.

mod conditions;
mod hitchin;
mod structure;

pub use conditions::{
    check_integrability_direct, check_proposition1, check_s1, check_s2, check_s3, check_s4,
    integrability_defect, s2_bracket_defect,
};
pub use hitchin::{
    check_hitchin_pair, check_symplectic_subtangent, lemma_s1_iff_closed, lemma_s2_iff_hitchin,
    structure_from_hitchin_pair, symplectic_data, torsion_contraction_identity,
    torsion_contraction_probe, twist_of_hitchin_pair, HitchinPair,
};
pub use structure::{check_square_zero, is_square_zero, GASStructure};
