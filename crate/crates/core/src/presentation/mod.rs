//! The presentation of `C[SU_q^τ(n)]`, derived in the crossed product
//! `C[SU_q(n)] ⋊ T̂_τ` with `q` and `τ` formal.

pub mod crossed;
pub mod emit;
pub mod relations;
pub mod scalar;

pub use crossed::{eaction_scalar, CrossedPoly, CrossedTerm, Letter};
pub use emit::{emit_presentation, OutCoeff, Presentation};
pub use relations::{
    check_all_relations, check_presentation, involution_minor, inversion_number, m_multiindex, m_multiindex_checked, permutations, qdet_check,
    qdet_check_with, qdet_relation, qdet_row, quadratic_relations, relation_census, relation_residual, twisted_relation,
    twisted_relation_residual, untwisted_relation, PresentationCheck, QdetReport, QdetRow, RelTerm, Relation, RelationKind,
};
pub use scalar::{Monomial, TauScalar};
