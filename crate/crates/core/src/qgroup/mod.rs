//! Exact matrix representations of `U_q(g)` and of its extension by central
//! unitaries `C_i`, with Hopf-axiom checks for the twisted coproduct.

pub mod rep;
pub mod twisted;

pub use rep::{
    check_relations, check_relations_for, check_q, fundamental_rep, parse_q, q_binomial, q_number, wedge_rep, Generators,
    RelationFailure, WeightedRep,
};
pub use twisted::{
    antipode_check, delta_f_comparison, hopf_check, hopf_check_with, twisted_tensor, twisted_tensor_with,
    type_a_hopf_suite, AntipodeMatrices, AxiomResult, FCoproduct, HopfReport, TauRep, TypeAHopfReport,
};
