//! Root data, the center `Z(G) = (P/Q)^`, and the twisting invariants.

pub mod center;
pub mod datum;
pub mod twist;

pub use center::{abs_hom, weight_l, CenterElement, TauTuple};
pub use datum::{Component, RootDatum};
pub use twist::{
    f_conjugation_check, f_conjugation_check_with, f_from_tau, iso_equivalent, phi_tau, phi_tau_with,
    su_n_class_exponent, su_n_theta_closed_form, tau_character, theta_of_tau, theta_report, upsilon,
    ConjugationReport, ConjugationWitness, ThetaReport, UpsilonReport, PHI_IS_CONJUGATE,
};

/// A weight in the basis of fundamental weights.
pub type Weight = Vec<i64>;
