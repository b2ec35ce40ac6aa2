//! Group cohomology of finite abelian groups with coefficients in `T = R/Z`.

pub mod chain;
pub mod characters;
pub mod classify;
pub mod cochain;
pub mod descriptor;
pub mod generators;
pub mod lattice;

pub use chain::{chain_boundary, pair, BarChain};
pub use characters::{alternation_pair, is_character_coboundary, is_lattice_character_coboundary, LatticeCochain};
pub use classify::{classify_3cocycle, classify_unchecked, lifts_to_coboundary, H3Class};
pub use cochain::{Cochain, CocycleReport, Evaluator};
pub use descriptor::{cochain_to_json, parse_cocycle};
pub use generators::{cycle_theta, generator_phi, omega, Generator};
pub use lattice::{lconstruction, tor_class_map, tor_class_map_with, Gamma0Character, LatticeFunction2};
