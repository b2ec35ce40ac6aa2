//! Finite abelian groups, integer lattices and the circle group.

pub mod circle;
pub mod constructions;
pub mod descriptor;
pub mod group;
pub mod intmat;
pub mod snf;

pub use circle::{circle_mul, circle_pow, CircleValue};
pub use constructions::{exterior_power, tensor_product, tor_group, ExteriorPower, LatticeTensor, TensorProduct, TorGroup};
pub use descriptor::parse_group;
pub use group::{quotient_group, AbHom, FinAbGroup, GroupElement, Presentation};
pub use intmat::IntMatrix;
pub use snf::{smith_normal_form, solve_mod_one, SmithDecomposition};
