pub mod abelian;
pub mod cohomology;
pub mod cyclotomic;
pub mod error;
pub mod presentation;
pub mod qgroup;
pub mod roots;
pub mod spectrum;

pub use error::{Error, Result};
