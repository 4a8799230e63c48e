pub mod algebra;
pub mod bialgebra;
pub mod cohomology;
pub mod error;
pub mod fixtures;
pub mod law;
pub mod linalg;
pub mod operators;
pub mod rep;
pub mod scalar;
pub mod suites;
pub mod yang_baxter;
