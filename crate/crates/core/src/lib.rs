pub mod algebra;
pub mod error;
pub mod law;
pub mod linear;
pub mod scalar;
pub mod coalgebra;
pub mod bialgebra;
pub mod homdef;
pub mod sigma;
pub mod catalog;
pub mod random;
pub mod report;
pub mod runner;
