//! Exact computations with generalized Verma modules over the exceptional
//! Lie superalgebra E(5,10).

pub mod acceptance;
pub mod e510;
pub mod exact;
pub mod models;
pub mod search;
pub mod sl5;
pub mod uea;
pub mod verma;
