//! Exact rational scalars, sparse vectors and matrices, and kernel computation.

mod lincomb;
mod nullspace;
mod rational;
mod sparse;

pub use lincomb::LinComb;
pub use nullspace::{nullspace, rank, rref, Echelon};
pub use rational::{ParseRationalError, Rational};
pub use sparse::{SparseMatrix, SparseVec};
