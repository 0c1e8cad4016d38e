//! The Lie superalgebra `Ẽ(5,10) = W_5 ⋉ Ω²(5)` and its subalgebra
//! `E(5,10) = S_5 ⊕ Ω²_cl(5)`.
//!
//! Grading: `deg x_i = 2`, `deg ∂_i = −2`, `deg d_ij = −1`.

mod algebra;
mod forms;
mod graded;
mod monomial;
pub mod random;

pub use algebra::{bracket, field_degree, form_degree, jacobi_defect, Parity, Poly5, SuperElement};
pub use forms::{FourForm, ThreeForm, TwoForm, VectorField};
pub use graded::{cartan, g0, g1, g1_coordinates, g_minus1, g_minus2};
pub use monomial::{epsilon, pair_index, permutation_sign, EpsilonTable, Monomial5, N, PAIRS};
