//! Finite-dimensional `sl_5`-modules: irreducibles `F(λ)`, tensor products,
//! highest-weight vectors and equivariant maps.
//!
//! Chevalley generators: `e_i = E_{i,i+1}`, `f_i = E_{i+1,i}`,
//! `h_i = E_ii − E_{i+1,i+1}`, where `E_ab` is the field `x_a ∂_b`.

mod build;
mod cache;
mod module;
pub mod poly;
mod weight;

pub use build::{build_irreducible, fundamental_ring, CyclicModule, NotDominant, NotInSpan};
pub use cache::{
    deserialize, global_cache, irreducible, serialize, set_global_cache, CacheError, ModuleCache,
    CACHE_MAGIC,
};
pub use module::{dual, hom_equivariant, op_eab, op_h, op_pair, tensor, Path, Sl5Module, NUM_OPS};
pub use weight::{dominant_weights, weyl_dim, ParseWeightError, Weight};
