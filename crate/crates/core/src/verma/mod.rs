//! Generalized Verma modules `M(V) = U_- ⊗ V`, morphisms between them, and
//! their mechanical verification.
//!
//! A morphism `M(A) → M(B)` of degree `k` is determined by its restriction
//! `Φ: A → (U_-)_k ⊗ B`. It is a morphism exactly when `Φ` is
//! `g_0`-equivariant and every `Φ(a)` is killed by `g_1`.

mod action;
mod catalog;
mod degree4;
mod morphism;

pub use action::{
    act, ad_g0, element_degree, g0_ops, g1_on_monomial, negative_part, ActError, OpTerm,
};
pub use catalog::{
    catalog_names, named_morphisms, CatalogEntry, CatalogError, Named, ZeroComposition,
};
pub use degree4::{
    build_degree4, build_sym3_dual_family, multi_indices, permute, permute_index, top_vector,
    try_build_sym3_dual_family, Degree4Error, Degree4Kind, MultiIndex, Sym3Error, Sym3Family,
};
pub use morphism::{
    chevalley, compose, format_vector, t_element, verify_morphism, Defect, G1Scope, G1Set,
    MorphismData, MorphismError, VerificationReport, VerifyOptions,
};

use crate::exact::LinComb;
use crate::uea::PBWMonomial;

/// `Σ c · u ⊗ b_j`, keyed by PBW monomial and target basis index.
pub type VermaVector = LinComb<(PBWMonomial, usize)>;
