use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use super::action::{act, ActError};
use super::VermaVector;
use crate::e510::{cartan, g1, SuperElement, VectorField};
use crate::exact::{Rational, SparseVec};
use crate::sl5::{op_eab, op_h, Sl5Module, Weight};
use crate::uea::multiply_monomials;

/// Restriction `Φ: A → U_- ⊗ B` of a Verma-module morphism `M(A) → M(B)`.
#[derive(Clone)]
pub struct MorphismData {
    pub label: String,
    pub source: Arc<Sl5Module>,
    pub target: Arc<Sl5Module>,
    pub degree: u32,
    /// `Φ(a_j)` for each basis vector of the source.
    pub table: Vec<VermaVector>,
}

/// Errors building or combining morphisms.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MorphismError {
    #[error("target of the first map is not the source of the second")]
    ModuleMismatch,
    #[error("table has {got} rows for a {dim}-dimensional source")]
    WrongSize { got: usize, dim: usize },
    #[error("term {0} is not of degree {1}")]
    NotHomogeneous(String, u32),
}

impl MorphismData {
    pub fn new(
        label: impl Into<String>,
        source: Arc<Sl5Module>,
        target: Arc<Sl5Module>,
        degree: u32,
        table: Vec<VermaVector>,
    ) -> Result<Self, MorphismError> {
        if table.len() != source.dim() {
            return Err(MorphismError::WrongSize {
                got: table.len(),
                dim: source.dim(),
            });
        }
        for v in &table {
            for (u, _) in v.keys() {
                if u.degree() != degree {
                    return Err(MorphismError::NotHomogeneous(u.to_string(), degree));
                }
            }
        }
        Ok(MorphismData {
            label: label.into(),
            source,
            target,
            degree,
            table,
        })
    }

    pub fn zero(
        label: impl Into<String>,
        source: Arc<Sl5Module>,
        target: Arc<Sl5Module>,
        degree: u32,
    ) -> Self {
        let table = vec![VermaVector::new(); source.dim()];
        MorphismData {
            label: label.into(),
            source,
            target,
            degree,
            table,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(|v| v.is_zero())
    }

    pub fn source_weight(&self) -> Option<Weight> {
        self.source.highest_weight()
    }

    pub fn target_weight(&self) -> Option<Weight> {
        self.target.highest_weight()
    }

    /// `Φ` on a vector of the source.
    pub fn apply(&self, a: &SparseVec) -> VermaVector {
        let mut out = VermaVector::new();
        for (j, c) in a.iter() {
            out.add_scaled(c, &self.table[*j]);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> MorphismData {
        MorphismData {
            table: self.table.iter().map(|v| v.scale(c)).collect(),
            ..self.clone()
        }
    }

    pub fn nnz(&self) -> usize {
        self.table.iter().map(|v| v.len()).sum()
    }
}

impl fmt::Debug for MorphismData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} -> {}, degree {}, {} terms",
            self.label,
            self.source.label,
            self.target.label,
            self.degree,
            self.nnz()
        )
    }
}

pub(crate) fn same_module(a: &Arc<Sl5Module>, b: &Arc<Sl5Module>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// `Ψ ∘ Φ` where `Φ: A → B` and `Ψ: B → C`.
pub fn compose(psi: &MorphismData, phi: &MorphismData) -> Result<MorphismData, MorphismError> {
    if !same_module(&phi.target, &psi.source) {
        return Err(MorphismError::ModuleMismatch);
    }
    let table: Vec<VermaVector> = phi
        .table
        .par_iter()
        .map(|v| {
            let mut out = VermaVector::new();
            for ((u, b), c) in v.iter() {
                for ((u2, k), c2) in psi.table[*b].iter() {
                    let cc = c * c2;
                    for (m, c3) in multiply_monomials(u, u2).iter() {
                        out.add_term((*m, *k), &cc * c3);
                    }
                }
            }
            out
        })
        .collect();
    Ok(MorphismData {
        label: format!("{}∘{}", psi.label, phi.label),
        source: phi.source.clone(),
        target: psi.target.clone(),
        degree: phi.degree + psi.degree,
        table,
    })
}

/// A nonzero residual found by the verifier.
#[derive(Clone, Debug)]
pub struct Defect {
    pub generator: String,
    /// Source vector the defect was found on (basis index, or `hwv k`).
    pub at: String,
    pub residual: VermaVector,
}

/// Which source vectors the `g_1` check runs on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum G1Scope {
    /// Every basis vector.
    Full,
    /// Highest-weight vectors only; sound once `g_0`-equivariance holds,
    /// because `[g_1, g_0] ⊂ g_1` carries annihilation down the module.
    HighestWeight,
}

/// Which elements of `g_1` are checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum G1Set {
    /// The 40-element basis.
    Basis,
    /// `x_5 d_45` alone; it generates `g_1` under `g_0`.
    SingleT,
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub scope: G1Scope,
    pub set: G1Set,
}

impl VerifyOptions {
    pub const FULL: VerifyOptions = VerifyOptions {
        scope: G1Scope::Full,
        set: G1Set::Basis,
    };
    pub const FAST: VerifyOptions = VerifyOptions {
        scope: G1Scope::HighestWeight,
        set: G1Set::Basis,
    };
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions::FAST
    }
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub equivariance: Vec<Defect>,
    pub g1: Vec<Defect>,
    /// The scope actually used for the `g_1` check.
    pub scope: G1Scope,
    pub is_zero: bool,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.equivariance.is_empty() && self.g1.is_empty()
    }
}

/// The twelve Chevalley generators as fields, with their operator indices.
pub fn chevalley() -> Vec<(String, VectorField, usize)> {
    let mut out = Vec::new();
    for i in 0..4 {
        out.push((
            format!("e{}", i + 1),
            VectorField::linear(i, i + 1),
            op_eab(i, i + 1),
        ));
        out.push((
            format!("f{}", i + 1),
            VectorField::linear(i + 1, i),
            op_eab(i + 1, i),
        ));
        out.push((format!("h{}", i + 1), cartan(i), op_h(i)));
    }
    out
}

/// `x_5 d_45`.
pub fn t_element() -> crate::e510::TwoForm {
    crate::e510::TwoForm::term(crate::e510::Monomial5::var(4), 3, 4, Rational::ONE)
}

fn g1_elements(set: G1Set) -> Vec<(String, SuperElement)> {
    match set {
        G1Set::Basis => g1()
            .iter()
            .enumerate()
            .map(|(k, w)| (format!("g1[{k}]"), SuperElement::odd(w.clone())))
            .collect(),
        G1Set::SingleT => vec![("x5d45".to_string(), SuperElement::odd(t_element()))],
    }
}

/// Source vectors for the `g_1` check.
fn g1_vectors(phi: &MorphismData, scope: G1Scope) -> Vec<(String, SparseVec)> {
    let src = &phi.source;
    match scope {
        G1Scope::Full => (0..src.dim())
            .map(|j| (j.to_string(), SparseVec::unit(j)))
            .collect(),
        G1Scope::HighestWeight => {
            if src.paths.is_some() {
                return vec![("hwv".to_string(), SparseVec::unit(0))];
            }
            let mut out = Vec::new();
            for (w, _) in src.decomposition() {
                for (k, v) in src.highest_weight_vectors(w).into_iter().enumerate() {
                    out.push((format!("hwv {w}#{k}"), v));
                }
            }
            out
        }
    }
}

/// Checks `g_0`-equivariance and `g_1`-annihilation of `Φ`.
pub fn verify_morphism(
    phi: &MorphismData,
    opts: VerifyOptions,
) -> Result<VerificationReport, ActError> {
    let src = &phi.source;
    let tgt = &phi.target;
    let gens = chevalley();
    let jobs: Vec<(usize, usize)> = (0..gens.len())
        .flat_map(|g| (0..src.dim()).map(move |a| (g, a)))
        .collect();
    let equivariance: Vec<Defect> = jobs
        .par_iter()
        .map(|&(g, a)| -> Result<Option<Defect>, ActError> {
            let (name, x, op) = &gens[g];
            let lhs = act(&SuperElement::even(x.clone()), &phi.table[a], tgt)?;
            let rhs = phi.apply(src.apply_op(*op, a));
            let r = lhs.minus(&rhs);
            Ok((!r.is_zero()).then(|| Defect {
                generator: name.clone(),
                at: a.to_string(),
                residual: r,
            }))
        })
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .collect();
    let scope = if equivariance.is_empty() {
        opts.scope
    } else {
        G1Scope::Full
    };
    let ws = g1_elements(opts.set);
    let vs = g1_vectors(phi, scope);
    let images: Vec<VermaVector> = vs.iter().map(|(_, v)| phi.apply(v)).collect();
    let jobs: Vec<(usize, usize)> = (0..ws.len())
        .flat_map(|w| (0..vs.len()).map(move |a| (w, a)))
        .collect();
    let g1_defects: Vec<Defect> = jobs
        .par_iter()
        .map(|&(w, a)| -> Result<Option<Defect>, ActError> {
            let r = act(&ws[w].1, &images[a], tgt)?;
            Ok((!r.is_zero()).then(|| Defect {
                generator: ws[w].0.clone(),
                at: vs[a].0.clone(),
                residual: r,
            }))
        })
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(VerificationReport {
        equivariance,
        g1: g1_defects,
        scope,
        is_zero: phi.is_zero(),
    })
}

/// Human-readable rendering of a Verma vector, with target basis indices.
pub fn format_vector(v: &VermaVector) -> String {
    if v.is_zero() {
        return "0".into();
    }
    let mut parts = Vec::new();
    for ((u, b), c) in v.iter() {
        parts.push(format!("{c}·{u}⊗b{b}"));
    }
    parts.join(" + ")
}
