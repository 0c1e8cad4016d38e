use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::action::{apply_terms, eab_apply, g1_apply};
use crate::exact::{nullspace, Rational, SparseMatrix, SparseVec};
use crate::sl5::{irreducible, weyl_dim, NotDominant, Sl5Module, Weight};
use crate::uea::{graded_basis, PBWMonomial};
use crate::verma::{MorphismData, VermaVector};

pub const DEFAULT_CAP: usize = 20_000;

/// A degree-`k` morphism problem `M(λ_A) → M(λ_B)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SearchProblem {
    pub source: Weight,
    pub target: Weight,
    pub degree: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error(transparent)]
    NotDominant(#[from] NotDominant),
    #[error("infeasible at this scale: {unknowns} unknowns exceed the cap of {cap}")]
    Infeasible { unknowns: usize, cap: usize },
}

#[derive(Clone, Copy, Debug)]
pub struct SolveOptions {
    pub cap: usize,
    /// Shuffle the unknowns with this seed (the answer must not change).
    pub shuffle: Option<u64>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            cap: DEFAULT_CAP,
            shuffle: None,
        }
    }
}

/// A basis of the solution space.
pub struct Solution {
    pub problem: SearchProblem,
    pub unknowns: usize,
    /// Images of the highest-weight vector of `F(λ_A)`.
    pub hwv_images: Vec<VermaVector>,
    pub morphisms: Vec<MorphismData>,
}

impl Solution {
    pub fn dim(&self) -> usize {
        self.hwv_images.len()
    }
}

fn weight_of(u: &PBWMonomial) -> Weight {
    Weight::from_epsilon(u.weight())
}

/// The unknowns `(u, b)` of weight `λ_A` in `(U_-)_k ⊗ B` for `k` in `degrees`.
fn unknowns(lambda_a: Weight, b: &Sl5Module, degrees: &[u32]) -> Vec<(PBWMonomial, usize)> {
    let mut by_weight: HashMap<Weight, Vec<usize>> = HashMap::new();
    for (j, w) in b.weights.iter().enumerate() {
        by_weight.entry(*w).or_default().push(j);
    }
    let mut out = Vec::new();
    for &k in degrees {
        for u in &graded_basis(k).monomials {
            if let Some(js) = by_weight.get(&lambda_a.sub(weight_of(u))) {
                out.extend(js.iter().map(|&j| (*u, j)));
            }
        }
    }
    out
}

/// Solves for `Φ(hwv)` over the given degrees at once: returns the number of
/// unknowns, a kernel basis and `F(λ_B)`.
fn solve_degrees(
    p: &SearchProblem,
    degrees: &[u32],
    opts: SolveOptions,
) -> Result<(usize, Vec<VermaVector>, Arc<Sl5Module>), SolveError> {
    if degrees.iter().any(|&k| k == 0) {
        return Err(SolveError::ZeroDegree);
    }
    if !p.source.is_dominant() {
        return Err(NotDominant(p.source).into());
    }
    if !p.target.is_dominant() {
        return Err(NotDominant(p.target).into());
    }
    // a cheap upper bound first, so huge targets are never built
    let bound = weyl_dim(p.target) as usize
        * degrees
            .iter()
            .map(|&k| graded_basis(k).len())
            .sum::<usize>();
    let b = if bound > opts.cap * 64 {
        return Err(SolveError::Infeasible {
            unknowns: bound,
            cap: opts.cap,
        });
    } else {
        irreducible(p.target)?
    };
    let mut cols = unknowns(p.source, &b, degrees);
    if cols.len() > opts.cap {
        return Err(SolveError::Infeasible {
            unknowns: cols.len(),
            cap: opts.cap,
        });
    }
    if let Some(seed) = opts.shuffle {
        cols.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    // rows: (constraint, u, b)
    let mut rows: BTreeMap<(u8, PBWMonomial, usize), Vec<(usize, Rational)>> = BTreeMap::new();
    for (c, (u, j)) in cols.iter().enumerate() {
        for i in 0..4 {
            for (m, k, x) in eab_apply(i, i + 1, u, *j, &b) {
                rows.entry((i as u8, m, k)).or_default().push((c, x));
            }
        }
        for w in 0..40 {
            let t = g1_apply(w, u);
            apply_terms(&t, *j, &b, |m, k, x| {
                rows.entry((4 + w as u8, m, k)).or_default().push((c, x));
            });
        }
    }
    let m = SparseMatrix::from_rows(
        cols.len(),
        rows.into_values().map(SparseVec::from_pairs).collect(),
    );
    let kernel = nullspace(&m);
    let hwv_images: Vec<VermaVector> = kernel
        .iter()
        .map(|v| VermaVector::from_terms(v.iter().map(|(c, x)| (cols[*c], x.clone()))))
        .collect();
    Ok((cols.len(), hwv_images, b))
}

/// Solves the homogeneous degree-`k` problem.
pub fn solve(p: &SearchProblem, opts: SolveOptions) -> Result<Solution, SolveError> {
    let (unknowns, hwv_images, b) = solve_degrees(p, &[p.degree], opts)?;
    let a = irreducible(p.source)?;
    let morphisms = hwv_images
        .iter()
        .enumerate()
        .map(|(i, v)| extend(p, i, v, &a, &b))
        .collect();
    Ok(Solution {
        problem: *p,
        unknowns,
        hwv_images,
        morphisms,
    })
}

/// Kernel basis with unknowns of every degree in `1..=kmax` at once (the
/// degree of `p` is ignored). Used to check that every solution is homogeneous.
pub fn solve_inhomogeneous(p: &SearchProblem, kmax: u32) -> Result<Vec<VermaVector>, SolveError> {
    let degrees: Vec<u32> = (1..=kmax).collect();
    Ok(solve_degrees(p, &degrees, SolveOptions::default())?.1)
}

/// Extends `Φ(hwv)` along the construction paths of `F(λ_A)`:
/// `Φ(f_i a) = f_i Φ(a)`.
fn extend(
    p: &SearchProblem,
    i: usize,
    top: &VermaVector,
    a: &Arc<Sl5Module>,
    b: &Arc<Sl5Module>,
) -> MorphismData {
    let paths = a.paths.as_ref().expect("irreducibles carry paths");
    let mut table: Vec<VermaVector> = Vec::with_capacity(a.dim());
    for (j, path) in paths.iter().enumerate() {
        let v = match path {
            None => {
                debug_assert_eq!(j, 0);
                top.clone()
            }
            Some(pp) => {
                let mut out = VermaVector::new();
                for ((u, k), c) in table[pp.parent].iter() {
                    for (m, k2, x) in eab_apply(pp.f + 1, pp.f, u, *k, b) {
                        out.add_term((m, k2), c * &x);
                    }
                }
                out
            }
        };
        table.push(v);
    }
    MorphismData {
        label: format!("solve{}→{} k={} #{i}", p.source, p.target, p.degree),
        source: a.clone(),
        target: b.clone(),
        degree: p.degree,
        table,
    }
}
