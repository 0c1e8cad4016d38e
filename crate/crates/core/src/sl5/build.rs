//! Canonical construction of a cyclic module from a highest-weight vector.
//!
//! Starting at the highest-weight vector, apply `f_1..f_4` level by level and
//! keep every image that is linearly independent of the vectors already kept
//! in its weight space. The resulting basis is ordered by level, then by
//! weight (descending), then by discovery order, and every basis vector is
//! literally `f_i` applied to an earlier one. The procedure only sees linear
//! relations among the vectors, so isomorphic realizations give identical
//! matrices.

use std::collections::HashMap;

use rayon::prelude::*;

use super::module::{Path, Sl5Module};
use super::poly::{Mono, Poly, Reducer, Ring};
use super::weight::Weight;
use crate::exact::{Echelon, Rational, SparseMatrix, SparseVec};

/// Coordinates of polynomials in one weight space of a cyclic module.
#[derive(Debug, Clone)]
struct SpaceCoords {
    indices: Vec<usize>,
    pivots: Vec<Mono>,
    /// Inverse of the `pivots` columns of the basis matrix.
    inv: Vec<Vec<Rational>>,
}

/// A cyclic module together with its polynomial basis.
pub struct CyclicModule {
    pub module: Sl5Module,
    pub basis: Vec<Poly>,
    spaces: HashMap<Weight, SpaceCoords>,
}

/// Raised when a polynomial is not in the span of the module.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("polynomial is not in the module span")]
pub struct NotInSpan;

fn poly_weight(ring: &Ring, p: &Poly) -> Option<Weight> {
    p.keys()
        .next()
        .map(|m| Weight::from_epsilon(ring.weight_of(m)))
}

fn invert(m: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .into_iter()
        .enumerate()
        .map(|(i, mut row)| {
            row.extend((0..n).map(|j| {
                if i == j {
                    Rational::ONE
                } else {
                    Rational::ZERO
                }
            }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n)
            .find(|&r| !a[r][c].is_zero())
            .expect("singular pivot block");
        a.swap(c, p);
        let inv = a[c][c].recip();
        for x in a[c].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                let pivot_row = a[c].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row) {
                    *x = &*x - &(&f * &y);
                }
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}

impl CyclicModule {
    /// Builds the cyclic module generated by `hwv`, which must be a
    /// highest-weight vector in the (reduced) ring.
    pub fn build(ring: &Ring, reducer: &dyn Reducer, hwv: &Poly, label: &str) -> Self {
        let hwv = reducer.reduce(hwv);
        assert!(!hwv.is_zero(), "zero generator");
        for i in 0..4 {
            let e = reducer.reduce(&ring.eab(i, i + 1, &hwv));
            assert!(e.is_zero(), "generator is not a highest-weight vector");
        }
        struct Space {
            indices: Vec<usize>,
            cols: HashMap<Mono, usize>,
            mono_of: Vec<Mono>,
            ech: Echelon,
        }
        let mut spaces: HashMap<Weight, Space> = HashMap::new();
        let mut basis: Vec<Poly> = Vec::new();
        let mut weights: Vec<Weight> = Vec::new();
        let mut paths: Vec<Option<Path>> = Vec::new();

        let mut offer = |p: Poly, w: Weight, path: Option<Path>, basis: &mut Vec<Poly>| -> bool {
            let sp = spaces.entry(w).or_insert_with(|| Space {
                indices: Vec::new(),
                cols: HashMap::new(),
                mono_of: Vec::new(),
                ech: Echelon::new(usize::MAX),
            });
            let pairs: Vec<(usize, Rational)> = p
                .iter()
                .map(|(m, c)| {
                    let k = match sp.cols.get(m) {
                        Some(&k) => k,
                        None => {
                            let k = sp.mono_of.len();
                            sp.cols.insert(*m, k);
                            sp.mono_of.push(*m);
                            k
                        }
                    };
                    (k, c.clone())
                })
                .collect();
            if sp.ech.insert(&SparseVec::from_pairs(pairs)) {
                sp.indices.push(basis.len());
                basis.push(p);
                weights.push(w);
                paths.push(path);
                true
            } else {
                false
            }
        };

        let w0 = poly_weight(ring, &hwv).unwrap();
        offer(hwv, w0, None, &mut basis);
        let mut level: Vec<usize> = vec![0];
        while !level.is_empty() {
            let mut cands: Vec<(Weight, usize, usize, Poly)> = level
                .par_iter()
                .flat_map_iter(|&parent| {
                    let src = &basis[parent];
                    (0..4)
                        .filter_map(|i| {
                            let p = reducer.reduce(&ring.eab(i + 1, i, src));
                            poly_weight(ring, &p).map(|w| (w, parent, i, p))
                        })
                        .collect::<Vec<_>>()
                })
                .collect();
            // descending weight, stable in discovery order
            cands.sort_by(|a, b| b.0.cmp(&a.0));
            let mut next = Vec::new();
            for (w, parent, i, p) in cands {
                let idx = basis.len();
                if offer(p, w, Some(Path { parent, f: i }), &mut basis) {
                    next.push(idx);
                }
            }
            level = next;
        }
        drop(offer);

        let coords: HashMap<Weight, SpaceCoords> = spaces
            .into_par_iter()
            .map(|(w, sp)| {
                let pivots: Vec<Mono> = sp.ech.pivot_columns().map(|c| sp.mono_of[c]).collect();
                let block: Vec<Vec<Rational>> = sp
                    .indices
                    .iter()
                    .map(|&j| pivots.iter().map(|m| basis[j].get(m)).collect())
                    .collect();
                (
                    w,
                    SpaceCoords {
                        indices: sp.indices,
                        pivots,
                        inv: invert(block),
                    },
                )
            })
            .collect();

        let mut cm = CyclicModule {
            module: Sl5Module::new(
                label.to_string(),
                weights,
                Default::default(),
                Default::default(),
                None,
            ),
            basis,
            spaces: coords,
        };
        let n = cm.basis.len();
        let mats: Vec<Vec<(usize, usize, Rational)>> = (0..8)
            .into_par_iter()
            .map(|g| {
                let (a, b) = if g < 4 { (g, g + 1) } else { (g - 3, g - 4) };
                let mut t = Vec::new();
                for j in 0..n {
                    let img = reducer.reduce(&ring.eab(a, b, &cm.basis[j]));
                    let c = cm
                        .coords_unchecked(ring, &img)
                        .expect("module is not closed");
                    for (r, v) in c.iter() {
                        t.push((*r, j, v.clone()));
                    }
                }
                t
            })
            .collect();
        let mut it = mats
            .into_iter()
            .map(|t| SparseMatrix::from_triplets(n, n, t));
        let e: [SparseMatrix; 4] = std::array::from_fn(|_| it.next().unwrap());
        let f: [SparseMatrix; 4] = std::array::from_fn(|_| it.next().unwrap());
        cm.module = Sl5Module::new(
            label.to_string(),
            cm.module.weights.clone(),
            e,
            f,
            Some(paths),
        );
        cm
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates read off the pivot monomials, without a residual check.
    pub fn coords_unchecked(&self, ring: &Ring, p: &Poly) -> Result<SparseVec, NotInSpan> {
        let mut by_weight: HashMap<Weight, Vec<(&Mono, &Rational)>> = HashMap::new();
        for (m, c) in p.iter() {
            by_weight
                .entry(Weight::from_epsilon(ring.weight_of(m)))
                .or_default()
                .push((m, c));
        }
        let mut out = Vec::new();
        for (w, terms) in by_weight {
            let sp = self.spaces.get(&w).ok_or(NotInSpan)?;
            let lookup: HashMap<&Mono, &Rational> = terms.into_iter().collect();
            let rhs: Vec<Rational> = sp
                .pivots
                .iter()
                .map(|m| lookup.get(m).map_or(Rational::ZERO, |c| (*c).clone()))
                .collect();
            for (k, &j) in sp.indices.iter().enumerate() {
                let mut s = Rational::ZERO;
                for (r, x) in rhs.iter().enumerate() {
                    if !x.is_zero() {
                        s.add_mul(x, &sp.inv[r][k]);
                    }
                }
                if !s.is_zero() {
                    out.push((j, s));
                }
            }
        }
        Ok(SparseVec::from_pairs(out))
    }

    /// Coordinates with an exact residual check.
    pub fn coords(&self, ring: &Ring, p: &Poly) -> Result<SparseVec, NotInSpan> {
        let c = self.coords_unchecked(ring, p)?;
        let mut back = Poly::new();
        for (j, x) in c.iter() {
            back.add_scaled(x, &self.basis[*j]);
        }
        if back == *p {
            Ok(c)
        } else {
            Err(NotInSpan)
        }
    }

    /// Polynomial with the given coordinates.
    pub fn poly_of(&self, v: &SparseVec) -> Poly {
        let mut out = Poly::new();
        for (j, x) in v.iter() {
            out.add_scaled(x, &self.basis[*j]);
        }
        out
    }
}

/// The 30-variable ring `Sym(C^5 ⊕ Λ²C^5 ⊕ Λ³C^5 ⊕ Λ⁴C^5)`.
pub fn fundamental_ring() -> &'static Ring {
    static RING: std::sync::OnceLock<Ring> = std::sync::OnceLock::new();
    RING.get_or_init(|| {
        let mut vars = Vec::new();
        for k in 1..=4 {
            vars.extend(Ring::wedge_vars(k));
        }
        Ring::new(vars)
    })
}

/// Error for [`build_irreducible`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("weight {0} is not dominant")]
pub struct NotDominant(pub Weight);

/// `F(λ)` as the cyclic span of `z_1^{n_1} x_{12}^{n_2} x_{123}^{n_3} x_{1234}^{n_4}`.
pub fn build_irreducible(lambda: Weight) -> Result<Sl5Module, NotDominant> {
    if !lambda.is_dominant() {
        return Err(NotDominant(lambda));
    }
    let ring = fundamental_ring();
    let mut m = Mono::ONE;
    for k in 0..4 {
        let v = ring.var_of(false, &(0..=k).collect::<Vec<_>>());
        for _ in 0..lambda.0[k] {
            m = m.times_var(v);
        }
    }
    let hwv = Poly::basis(m);
    let cm = CyclicModule::build(ring, &super::poly::NoRelations, &hwv, &format!("F{lambda}"));
    Ok(cm.module)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sl5::weyl_dim;

    #[test]
    fn small_irreducibles() {
        let triv = build_irreducible(Weight::ZERO).unwrap();
        assert_eq!(triv.dim(), 1);
        assert!(triv.e.iter().chain(&triv.f).all(|m| m.is_zero()));
        for w in [
            Weight::new(1, 0, 0, 0),
            Weight::new(1, 1, 0, 0),
            Weight::new(0, 1, 0, 1),
        ] {
            let m = build_irreducible(w).unwrap();
            assert_eq!(m.dim() as u64, weyl_dim(w), "{w}");
            m.check_relations().unwrap();
        }
        assert!(build_irreducible(Weight::new(1, -1, 0, 0)).is_err());
    }

    #[test]
    fn invert_small() {
        let m = vec![
            vec![Rational::from_int(2), Rational::from_int(1)],
            vec![Rational::from_int(1), Rational::from_int(1)],
        ];
        let inv = invert(m);
        assert_eq!(inv[0][0], Rational::ONE);
        assert_eq!(inv[0][1], Rational::from_int(-1));
        assert_eq!(inv[1][1], Rational::from_int(2));
    }
}
