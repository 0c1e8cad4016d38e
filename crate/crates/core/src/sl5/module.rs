use std::collections::BTreeMap;
use std::sync::OnceLock;

use super::weight::Weight;
use crate::e510::N;
use crate::exact::{nullspace, Rational, SparseMatrix, SparseVec};

/// Index of an `sl_5` operator in the fixed list used throughout:
/// the 20 root vectors `E_ab` (`a ≠ b`, lex order) then `H_1..H_4`.
pub const NUM_OPS: usize = 24;

pub fn op_eab(a: usize, b: usize) -> usize {
    assert!(a != b && a < N && b < N);
    a * (N - 1) + if b > a { b - 1 } else { b }
}

pub fn op_h(i: usize) -> usize {
    20 + i
}

/// `(a, b)` of a root-vector operator index.
pub fn op_pair(op: usize) -> Option<(usize, usize)> {
    if op >= 20 {
        return None;
    }
    let a = op / (N - 1);
    let r = op % (N - 1);
    Some((a, if r >= a { r + 1 } else { r }))
}

/// How a basis vector was produced by the canonical construction:
/// `b_j = f_i · b_parent`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Path {
    pub parent: usize,
    pub f: usize,
}

/// Finite-dimensional `sl_5`-module with an explicit basis of weight vectors.
#[derive(Debug)]
pub struct Sl5Module {
    pub label: String,
    pub weights: Vec<Weight>,
    pub e: [SparseMatrix; 4],
    pub f: [SparseMatrix; 4],
    /// Present for cyclic modules built from a highest-weight vector at index 0.
    pub paths: Option<Vec<Option<Path>>>,
    ops: OnceLock<Vec<SparseMatrix>>,
    op_cols: OnceLock<Vec<Vec<SparseVec>>>,
}

impl Clone for Sl5Module {
    fn clone(&self) -> Self {
        Sl5Module::new(
            self.label.clone(),
            self.weights.clone(),
            self.e.clone(),
            self.f.clone(),
            self.paths.clone(),
        )
    }
}

impl PartialEq for Sl5Module {
    fn eq(&self, o: &Self) -> bool {
        self.weights == o.weights && self.e == o.e && self.f == o.f && self.paths == o.paths
    }
}

impl Sl5Module {
    pub fn new(
        label: String,
        weights: Vec<Weight>,
        e: [SparseMatrix; 4],
        f: [SparseMatrix; 4],
        paths: Option<Vec<Option<Path>>>,
    ) -> Self {
        Sl5Module {
            label,
            weights,
            e,
            f,
            paths,
            ops: OnceLock::new(),
            op_cols: OnceLock::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    /// Highest weight of a cyclic module (the weight of basis vector 0).
    pub fn highest_weight(&self) -> Option<Weight> {
        self.paths.as_ref().map(|_| self.weights[0])
    }

    pub fn h(&self, i: usize) -> SparseMatrix {
        SparseMatrix::from_triplets(
            self.dim(),
            self.dim(),
            self.weights
                .iter()
                .enumerate()
                .map(|(j, w)| (j, j, Rational::from_int(w.0[i]))),
        )
    }

    /// Matrices of all 24 operators (see [`op_eab`], [`op_h`]).
    pub fn ops(&self) -> &[SparseMatrix] {
        self.ops.get_or_init(|| {
            let mut by_pair: BTreeMap<(usize, usize), SparseMatrix> = BTreeMap::new();
            for i in 0..4 {
                by_pair.insert((i, i + 1), self.e[i].clone());
                by_pair.insert((i + 1, i), self.f[i].clone());
            }
            for gap in 2..N {
                for a in 0..N - gap {
                    let b = a + gap;
                    let up = by_pair[&(a, a + 1)].commutator(&by_pair[&(a + 1, b)]);
                    let down = by_pair[&(b, b - 1)].commutator(&by_pair[&(b - 1, a)]);
                    by_pair.insert((a, b), up);
                    by_pair.insert((b, a), down);
                }
            }
            let mut out = vec![SparseMatrix::zeros(0, 0); NUM_OPS];
            for ((a, b), m) in by_pair {
                out[op_eab(a, b)] = m;
            }
            for i in 0..4 {
                out[op_h(i)] = self.h(i);
            }
            out
        })
    }

    pub fn op(&self, op: usize) -> &SparseMatrix {
        &self.ops()[op]
    }

    /// `op · b_j` as a sparse vector.
    pub fn apply_op(&self, op: usize, j: usize) -> &SparseVec {
        &self
            .op_cols
            .get_or_init(|| self.ops().iter().map(|m| m.columns()).collect())[op][j]
    }

    /// `M · v` for an operator index.
    pub fn act_vec(&self, op: usize, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (j, c) in v.iter() {
            out = out.add_scaled(c, self.apply_op(op, *j));
        }
        out
    }

    /// Basis indices grouped by weight.
    pub fn weight_spaces(&self) -> BTreeMap<Weight, Vec<usize>> {
        let mut out: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
        for (j, w) in self.weights.iter().enumerate() {
            out.entry(*w).or_default().push(j);
        }
        out
    }

    pub fn weight_multiplicity(&self, w: Weight) -> usize {
        self.weights.iter().filter(|x| **x == w).count()
    }

    /// Checks `[h_i, e_j] = a_ij e_j`, `[h_i, f_j] = −a_ij f_j`,
    /// `[e_i, f_j] = δ_ij h_i` and the Serre relations.
    pub fn check_relations(&self) -> Result<(), String> {
        let n = self.dim();
        for i in 0..4 {
            for j in 0..4 {
                let a = Weight::simple_root(j).0[i];
                let he = self.h(i).commutator(&self.e[j]);
                if he != self.e[j].scale(&Rational::from_int(a)) {
                    return Err(format!("[h{},e{}]", i + 1, j + 1));
                }
                let hf = self.h(i).commutator(&self.f[j]);
                if hf != self.f[j].scale(&Rational::from_int(-a)) {
                    return Err(format!("[h{},f{}]", i + 1, j + 1));
                }
                let ef = self.e[i].commutator(&self.f[j]);
                let expect = if i == j {
                    self.h(i)
                } else {
                    SparseMatrix::zeros(n, n)
                };
                if ef != expect {
                    return Err(format!("[e{},f{}]", i + 1, j + 1));
                }
                if (i as i64 - j as i64).abs() == 1 {
                    for x in [&self.e, &self.f] {
                        let s = x[i].commutator(&x[i].commutator(&x[j]));
                        if !s.is_zero() {
                            return Err(format!("Serre {} {}", i + 1, j + 1));
                        }
                    }
                } else if i != j {
                    if !self.e[i].commutator(&self.e[j]).is_zero()
                        || !self.f[i].commutator(&self.f[j]).is_zero()
                    {
                        return Err(format!("commuting {} {}", i + 1, j + 1));
                    }
                }
            }
        }
        Ok(())
    }

    /// Basis of `{v ∈ M[λ] : e_i v = 0 for all i}`.
    pub fn highest_weight_vectors(&self, lambda: Weight) -> Vec<SparseVec> {
        let cols: Vec<usize> = (0..self.dim())
            .filter(|&j| self.weights[j] == lambda)
            .collect();
        if cols.is_empty() {
            return Vec::new();
        }
        // rows: e_i applied to the weight-λ columns
        let mut triplets = Vec::new();
        for (i, e) in self.e.iter().enumerate() {
            for (r, c, v) in e.entries() {
                if let Ok(k) = cols.binary_search(&c) {
                    triplets.push((i * self.dim() + r, k, v.clone()));
                }
            }
        }
        let m = SparseMatrix::from_triplets(4 * self.dim(), cols.len(), triplets);
        nullspace(&m)
            .iter()
            .map(|v| v.reindex(|k| cols[k]))
            .collect()
    }

    /// Dominant weights `λ` with a nonzero highest-weight vector, with multiplicity.
    pub fn decomposition(&self) -> BTreeMap<Weight, usize> {
        let mut out = BTreeMap::new();
        for w in self.weight_spaces().keys() {
            if w.is_dominant() {
                let k = self.highest_weight_vectors(*w).len();
                if k > 0 {
                    out.insert(*w, k);
                }
            }
        }
        out
    }
}

fn kron(a: &SparseMatrix, b: &SparseMatrix) -> SparseMatrix {
    let (br, bc) = (b.nrows(), b.ncols());
    let mut t = Vec::new();
    for (i, j, x) in a.entries() {
        for (k, l, y) in b.entries() {
            t.push((i * br + k, j * bc + l, x * y));
        }
    }
    SparseMatrix::from_triplets(a.nrows() * br, a.ncols() * bc, t)
}

/// `M ⊗ N` with basis `(i, j) ↦ i·dim N + j` and the Leibniz action.
pub fn tensor(m: &Sl5Module, n: &Sl5Module) -> Sl5Module {
    let im = SparseMatrix::identity(m.dim());
    let inn = SparseMatrix::identity(n.dim());
    let lift = |x: &SparseMatrix, y: &SparseMatrix| kron(x, &inn).add(&kron(&im, y));
    let e = std::array::from_fn(|i| lift(&m.e[i], &n.e[i]));
    let f = std::array::from_fn(|i| lift(&m.f[i], &n.f[i]));
    let mut weights = Vec::with_capacity(m.dim() * n.dim());
    for a in &m.weights {
        for b in &n.weights {
            weights.push(a.add(*b));
        }
    }
    Sl5Module::new(format!("{} ⊗ {}", m.label, n.label), weights, e, f, None)
}

/// Dual module: `x ↦ −x^T`.
pub fn dual(m: &Sl5Module) -> Sl5Module {
    let minus = -Rational::ONE;
    let e = std::array::from_fn(|i| m.e[i].transpose().scale(&minus));
    let f = std::array::from_fn(|i| m.f[i].transpose().scale(&minus));
    let weights = m.weights.iter().map(|w| Weight(w.0.map(|x| -x))).collect();
    Sl5Module::new(format!("{}*", m.label), weights, e, f, None)
}

/// Basis of `Hom_{sl_5}(M, N)` as matrices `dim N × dim M`.
pub fn hom_equivariant(m: &Sl5Module, n: &Sl5Module) -> Vec<SparseMatrix> {
    // unknowns X[r][c] with weight(r) = weight(c)
    let mut unknown: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let n_spaces = n.weight_spaces();
    for (c, w) in m.weights.iter().enumerate() {
        if let Some(rows) = n_spaces.get(w) {
            for &r in rows {
                let k = unknown.len();
                unknown.insert((r, c), k);
            }
        }
    }
    if unknown.is_empty() {
        return Vec::new();
    }
    // constraints: X·g_M − g_N·X = 0 for g in e_i, f_i; equation index (r, c) per generator
    let mut rows: BTreeMap<(usize, usize, usize), Vec<(usize, Rational)>> = BTreeMap::new();
    for (g, (gm, gn)) in m.e.iter().zip(&n.e).chain(m.f.iter().zip(&n.f)).enumerate() {
        let gn_cols = gn.columns();
        for (&(r, k), &u) in &unknown {
            // (X gM)[r][c] = Σ_k X[r][k] gM[k][c]
            for (c, v) in gm.row(k).iter() {
                rows.entry((g, r, *c)).or_default().push((u, v.clone()));
            }
            // (gN X)[s][k] = Σ_r gN[s][r] X[r][k]
            for (s, v) in gn_cols[r].iter() {
                rows.entry((g, *s, k)).or_default().push((u, -v));
            }
        }
    }
    let eqs: Vec<SparseVec> = rows.into_values().map(SparseVec::from_pairs).collect();
    let system = SparseMatrix::from_rows(unknown.len(), eqs);
    let order: BTreeMap<usize, (usize, usize)> = unknown.iter().map(|(rc, k)| (*k, *rc)).collect();
    nullspace(&system)
        .into_iter()
        .map(|v| {
            SparseMatrix::from_triplets(
                n.dim(),
                m.dim(),
                v.iter().map(|(k, x)| {
                    let (r, c) = order[k];
                    (r, c, x.clone())
                }),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn op_indexing() {
        let mut seen = vec![false; 20];
        for a in 0..5 {
            for b in 0..5 {
                if a != b {
                    let k = op_eab(a, b);
                    assert!(!seen[k]);
                    seen[k] = true;
                    assert_eq!(op_pair(k), Some((a, b)));
                }
            }
        }
    }
}
