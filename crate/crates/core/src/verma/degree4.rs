//! The copy of `Sym³C^5` inside `(U_-)_4` generated by `d12 d13 d14 d15`, and
//! the degree-4 morphisms `t_AB`, `t_BC` built from it.

use std::collections::HashMap;
use std::sync::OnceLock;

use rayon::prelude::*;

use super::{MorphismData, VermaVector};
use crate::e510::{permutation_sign, N};
use crate::exact::{Echelon, Rational, SparseVec};
use crate::models::{component, model, Family};
use crate::sl5::poly::Poly;
use crate::uea::{eab_act, graded_basis, normal_order, Generator, PBWElement, PBWMonomial};

/// Exponent vector of a monomial in `Sym³C^5`.
pub type MultiIndex = [u8; N];

/// The family `u_ā` dual to the monomials `ẑ^ā` of `Sym³C^5*`.
pub struct Sym3Family {
    /// Multi-indices in lexicographically decreasing order, `(3,0,0,0,0)` first.
    pub indices: Vec<MultiIndex>,
    pub u: HashMap<MultiIndex, PBWElement>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Sym3Error {
    #[error("d12 d13 d14 d15 is not a highest-weight vector")]
    NotHighest,
    #[error("equivariance fails for E_{0}{1} on {2:?}")]
    NotEquivariant(usize, usize, MultiIndex),
    #[error("the images are linearly dependent")]
    Dependent,
}

fn factorial(k: u8) -> i64 {
    (1..=k as i64).product()
}

fn multi_factorial(a: &MultiIndex) -> i64 {
    a.iter().map(|&k| factorial(k)).product()
}

pub fn multi_indices(deg: u8) -> Vec<MultiIndex> {
    let mut out = Vec::new();
    fn rec(i: usize, left: u8, cur: &mut MultiIndex, out: &mut Vec<MultiIndex>) {
        if i == N - 1 {
            cur[i] = left;
            out.push(*cur);
            return;
        }
        for k in (0..=left).rev() {
            cur[i] = k;
            rec(i + 1, left - k, cur, out);
        }
    }
    rec(0, deg, &mut [0; N], &mut out);
    out
}

/// `d12 d13 d14 d15`.
pub fn top_vector() -> PBWElement {
    PBWElement::basis(PBWMonomial::new([0; N], &[0, 1, 2, 3]))
}

fn build() -> Result<Sym3Family, Sym3Error> {
    let top = top_vector();
    for i in 0..N - 1 {
        if !eab_act(i, i + 1, &top).is_zero() {
            return Err(Sym3Error::NotHighest);
        }
    }
    // Ψ(z^ā), with Ψ(z1³) = 6 · d12 d13 d14 d15
    let indices = multi_indices(3);
    let mut psi: HashMap<MultiIndex, PBWElement> = HashMap::new();
    psi.insert(indices[0], top.scale(&Rational::from_int(6)));
    let mut queue = vec![indices[0]];
    while let Some(a) = queue.pop() {
        for i in 0..N {
            if a[i] == 0 {
                continue;
            }
            for j in i + 1..N {
                // E_ji z^ā = ā_i z^β
                let mut b = a;
                b[i] -= 1;
                b[j] += 1;
                if psi.contains_key(&b) {
                    continue;
                }
                let img = eab_act(j, i, &psi[&a]).scale(&Rational::new(1, a[i] as i64));
                psi.insert(b, img);
                queue.push(b);
            }
        }
    }
    for a in &indices {
        for x in 0..N {
            for y in 0..N {
                if x == y {
                    continue;
                }
                let lhs = eab_act(x, y, &psi[a]);
                let rhs = if a[y] == 0 {
                    PBWElement::new()
                } else {
                    let mut b = *a;
                    b[y] -= 1;
                    b[x] += 1;
                    psi[&b].scale(&Rational::from_int(a[y] as i64))
                };
                if lhs != rhs {
                    return Err(Sym3Error::NotEquivariant(x, y, *a));
                }
            }
        }
    }
    let basis = graded_basis(4);
    let mut ech = Echelon::new(basis.len());
    for a in &indices {
        let v = SparseVec::from_pairs(
            psi[a]
                .iter()
                .map(|(m, c)| (basis.index_of(m).unwrap(), c.clone())),
        );
        if !ech.insert(&v) {
            return Err(Sym3Error::Dependent);
        }
    }
    let u = indices
        .iter()
        .map(|a| (*a, psi[a].scale(&Rational::new(1, multi_factorial(a)))))
        .collect();
    Ok(Sym3Family { indices, u })
}

/// Built once; panics only if the internal consistency checks fail.
pub fn build_sym3_dual_family() -> &'static Sym3Family {
    static F: OnceLock<Sym3Family> = OnceLock::new();
    F.get_or_init(|| build().unwrap_or_else(|e| panic!("Sym³ family: {e}")))
}

/// Result of [`build_sym3_dual_family`], recomputed without the cache.
pub fn try_build_sym3_dual_family() -> Result<Sym3Family, Sym3Error> {
    build()
}

/// The automorphism of `U_-` induced by a permutation `π` of the indices:
/// `d_ij ↦ d_{πi πj}`, `∂_i ↦ sgn(π) ∂_{πi}`.
pub fn permute(pi: &[usize; N], u: &PBWElement) -> PBWElement {
    let sgn = permutation_sign(pi);
    let mut out = PBWElement::new();
    for (m, c) in u.iter() {
        let mut word = Vec::new();
        let mut sign = 1;
        for i in 0..N {
            for _ in 0..m.del[i] {
                word.push(Generator::Del(pi[i]));
                sign *= sgn;
            }
        }
        for p in m.d_factors() {
            let (i, j) = crate::e510::PAIRS[p];
            word.push(Generator::D(pi[i], pi[j]));
        }
        out.add_scaled(&(c * Rational::from_int(sign)), &normal_order(&word));
    }
    out
}

/// `π(ā)` with `π(ā)_{π(i)} = ā_i`.
pub fn permute_index(pi: &[usize; N], a: &MultiIndex) -> MultiIndex {
    let mut b = [0; N];
    for i in 0..N {
        b[pi[i]] = a[i];
    }
    b
}

/// Which degree-4 morphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degree4Kind {
    /// `M(n,0,0,0) → M(n−3,0,0,0)`, `ẑ^ā` acting as `∂^ā`.
    AB,
    /// `M(0,0,0,n) → M(0,0,0,n+3)`, `ẑ^ā` acting as multiplication by `z*^ā`.
    BC,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Degree4Error {
    #[error("t_AB needs n ≥ 3 (got {0})")]
    OutOfRange(u32),
    #[error(transparent)]
    NotInSpan(#[from] crate::sl5::NotInSpan),
}

/// `t_AB` or `t_BC` on the given graded piece.
pub fn build_degree4(kind: Degree4Kind, n: u32) -> Result<MorphismData, Degree4Error> {
    let fam = build_sym3_dual_family();
    let md = model(Family::B);
    let ring = &md.ring;
    let (src, tgt, label) = match kind {
        Degree4Kind::AB => {
            if n < 3 {
                return Err(Degree4Error::OutOfRange(n));
            }
            (
                component(Family::B, n, 0),
                component(Family::B, n - 3, 0),
                format!("t_AB({n})"),
            )
        }
        Degree4Kind::BC => (
            component(Family::B, 0, n),
            component(Family::B, 0, n + 3),
            format!("t_BC({n})"),
        ),
    };
    let act = |a: &MultiIndex, p: &Poly| -> Poly {
        let mut q = p.clone();
        for i in 0..N {
            for _ in 0..a[i] {
                q = match kind {
                    Degree4Kind::AB => ring.derivative(md.z(i, false), &q),
                    Degree4Kind::BC => ring.times_var(md.z(i, true), &q),
                };
            }
        }
        q
    };
    let table: Vec<VermaVector> = src
        .basis()
        .par_iter()
        .map(|p| -> Result<VermaVector, Degree4Error> {
            let mut v = VermaVector::new();
            for a in &fam.indices {
                let img = act(a, p);
                if img.is_zero() {
                    continue;
                }
                let coords = tgt.coords(&img)?;
                for (m, c) in fam.u[a].iter() {
                    for (b, x) in coords.iter() {
                        v.add_term((*m, *b), c * x);
                    }
                }
            }
            Ok(v)
        })
        .collect::<Result<_, _>>()?;
    Ok(
        MorphismData::new(label, src.module.clone(), tgt.module.clone(), 4, table)
            .expect("degree-4 table"),
    )
}
