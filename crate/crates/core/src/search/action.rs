//! The solver's own implementation of the `g_0` and `g_1` actions on
//! `U_- ⊗ B`, built from the PBW tables of `uea` and `ε` directly. It shares
//! nothing with the word-based action used by the verifier.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::e510::{epsilon, g1, N, PAIRS};
use crate::exact::Rational;
use crate::sl5::{op_eab, op_h, Sl5Module};
use crate::uea::{eab_act_monomial, multiply_monomials, PBWMonomial};

/// Terms `(u, op, c)` with op 0 the identity and `1 + k` the `k`-th operator.
pub(crate) type OpTerms = Arc<Vec<(PBWMonomial, u8, Rational)>>;

/// `g_1` basis element as `(k, pair, c)` for `c · x_k d_pair`.
fn g1_terms(w: usize) -> &'static [(usize, usize, Rational)] {
    static T: OnceLock<Vec<Vec<(usize, usize, Rational)>>> = OnceLock::new();
    &T.get_or_init(|| {
        g1().iter()
            .map(|f| {
                f.0.iter()
                    .map(|((m, p), c)| {
                        let k = m.0.iter().position(|&e| e == 1).expect("linear form");
                        (k, *p, c.clone())
                    })
                    .collect()
            })
            .collect()
    })[w]
}

/// Coefficients `C[k][m]` of `[w, d_q] = Σ C[k][m] x_k ∂_m`.
fn bracket_with_d(w: usize, q: usize) -> [[Rational; N]; N] {
    let mut c: [[Rational; N]; N] = Default::default();
    let (p1, p2) = PAIRS[q];
    for (k, p, x) in g1_terms(w) {
        let (r, s) = PAIRS[*p];
        for m in 0..N {
            let e = epsilon([m, r, s, p1, p2]);
            if e != 0 {
                c[*k][m] = &c[*k][m] + &(x * Rational::from_int(e));
            }
        }
    }
    c
}

/// `Σ C[k][m] E_km` as operator codes; the diagonal goes to `h_i`.
pub(crate) fn ops_of(c: &[[Rational; N]; N]) -> Vec<(u8, Rational)> {
    let mut out = Vec::new();
    for k in 0..N {
        for m in 0..N {
            if k != m && !c[k][m].is_zero() {
                out.push((1 + op_eab(k, m) as u8, c[k][m].clone()));
            }
        }
    }
    let mut acc = Rational::ZERO;
    for i in 0..N - 1 {
        acc = &acc + &c[i][i];
        if !acc.is_zero() {
            out.push((1 + op_h(i) as u8, acc.clone()));
        }
    }
    out
}

fn first_factor(u: &PBWMonomial) -> Option<(Option<usize>, Option<usize>, PBWMonomial)> {
    if let Some(i) = (0..N).find(|&i| u.del[i] > 0) {
        let mut rest = *u;
        rest.del[i] -= 1;
        return Some((Some(i), None, rest));
    }
    let q = u.d_factors().next()?;
    let mut rest = *u;
    rest.d &= !(1 << q);
    Some((None, Some(q), rest))
}

type Cache = RwLock<HashMap<(u8, PBWMonomial), OpTerms>>;

fn cache() -> &'static Cache {
    static C: OnceLock<Cache> = OnceLock::new();
    C.get_or_init(Default::default)
}

/// `w_k · (u ⊗ ·)` for the `k`-th `g_1` basis element, by peeling off the
/// first PBW factor: `w (y u') = [w, y] u' ± y (w u')`.
pub(crate) fn g1_apply(w: usize, u: &PBWMonomial) -> OpTerms {
    let key = (w as u8, *u);
    if let Some(v) = cache().read().unwrap().get(&key) {
        return v.clone();
    }
    let mut acc: HashMap<(PBWMonomial, u8), Rational> = HashMap::new();
    let mut add = |m: PBWMonomial, op: u8, c: Rational| {
        let e = acc.entry((m, op)).or_insert(Rational::ZERO);
        *e = &*e + &c;
    };
    if let Some((del, d, rest)) = first_factor(u) {
        let tail = g1_apply(w, &rest);
        match (del, d) {
            (Some(i), _) => {
                // [w, ∂_i] = −∂_i(w), a constant form
                for (k, p, c) in g1_terms(w) {
                    if *k == i {
                        for (m, x) in multiply_monomials(&PBWMonomial::d_pair(*p), &rest).iter() {
                            add(*m, 0, -(c * x));
                        }
                    }
                }
                // ∂ is even and central
                for (m, op, c) in tail.iter() {
                    let mut m2 = *m;
                    m2.del[i] += 1;
                    add(m2, *op, c.clone());
                }
            }
            (None, Some(q)) => {
                let c = bracket_with_d(w, q);
                for k in 0..N {
                    for m in 0..N {
                        if !c[k][m].is_zero() {
                            for (v, x) in eab_act_monomial(k, m, &rest).iter() {
                                add(*v, 0, &c[k][m] * x);
                            }
                        }
                    }
                }
                for (op, x) in ops_of(&c) {
                    add(rest, op, x);
                }
                // d is odd: the second term picks up a sign
                let dq = PBWMonomial::d_pair(q);
                for (m, op, x) in tail.iter() {
                    for (v, y) in multiply_monomials(&dq, m).iter() {
                        add(*v, *op, -(x * y));
                    }
                }
            }
            _ => unreachable!(),
        }
    }
    let mut v: Vec<(PBWMonomial, u8, Rational)> = acc
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|((m, op), c)| (m, op, c))
        .collect();
    v.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
    let v = Arc::new(v);
    cache().write().unwrap().insert(key, v.clone());
    v
}

/// `E_ab · (u ⊗ b)` as `(u', b', c)` terms.
pub(crate) fn eab_apply(
    a: usize,
    b: usize,
    u: &PBWMonomial,
    j: usize,
    module: &Sl5Module,
) -> Vec<(PBWMonomial, usize, Rational)> {
    let mut out: Vec<(PBWMonomial, usize, Rational)> = eab_act_monomial(a, b, u)
        .iter()
        .map(|(m, c)| (*m, j, c.clone()))
        .collect();
    for (k, c) in module.apply_op(op_eab(a, b), j).iter() {
        out.push((*u, *k, c.clone()));
    }
    out
}

/// Expands operator terms on a basis vector of `module`.
pub(crate) fn apply_terms(
    terms: &OpTerms,
    j: usize,
    module: &Sl5Module,
    mut f: impl FnMut(PBWMonomial, usize, Rational),
) {
    for (m, op, c) in terms.iter() {
        if *op == 0 {
            f(*m, j, c.clone());
        } else {
            for (k, x) in module.apply_op(*op as usize - 1, j).iter() {
                f(*m, *k, c * x);
            }
        }
    }
}
