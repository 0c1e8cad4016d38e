//! The enveloping algebra `U_- = U(g_{-1} ⊕ g_{-2})` in the PBW basis
//! `∂^α · d_{S}` with `S` a strictly increasing list of pairs.
//!
//! Degrees use the natural (sign-flipped) grading: `deg d_ij = 1`, `deg ∂_i = 2`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use crate::e510::{epsilon, pair_index, N, PAIRS};
use crate::exact::{LinComb, Rational};

/// Normal-ordered PBW monomial `∂^α · d_{S}`; `S` is a bitmask over [`PAIRS`].
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct PBWMonomial {
    pub del: [u8; N],
    pub d: u16,
}

impl PBWMonomial {
    pub const ONE: PBWMonomial = PBWMonomial { del: [0; N], d: 0 };

    pub fn new(del: [u8; N], pairs: &[usize]) -> Self {
        let mut d = 0u16;
        for &p in pairs {
            d |= 1 << p;
        }
        PBWMonomial { del, d }
    }

    pub fn del(i: usize) -> Self {
        let mut del = [0; N];
        del[i] = 1;
        PBWMonomial { del, d: 0 }
    }

    /// `d_ij` for `i < j`.
    pub fn d_pair(pair: usize) -> Self {
        PBWMonomial {
            del: [0; N],
            d: 1 << pair,
        }
    }

    /// Indices into [`PAIRS`] of the d-factors, ascending.
    pub fn d_factors(&self) -> impl Iterator<Item = usize> + '_ {
        (0..PAIRS.len()).filter(move |p| self.d & (1 << p) != 0)
    }

    pub fn d_len(&self) -> u32 {
        self.d.count_ones()
    }

    pub fn del_len(&self) -> u32 {
        self.del.iter().map(|&e| e as u32).sum()
    }

    /// Natural degree `2|α| + |S|`.
    pub fn degree(&self) -> u32 {
        2 * self.del_len() + self.d_len()
    }

    /// Parity of the monomial (number of odd factors mod 2).
    pub fn parity(&self) -> u32 {
        self.d_len() % 2
    }

    /// Weight in ε-coordinates: `d_ij ↦ ε_i + ε_j`, `∂_i ↦ −ε_i`.
    pub fn weight(&self) -> [i64; N] {
        let mut w = [0i64; N];
        for (i, &e) in self.del.iter().enumerate() {
            w[i] -= e as i64;
        }
        for p in self.d_factors() {
            let (i, j) = PAIRS[p];
            w[i] += 1;
            w[j] += 1;
        }
        w
    }
}

impl Ord for PBWMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.del.cmp(&other.del).then_with(|| {
            // lex order on the ascending pair lists
            let a: Vec<usize> = self.d_factors().collect();
            let b: Vec<usize> = other.d_factors().collect();
            a.cmp(&b)
        })
    }
}

impl PartialOrd for PBWMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PBWMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == PBWMonomial::ONE {
            return f.write_str("1");
        }
        let mut parts = Vec::new();
        for (i, &e) in self.del.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("∂{}", i + 1)),
                _ => parts.push(format!("∂{}^{e}", i + 1)),
            }
        }
        for p in self.d_factors() {
            let (i, j) = PAIRS[p];
            parts.push(format!("d{}{}", i + 1, j + 1));
        }
        f.write_str(&parts.join("·"))
    }
}

impl fmt::Debug for PBWMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Element of `U_-`.
pub type PBWElement = LinComb<PBWMonomial>;

/// Weight of a PBW monomial in ε-coordinates.
pub fn weight_of(m: &PBWMonomial) -> [i64; N] {
    m.weight()
}

/// A generator of `U_-` as written in a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    Del(usize),
    /// `d_ij` for any `i, j` (`d_ji = −d_ij`, `d_ii = 0`).
    D(usize, usize),
}

/// `[d_p, d_q]` for pairs `p, q`: `Σ_m ε_{m p q} ∂_m`, at most one term.
fn d_bracket(p: usize, q: usize) -> Option<(usize, i64)> {
    let (i, j) = PAIRS[p];
    let (k, l) = PAIRS[q];
    (0..N).find_map(|m| {
        let e = epsilon([m, i, j, k, l]);
        (e != 0).then_some((m, e))
    })
}

/// Terms `(∂-shift, d-set, coefficient)` of `d_S · d_t`.
type AppendTerms = Vec<(Option<usize>, u16, i64)>;

fn append_table() -> &'static Vec<AppendTerms> {
    static TABLE: OnceLock<Vec<AppendTerms>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let n = PAIRS.len();
        let mut table: Vec<AppendTerms> = vec![Vec::new(); (1 << n) * n];
        // fill in order of increasing |S| so recursive entries are ready
        let mut sets: Vec<u16> = (0..1u16 << n).collect();
        sets.sort_by_key(|s| s.count_ones());
        for s in sets {
            for t in 0..n {
                let terms = append_compute(s, t, &table);
                table[s as usize * n + t] = terms;
            }
        }
        table
    })
}

fn append_compute(s: u16, t: usize, table: &[AppendTerms]) -> AppendTerms {
    let n = PAIRS.len();
    if s == 0 {
        return vec![(None, 1 << t, 1)];
    }
    let top = 15 - s.leading_zeros() as usize;
    match top.cmp(&t) {
        Ordering::Less => vec![(None, s | (1 << t), 1)],
        Ordering::Equal => Vec::new(),
        Ordering::Greater => {
            // d_S d_t = −(d_{S'} d_t) d_top + [d_t, d_top] d_{S'}
            let rest = s & !(1 << top);
            let mut out: HashMap<(Option<usize>, u16), i64> = HashMap::new();
            for &(shift, set, c) in &table[rest as usize * n + t] {
                // every element of `set` is below `top`
                *out.entry((shift, set | (1 << top))).or_default() -= c;
            }
            if let Some((m, e)) = d_bracket(t, top) {
                *out.entry((Some(m), rest)).or_default() += e;
            }
            let mut v: AppendTerms = out
                .into_iter()
                .filter(|(_, c)| *c != 0)
                .map(|((a, b), c)| (a, b, c))
                .collect();
            v.sort();
            v
        }
    }
}

/// `m · d_t` in normal order.
fn append_d(m: &PBWMonomial, t: usize, c: &Rational, out: &mut PBWElement) {
    let n = PAIRS.len();
    for &(shift, set, k) in &append_table()[m.d as usize * n + t] {
        let mut del = m.del;
        if let Some(i) = shift {
            del[i] += 1;
        }
        out.add_term(PBWMonomial { del, d: set }, c * Rational::from_int(k));
    }
}

fn times_d(u: &PBWElement, t: usize) -> PBWElement {
    let mut out = PBWElement::new();
    for (m, c) in u.iter() {
        append_d(m, t, c, &mut out);
    }
    out
}

fn times_del(u: &PBWElement, i: usize) -> PBWElement {
    PBWElement::from_terms(u.iter().map(|(m, c)| {
        let mut m = *m;
        m.del[i] += 1;
        (m, c.clone())
    }))
}

/// Product of two PBW monomials.
pub fn multiply_monomials(a: &PBWMonomial, b: &PBWMonomial) -> PBWElement {
    let mut del = a.del;
    for (x, y) in del.iter_mut().zip(b.del) {
        *x += y;
    }
    let mut cur = PBWElement::term(PBWMonomial { del, d: a.d }, Rational::ONE);
    for t in b.d_factors() {
        cur = times_d(&cur, t);
    }
    cur
}

/// Product in `U_-`.
pub fn multiply(u: &PBWElement, v: &PBWElement) -> PBWElement {
    let mut out = PBWElement::new();
    for (a, ca) in u.iter() {
        for (b, cb) in v.iter() {
            out.add_scaled(&(ca * cb), &multiply_monomials(a, b));
        }
    }
    out
}

/// Rewrites a word of generators into normal order.
pub fn normal_order(word: &[Generator]) -> PBWElement {
    let mut cur = PBWElement::basis(PBWMonomial::ONE);
    for g in word {
        cur = match *g {
            Generator::Del(i) => times_del(&cur, i),
            Generator::D(i, j) => match pair_index(i, j) {
                None => return PBWElement::new(),
                Some((p, s)) => times_d(&cur, p).scale(&Rational::from_int(s)),
            },
        };
    }
    cur
}

/// `E_ab · d_p` where `E_ab` is the field `x_a ∂_b`:
/// `[x_a∂_b, d_ij] = δ_bi d_aj + δ_bj d_ia`.
fn eab_on_d(a: usize, b: usize, p: usize) -> Vec<(usize, i64)> {
    let (i, j) = PAIRS[p];
    let mut out = Vec::new();
    if b == i {
        if let Some((q, s)) = pair_index(a, j) {
            out.push((q, s));
        }
    }
    if b == j {
        if let Some((q, s)) = pair_index(i, a) {
            out.push((q, s));
        }
    }
    out
}

/// Action of `E_ab = x_a ∂_b` (any `a, b`, diagonal included) on a PBW
/// monomial, extended to `U_-` as an even derivation.
pub fn eab_act_monomial(a: usize, b: usize, m: &PBWMonomial) -> PBWElement {
    let mut out = PBWElement::new();
    // [x_a∂_b, ∂_i] = −δ_ai ∂_b, and ∂ is central
    if m.del[a] > 0 {
        let mut del = m.del;
        del[a] -= 1;
        del[b] += 1;
        out.add_term(
            PBWMonomial { del, d: m.d },
            Rational::from_int(-(m.del[a] as i64)),
        );
    }
    let factors: Vec<usize> = m.d_factors().collect();
    for (pos, &p) in factors.iter().enumerate() {
        for (q, s) in eab_on_d(a, b, p) {
            let prefix = PBWMonomial {
                del: m.del,
                d: factors[..pos].iter().fold(0, |acc, &x| acc | (1 << x)),
            };
            let mut cur = PBWElement::term(prefix, Rational::from_int(s));
            cur = times_d(&cur, q);
            for &r in &factors[pos + 1..] {
                cur = times_d(&cur, r);
            }
            out.add_assign(&cur);
        }
    }
    out
}

/// Action of `x_a ∂_b` on `U_-`.
pub fn eab_act(a: usize, b: usize, u: &PBWElement) -> PBWElement {
    u.map_linear(|m| eab_act_monomial(a, b, m))
}

/// Error for [`g0_act`] inputs that are not in `sl_5`.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum G0ActError {
    #[error("field is not linear")]
    NotLinear,
    #[error("field is not traceless")]
    NotTraceless,
}

/// Action of a traceless linear vector field `Σ c_ab x_a ∂_b` on `U_-`.
pub fn g0_act(x: &crate::e510::VectorField, u: &PBWElement) -> Result<PBWElement, G0ActError> {
    let coeffs = x.linear_coefficients().ok_or(G0ActError::NotLinear)?;
    let trace: Rational = (0..N).map(|i| coeffs[i][i].clone()).sum();
    if !trace.is_zero() {
        return Err(G0ActError::NotTraceless);
    }
    let mut out = PBWElement::new();
    for (a, row) in coeffs.iter().enumerate() {
        for (b, c) in row.iter().enumerate() {
            if !c.is_zero() {
                out.add_scaled(c, &eab_act(a, b, u));
            }
        }
    }
    Ok(out)
}

/// PBW basis of one natural degree together with a reverse index.
#[derive(Debug)]
pub struct GradedBasis {
    pub monomials: Vec<PBWMonomial>,
    index: HashMap<PBWMonomial, usize>,
}

impl GradedBasis {
    fn build(k: u32) -> Self {
        let mut monomials = Vec::new();
        for dels in 0..=k / 2 {
            let dlen = k - 2 * dels;
            if dlen as usize > PAIRS.len() {
                continue;
            }
            for alpha in crate::e510::Monomial5::of_degree(dels) {
                for s in 0u16..1 << PAIRS.len() {
                    if s.count_ones() == dlen {
                        monomials.push(PBWMonomial { del: alpha.0, d: s });
                    }
                }
            }
        }
        monomials.sort();
        let index = monomials.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        GradedBasis { monomials, index }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn index_of(&self, m: &PBWMonomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

const CACHED_DEGREES: usize = 16;

/// The PBW monomials of natural degree `k`, sorted (∂-exponents lex, then
/// the d-list lex). Cached for `k < 16`.
pub fn graded_basis(k: u32) -> &'static GradedBasis {
    static CACHE: [OnceLock<GradedBasis>; CACHED_DEGREES] =
        [const { OnceLock::new() }; CACHED_DEGREES];
    assert!((k as usize) < CACHED_DEGREES, "degree {k} too large");
    CACHE[k as usize].get_or_init(|| GradedBasis::build(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(i: usize, j: usize) -> Generator {
        Generator::D(i, j)
    }

    #[test]
    fn d34_d12() {
        let u = normal_order(&[d(2, 3), d(0, 1)]);
        let expect = PBWElement::from_terms([
            (PBWMonomial::new([0; 5], &[0, 7]), -Rational::ONE),
            (PBWMonomial::del(4), Rational::ONE),
        ]);
        assert_eq!(u, expect);
    }

    #[test]
    fn squares_vanish() {
        assert!(normal_order(&[d(0, 1), d(0, 1)]).is_zero());
        assert!(normal_order(&[d(1, 0), d(0, 1)]).is_zero());
        assert!(normal_order(&[d(2, 2)]).is_zero());
    }

    #[test]
    fn del_is_central() {
        let a = normal_order(&[Generator::Del(0), d(0, 1)]);
        let b = normal_order(&[d(0, 1), Generator::Del(0)]);
        assert_eq!(a, b);
    }

    #[test]
    fn shared_index_products() {
        let u = normal_order(&[d(0, 1), d(0, 2)]);
        let v = normal_order(&[d(0, 3), d(0, 4)]);
        assert_eq!(
            multiply(&u, &v),
            PBWElement::basis(PBWMonomial::new([0; 5], &[0, 1, 2, 3]))
        );
    }

    #[test]
    fn basis_sizes() {
        assert_eq!(graded_basis(0).len(), 1);
        assert_eq!(graded_basis(1).len(), 10);
        assert_eq!(graded_basis(4).len(), 450);
    }

    #[test]
    fn g0_examples() {
        use crate::e510::{cartan, VectorField};
        let u = PBWElement::basis(PBWMonomial::new([0; 5], &[0, 1, 2, 3]));
        let got = g0_act(&VectorField::linear(1, 0), &u).unwrap();
        let expect = normal_order(&[d(0, 1), d(1, 2), d(0, 3), d(0, 4)])
            .plus(&normal_order(&[d(0, 1), d(0, 2), d(1, 3), d(0, 4)]))
            .plus(&normal_order(&[d(0, 1), d(0, 2), d(0, 3), d(1, 4)]));
        assert_eq!(got, expect);
        let d45 = PBWElement::basis(PBWMonomial::d_pair(9));
        assert!(g0_act(&cartan(3), &d45).unwrap().is_zero());
        let del1 = PBWElement::basis(PBWMonomial::del(0));
        assert_eq!(
            g0_act(&VectorField::linear(0, 1), &del1).unwrap(),
            PBWElement::basis(PBWMonomial::del(1)).neg()
        );
        assert_eq!(
            g0_act(&VectorField::linear(0, 0), &del1),
            Err(G0ActError::NotTraceless)
        );
    }

    #[test]
    fn weights() {
        assert_eq!(PBWMonomial::d_pair(0).weight(), [1, 1, 0, 0, 0]);
        assert_eq!(PBWMonomial::del(4).weight(), [0, 0, 0, 0, -1]);
        assert_eq!(
            PBWMonomial::new([0; 5], &[0, 1, 2, 3]).weight(),
            [4, 1, 1, 1, 1]
        );
    }
}
