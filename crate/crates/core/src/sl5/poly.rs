//! Polynomial rings whose variables span exterior powers of `C^5` or their
//! duals, with the induced `gl_5` action by derivations.

use std::fmt;

use crate::e510::N;
use crate::exact::{LinComb, Rational};

/// Type of a variable: a basis vector `e_I` of `Λ^{|I|} C^5`, or the dual
/// basis vector `e_I^*`. `I` is a bitmask over `{0..5}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VarKind {
    Wedge(u8),
    Dual(u8),
}

impl VarKind {
    pub fn mask(&self) -> u8 {
        match *self {
            VarKind::Wedge(m) | VarKind::Dual(m) => m,
        }
    }

    /// ε-weight of the variable.
    pub fn weight(&self) -> [i64; N] {
        let s = match self {
            VarKind::Wedge(_) => 1,
            VarKind::Dual(_) => -1,
        };
        std::array::from_fn(|i| if self.mask() & (1 << i) != 0 { s } else { 0 })
    }

    fn label(&self) -> String {
        let idx: String = (0..N)
            .filter(|i| self.mask() & (1 << i) != 0)
            .map(|i| char::from(b'1' + i as u8))
            .collect();
        let single = self.mask().count_ones() == 1;
        match (self, single) {
            (VarKind::Wedge(_), true) => format!("z{idx}"),
            (VarKind::Dual(_), true) => format!("z*{idx}"),
            (VarKind::Wedge(_), false) => format!("x{idx}"),
            (VarKind::Dual(_), false) => format!("x*{idx}"),
        }
    }
}

/// `e_I` with `b ∈ I` replaced by `a`: sign is `(−1)^{#{k ∈ I strictly between a and b}}`.
fn replace(mask: u8, a: usize, b: usize) -> Option<(u8, i64)> {
    if mask & (1 << b) == 0 {
        return None;
    }
    if a == b {
        return Some((mask, 1));
    }
    if mask & (1 << a) != 0 {
        return None;
    }
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    let between = (lo + 1..hi).filter(|k| mask & (1 << k) != 0).count();
    let sign = if between % 2 == 0 { 1 } else { -1 };
    Some(((mask & !(1 << b)) | (1 << a), sign))
}

/// Monomial with up to 30 variables, 4 bits of exponent each.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mono(pub u128);

impl Mono {
    pub const ONE: Mono = Mono(0);

    pub fn exp(&self, v: usize) -> u32 {
        ((self.0 >> (4 * v)) & 0xf) as u32
    }

    pub fn times_var(&self, v: usize) -> Mono {
        assert!(self.exp(v) < 15, "exponent overflow");
        Mono(self.0 + (1u128 << (4 * v)))
    }

    /// `m / x_v`, if `x_v` divides `m`.
    pub fn div_var(&self, v: usize) -> Option<Mono> {
        (self.exp(v) > 0).then(|| Mono(self.0 - (1u128 << (4 * v))))
    }

    pub fn pow(v: usize, e: u32) -> Mono {
        assert!(e < 16, "exponent overflow");
        Mono((e as u128) << (4 * v))
    }

    pub fn mul(&self, o: &Mono) -> Mono {
        let mut out = *self;
        for v in 0..30 {
            for _ in 0..o.exp(v) {
                out = out.times_var(v);
            }
        }
        out
    }

    pub fn degree(&self) -> u32 {
        (0..30).map(|v| self.exp(v)).sum()
    }

    /// Variables with positive exponent, as `(variable, exponent)`.
    pub fn support(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        (0..30).map(|v| (v, self.exp(v))).filter(|(_, e)| *e > 0)
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mono({:#x})", self.0)
    }
}

pub type Poly = LinComb<Mono>;

/// Polynomial ring with typed variables.
#[derive(Clone, Debug)]
pub struct Ring {
    pub vars: Vec<VarKind>,
    /// `table[a*5+b][v]`: `E_ab x_v = sign · x_w` as `(w, sign)`.
    table: Vec<Vec<Option<(usize, i64)>>>,
}

impl Ring {
    pub fn new(vars: Vec<VarKind>) -> Self {
        assert!(vars.len() <= 30);
        let mut table = vec![vec![None; vars.len()]; N * N];
        for a in 0..N {
            for b in 0..N {
                for (v, kind) in vars.iter().enumerate() {
                    let img = match *kind {
                        VarKind::Wedge(m) => {
                            replace(m, a, b).map(|(m2, s)| (VarKind::Wedge(m2), s))
                        }
                        // E_ab e_I^* = −(e_I^* ∘ E_ab), which swaps the roles of a and b
                        VarKind::Dual(m) => replace(m, b, a).map(|(m2, s)| (VarKind::Dual(m2), -s)),
                    };
                    table[a * N + b][v] = img.map(|(k, s)| {
                        let w = vars
                            .iter()
                            .position(|x| *x == k)
                            .expect("ring is not closed under gl_5");
                        (w, s)
                    });
                }
            }
        }
        Ring { vars, table }
    }

    /// All variables `e_I` with `|I| = k`, in lexicographic order of `I`.
    pub fn wedge_vars(k: u32) -> Vec<VarKind> {
        Self::masks(k).into_iter().map(VarKind::Wedge).collect()
    }

    pub fn dual_vars(k: u32) -> Vec<VarKind> {
        Self::masks(k).into_iter().map(VarKind::Dual).collect()
    }

    fn masks(k: u32) -> Vec<u8> {
        let mut out: Vec<u8> = (0u8..32).filter(|m| m.count_ones() == k).collect();
        // lexicographic on the sorted index list
        out.sort_by_key(|m| (0..N).filter(|i| m & (1 << i) != 0).collect::<Vec<_>>());
        out
    }

    pub fn var(&self, kind: VarKind) -> usize {
        self.vars
            .iter()
            .position(|x| *x == kind)
            .unwrap_or_else(|| panic!("variable {kind:?} not in ring"))
    }

    /// Variable `e_I` or `e_I^*` from a 0-based index list.
    pub fn var_of(&self, dual: bool, idx: &[usize]) -> usize {
        let mask = idx.iter().fold(0u8, |m, &i| m | (1 << i));
        self.var(if dual {
            VarKind::Dual(mask)
        } else {
            VarKind::Wedge(mask)
        })
    }

    pub fn weight_of(&self, m: &Mono) -> [i64; N] {
        let mut w = [0; N];
        for (v, e) in m.support() {
            let vw = self.vars[v].weight();
            for i in 0..N {
                w[i] += vw[i] * e as i64;
            }
        }
        w
    }

    /// `E_ab` on a monomial, as a derivation.
    pub fn eab_mono(&self, a: usize, b: usize, m: &Mono, c: &Rational, out: &mut Poly) {
        let row = &self.table[a * N + b];
        for (v, e) in m.support() {
            if let Some((w, s)) = row[v] {
                let base = m.div_var(v).unwrap().times_var(w);
                out.add_term(base, c * Rational::from_int(s * e as i64));
            }
        }
    }

    /// `E_ab = x_a ∂_b` acting on a polynomial.
    pub fn eab(&self, a: usize, b: usize, p: &Poly) -> Poly {
        let mut out = Poly::new();
        for (m, c) in p.iter() {
            self.eab_mono(a, b, m, c, &mut out);
        }
        out
    }

    /// `∂p/∂x_v`.
    pub fn derivative(&self, v: usize, p: &Poly) -> Poly {
        let mut out = Poly::new();
        for (m, c) in p.iter() {
            let e = m.exp(v);
            if e > 0 {
                out.add_term(m.div_var(v).unwrap(), c * Rational::from_int(e as i64));
            }
        }
        out
    }

    pub fn times_var(&self, v: usize, p: &Poly) -> Poly {
        Poly::from_terms(p.iter().map(|(m, c)| (m.times_var(v), c.clone())))
    }

    pub fn mul(&self, p: &Poly, q: &Poly) -> Poly {
        let mut out = Poly::new();
        for (a, x) in p.iter() {
            for (b, y) in q.iter() {
                out.add_term(a.mul(b), x * y);
            }
        }
        out
    }

    pub fn format(&self, p: &Poly) -> String {
        if p.is_zero() {
            return "0".into();
        }
        let terms: Vec<String> = p
            .iter()
            .map(|(m, c)| {
                let mono: Vec<String> = m
                    .support()
                    .map(|(v, e)| {
                        let l = self.vars[v].label();
                        if e == 1 {
                            l
                        } else {
                            format!("{l}^{e}")
                        }
                    })
                    .collect();
                let mono = if mono.is_empty() {
                    "1".to_string()
                } else {
                    mono.join("*")
                };
                if c.is_one() {
                    mono
                } else {
                    format!("({c}){mono}")
                }
            })
            .collect();
        terms.join(" + ")
    }
}

/// Canonical-form map for a quotient ring; the identity for subspaces.
pub trait Reducer: Sync {
    fn reduce(&self, p: &Poly) -> Poly;
}

/// No relations.
pub struct NoRelations;

impl Reducer for NoRelations {
    fn reduce(&self, p: &Poly) -> Poly {
        p.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vector_action() {
        let r = Ring::new(Ring::wedge_vars(1));
        let z1 = Poly::basis(Mono::pow(0, 1));
        // E_21 z1 = z2
        assert_eq!(r.eab(1, 0, &z1), Poly::basis(Mono::pow(1, 1)));
        assert!(r.eab(0, 1, &z1).is_zero());
    }

    #[test]
    fn wedge_signs() {
        let r = Ring::new(Ring::wedge_vars(2));
        let x13 = r.var_of(false, &[0, 2]);
        let x23 = r.var_of(false, &[1, 2]);
        let x12 = r.var_of(false, &[0, 1]);
        // E_21 x13 = x23 ; E_32 x12 = e1∧e3 = x13 ; E_31 x12 = e3∧e2 = −x23
        assert_eq!(
            r.eab(1, 0, &Poly::basis(Mono::pow(x13, 1))),
            Poly::basis(Mono::pow(x23, 1))
        );
        assert_eq!(
            r.eab(2, 1, &Poly::basis(Mono::pow(x12, 1))),
            Poly::basis(Mono::pow(x13, 1))
        );
        assert_eq!(
            r.eab(2, 0, &Poly::basis(Mono::pow(x12, 1))),
            Poly::basis(Mono::pow(x23, 1)).neg()
        );
    }

    #[test]
    fn dual_action() {
        let r = Ring::new(Ring::dual_vars(1));
        // E_ab z*_k = −δ_ak z*_b
        let z5 = Poly::basis(Mono::pow(4, 1));
        assert_eq!(r.eab(4, 3, &z5), Poly::basis(Mono::pow(3, 1)).neg());
        assert!(r.eab(3, 4, &z5).is_zero());
    }

    #[test]
    fn commutator_is_respected() {
        // [E_ab, E_bc] = E_ac on a random-ish polynomial in the 30-variable ring
        let mut vars = Ring::wedge_vars(1);
        vars.extend(Ring::wedge_vars(2));
        vars.extend(Ring::dual_vars(2));
        let r = Ring::new(vars);
        let p = Poly::from_terms([
            (Mono::pow(0, 2).mul(&Mono::pow(7, 1)), Rational::ONE),
            (
                Mono::pow(12, 1).mul(&Mono::pow(19, 2)),
                Rational::from_int(3),
            ),
        ]);
        for (a, b, c) in [(0, 1, 2), (3, 1, 4), (2, 4, 0)] {
            let lhs = r
                .eab(a, b, &r.eab(b, c, &p))
                .minus(&r.eab(b, c, &r.eab(a, b, &p)));
            assert_eq!(lhs, r.eab(a, c, &p));
        }
    }
}
