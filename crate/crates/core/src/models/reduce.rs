//! Canonical forms in the quotient rings of families B and C.

use std::collections::HashMap;
use std::sync::RwLock;

use crate::e510::N;
use crate::exact::Rational;
use crate::sl5::poly::{Mono, Poly, Reducer, Ring};

/// Family B: eliminate `z5 z*5` with `Σ z_i z*_i = 0`.
pub struct BReducer {
    z: [usize; N],
    zs: [usize; N],
    cache: RwLock<HashMap<Mono, Poly>>,
}

impl BReducer {
    pub fn new(ring: &Ring) -> Self {
        BReducer {
            z: std::array::from_fn(|i| ring.var_of(false, &[i])),
            zs: std::array::from_fn(|i| ring.var_of(true, &[i])),
            cache: RwLock::new(HashMap::new()),
        }
    }

    fn normal(&self, m: &Mono) -> Poly {
        if let Some(p) = self.cache.read().unwrap().get(m) {
            return p.clone();
        }
        let (a, b) = (self.z[N - 1], self.zs[N - 1]);
        let out = if m.exp(a) > 0 && m.exp(b) > 0 {
            let rest = m.div_var(a).unwrap().div_var(b).unwrap();
            let mut p = Poly::new();
            for i in 0..N - 1 {
                let t = rest.times_var(self.z[i]).times_var(self.zs[i]);
                p.add_scaled(&Rational::from_int(-1), &self.normal(&t));
            }
            p
        } else {
            Poly::basis(*m)
        };
        self.cache.write().unwrap().insert(*m, out.clone());
        out
    }
}

impl Reducer for BReducer {
    fn reduce(&self, p: &Poly) -> Poly {
        let mut out = Poly::new();
        for (m, c) in p.iter() {
            out.add_scaled(c, &self.normal(m));
        }
        out
    }
}

/// Family C: straightening of products of `x*` and `z*`.
///
/// Write `p_ab = x*_ab` and `q_a = z*_a`. A monomial is standard when its
/// `p`-factors form a chain under the componentwise order and every
/// `q_x p_yz` has `y ≤ x`. Non-standard pairs are rewritten by
/// `p_ad p_bc = p_ac p_bd − p_ab p_cd` and `q_a p_bc = q_b p_ac − q_c p_ab`
/// (`a < b < c < d`).
pub struct CReducer {
    q: [usize; N],
    p: HashMap<(usize, usize), usize>,
    pairs: Vec<(usize, usize, usize)>,
    cache: RwLock<HashMap<Mono, Poly>>,
}

enum Violation {
    /// `p_ad p_bc`.
    Pp(usize, usize, usize, usize),
    /// `q_a p_bc`.
    Qp(usize, usize, usize),
}

impl CReducer {
    pub fn new(ring: &Ring) -> Self {
        let mut p = HashMap::new();
        let mut pairs = Vec::new();
        for a in 0..N {
            for b in a + 1..N {
                let v = ring.var_of(true, &[a, b]);
                p.insert((a, b), v);
                pairs.push((v, a, b));
            }
        }
        CReducer {
            q: std::array::from_fn(|i| ring.var_of(true, &[i])),
            p,
            pairs,
            cache: RwLock::new(HashMap::new()),
        }
    }

    fn violation(&self, m: &Mono) -> Option<Violation> {
        let ps: Vec<(usize, usize)> = self
            .pairs
            .iter()
            .filter(|(v, _, _)| m.exp(*v) > 0)
            .map(|&(_, a, b)| (a, b))
            .collect();
        for &(a, d) in &ps {
            for &(b, c) in &ps {
                if a < b && c < d {
                    return Some(Violation::Pp(a, b, c, d));
                }
            }
        }
        for x in 0..N {
            if m.exp(self.q[x]) == 0 {
                continue;
            }
            for &(y, z) in &ps {
                if x < y {
                    return Some(Violation::Qp(x, y, z));
                }
            }
        }
        None
    }

    fn normal(&self, m: &Mono) -> Poly {
        if let Some(p) = self.cache.read().unwrap().get(m) {
            return p.clone();
        }
        let p = |a: usize, b: usize| self.p[&(a, b)];
        let neg = Rational::from_int(-1);
        let out = match self.violation(m) {
            None => Poly::basis(*m),
            Some(Violation::Pp(a, b, c, d)) => {
                let rest = m.div_var(p(a, d)).unwrap().div_var(p(b, c)).unwrap();
                let mut out = self.normal(&rest.times_var(p(a, c)).times_var(p(b, d)));
                out.add_scaled(
                    &neg,
                    &self.normal(&rest.times_var(p(a, b)).times_var(p(c, d))),
                );
                out
            }
            Some(Violation::Qp(a, b, c)) => {
                let rest = m.div_var(self.q[a]).unwrap().div_var(p(b, c)).unwrap();
                let mut out = self.normal(&rest.times_var(self.q[b]).times_var(p(a, c)));
                out.add_scaled(
                    &neg,
                    &self.normal(&rest.times_var(self.q[c]).times_var(p(a, b))),
                );
                out
            }
        };
        self.cache.write().unwrap().insert(*m, out.clone());
        out
    }

    pub fn is_standard(&self, m: &Mono) -> bool {
        self.violation(m).is_none()
    }
}

impl Reducer for CReducer {
    fn reduce(&self, p: &Poly) -> Poly {
        let mut out = Poly::new();
        for (m, c) in p.iter() {
            out.add_scaled(c, &self.normal(m));
        }
        out
    }
}
