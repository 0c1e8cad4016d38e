//! The action of `g_{-2} ⊕ g_{-1} ⊕ g_0 ⊕ g_1` on `M(V) = U_- ⊗ V`.
//!
//! Positive elements are moved to the right through a PBW word one factor at
//! a time using the bracket of `e510`; whatever reaches `1 ⊗ v` is killed
//! (`g_1`) or acts on `V` (`g_0`).

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::e510::{bracket, Monomial5, SuperElement, TwoForm, VectorField, N, PAIRS};
use crate::exact::{LinComb, Rational};
use crate::sl5::{op_eab, op_h, Sl5Module};
use crate::uea::{multiply, multiply_monomials, PBWElement, PBWMonomial};

use super::VermaVector;

/// `U_-` element paired with an operator code: 0 is the identity, `1 + k` is
/// the `k`-th `sl_5` operator (see [`crate::sl5::op_eab`]).
pub type OpTerm = LinComb<(PBWMonomial, u8)>;

/// Why an element cannot act.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ActError {
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("degree {0} is outside -2..=1")]
    DegreeOutOfRange(i32),
    #[error("degree-0 element is not a traceless linear field")]
    NotInG0,
}

fn gen_element(g: Gen) -> SuperElement {
    match g {
        Gen::Del(i) => SuperElement::even(VectorField::partial(i)),
        Gen::D(p) => SuperElement::odd(TwoForm::d(PAIRS[p].0, PAIRS[p].1)),
    }
}

#[derive(Clone, Copy, Debug)]
enum Gen {
    Del(usize),
    D(usize),
}

impl Gen {
    fn odd(self) -> bool {
        matches!(self, Gen::D(_))
    }
}

/// The PBW factors of a normal-ordered monomial, left to right.
fn word(m: &PBWMonomial) -> Vec<Gen> {
    let mut w = Vec::new();
    for i in 0..N {
        for _ in 0..m.del[i] {
            w.push(Gen::Del(i));
        }
    }
    w.extend(m.d_factors().map(Gen::D));
    w
}

fn monomial_of(w: &[Gen]) -> PBWMonomial {
    let mut m = PBWMonomial::ONE;
    for g in w {
        match *g {
            Gen::Del(i) => m.del[i] += 1,
            Gen::D(p) => m.d |= 1 << p,
        }
    }
    m
}

/// A constant element of `g_{-2} ⊕ g_{-1}` as an element of `U_-`.
pub fn negative_part(e: &SuperElement) -> Option<PBWElement> {
    let mut out = PBWElement::new();
    for ((m, i), c) in e.even.0.iter() {
        if *m != Monomial5::ONE {
            return None;
        }
        out.add_term(PBWMonomial::del(*i), c.clone());
    }
    for ((m, p), c) in e.odd.0.iter() {
        if *m != Monomial5::ONE {
            return None;
        }
        out.add_term(PBWMonomial::d_pair(*p), c.clone());
    }
    Some(out)
}

/// Operator expansion of a traceless linear field.
pub fn g0_ops(x: &VectorField) -> Result<Vec<(usize, Rational)>, ActError> {
    let c = x.linear_coefficients().ok_or(ActError::NotInG0)?;
    let trace: Rational = (0..N).map(|i| c[i][i].clone()).sum();
    if !trace.is_zero() {
        return Err(ActError::NotInG0);
    }
    let mut out = Vec::new();
    for a in 0..N {
        for b in 0..N {
            if a != b && !c[a][b].is_zero() {
                out.push((op_eab(a, b), c[a][b].clone()));
            }
        }
    }
    // Σ c_aa E_aa = Σ_i (c_11 + … + c_ii) h_i when the trace vanishes
    let mut partial = Rational::ZERO;
    for i in 0..N - 1 {
        partial = &partial + &c[i][i];
        if !partial.is_zero() {
            out.push((op_h(i), partial.clone()));
        }
    }
    Ok(out)
}

type AdCache = RwLock<HashMap<(VectorField, PBWMonomial), PBWElement>>;
type PosCache = RwLock<HashMap<(TwoForm, PBWMonomial), OpTerm>>;

fn ad_cache() -> &'static AdCache {
    static C: OnceLock<AdCache> = OnceLock::new();
    C.get_or_init(Default::default)
}

fn pos_cache() -> &'static PosCache {
    static C: OnceLock<PosCache> = OnceLock::new();
    C.get_or_init(Default::default)
}

/// `[x, u]` for `x ∈ g_0` and a PBW monomial `u`, by the Leibniz rule over
/// the factors of `u`.
pub fn ad_g0(x: &VectorField, m: &PBWMonomial) -> PBWElement {
    let key = (x.clone(), *m);
    if let Some(v) = ad_cache().read().unwrap().get(&key) {
        return v.clone();
    }
    let w = word(m);
    let xe = SuperElement::even(x.clone());
    let mut out = PBWElement::new();
    for k in 0..w.len() {
        let br = bracket(&xe, &gen_element(w[k]));
        if br.is_zero() {
            continue;
        }
        let mid = negative_part(&br).expect("g_0 preserves the negative part");
        let left = PBWElement::basis(monomial_of(&w[..k]));
        let right = PBWElement::basis(monomial_of(&w[k + 1..]));
        out.add_assign(&multiply(&multiply(&left, &mid), &right));
    }
    ad_cache().write().unwrap().insert(key, out.clone());
    out
}

/// `w · (u ⊗ ·)` for `w ∈ g_1`, as `Σ c · u' ⊗ op`.
pub fn g1_on_monomial(w: &TwoForm, m: &PBWMonomial) -> OpTerm {
    let key = (w.clone(), *m);
    if let Some(v) = pos_cache().read().unwrap().get(&key) {
        return v.clone();
    }
    let word = word(m);
    let we = SuperElement::odd(w.clone());
    let mut out = OpTerm::new();
    let mut sign = Rational::ONE;
    for k in 0..word.len() {
        let y = word[k];
        let br = bracket(&we, &gen_element(y));
        if !br.is_zero() {
            let prefix = monomial_of(&word[..k]);
            let suffix = monomial_of(&word[k + 1..]);
            if !br.even.is_zero() {
                // [w, d] ∈ g_0 acts on the rest
                let x = &br.even;
                let ad = ad_g0(x, &suffix);
                for (u, c) in ad.iter() {
                    for (v, c2) in multiply_monomials(&prefix, u).iter() {
                        out.add_term((*v, 0), &sign * &(c * c2));
                    }
                }
                let ops = g0_ops(x).expect("[g_1, g_-1] lies in g_0");
                for (v, c2) in multiply_monomials(&prefix, &suffix).iter() {
                    for (op, c) in &ops {
                        out.add_term((*v, 1 + *op as u8), &sign * &(c * c2));
                    }
                }
            }
            if !br.odd.is_zero() {
                // [w, ∂] ∈ g_{-1} multiplies in place
                let mid = negative_part(&SuperElement::odd(br.odd.clone()))
                    .expect("[g_1, g_-2] lies in g_-1");
                let prod = multiply(
                    &multiply(&PBWElement::basis(prefix), &mid),
                    &PBWElement::basis(suffix),
                );
                for (v, c) in prod.iter() {
                    out.add_term((*v, 0), &sign * c);
                }
            }
        }
        if y.odd() {
            sign = -sign;
        }
    }
    pos_cache().write().unwrap().insert(key, out.clone());
    out
}

fn push_op(
    out: &mut VermaVector,
    module: &Sl5Module,
    u: PBWMonomial,
    op: u8,
    b: usize,
    c: &Rational,
) {
    if op == 0 {
        out.add_term((u, b), c.clone());
    } else {
        for (j, x) in module.apply_op(op as usize - 1, b).iter() {
            out.add_term((u, *j), c * x);
        }
    }
}

/// Homogeneous degree of `w`, if any.
pub fn element_degree(w: &SuperElement) -> Result<i32, ActError> {
    let ds = w.degrees();
    match ds.as_slice() {
        [d] => Ok(*d),
        [] => Ok(0),
        _ => Err(ActError::NotHomogeneous),
    }
}

/// `w · v` for `w` homogeneous of degree `−2..=1`.
pub fn act(w: &SuperElement, v: &VermaVector, module: &Sl5Module) -> Result<VermaVector, ActError> {
    let deg = element_degree(w)?;
    let mut out = VermaVector::new();
    if w.is_zero() {
        return Ok(out);
    }
    match deg {
        -2 | -1 => {
            let left = negative_part(w).expect("constant element");
            for ((u, b), c) in v.iter() {
                for (m, c2) in multiply(&left, &PBWElement::basis(*u)).iter() {
                    out.add_term((*m, *b), c * c2);
                }
            }
        }
        0 => {
            let ops = g0_ops(&w.even)?;
            for ((u, b), c) in v.iter() {
                for (m, c2) in ad_g0(&w.even, u).iter() {
                    out.add_term((*m, *b), c * c2);
                }
                for (op, c2) in &ops {
                    push_op(&mut out, module, *u, 1 + *op as u8, *b, &(c * c2));
                }
            }
        }
        1 => {
            for ((u, b), c) in v.iter() {
                for ((m, op), c2) in g1_on_monomial(&w.odd, u).iter() {
                    push_op(&mut out, module, *m, *op, *b, &(c * c2));
                }
            }
        }
        d => return Err(ActError::DegreeOutOfRange(d)),
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sl5::{irreducible, Weight};

    fn t() -> TwoForm {
        TwoForm::term(Monomial5::var(4), 3, 4, Rational::ONE)
    }

    #[test]
    fn t_on_d12_gives_x5_d3() {
        // x5 d45 · (d12 ⊗ a) = 1 ⊗ (x5 ∂3) a
        let r = g1_on_monomial(&t(), &PBWMonomial::d_pair(0));
        assert_eq!(r, OpTerm::basis((PBWMonomial::ONE, 1 + op_eab(4, 2) as u8)));
        assert!(g1_on_monomial(&t(), &PBWMonomial::ONE).is_zero());
    }

    #[test]
    fn g0_ops_of_cartan() {
        let h = crate::e510::cartan(2);
        assert_eq!(g0_ops(&h).unwrap(), vec![(op_h(2), Rational::ONE)]);
        assert_eq!(g0_ops(&VectorField::linear(0, 0)), Err(ActError::NotInG0));
    }

    #[test]
    fn ad_matches_table_action() {
        let m = PBWMonomial::new([1, 0, 2, 0, 0], &[0, 4, 9]);
        for a in 0..N {
            for b in 0..N {
                let x = VectorField::linear(a, b);
                assert_eq!(
                    ad_g0(&x, &m),
                    crate::uea::eab_act_monomial(a, b, &m),
                    "{a}{b}"
                );
            }
        }
    }

    #[test]
    fn rejects_bad_degrees() {
        let m = irreducible(Weight::ZERO).unwrap();
        let v = VermaVector::basis((PBWMonomial::ONE, 0));
        let x2 = SuperElement::even(VectorField::term(
            Monomial5::var(0).mul(&Monomial5::var(1)),
            2,
            Rational::ONE,
        ));
        assert_eq!(act(&x2, &v, &m), Err(ActError::DegreeOutOfRange(2)));
        let mixed = SuperElement::even(VectorField::partial(0).plus(&VectorField::linear(0, 1)));
        assert_eq!(act(&mixed, &v, &m), Err(ActError::NotHomogeneous));
    }
}
