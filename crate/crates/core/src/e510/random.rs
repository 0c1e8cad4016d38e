//! Random homogeneous elements of `E(5,10)` for property checks.

use rand::Rng;

use super::algebra::SuperElement;
use super::forms::{TwoForm, VectorField};
use super::monomial::{Monomial5, N};
use crate::exact::Rational;

fn small<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let c = rng.gen_range(-3i64..=3);
        if c != 0 {
            return Rational::from_int(c);
        }
    }
}

fn pick<R: Rng>(rng: &mut R, deg: u32) -> Monomial5 {
    let all = Monomial5::of_degree(deg);
    all[rng.gen_range(0..all.len())]
}

/// A random divergence-free field whose coefficients have degree `p`.
pub fn divergence_free<R: Rng>(rng: &mut R, p: u32, terms: usize) -> VectorField {
    let mut out = VectorField::zero();
    for _ in 0..terms {
        if rng.gen_bool(0.5) {
            // x^α ∂_i with α_i = 0
            let i = rng.gen_range(0..N);
            let mut m = pick(rng, p);
            if m.0[i] != 0 {
                continue;
            }
            m.0[i] = 0;
            out = out.plus(&VectorField::term(m, i, small(rng)));
        } else {
            // ∂_j f ∂_i − ∂_i f ∂_j
            let f = pick(rng, p + 1);
            let i = rng.gen_range(0..N);
            let j = rng.gen_range(0..N);
            let c = small(rng);
            if let Some((e, m)) = f.derivative(j) {
                out = out.plus(&VectorField::term(m, i, &c * Rational::from_int(e)));
            }
            if let Some((e, m)) = f.derivative(i) {
                out = out.minus(&VectorField::term(m, j, &c * Rational::from_int(e)));
            }
        }
    }
    out
}

/// A random closed 2-form whose coefficients have degree `p`, built as
/// a sum of exact forms `d(f dx_i)`.
pub fn closed_form<R: Rng>(rng: &mut R, p: u32, terms: usize) -> TwoForm {
    let mut out = TwoForm::zero();
    for _ in 0..terms {
        let f = pick(rng, p + 1);
        let i = rng.gen_range(0..N);
        let c = small(rng);
        for k in 0..N {
            if let Some((e, m)) = f.derivative(k) {
                out = out.plus(&TwoForm::term(m, k, i, &c * Rational::from_int(e)));
            }
        }
    }
    out
}

/// A random homogeneous element of `E(5,10)` with coefficient degree at most `max_p`.
pub fn e510_element<R: Rng>(rng: &mut R, max_p: u32) -> SuperElement {
    let p = rng.gen_range(0..=max_p);
    let terms = rng.gen_range(1..=3);
    if rng.gen_bool(0.5) {
        SuperElement::even(divergence_free(rng, p, terms))
    } else {
        SuperElement::odd(closed_form(rng, p, terms))
    }
}
