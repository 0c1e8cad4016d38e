//! Bases of the low graded pieces `g_{-2}, g_{-1}, g_0, g_1` of `E(5,10)`.

use std::sync::OnceLock;

use super::forms::{TwoForm, VectorField};
use super::monomial::{Monomial5, N, PAIRS};
use crate::exact::{nullspace, LinComb, Rational, SparseMatrix, SparseVec};

/// `g_{-2}`: the five `∂_i`.
pub fn g_minus2() -> Vec<VectorField> {
    (0..N).map(VectorField::partial).collect()
}

/// `g_{-1}`: the ten constant forms `d_ij`, `i < j`, in lex order.
pub fn g_minus1() -> Vec<TwoForm> {
    PAIRS.iter().map(|&(i, j)| TwoForm::d(i, j)).collect()
}

/// Cartan element `h_i = x_i ∂_i − x_{i+1} ∂_{i+1}`.
pub fn cartan(i: usize) -> VectorField {
    VectorField::linear(i, i).minus(&VectorField::linear(i + 1, i + 1))
}

/// `g_0 ≅ sl_5`: the 20 fields `x_a ∂_b` (`a ≠ b`) followed by `h_1..h_4`.
pub fn g0() -> Vec<VectorField> {
    let mut out = Vec::new();
    for a in 0..N {
        for b in 0..N {
            if a != b {
                out.push(VectorField::linear(a, b));
            }
        }
    }
    out.extend((0..N - 1).map(cartan));
    out
}

/// Linear 2-form from coordinates indexed `5 * pair + variable`.
fn linear_form(v: &SparseVec) -> TwoForm {
    TwoForm(LinComb::from_terms(
        v.iter()
            .map(|(c, x)| ((Monomial5::var(c % N), c / N), x.clone())),
    ))
}

/// `g_1`: closed 2-forms with linear coefficients, as the canonical kernel of
/// `d` on the 50-dimensional space of linear 2-forms. There are 40 of them,
/// each a weight vector.
pub fn g1() -> &'static [TwoForm] {
    static BASIS: OnceLock<Vec<TwoForm>> = OnceLock::new();
    BASIS.get_or_init(|| {
        // columns: linear forms x_k d_{pair}; rows: constant 3-forms
        let mut triples: Vec<[usize; 3]> = Vec::new();
        let mut cols = Vec::new();
        for pair in 0..PAIRS.len() {
            for k in 0..N {
                let e = linear_form(&SparseVec::unit(N * pair + k)).exterior_derivative();
                let col: Vec<(usize, Rational)> =
                    e.0.iter()
                        .map(|((_, t), c)| {
                            let r = match triples.iter().position(|x| x == t) {
                                Some(r) => r,
                                None => {
                                    triples.push(*t);
                                    triples.len() - 1
                                }
                            };
                            (r, c.clone())
                        })
                        .collect();
                cols.push(SparseVec::from_pairs(col));
            }
        }
        let m = SparseMatrix::from_columns(triples.len(), &cols);
        nullspace(&m).iter().map(linear_form).collect()
    })
}

/// Coordinates of a linear closed 2-form in the [`g1`] basis.
pub fn g1_coordinates(w: &TwoForm) -> Option<Vec<Rational>> {
    let coords = w.linear_coordinates()?;
    let basis = g1();
    // every basis vector has a distinct leading coordinate equal to one
    let mut rest = SparseVec::from_dense(&coords);
    let mut out = vec![Rational::ZERO; basis.len()];
    for (n, b) in basis.iter().enumerate() {
        let bv = SparseVec::from_dense(&b.linear_coordinates().unwrap());
        let (lead, _) = bv.first().unwrap().clone();
        let c = rest.get(lead);
        if !c.is_zero() {
            rest = rest.add_scaled(&-&c, &bv);
        }
        out[n] = c;
    }
    rest.is_zero().then_some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::e510::algebra::{bracket, SuperElement};

    #[test]
    fn g1_has_forty_closed_elements() {
        let b = g1();
        assert_eq!(b.len(), 40);
        assert!(b.iter().all(|w| w.is_closed()));
    }

    #[test]
    fn g1_contains_t_and_coordinates_roundtrip() {
        let t = TwoForm::term(Monomial5::var(4), 3, 4, Rational::ONE);
        let c = g1_coordinates(&t).unwrap();
        let mut back = TwoForm::zero();
        for (w, x) in g1().iter().zip(&c) {
            back = back.plus(&w.scale(x));
        }
        assert_eq!(back, t);
        let bad = TwoForm::term(Monomial5::var(0), 3, 4, Rational::ONE);
        assert!(g1_coordinates(&bad).is_none());
    }

    #[test]
    fn g1_brackets_land_in_g0() {
        for w in g1() {
            for dd in g_minus1() {
                let v = bracket(&SuperElement::odd(w.clone()), &SuperElement::odd(dd));
                assert!(v.odd.is_zero());
                assert!(v.even.linear_coefficients().is_some());
                assert!(v.even.divergence().is_zero());
            }
        }
    }

    #[test]
    fn g0_size() {
        assert_eq!(g0().len(), 24);
        assert!(g0().iter().all(|x| x.divergence().is_zero()));
    }
}
