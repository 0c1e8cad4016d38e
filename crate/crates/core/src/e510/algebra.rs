use std::fmt;

use super::forms::{TwoForm, VectorField};
use super::monomial::Monomial5;
use crate::exact::{LinComb, Rational};

/// Element of `W_5 ⋉ Ω²(5)`: an even vector-field part plus an odd 2-form part.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SuperElement {
    pub even: VectorField,
    pub odd: TwoForm,
}

/// Parity of a homogeneous element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

/// Degree of `x^α ∂_i` under `deg x = 2`, `deg ∂ = −2`.
pub fn field_degree(m: &Monomial5) -> i32 {
    2 * m.degree() as i32 - 2
}

/// Degree of `x^α d_ij` under `deg x = 2`, `deg d = −1`.
pub fn form_degree(m: &Monomial5) -> i32 {
    2 * m.degree() as i32 - 1
}

impl SuperElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn even(v: VectorField) -> Self {
        SuperElement {
            even: v,
            odd: TwoForm::zero(),
        }
    }

    pub fn odd(w: TwoForm) -> Self {
        SuperElement {
            even: VectorField::zero(),
            odd: w,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    /// Parity if the element is nonzero and purely even or purely odd.
    pub fn parity(&self) -> Option<Parity> {
        match (self.even.is_zero(), self.odd.is_zero()) {
            (false, true) => Some(Parity::Even),
            (true, false) => Some(Parity::Odd),
            _ => None,
        }
    }

    /// Degree if the element is nonzero and homogeneous.
    pub fn degree(&self) -> Option<i32> {
        let mut degs = self
            .even
            .0
            .keys()
            .map(|(m, _)| field_degree(m))
            .chain(self.odd.0.keys().map(|(m, _)| form_degree(m)));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn plus(&self, o: &Self) -> Self {
        SuperElement {
            even: self.even.plus(&o.even),
            odd: self.odd.plus(&o.odd),
        }
    }

    pub fn minus(&self, o: &Self) -> Self {
        SuperElement {
            even: self.even.minus(&o.even),
            odd: self.odd.minus(&o.odd),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        SuperElement {
            even: self.even.scale(c),
            odd: self.odd.scale(c),
        }
    }

    /// Homogeneous part of degree `k`.
    pub fn grade_component(&self, k: i32) -> SuperElement {
        SuperElement {
            even: VectorField(self.even.0.filter(|(m, _)| field_degree(m) == k)),
            odd: TwoForm(self.odd.0.filter(|(m, _)| form_degree(m) == k)),
        }
    }

    /// Degrees occurring in the element, ascending.
    pub fn degrees(&self) -> Vec<i32> {
        let mut out: Vec<i32> = self
            .even
            .0
            .keys()
            .map(|(m, _)| field_degree(m))
            .chain(self.odd.0.keys().map(|(m, _)| form_degree(m)))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Membership in `E(5,10)`: divergence-free even part and closed odd part.
    pub fn in_e510(&self) -> bool {
        self.even.divergence().is_zero() && self.odd.is_closed()
    }

    fn parts(&self) -> [(Parity, SuperElement); 2] {
        [
            (Parity::Even, SuperElement::even(self.even.clone())),
            (Parity::Odd, SuperElement::odd(self.odd.clone())),
        ]
    }
}

/// The super-bracket of `Ẽ(5,10)`.
///
/// Even/even is the vector-field bracket, even/odd the Lie derivative, and
/// odd/odd the wedge product followed by the contraction isomorphism.
pub fn bracket(a: &SuperElement, b: &SuperElement) -> SuperElement {
    let mut even = a.even.bracket(&b.even);
    let mut odd = a.even.lie_derivative(&b.odd);
    odd = odd.minus(&b.even.lie_derivative(&a.odd));
    if !a.odd.is_zero() && !b.odd.is_zero() {
        even = even.plus(&a.odd.wedge(&b.odd).to_vector_field());
    }
    SuperElement { even, odd }
}

/// `[a,[b,c]] − [[a,b],c] − (−1)^{|a||b|}[b,[a,c]]`, summed over parity parts.
pub fn jacobi_defect(a: &SuperElement, b: &SuperElement, c: &SuperElement) -> SuperElement {
    let mut out = SuperElement::zero();
    for (pa, a) in a.parts() {
        if a.is_zero() {
            continue;
        }
        for (pb, b) in b.parts() {
            if b.is_zero() {
                continue;
            }
            for (_, c) in c.parts() {
                if c.is_zero() {
                    continue;
                }
                let lhs = bracket(&a, &bracket(&b, &c));
                let r1 = bracket(&bracket(&a, &b), &c);
                let r2 = bracket(&b, &bracket(&a, &c));
                let r2 = if pa.bit() & pb.bit() == 1 {
                    r2.scale(&-Rational::ONE)
                } else {
                    r2
                };
                out = out.plus(&lhs.minus(&r1).minus(&r2));
            }
        }
    }
    out
}

impl From<VectorField> for SuperElement {
    fn from(v: VectorField) -> Self {
        SuperElement::even(v)
    }
}

impl From<TwoForm> for SuperElement {
    fn from(w: TwoForm) -> Self {
        SuperElement::odd(w)
    }
}

impl fmt::Display for SuperElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.even.is_zero(), self.odd.is_zero()) {
            (true, true) => f.write_str("0"),
            (false, true) => write!(f, "{}", self.even),
            (true, false) => write!(f, "{}", self.odd),
            (false, false) => write!(f, "{} + {}", self.even, self.odd),
        }
    }
}

impl fmt::Debug for SuperElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Polynomial in `x_1..x_5`, used for divergences and coefficients.
pub type Poly5 = LinComb<Monomial5>;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::e510::monomial::epsilon;

    fn d(i: usize, j: usize) -> SuperElement {
        TwoForm::d(i, j).into()
    }

    #[test]
    fn constant_form_brackets() {
        assert_eq!(bracket(&d(0, 1), &d(2, 3)), VectorField::partial(4).into());
        assert_eq!(
            bracket(&d(0, 1), &d(2, 4)),
            VectorField::partial(3).scale(&-Rational::ONE).into()
        );
        assert!(bracket(&d(0, 1), &d(0, 2)).is_zero());
    }

    #[test]
    fn t_bracket_d12() {
        let t: SuperElement = TwoForm::term(Monomial5::var(4), 3, 4, Rational::ONE).into();
        let expect: SuperElement = VectorField::linear(4, 2).into();
        assert_eq!(bracket(&t, &d(0, 1)), expect);
    }

    #[test]
    fn epsilon_formula_all_pairs() {
        for j in 0..5 {
            for k in j + 1..5 {
                for l in 0..5 {
                    for m in l + 1..5 {
                        let mut expect = VectorField::zero();
                        for i in 0..5 {
                            let e = epsilon([i, j, k, l, m]);
                            if e != 0 {
                                expect = expect.plus(&VectorField::partial(i).scale(&e.into()));
                            }
                        }
                        assert_eq!(bracket(&d(j, k), &d(l, m)), expect.into());
                    }
                }
            }
        }
    }

    #[test]
    fn grading() {
        let a: SuperElement = VectorField::partial(0)
            .plus(&VectorField::linear(0, 1))
            .into();
        assert_eq!(a.grade_component(-2), VectorField::partial(0).into());
        assert_eq!(d(0, 1).grade_component(-1), d(0, 1));
        assert_eq!(d(0, 1).degree(), Some(-1));
    }
}
