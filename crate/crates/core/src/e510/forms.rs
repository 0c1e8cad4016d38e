//! Polynomial vector fields and differential forms in five variables.
//!
//! All indices are 0-based; `Display` prints them 1-based.

use std::fmt;

use super::monomial::{pair_index, permutation_sign, Monomial5, N, PAIRS};
use crate::exact::{LinComb, Rational};

/// `Σ c · x^α ∂_i`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VectorField(pub LinComb<(Monomial5, usize)>);

/// `Σ c · x^α d_{ij}` with `i < j` (stored as an index into [`PAIRS`]).
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct TwoForm(pub LinComb<(Monomial5, usize)>);

/// `Σ c · x^α dx_i ∧ dx_j ∧ dx_k` with `i < j < k`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct ThreeForm(pub LinComb<(Monomial5, [usize; 3])>);

/// `Σ c · x^α dx_1 ∧ … ∧ \widehat{dx_i} ∧ … ∧ dx_5`, keyed by the omitted index `i`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct FourForm(pub LinComb<(Monomial5, usize)>);

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

impl VectorField {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(m: Monomial5, i: usize, c: Rational) -> Self {
        VectorField(LinComb::term((m, i), c))
    }

    /// `∂_i`.
    pub fn partial(i: usize) -> Self {
        Self::term(Monomial5::ONE, i, Rational::ONE)
    }

    /// `x_a ∂_b`.
    pub fn linear(a: usize, b: usize) -> Self {
        Self::term(Monomial5::var(a), b, Rational::ONE)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn plus(&self, o: &Self) -> Self {
        VectorField(self.0.plus(&o.0))
    }

    pub fn minus(&self, o: &Self) -> Self {
        VectorField(self.0.minus(&o.0))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        VectorField(self.0.scale(c))
    }

    /// Coefficient polynomial `P_i` as `(monomial, coefficient)` pairs.
    pub fn component(&self, i: usize) -> impl Iterator<Item = (&Monomial5, &Rational)> {
        self.0
            .iter()
            .filter(move |((_, k), _)| *k == i)
            .map(|((m, _), c)| (m, c))
    }

    /// `div D = Σ_i ∂_i P_i`.
    pub fn divergence(&self) -> LinComb<Monomial5> {
        let mut out = LinComb::new();
        for ((m, i), c) in self.0.iter() {
            if let Some((e, dm)) = m.derivative(*i) {
                out.add_term(dm, c * &q(e));
            }
        }
        out
    }

    /// `D(f)` for a monomial `f`.
    pub fn apply_to_monomial(&self, f: &Monomial5) -> LinComb<Monomial5> {
        let mut out = LinComb::new();
        for ((m, i), c) in self.0.iter() {
            if let Some((e, df)) = f.derivative(*i) {
                out.add_term(m.mul(&df), c * &q(e));
            }
        }
        out
    }

    /// Vector-field bracket `[P∂_i, Q∂_j] = P ∂_i(Q) ∂_j − Q ∂_j(P) ∂_i`.
    pub fn bracket(&self, other: &VectorField) -> VectorField {
        let mut out = LinComb::new();
        for ((p, i), a) in self.0.iter() {
            for ((qm, j), b) in other.0.iter() {
                let ab = a * b;
                if let Some((e, dq)) = qm.derivative(*i) {
                    out.add_term((p.mul(&dq), *j), &ab * &q(e));
                }
                if let Some((e, dp)) = p.derivative(*j) {
                    out.add_term((qm.mul(&dp), *i), -(&ab * &q(e)));
                }
            }
        }
        VectorField(out)
    }

    /// Lie derivative `L_D ω` of a 2-form.
    pub fn lie_derivative(&self, omega: &TwoForm) -> TwoForm {
        let mut out = LinComb::new();
        for ((f, pair), c) in omega.0.iter() {
            let (i, j) = PAIRS[*pair];
            // D(f) dx_i ∧ dx_j
            for (m, v) in self.apply_to_monomial(f).iter() {
                out.add_term((*m, *pair), c * v);
            }
            for ((p, k), a) in self.0.iter() {
                // f d(P_i) ∧ dx_j, with P_i = a·p when k == i
                if *k == i {
                    for l in 0..N {
                        if let Some((e, dp)) = p.derivative(l) {
                            if let Some((idx, s)) = pair_index(l, j) {
                                out.add_term((f.mul(&dp), idx), c * a * q(e * s));
                            }
                        }
                    }
                }
                // f dx_i ∧ d(P_j)
                if *k == j {
                    for l in 0..N {
                        if let Some((e, dp)) = p.derivative(l) {
                            if let Some((idx, s)) = pair_index(i, l) {
                                out.add_term((f.mul(&dp), idx), c * a * q(e * s));
                            }
                        }
                    }
                }
            }
        }
        TwoForm(out)
    }

    /// Inverse of the contraction isomorphism: `D ↦ ι_D(dx_1 ∧ … ∧ dx_5)`.
    pub fn to_four_form(&self) -> FourForm {
        // ι_{∂_i} vol = (-1)^i · (form omitting i), 0-based
        FourForm(LinComb::from_terms(self.0.iter().map(|((m, i), c)| {
            let s = if i % 2 == 0 { c.clone() } else { -c };
            ((*m, *i), s)
        })))
    }

    /// Linear fields `Σ c_ab x_a ∂_b` as a 5×5 coefficient table, or `None`
    /// when some coefficient is not linear.
    pub fn linear_coefficients(&self) -> Option<[[Rational; N]; N]> {
        let mut out: [[Rational; N]; N] = Default::default();
        for ((m, b), c) in self.0.iter() {
            if m.degree() != 1 {
                return None;
            }
            let a = m.0.iter().position(|&e| e == 1).unwrap();
            out[a][*b] = c.clone();
        }
        Some(out)
    }
}

impl TwoForm {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `c · x^α d_{ij}`; `d_{ji} = −d_{ij}` and `d_{ii} = 0`.
    pub fn term(m: Monomial5, i: usize, j: usize, c: Rational) -> Self {
        match pair_index(i, j) {
            Some((idx, s)) => TwoForm(LinComb::term((m, idx), c * q(s))),
            None => Self::zero(),
        }
    }

    /// Constant form `d_{ij}`.
    pub fn d(i: usize, j: usize) -> Self {
        Self::term(Monomial5::ONE, i, j, Rational::ONE)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn plus(&self, o: &Self) -> Self {
        TwoForm(self.0.plus(&o.0))
    }

    pub fn minus(&self, o: &Self) -> Self {
        TwoForm(self.0.minus(&o.0))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TwoForm(self.0.scale(c))
    }

    /// Exterior derivative `d(f dx_i ∧ dx_j) = Σ_k ∂_k f dx_k ∧ dx_i ∧ dx_j`.
    pub fn exterior_derivative(&self) -> ThreeForm {
        let mut out = LinComb::new();
        for ((f, pair), c) in self.0.iter() {
            let (i, j) = PAIRS[*pair];
            for k in 0..N {
                if let Some((e, df)) = f.derivative(k) {
                    let s = permutation_sign(&[k, i, j]);
                    if s == 0 {
                        continue;
                    }
                    let mut idx = [k, i, j];
                    idx.sort();
                    out.add_term((df, idx), c * q(e * s));
                }
            }
        }
        ThreeForm(out)
    }

    pub fn is_closed(&self) -> bool {
        self.exterior_derivative().0.is_zero()
    }

    /// `ω ∧ ω'` as a 4-form.
    pub fn wedge(&self, other: &TwoForm) -> FourForm {
        let mut out = LinComb::new();
        for ((f, p1), a) in self.0.iter() {
            let (i, j) = PAIRS[*p1];
            for ((g, p2), b) in other.0.iter() {
                let (k, l) = PAIRS[*p2];
                let s = permutation_sign(&[i, j, k, l]);
                if s == 0 {
                    continue;
                }
                let omitted = (0..N).find(|x| ![i, j, k, l].contains(x)).unwrap();
                out.add_term((f.mul(g), omitted), a * b * q(s));
            }
        }
        FourForm(out)
    }

    /// Coefficients `(m, pair) -> c` restricted to linear monomials, as a
    /// dense vector of length 50 indexed `5 * pair + variable`.
    pub fn linear_coordinates(&self) -> Option<Vec<Rational>> {
        let mut out = vec![Rational::ZERO; 50];
        for ((m, pair), c) in self.0.iter() {
            if m.degree() != 1 {
                return None;
            }
            let k = m.0.iter().position(|&e| e == 1).unwrap();
            out[5 * pair + k] = c.clone();
        }
        Some(out)
    }
}

impl FourForm {
    /// `f · dx_1 ∧ … \widehat{dx_i} … ∧ dx_5`.
    pub fn term(m: Monomial5, omitted: usize, c: Rational) -> Self {
        FourForm(LinComb::term((m, omitted), c))
    }

    /// Contraction isomorphism: `f·(omitting i) ↦ (−1)^i f ∂_i` (0-based).
    pub fn to_vector_field(&self) -> VectorField {
        VectorField(LinComb::from_terms(self.0.iter().map(|((m, i), c)| {
            let s = if i % 2 == 0 { c.clone() } else { -c };
            ((*m, *i), s)
        })))
    }
}

fn fmt_terms<K: Ord + Clone>(
    f: &mut fmt::Formatter<'_>,
    terms: &LinComb<K>,
    mut label: impl FnMut(&K) -> String,
) -> fmt::Result {
    if terms.is_zero() {
        return f.write_str("0");
    }
    for (n, (k, c)) in terms.iter().enumerate() {
        if n > 0 {
            f.write_str(" + ")?;
        }
        if c.is_one() {
            write!(f, "{}", label(k))?;
        } else {
            write!(f, "({c}){}", label(k))?;
        }
    }
    Ok(())
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, &self.0, |(m, i)| {
            if *m == Monomial5::ONE {
                format!("∂{}", i + 1)
            } else {
                format!("{m}∂{}", i + 1)
            }
        })
    }
}

impl fmt::Debug for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for TwoForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, &self.0, |(m, p)| {
            let (i, j) = PAIRS[*p];
            if *m == Monomial5::ONE {
                format!("d{}{}", i + 1, j + 1)
            } else {
                format!("{m}d{}{}", i + 1, j + 1)
            }
        })
    }
}

impl fmt::Debug for TwoForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Debug for ThreeForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, &self.0, |(m, [i, j, k])| {
            format!("{m}dx{}dx{}dx{}", i + 1, j + 1, k + 1)
        })
    }
}

impl fmt::Debug for FourForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, &self.0, |(m, i)| format!("{m}·vol/dx{}", i + 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closedness() {
        assert!(TwoForm::d(3, 4).is_closed());
        assert!(TwoForm::term(Monomial5::var(4), 3, 4, Rational::ONE).is_closed());
        assert!(!TwoForm::term(Monomial5::var(0), 3, 4, Rational::ONE).is_closed());
    }

    #[test]
    fn contraction_signs() {
        // dx1∧dx2∧dx3∧dx4 -> +∂5 ; dx2∧dx3∧dx4∧dx5 -> +∂1
        assert_eq!(
            FourForm::term(Monomial5::ONE, 4, Rational::ONE).to_vector_field(),
            VectorField::partial(4)
        );
        assert_eq!(
            FourForm::term(Monomial5::ONE, 0, Rational::ONE).to_vector_field(),
            VectorField::partial(0)
        );
        assert_eq!(
            FourForm::term(Monomial5::ONE, 3, Rational::ONE).to_vector_field(),
            VectorField::partial(3).scale(&-Rational::ONE)
        );
    }

    #[test]
    fn divergence_of_linear_field() {
        let h = VectorField::linear(0, 0).minus(&VectorField::linear(1, 1));
        assert!(h.divergence().is_zero());
        assert!(!VectorField::linear(0, 0).divergence().is_zero());
    }
}
