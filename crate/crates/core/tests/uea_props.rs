use e510::e510::{bracket, g0, SuperElement, TwoForm, VectorField, PAIRS};
use e510::exact::Rational;
use e510::uea::{g0_act, graded_basis, multiply, normal_order, Generator, PBWElement, PBWMonomial};
use proptest::prelude::*;

/// Coefficients of `(1+t)^10 / (1−t²)^5` up to `t^max`.
fn pbw_series(max: usize) -> Vec<u64> {
    let mut c = vec![0u64; max + 1];
    c[0] = 1;
    for _ in 0..10 {
        for k in (1..=max).rev() {
            c[k] += c[k - 1];
        }
    }
    for _ in 0..5 {
        for k in 2..=max {
            c[k] += c[k - 2];
        }
    }
    c
}

#[test]
fn basis_sizes_follow_generating_function() {
    let series = pbw_series(6);
    for k in 0..=6 {
        assert_eq!(graded_basis(k as u32).len() as u64, series[k], "degree {k}");
    }
    let b = graded_basis(4);
    let pure_d = b.monomials.iter().filter(|m| m.del_len() == 0).count();
    let pure_del = b.monomials.iter().filter(|m| m.d_len() == 0).count();
    assert_eq!(
        (pure_d, pure_del, b.len() - pure_d - pure_del),
        (210, 15, 225)
    );
}

#[test]
fn graded_basis_is_sorted_and_unique() {
    let b = graded_basis(5);
    assert!(b.monomials.windows(2).all(|w| w[0] < w[1]));
    for (i, m) in b.monomials.iter().enumerate() {
        assert_eq!(b.index_of(m), Some(i));
    }
}

#[test]
fn normal_order_is_idempotent_on_pbw_monomials() {
    for m in &graded_basis(4).monomials {
        let mut word = Vec::new();
        for (i, &e) in m.del.iter().enumerate() {
            word.extend(std::iter::repeat(Generator::Del(i)).take(e as usize));
        }
        word.extend(m.d_factors().map(|p| Generator::D(PAIRS[p].0, PAIRS[p].1)));
        assert_eq!(normal_order(&word), PBWElement::basis(*m));
    }
}

/// The action of `g_0` on generators agrees with the superalgebra bracket.
#[test]
fn g0_action_on_generators_matches_bracket() {
    for x in g0() {
        for i in 0..5 {
            let got = g0_act(&x, &PBWElement::basis(PBWMonomial::del(i))).unwrap();
            let br = bracket(&x.clone().into(), &VectorField::partial(i).into());
            let mut expect = PBWElement::new();
            for ((_, k), c) in br.even.0.iter() {
                expect.add_term(PBWMonomial::del(*k), c.clone());
            }
            assert_eq!(got, expect);
        }
        for (p, &(i, j)) in PAIRS.iter().enumerate() {
            let got = g0_act(&x, &PBWElement::basis(PBWMonomial::d_pair(p))).unwrap();
            let br = bracket(&x.clone().into(), &SuperElement::odd(TwoForm::d(i, j)));
            let mut expect = PBWElement::new();
            for ((_, q), c) in br.odd.0.iter() {
                expect.add_term(PBWMonomial::d_pair(*q), c.clone());
            }
            assert_eq!(got, expect);
        }
    }
}

#[test]
fn cartan_acts_by_weight() {
    use e510::e510::cartan;
    for m in &graded_basis(4).monomials {
        let w = m.weight();
        for i in 0..4 {
            let got = g0_act(&cartan(i), &PBWElement::basis(*m)).unwrap();
            let expect = PBWElement::term(*m, Rational::from_int(w[i] - w[i + 1]));
            assert_eq!(got, expect);
        }
    }
}

fn element(seed: &[(usize, u8, i64)]) -> PBWElement {
    let mut out = PBWElement::new();
    for &(deg, idx, c) in seed {
        let b = graded_basis(deg as u32);
        let m = b.monomials[idx as usize % b.len()];
        out.add_term(m, Rational::from_int(c));
    }
    out
}

fn seed() -> impl Strategy<Value = Vec<(usize, u8, i64)>> {
    prop::collection::vec((0usize..=3, any::<u8>(), -3i64..=3), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn associativity(a in seed(), b in seed(), c in seed()) {
        let (a, b, c) = (element(&a), element(&b), element(&c));
        prop_assert_eq!(multiply(&multiply(&a, &b), &c), multiply(&a, &multiply(&b, &c)));
    }

    #[test]
    fn leibniz(a in seed(), b in seed(), x in 0usize..24) {
        let x = &g0()[x];
        let (a, b) = (element(&a), element(&b));
        let lhs = g0_act(x, &multiply(&a, &b)).unwrap();
        let rhs = multiply(&g0_act(x, &a).unwrap(), &b).plus(&multiply(&a, &g0_act(x, &b).unwrap()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn degrees_add(i in 0usize..450, j in 0usize..45) {
        let a = graded_basis(4).monomials[i];
        let b = graded_basis(2).monomials[j];
        let p = multiply(&PBWElement::basis(a), &PBWElement::basis(b));
        prop_assert!(p.keys().all(|m| m.degree() == 6));
    }

    #[test]
    fn supercommutation_up_to_shorter_terms(i in 0usize..120, j in 0usize..45) {
        let a = graded_basis(3).monomials[i];
        let b = graded_basis(2).monomials[j];
        let ab = multiply(&PBWElement::basis(a), &PBWElement::basis(b));
        let ba = multiply(&PBWElement::basis(b), &PBWElement::basis(a));
        let sign = if a.parity() * b.parity() == 1 { -Rational::ONE } else { Rational::ONE };
        let diff = ab.minus(&ba.scale(&sign));
        let top = a.d_len() + b.d_len();
        prop_assert!(diff.keys().all(|m| m.d_len() < top));
    }
}
