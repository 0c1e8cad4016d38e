use e510::models::{check_nabla_squared, component, lambda, model, nabla, theta, Family};
use e510::sl5::{irreducible, poly::Poly, weyl_dim};
use e510::verma::{verify_morphism, VerifyOptions};

fn grid(max: u32) -> Vec<(u32, u32)> {
    (0..=max)
        .flat_map(|s| (0..=s).map(move |m| (m, s - m)))
        .collect()
}

#[test]
fn component_dimensions_match_weyl() {
    for f in Family::ALL {
        for (m, n) in grid(6) {
            let c = component(f, m, n);
            assert_eq!(c.dim() as u64, weyl_dim(lambda(f, m, n)), "{f} {m} {n}");
            assert_eq!(
                *c.module,
                *irreducible(lambda(f, m, n)).unwrap(),
                "{f} {m} {n}"
            );
        }
    }
}

#[test]
fn nabla_is_a_morphism_on_all_small_components() {
    for f in Family::ALL {
        for (m, n) in grid(6) {
            let nb = nabla(f, m, n).unwrap();
            let zero_expected = match f {
                Family::A => n == 0,
                Family::B => m == 0,
                Family::C => false,
            };
            assert_eq!(nb.zero_case, zero_expected, "{f} {m} {n}");
            assert_eq!(nb.morphism.is_zero(), zero_expected, "{f} {m} {n}");
            let r = verify_morphism(&nb.morphism, VerifyOptions::FAST).unwrap();
            assert!(
                r.passed(),
                "{f} {m} {n}: {:?}",
                r.g1.first().or(r.equivariance.first())
            );
        }
    }
}

#[test]
fn nabla_squared_vanishes() {
    for f in Family::ALL {
        for (m, n) in grid(5) {
            let r = check_nabla_squared(f, m, n).unwrap();
            assert!(r.holds(), "{f} {m} {n}: {r:?}");
        }
    }
}

#[test]
fn theta_b_kills_the_relation() {
    let b = model(Family::B);
    let mut q = Poly::new();
    for i in 0..5 {
        q.add_term(
            e510::sl5::poly::Mono::ONE
                .times_var(b.z(i, false))
                .times_var(b.z(i, true)),
            e510::exact::Rational::ONE,
        );
    }
    // without reduction, so the identity is checked in the free ring
    let ring = &b.ring;
    for i in 0..5 {
        for j in 0..5 {
            if i == j {
                continue;
            }
            let t1 = ring.times_var(b.z(i, true), &ring.derivative(b.z(j, false), &q));
            let t2 = ring.times_var(b.z(j, true), &ring.derivative(b.z(i, false), &q));
            assert!(t1.minus(&t2).is_zero());
            assert!(theta(Family::B, i, j, &q).unwrap().is_zero());
        }
    }
}
