use e510::exact::{Echelon, SparseVec};
use e510::models::{nabla, Family};
use e510::search::{
    candidate_targets, solve, solve_inhomogeneous, SearchProblem, SolveError, SolveOptions,
};
use e510::sl5::Weight;
use e510::verma::{verify_morphism, VerifyOptions, VermaVector};
use std::collections::BTreeMap;

fn w(a: i64, b: i64, c: i64, d: i64) -> Weight {
    Weight::new(a, b, c, d)
}

fn problem(source: Weight, target: Weight, degree: u32) -> SearchProblem {
    SearchProblem {
        source,
        target,
        degree,
    }
}

fn dim(p: SearchProblem) -> usize {
    solve(&p, SolveOptions::default()).unwrap().dim()
}

/// Whether `v` lies in the span of `basis`.
fn in_span(v: &VermaVector, basis: &[VermaVector]) -> bool {
    let mut index = BTreeMap::new();
    let mut to_sparse = |x: &VermaVector| {
        SparseVec::from_pairs(x.iter().map(|(k, c)| {
            let len = index.len();
            (*index.entry(*k).or_insert(len), c.clone())
        }))
    };
    let rows: Vec<SparseVec> = basis.iter().map(&mut to_sparse).collect();
    let target = to_sparse(v);
    let mut ech = Echelon::new(index.len());
    for r in &rows {
        ech.insert(r);
    }
    ech.contains(&target)
}

#[test]
fn nabla_c_cell() {
    let s = solve(
        &problem(w(0, 0, 1, 0), w(0, 0, 2, 0), 1),
        SolveOptions::default(),
    )
    .unwrap();
    assert_eq!(s.dim(), 1);
    let n = nabla(Family::C, 1, 0).unwrap();
    assert!(in_span(&n.morphism.table[0], &s.hwv_images));
    // raising n4 instead is ruled out by weights
    assert_eq!(dim(problem(w(0, 0, 1, 0), w(0, 0, 1, 1), 1)), 0);
}

#[test]
fn nabla_b_cell() {
    assert_eq!(dim(problem(w(1, 0, 0, 0), w(0, 0, 0, 1), 1)), 1);
}

#[test]
fn empty_cells() {
    assert_eq!(dim(problem(w(2, 0, 0, 0), w(1, 1, 0, 0), 1)), 0);
    assert_eq!(dim(problem(w(1, 0, 0, 0), w(1, 0, 0, 0), 1)), 0);
}

#[test]
fn witnesses_pass_full_verification() {
    for (a, b) in [
        (w(0, 0, 0, 0), w(0, 0, 1, 0)),
        (w(1, 1, 0, 0), w(1, 0, 0, 0)),
        (w(2, 0, 0, 1), w(1, 0, 0, 2)),
    ] {
        let s = solve(&problem(a, b, 1), SolveOptions::default()).unwrap();
        assert_eq!(s.dim(), 1, "{a}→{b}");
        for m in &s.morphisms {
            let r = verify_morphism(m, VerifyOptions::FULL).unwrap();
            assert!(r.passed() && !r.is_zero, "{a}→{b}");
        }
    }
}

#[test]
fn nabla_images_lie_in_the_solution_space() {
    for f in Family::ALL {
        for m in 0..=2u32 {
            for n in 0..=2 - m {
                let nb = nabla(f, m, n).unwrap();
                if nb.zero_case {
                    continue;
                }
                let a = nb.morphism.source_weight().unwrap();
                let b = nb.morphism.target_weight().unwrap();
                let s = solve(&problem(a, b, 1), SolveOptions::default()).unwrap();
                assert!(in_span(&nb.morphism.table[0], &s.hwv_images), "{f} {m} {n}");
            }
        }
    }
}

#[test]
fn dimension_does_not_depend_on_unknown_order() {
    let cells = [
        problem(w(0, 0, 1, 0), w(0, 0, 1, 1), 1),
        problem(w(1, 0, 0, 1), w(0, 0, 0, 2), 1),
        problem(w(1, 1, 0, 0), w(0, 0, 0, 1), 2),
        problem(w(0, 1, 0, 0), w(0, 1, 0, 0), 2),
    ];
    for p in cells {
        let base = dim(p);
        for seed in 0..3 {
            let s = solve(
                &p,
                SolveOptions {
                    shuffle: Some(seed),
                    ..Default::default()
                },
            )
            .unwrap();
            assert_eq!(s.dim(), base, "{p:?} seed {seed}");
        }
    }
}

#[test]
fn only_homogeneous_solutions() {
    for (a, b) in [
        (w(0, 0, 0, 0), w(0, 0, 1, 0)),
        (w(1, 1, 0, 0), w(0, 0, 1, 1)),
        (w(0, 1, 0, 0), w(0, 0, 1, 0)),
    ] {
        let p = problem(a, b, 1);
        let mixed = solve_inhomogeneous(&p, 3).unwrap();
        let per_degree: usize = (1..=3).map(|k| dim(problem(a, b, k))).sum();
        assert_eq!(mixed.len(), per_degree, "{a}→{b}");
        for v in &mixed {
            let degrees: std::collections::BTreeSet<u32> =
                v.keys().map(|(u, _)| u.degree()).collect();
            assert_eq!(degrees.len(), 1, "{a}→{b}");
        }
    }
}

#[test]
fn cap_is_explicit() {
    let p = problem(w(1, 1, 0, 0), w(0, 0, 1, 1), 3);
    match solve(
        &p,
        SolveOptions {
            cap: 10,
            shuffle: None,
        },
    ) {
        Err(SolveError::Infeasible { unknowns, cap }) => assert!(unknowns > cap),
        other => panic!("expected infeasible, got {:?}", other.map(|s| s.dim())),
    }
}

#[test]
fn trivial_source_has_one_candidate() {
    assert_eq!(candidate_targets(Weight::ZERO, 1).len(), 1);
}

proptest::proptest! {
    #![proptest_config(proptest::prelude::ProptestConfig::with_cases(24))]

    #[test]
    fn shuffled_unknowns_give_the_same_dimension(seed in proptest::prelude::any::<u64>(), cell in 0usize..4) {
        let p = [
            problem(w(1, 1, 0, 0), w(1, 0, 0, 0), 1),
            problem(w(2, 0, 0, 1), w(1, 0, 0, 2), 1),
            problem(w(1, 0, 0, 1), w(0, 0, 1, 2), 2),
            problem(w(1, 0, 1, 0), w(0, 1, 0, 0), 1),
        ][cell];
        let s = solve(&p, SolveOptions { shuffle: Some(seed), ..Default::default() }).unwrap();
        proptest::prop_assert_eq!(s.dim(), dim(p));
    }
}
