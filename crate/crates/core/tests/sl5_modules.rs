use e510::exact::SparseVec;
use e510::sl5::{
    build_irreducible, dominant_weights, dual, hom_equivariant, irreducible, poly, tensor,
    weyl_dim, CyclicModule, Weight,
};

#[test]
fn all_small_irreducibles_match_weyl_dimension() {
    let weights = dominant_weights(4);
    assert_eq!(weights.len(), 70);
    let mut largest = 0;
    for w in weights {
        let m = irreducible(w).unwrap();
        assert_eq!(m.dim() as u64, weyl_dim(w), "{w}");
        largest = largest.max(m.dim());
    }
    assert_eq!(largest, 1176);
}

#[test]
fn relations_hold() {
    for w in dominant_weights(3) {
        irreducible(w).unwrap().check_relations().unwrap();
    }
}

#[test]
fn weight_spaces_are_weyl_symmetric() {
    for w in dominant_weights(3) {
        let m = irreducible(w).unwrap();
        for (mu, idx) in m.weight_spaces() {
            assert_eq!(
                m.weight_multiplicity(mu.longest_element()),
                idx.len(),
                "{w} {mu}"
            );
        }
    }
}

#[test]
fn unique_highest_weight_vector() {
    for w in dominant_weights(3) {
        let m = irreducible(w).unwrap();
        assert_eq!(
            m.decomposition().into_iter().collect::<Vec<_>>(),
            vec![(w, 1)]
        );
        assert_eq!(m.highest_weight_vectors(w), vec![SparseVec::unit(0)]);
    }
}

#[test]
fn tensor_products() {
    let v = irreducible(Weight::new(1, 0, 0, 0)).unwrap();
    let triv = irreducible(Weight::ZERO).unwrap();
    let l2 = irreducible(Weight::new(0, 1, 0, 0)).unwrap();
    let vt = tensor(&v, &triv);
    assert_eq!(
        vt.decomposition().into_iter().collect::<Vec<_>>(),
        vec![(Weight::new(1, 0, 0, 0), 1)]
    );
    assert_eq!(tensor(&l2, &v).dim(), 50);
    let ll = tensor(&l2, &l2);
    ll.check_relations().unwrap();
    let dec = ll.decomposition();
    assert_eq!(dec.values().sum::<usize>(), 3);
    let total: u64 = dec.iter().map(|(w, k)| weyl_dim(*w) * *k as u64).sum();
    assert_eq!(total, 100);
    assert_eq!(dec.get(&Weight::new(0, 2, 0, 0)), Some(&1));
    assert_eq!(dec.get(&Weight::new(1, 0, 1, 0)), Some(&1));
    assert_eq!(dec.get(&Weight::new(0, 0, 0, 1)), Some(&1));
    let vd = tensor(&v, &dual(&v));
    let dec = vd.decomposition();
    assert_eq!(dec.len(), 2);
    assert!(dec.contains_key(&Weight::new(1, 0, 0, 1)) && dec.contains_key(&Weight::ZERO));
}

#[test]
fn schur() {
    let v = irreducible(Weight::new(1, 0, 0, 0)).unwrap();
    let vs = irreducible(Weight::new(0, 0, 0, 1)).unwrap();
    assert_eq!(hom_equivariant(&v, &v).len(), 1);
    assert!(hom_equivariant(&v, &vs).is_empty());
    for w in dominant_weights(2) {
        let m = irreducible(w).unwrap();
        assert_eq!(hom_equivariant(&m, &m).len(), 1, "{w}");
    }
}

#[test]
fn hom_dimension_matches_multiplicities() {
    let l2 = irreducible(Weight::new(0, 1, 0, 0)).unwrap();
    let a = irreducible(Weight::new(0, 0, 1, 0)).unwrap();
    let m = tensor(&l2, &a);
    for (w, expect) in [
        (Weight::new(0, 0, 0, 1), 0),
        (Weight::ZERO, 1),
        (Weight::new(1, 0, 0, 1), 1),
        (Weight::new(0, 1, 1, 0), 1),
    ] {
        let target = irreducible(w).unwrap();
        let homs = hom_equivariant(&m, &target);
        assert_eq!(homs.len(), m.highest_weight_vectors(w).len(), "{w}");
        assert_eq!(homs.len(), expect, "{w}");
        for h in &homs {
            for i in 0..4 {
                assert_eq!(h.mul(&m.e[i]), target.e[i].mul(h));
                assert_eq!(h.mul(&m.f[i]), target.f[i].mul(h));
            }
        }
    }
}

#[test]
fn dual_pairing() {
    for w in dominant_weights(2) {
        let m = irreducible(w).unwrap();
        let d = irreducible(w.dual()).unwrap();
        let triv = irreducible(Weight::ZERO).unwrap();
        assert!(!hom_equivariant(&tensor(&m, &d), &triv).is_empty(), "{w}");
        assert_eq!(
            dual(&m).decomposition().into_iter().collect::<Vec<_>>(),
            vec![(w.dual(), 1)]
        );
    }
}

/// Two different realizations of the same irreducible give identical matrices.
#[test]
fn construction_is_realization_independent() {
    // F(0,0,0,2) inside Sym(Λ⁴C^5) and inside Sym(C^5*) with top z*_5^2
    let direct = build_irreducible(Weight::new(0, 0, 0, 2)).unwrap();
    let ring = poly::Ring::new(poly::Ring::dual_vars(1));
    let top = poly::Poly::basis(poly::Mono::pow(4, 2));
    let other = CyclicModule::build(&ring, &poly::NoRelations, &top, "dual");
    assert_eq!(other.module.weights, direct.weights);
    assert_eq!(other.module.e, direct.e);
    assert_eq!(other.module.f, direct.f);
    assert_eq!(other.module.paths, direct.paths);
}
