//! Exhaustive search for morphisms `M(λ_A) → M(λ_B)` of fixed degree.
//!
//! Only `Φ(s)` for the highest-weight vector `s` of `F(λ_A)` is solved for;
//! the map is then extended equivariantly. The constraints are built by this
//! module's own implementation of the `g_0`/`g_1` action, and every witness is
//! re-checked by [`crate::verma::verify_morphism`].

mod action;
mod solve;
mod sweep;

pub use solve::{
    solve, solve_inhomogeneous, SearchProblem, Solution, SolveError, SolveOptions, DEFAULT_CAP,
};
pub use sweep::{
    cells, parse_log_line, sweep, witness_hash, CellResult, CellStatus, Comparison, LogError,
    SweepConfig, SweepError, SweepReport,
};

use std::collections::{BTreeMap, BTreeSet};

use crate::models::{nabla_target, Family};
use crate::sl5::Weight;
use crate::uea::graded_basis;
use crate::verma::Named;

/// Reflects `ν + ρ` into the dominant chamber. Returns the sign of the Weyl
/// group element, or `None` when `ν + ρ` lies on a wall.
fn dot_reflect(mut v: [i64; 4]) -> Option<(i64, [i64; 4])> {
    let mut sign = 1;
    loop {
        let Some(i) = (0..4).find(|&i| v[i] <= 0) else {
            return Some((sign, v));
        };
        if v[i] == 0 {
            return None;
        }
        let x = v[i];
        v[i] = -x;
        if i > 0 {
            v[i - 1] += x;
        }
        if i < 3 {
            v[i + 1] += x;
        }
        sign = -sign;
    }
}

/// Highest weights `λ_B` (with multiplicity) of `(U_-)_k^* ⊗ F(λ_A)`, by the
/// Brauer–Klimyk rule. A nonzero morphism of degree `k` needs `F(λ_B)` here.
pub fn candidate_multiplicities(lambda_a: Weight, k: u32) -> BTreeMap<Weight, i64> {
    let mut acc: BTreeMap<Weight, i64> = BTreeMap::new();
    for u in &graded_basis(k).monomials {
        let mu = Weight::from_epsilon(u.weight());
        let nu = lambda_a.sub(mu);
        let shifted = nu.0.map(|x| x + 1);
        if let Some((sign, r)) = dot_reflect(shifted) {
            *acc.entry(Weight(r.map(|x| x - 1))).or_default() += sign;
        }
    }
    acc.retain(|_, m| *m != 0);
    debug_assert!(acc.values().all(|&m| m > 0));
    acc
}

/// Candidate targets in increasing order.
pub fn candidate_targets(lambda_a: Weight, k: u32) -> Vec<Weight> {
    candidate_multiplicities(lambda_a, k).into_keys().collect()
}

/// Named nonzero morphisms of degree `k` whose source has level at most `bound`.
pub fn named_instances(k: u32, bound: i64) -> Vec<Named> {
    let mut out = Vec::new();
    if bound < 0 {
        return out;
    }
    let b = bound as u32;
    match k {
        1 => {
            for f in Family::ALL {
                for m in 0..=b {
                    for n in 0..=b - m {
                        if nabla_target(f, m, n).is_some() {
                            out.push(Named::Nabla(f, m, n));
                        }
                    }
                }
            }
        }
        2 => {
            out.extend((1..=b).map(Named::NablaAB));
            out.extend((0..=b).map(Named::NablaBC));
            out.push(Named::NablaAC);
        }
        3 => out.push(Named::NablaABC),
        4 => {
            out.extend((3..=b).map(Named::TAB));
            out.extend((0..=b).map(Named::TBC));
        }
        5 => out.extend([Named::TPrime, Named::TDoublePrime]),
        _ => {}
    }
    out.retain(|x| x.endpoints().0.level() <= bound);
    out
}

/// The cells `(λ_A, λ_B)` where the known morphisms of degree `k` live.
pub fn expected_cells(k: u32, bound: i64) -> BTreeSet<(Weight, Weight)> {
    named_instances(k, bound)
        .into_iter()
        .filter_map(|x| match x.endpoints() {
            (a, Some(b)) => Some((a, b)),
            _ => None,
        })
        .collect()
}

/// Whether `λ` is one of `(m,n,0,0)`, `(m,0,0,n)`, `(0,0,m,n)`, the modules
/// conjectured to be exactly the degenerate ones.
pub fn conjectured_degenerate(l: Weight) -> bool {
    let [a, b, c, d] = l.0;
    (c == 0 && d == 0) || (b == 0 && c == 0) || (a == 0 && b == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_source_degree_one() {
        // (U_-)_1^* is irreducible, so a single candidate
        let c = candidate_multiplicities(Weight::ZERO, 1);
        assert_eq!(c.len(), 1);
        assert_eq!(*c.values().next().unwrap(), 1);
    }

    #[test]
    fn nabla_b_survives_pruning() {
        assert!(candidate_targets(Weight::new(1, 0, 0, 0), 1).contains(&Weight::new(0, 0, 0, 1)));
    }

    #[test]
    fn multiplicities_add_up() {
        // Σ mult · dim F(λ_B) = dim (U_-)_k · dim F(λ_A)
        use crate::sl5::weyl_dim;
        for (la, k) in [
            (Weight::new(1, 0, 0, 0), 1),
            (Weight::new(0, 1, 0, 1), 2),
            (Weight::new(1, 0, 1, 0), 3),
        ] {
            let total: u64 = candidate_multiplicities(la, k)
                .iter()
                .map(|(w, m)| *m as u64 * weyl_dim(*w))
                .sum();
            assert_eq!(
                total,
                graded_basis(k).len() as u64 * weyl_dim(la),
                "{la} {k}"
            );
        }
    }

    #[test]
    fn expected_cells_are_candidates() {
        for k in 1..=5 {
            for (a, b) in expected_cells(k, 4) {
                assert!(candidate_targets(a, k).contains(&b), "{a}→{b} k={k}");
            }
        }
    }

    #[test]
    fn degenerate_list() {
        assert!(conjectured_degenerate(Weight::new(2, 3, 0, 0)));
        assert!(conjectured_degenerate(Weight::new(2, 0, 0, 3)));
        assert!(conjectured_degenerate(Weight::new(0, 0, 2, 3)));
        assert!(!conjectured_degenerate(Weight::new(0, 1, 1, 0)));
    }
}
