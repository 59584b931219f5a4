//! Cross-module invariants: independent brute-force oracles plus
//! property-based checks.

use num_bigint::BigInt;
use proptest::prelude::*;

use og10::betti::{
    check_og10, salamon_sides, search_feasible_og10, verbitsky_bounds, OddBettiBounds,
};
use og10::fibration::{FibrationModel, FibrationStratum, StratumBase};
use og10::prym::{euler_prym, euler_prym_bruteforce, NodalCoverModel};
use og10::singularity::{enumerate_configurations, SingularityConfiguration, SingularityType};

/// Independent oracle: count multiplicity tuples (m1..m5, n4, n5) with
/// weighted sum <= mu_max by plain nested loops.
fn configuration_count_oracle(mu_max: u64) -> u64 {
    let mut count = 0;
    for m1 in 0..=mu_max {
        for m2 in 0..=(mu_max / 2) {
            for m3 in 0..=(mu_max / 3) {
                for m4 in 0..=(mu_max / 4) {
                    for m5 in 0..=(mu_max / 5) {
                        for n4 in 0..=(mu_max / 4) {
                            for n5 in 0..=(mu_max / 5) {
                                let mu = m1 + 2 * m2 + 3 * m3 + 4 * m4 + 5 * m5 + 4 * n4 + 5 * n5;
                                if mu <= mu_max {
                                    count += 1;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    count
}

#[test]
fn enumeration_matches_the_nested_loop_oracle() {
    for mu_max in 0..=9 {
        let enumerated = enumerate_configurations(mu_max);
        assert_eq!(enumerated.len() as u64, configuration_count_oracle(mu_max), "mu_max={mu_max}");
        // Duplicate-free as well.
        let distinct: std::collections::BTreeSet<String> =
            enumerated.iter().map(|c| c.to_string()).collect();
        assert_eq!(distinct.len(), enumerated.len());
    }
}

fn arbitrary_configuration() -> impl Strategy<Value = SingularityConfiguration> {
    proptest::collection::vec(0u32..4, 7).prop_map(|mults| {
        SingularityConfiguration::from_counts(
            SingularityType::QUINTIC_ADMISSIBLE.into_iter().zip(mults),
        )
    })
}

proptest! {
    #[test]
    fn mu_total_is_additive(a in arbitrary_configuration(), b in arbitrary_configuration()) {
        prop_assert_eq!(a.union(&b).mu_total(), a.mu_total() + b.mu_total());
    }

    #[test]
    fn configuration_json_round_trips(a in arbitrary_configuration()) {
        let json = serde_json::to_string(&a).unwrap();
        let back: SingularityConfiguration = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn salamon_defect_is_linear(
        n in 1u32..4,
        seed_a in proptest::collection::vec(0u64..1_000, 17),
        seed_b in proptest::collection::vec(0u64..1_000, 17),
    ) {
        let len = 4 * n as usize + 1;
        let a = &seed_a[..len];
        let b = &seed_b[..len];
        let sum: Vec<u64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
        let defect = |values: &[u64]| -> BigInt {
            let (left, right) = salamon_sides(n, values).unwrap();
            left - right
        };
        prop_assert_eq!(defect(&sum), defect(a) + defect(b));
    }

    #[test]
    fn prym_closed_form_matches_enumeration(r in 0u32..=10, gt in 1u32..=4) {
        let model = NodalCoverModel::new(r, gt).unwrap();
        let closed = euler_prym(model);
        prop_assert!(closed == 0 || closed == 1);
        prop_assert_eq!(closed, euler_prym_bruteforce(model).unwrap());
    }

    #[test]
    fn prym_euler_depends_only_on_the_genus(r1 in 0u32..=20, r2 in 0u32..=20, gt in 1u32..=6) {
        let a = NodalCoverModel::new(r1, gt).unwrap();
        let b = NodalCoverModel::new(r2, gt).unwrap();
        prop_assert_eq!(euler_prym(a), euler_prym(b));
    }

    #[test]
    fn total_euler_is_permutation_invariant(
        strata in proptest::collection::vec((-50i64..50, -5i64..5), 0..8),
    ) {
        let build = |pairs: &[(i64, i64)]| {
            let strata = pairs
                .iter()
                .enumerate()
                .map(|(i, &(base, fiber))| {
                    FibrationStratum::new(
                        format!("s{i}"),
                        StratumBase::Count(BigInt::from(base)),
                        fiber,
                    )
                })
                .collect();
            FibrationModel::new(strata).unwrap().total_euler().unwrap()
        };
        let mut reversed = strata.clone();
        reversed.reverse();
        prop_assert_eq!(build(&strata), build(&reversed));
    }

    #[test]
    fn total_euler_is_additive_on_disjoint_unions(
        left in proptest::collection::vec((-50i64..50, -5i64..5), 0..6),
        right in proptest::collection::vec((-50i64..50, -5i64..5), 0..6),
    ) {
        let build = |pairs: &[(i64, i64)], prefix: &str| {
            let strata = pairs
                .iter()
                .enumerate()
                .map(|(i, &(base, fiber))| {
                    FibrationStratum::new(
                        format!("{prefix}{i}"),
                        StratumBase::Count(BigInt::from(base)),
                        fiber,
                    )
                })
                .collect();
            FibrationModel::new(strata).unwrap()
        };
        let a = build(&left, "a");
        let b = build(&right, "b");
        let separate = a.total_euler().unwrap() + b.total_euler().unwrap();
        let union = a.disjoint_union(b).unwrap();
        prop_assert_eq!(union.total_euler().unwrap(), separate);
    }

    #[test]
    fn verbitsky_bounds_are_monotone_in_b2(b2 in 0u64..500, bump in 1u64..100, n in 2u32..6) {
        let low = verbitsky_bounds(n, b2);
        let high = verbitsky_bounds(n, b2 + bump);
        for ((k1, lo), (k2, hi)) in low.iter().zip(&high) {
            prop_assert_eq!(k1, k2);
            prop_assert!(lo <= hi);
        }
    }

    #[test]
    fn search_results_pass_the_full_check(max_odd in 0u32..=6, limit in 1usize..=8) {
        let found = search_feasible_og10(OddBettiBounds::uniform(max_odd), limit);
        prop_assert!(found.vectors.len() <= limit);
        for pair in found.vectors.windows(2) {
            prop_assert!(pair[0].values() < pair[1].values());
        }
        for vector in &found.vectors {
            prop_assert!(check_og10(vector).unwrap().all_pass());
        }
    }
}
