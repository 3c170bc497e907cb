mod common;

use std::collections::BTreeMap;

use num_rational::BigRational;
use padic_gibbs::model::{
    check_consistency, field_compatible, hamiltonian, measure, partition, partition_terms, recurrence,
    verify_z_recursion, BoundaryField, EvalMode, FieldValue, ModelParams, Scalar, SpinConfig,
};
use padic_gibbs::solvers::{periodic_solutions, solution_fields, ti_solutions, PeriodicOutcome};
use padic_gibbs::Padic;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const K: i64 = 32;

fn params(p: u64, j: i64) -> ModelParams {
    ModelParams::symmetric(p, j, K).unwrap()
}

fn padic_of(s: Scalar) -> Padic {
    s.as_padic().cloned().expect("padic scalar")
}

/// Explicit rational field on `V_2`, with the exact values for the oracle.
fn explicit_field(values: &[(i64, i64)], m: &ModelParams) -> (BoundaryField, BTreeMap<u64, BigRational>) {
    let exact: BTreeMap<u64, BigRational> = values
        .iter()
        .enumerate()
        .map(|(i, &(n, d))| (i as u64 + 1, common::rational(n, d)))
        .collect();
    let field = BoundaryField::explicit(
        exact
            .iter()
            .map(|(&x, r)| (x, FieldValue::from_exact(r.clone(), m).unwrap()))
            .collect(),
    )
    .unwrap();
    (field, exact)
}

fn nonzero_ratio() -> impl Strategy<Value = (i64, i64)> {
    ((1i64..60).prop_flat_map(|n| prop_oneof![Just(n), Just(-n)]), 1i64..60)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn exact_weights_match_direct_enumeration(
        p in prop::sample::select(vec![2u64, 3, 5, 7]),
        j in prop::sample::select(vec![-2i64, -1, 1, 2]),
        n in 0u32..3,
        values in prop::collection::vec(nonzero_ratio(), 7),
    ) {
        let m = params(p, j);
        let (field, exact) = explicit_field(&values, &m);
        let expected = common::weights_oracle(n, p, j, &|x| exact[&x].clone());
        let terms = partition_terms(n, &field, &m, EvalMode::ExactRational).unwrap();
        prop_assert_eq!(terms.len(), expected.len());
        for (t, e) in terms.iter().zip(&expected) {
            prop_assert_eq!(t.as_rational().unwrap(), e);
        }
        let z: BigRational = expected.iter().sum();
        let computed = partition(n, &field, &m, EvalMode::ExactRational).unwrap();
        prop_assert_eq!(computed.as_rational().unwrap(), &z);
    }

    #[test]
    fn padic_mode_agrees_with_exact_mode(
        p in prop::sample::select(vec![2u64, 3, 5, 7, 13]),
        j in prop::sample::select(vec![-1i64, 1, 2]),
        n in 0u32..3,
        values in prop::collection::vec(nonzero_ratio(), 7),
        mask in any::<u64>(),
    ) {
        let m = params(p, j);
        let (field, _) = explicit_field(&values, &m);
        let exact = partition(n, &field, &m, EvalMode::ExactRational).unwrap();
        let z = padic_of(partition(n, &field, &m, EvalMode::Padic).unwrap());
        prop_assert_eq!(exact.to_padic(p, z.precision()).unwrap(), z.clone());
        prop_assume!(!z.is_zero());
        let sigma = SpinConfig::from_mask(n, mask).unwrap();
        let mu = padic_of(measure(&sigma, &field, &m, EvalMode::Padic).unwrap());
        let mu_exact = measure(&sigma, &field, &m, EvalMode::ExactRational).unwrap();
        prop_assert!(mu_exact.to_padic(p, mu.precision()).unwrap().agrees_with(&mu, mu.precision()).unwrap());
    }

    #[test]
    fn random_fields_are_inconsistent(
        p in prop::sample::select(vec![3u64, 5, 7, 13, 29]),
        j in prop::sample::select(vec![-2i64, -1, 1, 2]),
        values in prop::collection::vec(nonzero_ratio(), 7),
    ) {
        let m = params(p, j);
        let (field, _) = explicit_field(&values, &m);
        prop_assume!(!field_compatible(&field, 2, &m).unwrap());
        prop_assert!(!check_consistency(2, &field, &m).unwrap().pass);
    }
}

fn grid() -> Vec<(u64, i64)> {
    let mut out = Vec::new();
    for p in [2u64, 3, 5, 7, 13, 29] {
        for j in [-1i64, 1, 2] {
            out.push((p, j));
        }
    }
    out
}

#[test]
fn produced_fields_are_normalized_and_consistent() {
    for (p, j) in grid() {
        let m = params(p, j);
        for (label, field) in solution_fields(&m).unwrap() {
            assert!(field_compatible(&field, 3, &m).unwrap());
            for n in 1..=2 {
                let r = check_consistency(n, &field, &m).unwrap();
                assert!(r.pass, "p={p} J={j} {label} n={n}: {r:?}");
                let terms: Vec<Padic> = partition_terms(n, &field, &m, EvalMode::Padic)
                    .unwrap()
                    .into_iter()
                    .map(padic_of)
                    .collect();
                let z = Padic::sum(p, &terms).unwrap();
                let zi = z.inv().unwrap();
                let mus: Vec<Padic> = terms.iter().map(|t| t.mul(&zi).unwrap()).collect();
                let total = Padic::sum(p, &mus).unwrap();
                assert!(total.agrees_with(&Padic::one(p, K), m.guard_threshold()).unwrap());
            }
        }
    }
}

#[test]
fn negating_the_field_leaves_the_measure_unchanged() {
    for (p, j) in grid() {
        let m = params(p, j);
        for (label, field) in solution_fields(&m).unwrap() {
            let neg = field.negated();
            for n in 0..=2u32 {
                let mode = if field.is_rational() {
                    EvalMode::ExactRational
                } else {
                    EvalMode::Padic
                };
                for mask in 0..1u64 << ((1 << (n + 1)) - 1) {
                    let s = SpinConfig::from_mask(n, mask).unwrap();
                    assert_eq!(
                        measure(&s, &field, &m, mode).unwrap(),
                        measure(&s, &neg, &m, mode).unwrap(),
                        "p={p} J={j} {label} σ={s}"
                    );
                }
            }
        }
    }
}

#[test]
fn partition_sum_is_order_independent() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (p, j) in [(5u64, 1i64), (13, -1), (29, 2)] {
        let m = params(p, j);
        for (_, field) in solution_fields(&m).unwrap() {
            let terms: Vec<Padic> = partition_terms(2, &field, &m, EvalMode::Padic)
                .unwrap()
                .into_iter()
                .map(padic_of)
                .collect();
            let reference = Padic::sum(p, &terms).unwrap();
            for _ in 0..10 {
                let mut shuffled = terms.clone();
                shuffled.shuffle(&mut rng);
                let folded = shuffled[1..]
                    .iter()
                    .fold(shuffled[0].clone(), |acc, t| acc.add(t).unwrap());
                assert_eq!(folded, reference);
            }
        }
    }
}

#[test]
fn hamiltonian_extremes() {
    for j in [-2i64, -1, 1, 2] {
        let m = params(3, j);
        for n in 1..=3u32 {
            let energies: Vec<i64> = (0..1u64 << ((1 << (n + 1)) - 1))
                .map(|mask| {
                    let h = hamiltonian(&SpinConfig::from_mask(n, mask).unwrap(), &m);
                    assert_eq!(h, common::energy(mask, n, j, j));
                    h
                })
                .collect();
            let edges = (1i64 << n) - 1;
            if j > 0 {
                let star = hamiltonian(&SpinConfig::sibling_alternating(n).unwrap(), &m);
                assert_eq!(*energies.iter().min().unwrap(), -j * edges);
                assert_eq!(star, -j * edges);
            } else {
                // max_σ |p^H|_p = p^{-min H}, attained by the all-plus configuration
                assert_eq!(-energies.iter().min().unwrap(), -3 * j * edges);
            }
        }
    }
}

#[test]
fn z_recursion_for_produced_fields() {
    for (p, j) in grid() {
        let m = params(p, j);
        for (label, field) in solution_fields(&m).unwrap() {
            for n in 1..=2 {
                let r = verify_z_recursion(n, &field, &m).unwrap();
                assert!(r.pass, "p={p} J={j} {label} n={n}: order {}", r.mismatch_order);
            }
        }
    }
}

#[test]
fn recurrence_maps_solutions_to_solutions() {
    for (p, j) in [(29u64, 1i64), (5, 2), (13, -1)] {
        let m = params(p, j);
        let guard = m.guard_threshold();
        for s in ti_solutions(&m).unwrap() {
            assert!(recurrence(&s.u, &s.u, &m).unwrap().agrees_with(&s.u, guard).unwrap());
        }
    }
    for (p, j) in [(5u64, 1i64), (7, -1), (13, -1)] {
        let m = params(p, j);
        let PeriodicOutcome::Found(sol) = periodic_solutions(&m).unwrap() else {
            panic!("p={p} J={j} has a 2-cycle");
        };
        let guard = m.guard_threshold();
        assert!(recurrence(&sol.u3, &sol.u3, &m)
            .unwrap()
            .agrees_with(&sol.u4, guard)
            .unwrap());
        assert!(recurrence(&sol.u4, &sol.u4, &m)
            .unwrap()
            .agrees_with(&sol.u3, guard)
            .unwrap());
        assert!(!sol.u3.agrees_with(&sol.u4, guard).unwrap());
        for f in &sol.fields {
            assert!(field_compatible(f, 3, &m).unwrap());
        }
        // a constant h3 field is not a 2-cycle
        let same = BoundaryField::two_periodic(
            FieldValue::from_padic(sol.h3.clone()),
            FieldValue::from_padic(sol.h3.clone()),
        )
        .unwrap();
        assert!(!field_compatible(&same, 2, &m).unwrap());
    }
}

#[test]
fn unit_field_partition_matches_oracle_at_depth_three() {
    let m = params(7, 1);
    let field = BoundaryField::unit(&m).unwrap();
    let z: BigRational = common::weights_oracle(3, 7, 1, &|_| common::one()).iter().sum();
    assert_eq!(
        partition(3, &field, &m, EvalMode::ExactRational)
            .unwrap()
            .as_rational()
            .unwrap(),
        &z
    );
}
