mod common;

use std::collections::HashSet;

use regpart::maps::{stat_e_even, stat_t_even};
use regpart::{enumerate_partitions, satisfies, Partition, PartitionConstraint};
use PartitionConstraint::*;

fn collect(n: u64, c: &PartitionConstraint) -> Vec<Partition> {
    enumerate_partitions(n, c).unwrap().collect()
}

fn oracle(n: u64, keep: impl Fn(&[u64]) -> bool) -> Vec<Partition> {
    common::all_partitions(n)
        .into_iter()
        .filter(|p| keep(p))
        .map(|p| Partition::from_parts(p).unwrap())
        .collect()
}

#[test]
fn known_counts() {
    assert_eq!(collect(4, &All).len(), 5);
    assert_eq!(collect(10, &EllRegular(3)).len(), 22);
    assert_eq!(collect(0, &All), vec![Partition::empty()]);
}

#[test]
fn streams_match_the_oracle_in_order() {
    // the oracle generates in the same reverse-lexicographic order
    for n in 0..=18 {
        assert_eq!(collect(n, &All), oracle(n, |_| true), "n={n}");
        for ell in 2..=7 {
            assert_eq!(collect(n, &EllRegular(ell)), oracle(n, |p| common::regular(p, ell)));
            assert_eq!(collect(n, &SetC(ell)), oracle(n, |p| common::in_c(p, ell)));
            assert_eq!(
                collect(n, &DistinctOddNotDivisible(ell)),
                oracle(n, |p| common::in_c(p, ell))
            );
        }
        for r in 1..=4 {
            assert_eq!(collect(n, &MaxMultiplicity(r)), oracle(n, |p| common::max_mult(p) <= r));
        }
        for ell in [2, 4, 6, 8] {
            assert_eq!(collect(n, &SetD(ell)), oracle(n, |p| common::in_d(p, ell)));
            assert_eq!(
                collect(n, &PartitionConstraint::residue_form_of_set_d(ell)),
                oracle(n, |p| common::in_d(p, ell))
            );
        }
    }
}

#[test]
fn output_is_sorted_and_duplicate_free() {
    for n in 0..=25 {
        let ps = collect(n, &All);
        let unique: HashSet<_> = ps.iter().cloned().collect();
        assert_eq!(unique.len(), ps.len());
        assert!(ps.windows(2).all(|w| w[0] > w[1]), "n={n}");
        assert!(ps.iter().all(|p| p.weight() == n));
    }
}

#[test]
fn every_output_satisfies_its_constraint() {
    let cs = [EllRegular(4), MaxMultiplicity(3), SetA(6), SetA(8), SetD(10), SetC(7)];
    for c in &cs {
        for n in 0..=24 {
            for p in collect(n, c) {
                assert!(satisfies(&p, c).unwrap(), "{p} {c:?}");
            }
        }
    }
}

#[test]
fn glaisher_cardinality() {
    for r in 1..=6 {
        for n in 0..=40 {
            assert_eq!(
                enumerate_partitions(n, &MaxMultiplicity(r)).unwrap().count(),
                enumerate_partitions(n, &EllRegular(r + 1)).unwrap().count(),
                "r={r} n={n}"
            );
        }
    }
}

#[test]
fn set_a_is_exactly_the_zero_statistics_locus() {
    for ell in [2, 4, 6, 8, 10, 12] {
        for n in 0..=40 {
            for p in enumerate_partitions(n, &EllRegular(ell)).unwrap() {
                let zero = stat_e_even(&p, ell).unwrap() == 0 && stat_t_even(&p, ell).unwrap() == 0;
                assert_eq!(satisfies(&p, &SetA(ell)).unwrap(), zero, "ℓ={ell} {p}");
            }
        }
    }
}

#[test]
fn fixed_point_families_have_length_congruent_to_weight() {
    for n in 0..=40 {
        for ell in [2, 4, 6, 8, 10, 12] {
            for p in collect(n, &SetA(ell)) {
                assert_eq!(p.length() % 2, n % 2, "{p}");
            }
        }
        for ell in [3, 5, 7, 9, 11] {
            for p in collect(n, &SetC(ell)) {
                assert_eq!(p.length() % 2, n % 2, "{p}");
            }
        }
    }
}
