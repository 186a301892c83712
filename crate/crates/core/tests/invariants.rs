use std::collections::BTreeSet;

use proptest::prelude::*;
use sams_core::compose::{compose, shift_nonzero, sms_embed};
use sams_core::kotzig::verify_extended_symmetry;
use sams_core::latin::{bracket, build_b, is_admissible_order};
use sams_core::square::support_overlap;
use sams_core::{
    compatible, cross_check, generate, kotzig, sams_d2, sams_d4, search, sfd, support, verify_regular_sams,
    verify_regular_sms, CrossCheck, SearchConfig, Square, Verdict,
};

fn admissible(lo: usize, hi: usize) -> Vec<usize> {
    (lo..=hi).filter(|&n| is_admissible_order(n)).collect()
}

fn any_square(max_n: usize, max_cell: u64) -> impl Strategy<Value = Square> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(0..=max_cell, n * n).prop_map(move |cells| Square::from_cells(n, cells).unwrap())
    })
}

/// A constructed square together with its density.
fn constructed() -> impl Strategy<Value = (Square, usize)> {
    proptest::sample::select(admissible(5, 61))
        .prop_flat_map(|n| (Just(n), 2..n))
        .prop_filter_map("external density", |(n, d)| generate(n, d).ok()?.square().cloned().map(|s| (s, d)))
}

fn odd_n_and_d() -> impl Strategy<Value = (usize, usize)> {
    (1usize..=25).prop_map(|k| 2 * k + 1).prop_flat_map(|n| (Just(n), 3..=n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn total_is_conserved(sq in any_square(9, 1000)) {
        let p = sq.sum_profile();
        prop_assert_eq!(p.row_sums.iter().sum::<u64>(), sq.total());
        prop_assert_eq!(p.col_sums.iter().sum::<u64>(), sq.total());
    }

    #[test]
    fn density_counts_are_bounded(sq in any_square(9, 3)) {
        let n = sq.order();
        prop_assert!(sq.density_profile().lines().all(|c| c <= n));
    }

    #[test]
    fn verifier_agrees_on_rotation(sq in any_square(7, 20), d in 1usize..6) {
        let n = sq.order();
        prop_assume!(n >= 2 && d < n);
        let a = verify_regular_sams(&sq, d).unwrap();
        let b = verify_regular_sams(&sq.rotate_180(), d).unwrap();
        prop_assert_eq!(a.is_valid(), b.is_valid());
        prop_assert_eq!(a.is_valid(), a.violations().is_empty());
    }

    #[test]
    fn constructed_squares_span_2n_plus_1((sq, d) in constructed()) {
        let n = sq.order() as u64;
        prop_assert!(verify_regular_sams(&sq, d).unwrap().is_valid());
        let p = sq.sum_profile();
        prop_assert_eq!(p.max() - p.min(), 2 * n + 1);
        // Rotation and transposition keep a valid square valid.
        prop_assert!(verify_regular_sams(&sq.rotate_180(), d).unwrap().is_valid());
        prop_assert!(verify_regular_sams(&sq.transpose(), d).unwrap().is_valid());
    }

    #[test]
    fn compatible_densities_add(a in any_square(6, 4), mask in proptest::collection::vec(any::<bool>(), 36)) {
        let n = a.order();
        // Split one square into two disjoint parts.
        let left = Square::from_fn(n, |i, j| if mask[(i - 1) * n + j - 1] { a.get(i, j) } else { 0 }).unwrap();
        let right = Square::from_fn(n, |i, j| if mask[(i - 1) * n + j - 1] { 0 } else { a.get(i, j) }).unwrap();
        prop_assert!(compatible(&left, &right).unwrap());
        let sum = &left + &right;
        prop_assert_eq!(sum.density_profile(), &left.density_profile() + &right.density_profile());
    }

    #[test]
    fn bracket_is_a_residue(a in -10_000i64..10_000, n in 1i64..200) {
        let r = bracket(a, n).unwrap();
        prop_assert!((1..=n).contains(&r));
        prop_assert_eq!((r - a).rem_euclid(n), 0);
    }

    #[test]
    fn latin_point_symmetry(n in proptest::sample::select(admissible(5, 151))) {
        let b = build_b(n).unwrap();
        prop_assert!(b.verify().is_valid());
        for i in 1..=n {
            for j in 1..=n {
                prop_assert_eq!(b.get(i, j) + b.get(n + 1 - i, n + 1 - j), n + 1);
            }
        }
    }

    #[test]
    fn kotzig_line_sums((n, d) in odd_n_and_d()) {
        let k = kotzig(d, n).unwrap();
        let target = (d * (n + 1) / 2) as u64;
        prop_assert!(k.column_sums().iter().all(|&s| s == target));
        prop_assert!(k.forward_diagonal_sums().iter().all(|&s| s == target));
    }

    #[test]
    fn sfd_sums_and_centre((n, t) in odd_n_and_d(), l in 0u64..100) {
        let s = sfd(t, n, l).unwrap();
        let nt = (n * t) as u64;
        let line = t as u64 * (nt + 1) / 2 + t as u64 * l;
        prop_assert!(s.column_sums().iter().all(|&v| v == line));
        prop_assert!(s.forward_diagonal_sums().iter().all(|&v| v == line));
        prop_assert!(s.point_symmetry_sums().iter().all(|&v| v == nt + 1 + 2 * l));
        if t % 2 == 1 {
            prop_assert_eq!(s.get(t.div_ceil(2), n.div_ceil(2)), nt.div_ceil(2) + l);
        } else {
            prop_assert!(verify_extended_symmetry(&s, l).is_valid());
        }
    }

    #[test]
    fn embedded_sms_is_magic_and_disjoint(
        (n, t) in proptest::sample::select(admissible(11, 101)).prop_flat_map(|n| (Just(n), 4..=n - 5))
    ) {
        let m = sms_embed(n, t).unwrap();
        let nt = (n * t) as u64;
        prop_assert!(verify_regular_sms(&m, t, 1).unwrap().is_valid());
        prop_assert_eq!(m.sum_profile().left_diag, (1 + nt) * t as u64 / 2);
        let anti = sams_d2(n).unwrap();
        prop_assert!(support_overlap(&m, &anti).unwrap().is_empty());
        if t % 2 == 1 {
            let c = n.div_ceil(2);
            prop_assert_eq!(m.get(c, c), nt.div_ceil(2));
        }
        let out = compose(&m, &anti).unwrap();
        let values: BTreeSet<u64> = out.positive_cells().map(|(_, v)| v).collect();
        prop_assert_eq!(values, (1..=(n * (t + 2)) as u64).collect::<BTreeSet<_>>());
        let sigma = shift_nonzero(&m, 2 * n as u64).sum_profile().left_diag;
        let translated: BTreeSet<u64> = anti.sum_profile().sum_set().iter().map(|s| s + sigma).collect();
        prop_assert_eq!(out.sum_profile().sum_set(), translated);
        let union: BTreeSet<_> = support(&m).union(&support(&anti)).copied().collect();
        prop_assert_eq!(support(&out), union);
    }
}

#[test]
fn density4_left_diagonal_in_both_residues() {
    for n in admissible(7, 101) {
        let p = sams_d4(n).unwrap().sum_profile();
        assert_eq!(p.left_diag, 8 * n as u64 + 2, "n = {n}");
    }
}

#[test]
fn oracle_witnesses_verify() {
    for (n, d) in [(4, 2), (4, 3), (5, 2), (5, 3), (5, 4), (6, 2), (6, 4), (6, 5), (7, 3)] {
        let out = search(n, d, &SearchConfig::find_one(std::time::Duration::from_secs(20))).unwrap();
        assert_eq!(out.verdict, Verdict::Found, "({n},{d})");
        assert!(verify_regular_sams(out.witness.as_ref().unwrap(), d).unwrap().is_valid());
    }
}

#[test]
fn counts_are_reproducible() {
    let cfg = SearchConfig::count();
    let a = search(5, 2, &cfg).unwrap();
    let b = search(5, 2, &cfg).unwrap();
    assert_eq!(a.stats.nodes, b.stats.nodes);
    assert_eq!(a.stats.solutions, b.stats.solutions);
    assert_eq!(a.witness, b.witness);
    let par = search(5, 2, &cfg.clone().deterministic(false)).unwrap();
    assert_eq!(par.stats.nodes, a.stats.nodes);
    assert_eq!(par.stats.solutions, a.stats.solutions);
    assert_eq!(par.witness, a.witness);
}

#[test]
fn nonexistence_is_never_a_budget_miss() {
    for n in 2..=6 {
        let out = search(n, 1, &SearchConfig::exhaust()).unwrap();
        assert_eq!(out.verdict, Verdict::ExhaustedNone, "n = {n}");
    }
    let tight = search(6, 4, &SearchConfig::count().with_node_limit(2048)).unwrap();
    assert_ne!(tight.verdict, Verdict::ExhaustedNone);
    let full = search(5, 2, &SearchConfig::count()).unwrap().stats.nodes;
    let cut = search(5, 2, &SearchConfig::count().with_node_limit(4096)).unwrap();
    assert_eq!(cut.verdict, Verdict::Found);
    assert!(cut.stats.nodes < full);
}

#[test]
fn constructions_agree_with_the_oracle() {
    let cfg = SearchConfig::find_one(std::time::Duration::from_secs(20));
    for (n, d) in [(5, 2), (7, 2), (7, 4), (5, 3)] {
        assert_eq!(cross_check(n, d, &cfg).unwrap(), CrossCheck::Confirmed, "({n},{d})");
    }
    assert_eq!(cross_check(5, 1, &SearchConfig::exhaust()).unwrap(), CrossCheck::Confirmed);
    let starved = SearchConfig::exhaust().with_node_limit(1);
    assert_ne!(cross_check(7, 6, &starved).unwrap(), CrossCheck::Refuted);
}
