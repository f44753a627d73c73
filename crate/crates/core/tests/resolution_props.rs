//! Horizontal Euler characteristics and the fiber polynomial, checked
//! against a direct permutation enumeration written here from scratch.

use std::collections::BTreeMap;

use proptest::prelude::*;

use eqhom::resolution::{
    combi_count, double_factorial, e1_block_dim, e1_block_dim_enumerated, horizontal_euler_closed,
    horizontal_euler_sum, permutation_oracle, phi_poincare_closed, phi_poincare_from_euler,
    place_choice_counts, HorizontalComplexSpec,
};

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// Every permutation of `items`, by recursive selection.
fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Histogram over the sets of odd places `i >= 3` where `a_i` is below every
/// later entry, for permutations of `1..=n` starting with 1.
fn place_histogram(n: usize) -> BTreeMap<Vec<usize>, u64> {
    let mut hist = BTreeMap::new();
    let rest: Vec<usize> = (2..=n).collect();
    for tail in permutations(&rest) {
        let a: Vec<usize> = std::iter::once(1).chain(tail).collect();
        let places: Vec<usize> = (3..=n)
            .step_by(2)
            .filter(|&i| a[i..].iter().all(|&later| a[i - 1] < later))
            .collect();
        *hist.entry(places).or_insert(0) += 1;
    }
    hist
}

#[test]
fn place_counts_match_direct_enumeration() {
    for n in (2..=8).step_by(2) {
        let direct = place_histogram(n);
        let ours: BTreeMap<Vec<usize>, u64> =
            place_choice_counts(n).unwrap().into_iter().filter(|(_, c)| *c > 0).collect();
        assert_eq!(ours, direct, "N = {n}");
        for (places, count) in &direct {
            let den: u64 = places.iter().map(|&i| (n - i) as u64).product();
            let closed = double_factorial(n as i64 - 1) * double_factorial(n as i64 - 3) / den;
            assert_eq!(*count, closed, "N = {n}, places {places:?}");
            assert_eq!(combi_count(n, places).unwrap(), closed);
        }
        assert_eq!(direct.values().sum::<u64>(), factorial(n as u64 - 1));
    }
}

#[test]
fn three_routes_agree() {
    for n in (2..=10).step_by(2) {
        for s in 0..n / 2 {
            let closed = horizontal_euler_closed(n, s).unwrap();
            assert_eq!(horizontal_euler_sum(n, s).unwrap(), closed, "N = {n}, s = {s}");
            if n <= 8 {
                let direct: u64 =
                    place_histogram(n).iter().filter(|(p, _)| p.len() == s).map(|(_, c)| c).sum();
                let signed = if s % 2 == 0 { direct as i64 } else { -(direct as i64) };
                assert_eq!(signed, closed, "N = {n}, s = {s}");
                assert_eq!(permutation_oracle(n, s).unwrap(), closed);
            }
        }
    }
}

#[test]
fn small_values() {
    assert_eq!(horizontal_euler_closed(4, 0).unwrap(), 3);
    assert_eq!(horizontal_euler_closed(4, 1).unwrap(), -3);
    assert_eq!(horizontal_euler_closed(6, 0).unwrap(), 45);
}

#[test]
fn absolute_values_sum_to_factorial() {
    for n in (2..=12).step_by(2) {
        let total: i64 = (0..n / 2).map(|s| horizontal_euler_closed(n, s).unwrap().abs()).sum();
        assert_eq!(total as u64, factorial(n as u64 - 1), "N = {n}");
    }
}

#[test]
fn out_of_range_parameters_are_rejected() {
    assert!(HorizontalComplexSpec::new(5, 0).is_err());
    assert!(HorizontalComplexSpec::new(6, 3).is_err());
    assert!(permutation_oracle(12, 0).is_err());
    assert!(phi_poincare_closed(4, 2).is_err());
}

fn even_n(max: usize) -> impl Strategy<Value = usize> {
    (1..=max / 2).prop_map(|k| 2 * k)
}

proptest! {
    #[test]
    fn block_dims_match_enumeration((n, s, p) in even_n(8).prop_flat_map(|n| (Just(n), 0..n / 2))
        .prop_flat_map(|(n, s)| (Just(n), Just(s), n / 2 - 1..=n - 2 - s)))
    {
        prop_assert_eq!(e1_block_dim(n, p, s).unwrap(), e1_block_dim_enumerated(n, p, s).unwrap());
    }

    #[test]
    fn fiber_polynomial_routes_agree(n in even_n(8), m in (0usize..5).prop_map(|k| 2 * k + 1)) {
        let closed = phi_poincare_closed(n, m).unwrap();
        prop_assert_eq!(&closed, &phi_poincare_from_euler(n, m).unwrap());
        prop_assert_eq!(closed.eval_one() as u64, factorial(n as u64 - 1));
        prop_assert!(closed.terms().all(|(d, c)| d % 2 == 0 && c > 0));
    }
}
