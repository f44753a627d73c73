//! Partition enumeration against a brute-force generator, and the relative
//! order complexes against the block weights.

use std::collections::BTreeSet;

use proptest::prelude::*;

use eqhom::linalg::homology_dims;
use eqhom::partitions::{
    all_partitions, order_complex_pair, partition_weight, relative_chain_complex,
    relative_partition_homology, SetPartition,
};

/// Partitions of `{1..n}` built by inserting each element into an existing
/// block or a new one.
fn brute_force(n: usize) -> BTreeSet<Vec<Vec<usize>>> {
    let mut layer: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for x in 1..=n {
        let mut next = Vec::new();
        for blocks in &layer {
            for i in 0..blocks.len() {
                let mut b = blocks.clone();
                b[i].push(x);
                next.push(b);
            }
            let mut b = blocks.clone();
            b.push(vec![x]);
            next.push(b);
        }
        layer = next;
    }
    layer
        .into_iter()
        .map(|mut bs| {
            bs.iter_mut().for_each(|b| b.sort());
            bs.sort();
            bs
        })
        .collect()
}

const BELL: [usize; 9] = [1, 1, 2, 5, 15, 52, 203, 877, 4140];

fn partition(n: usize) -> impl Strategy<Value = SetPartition> {
    proptest::collection::vec(0usize..n, n).prop_map(|labels| {
        let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); labels.len()];
        for (i, &l) in labels.iter().enumerate() {
            blocks[l].push(i + 1);
        }
        blocks.retain(|b| !b.is_empty());
        SetPartition::new(labels.len(), blocks).unwrap()
    })
}

#[test]
fn enumeration_matches_brute_force() {
    for n in 1..=7 {
        let ours: BTreeSet<Vec<Vec<usize>>> =
            all_partitions(n).into_iter().map(|p| p.blocks().to_vec()).collect();
        assert_eq!(ours.len(), BELL[n], "n = {n}");
        assert_eq!(ours, brute_force(n), "n = {n}");
    }
}

#[test]
fn single_block_vertices_are_the_nondiscrete_partitions() {
    for n in 2..=6 {
        let pair = order_complex_pair(&SetPartition::single_block(n)).unwrap();
        assert_eq!(pair.vertices.len(), BELL[n] - 1, "n = {n}");
    }
}

#[test]
fn blocks_of_size_at_least_two_give_the_weight_in_top_degree() {
    for n in 2..=6 {
        for a in all_partitions(n).into_iter().filter(|a| a.block_sizes().iter().all(|&s| s >= 2)) {
            let pair = order_complex_pair(&a).unwrap();
            let complex = relative_chain_complex(&pair).unwrap();
            complex.check_boundary_square().unwrap();
            let h = homology_dims(&complex).unwrap();
            let top = (n - a.num_blocks()) as i64 - 1;
            let expected = partition_weight(&a) as usize;
            assert_eq!(h.iter().collect::<Vec<_>>(), vec![(top, expected)], "{a}");
        }
    }
}

proptest! {
    #[test]
    fn relative_euler_characteristic_matches_homology(a in (2usize..=6).prop_flat_map(partition)) {
        prop_assume!(!a.is_discrete());
        let pair = order_complex_pair(&a).unwrap();
        let h = relative_partition_homology(&a).unwrap();
        prop_assert_eq!(pair.relative_euler_characteristic(), h.euler_characteristic());
        let (all, bd) = pair.face_counts();
        let from_counts: i64 = all
            .iter()
            .zip(&bd)
            .enumerate()
            .map(|(d, (x, y))| if d % 2 == 0 { (x - y) as i64 } else { -((x - y) as i64) })
            .sum();
        prop_assert_eq!(from_counts, h.euler_characteristic());
    }

    #[test]
    fn restricted_growth_round_trip(a in (1usize..=8).prop_flat_map(partition)) {
        prop_assert_eq!(SetPartition::from_rgs(&a.rgs()), a.clone());
        prop_assert!(a.refines(&a));
        prop_assert!(SetPartition::discrete(a.n()).refines(&a));
        prop_assert!(a.refines(&SetPartition::single_block(a.n())));
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<SetPartition>(&json).unwrap(), a);
    }
}
