#![allow(dead_code)]

use hurwitz_core::Permutation;
use proptest::prelude::*;

pub const CASES: u32 = 10_000;

pub fn config() -> ProptestConfig {
    ProptestConfig {
        max_global_rejects: 20 * CASES,
        ..ProptestConfig::with_cases(CASES)
    }
}

/// A uniform permutation of degree `d`.
pub fn perm(d: usize) -> impl Strategy<Value = Permutation> {
    Just((0..d).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(&images).unwrap())
}

/// A degree together with a permutation of that degree.
pub fn sized_perm(dmax: usize) -> impl Strategy<Value = (usize, Permutation)> {
    (1..=dmax).prop_flat_map(|d| (Just(d), perm(d)))
}

/// An `e`-cycle on a random set of points, `2 <= e <= d`.
pub fn cycle(d: usize, e: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=d).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(move |points| Permutation::from_cycles(&[&points[..e]], d).unwrap())
}

pub fn any_cycle(d: usize) -> impl Strategy<Value = Permutation> {
    (2..=d).prop_flat_map(move |e| cycle(d, e))
}

/// Degree in `2..=dmax` with two cycles of that degree.
pub fn cycle_pair(dmax: usize) -> impl Strategy<Value = (Permutation, Permutation)> {
    (2..=dmax).prop_flat_map(|d| (any_cycle(d), any_cycle(d)))
}

/// A tuple of `n` random permutations of degree `d`.
pub fn tuple(d: usize, n: usize) -> impl Strategy<Value = Vec<Permutation>> {
    prop::collection::vec(perm(d), n)
}

/// All elements of the group generated by `gens`, by plain closure.
pub fn group_elements(gens: &[Permutation], d: usize) -> std::collections::BTreeSet<Vec<u8>> {
    let id = Permutation::identity(d);
    let mut seen = std::collections::BTreeSet::from([id.images().to_vec()]);
    let mut stack = vec![id];
    while let Some(p) = stack.pop() {
        for g in gens {
            let q = g * &p;
            if seen.insert(q.images().to_vec()) {
                stack.push(q);
            }
        }
    }
    seen
}
