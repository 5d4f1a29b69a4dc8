mod common;

use common::{config, cycle, group_elements, perm};
use hurwitz_core::braid::{
    braid_move, braid_move_inv, pure_braid_generator, pure_braid_generator_inv, pure_braid_orbits,
    Generators, OrbitConfig, Strategy as Search,
};
use hurwitz_core::enumerate::{enumerate_classes, genus_zero_problems, EnumConfig};
use hurwitz_core::factorization::{is_transitive, product};
use hurwitz_core::Permutation;
use proptest::prelude::*;

/// Random tuples of cycles with trivial product: the last entry absorbs the
/// product of the others, so it need not be a cycle.
fn closed_tuple() -> impl Strategy<Value = Vec<Permutation>> {
    (3usize..=6, 3usize..=5)
        .prop_flat_map(|(d, n)| {
            prop::collection::vec((2..=d).prop_flat_map(move |e| cycle(d, e)), n - 1)
        })
        .prop_map(|mut t| {
            let last = product(&t).unwrap().inverse();
            t.push(last);
            t
        })
}

/// Any tuple of permutations with the chosen index pair.
fn tuple_and_pair() -> impl Strategy<Value = (Vec<Permutation>, usize, usize)> {
    (2usize..=8, 2usize..=6).prop_flat_map(|(d, n)| {
        (prop::collection::vec(perm(d), n), 1..n)
            .prop_flat_map(move |(t, i)| (Just(t), Just(i), i + 1..=n))
    })
}

fn types(t: &[Permutation]) -> Vec<Vec<usize>> {
    t.iter().map(|p| p.cycle_type().parts).collect()
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn braid_move_inverse_and_product((t, i, _) in tuple_and_pair()) {
        let moved = braid_move(&t, i).unwrap();
        prop_assert_eq!(braid_move_inv(&moved, i).unwrap(), t.clone());
        prop_assert_eq!(braid_move(&braid_move_inv(&t, i).unwrap(), i).unwrap(), t.clone());
        prop_assert_eq!(product(&moved), product(&t));
        // the pair swaps its cycle types
        prop_assert_eq!(moved[i - 1].cycle_type(), t[i].cycle_type());
        prop_assert_eq!(moved[i].cycle_type(), t[i - 1].cycle_type());
    }

    #[test]
    fn pure_generator_keeps_types((t, i, j) in tuple_and_pair()) {
        let moved = pure_braid_generator(&t, i, j).unwrap();
        prop_assert_eq!(types(&moved), types(&t));
        prop_assert_eq!(product(&moved), product(&t));
        prop_assert_eq!(pure_braid_generator_inv(&moved, i, j).unwrap(), t.clone());
        // entries outside i..=j are untouched
        for k in (0..t.len()).filter(|&k| k + 1 < i || k + 1 > j) {
            prop_assert_eq!(&moved[k], &t[k]);
        }
    }

    #[test]
    fn braid_move_keeps_group(t in closed_tuple()) {
        let d = t[0].degree();
        prop_assert!(product(&t).unwrap().is_identity());
        let group = group_elements(&t, d);
        for i in 1..t.len() {
            let moved = braid_move(&t, i).unwrap();
            prop_assert!(product(&moved).unwrap().is_identity());
            prop_assert_eq!(is_transitive(&moved, d), is_transitive(&t, d));
            prop_assert_eq!(&group_elements(&moved, d), &group);
        }
    }
}

#[test]
fn adjacent_square_is_pure_generator() {
    // letters A_{i,i+1} act as the square of the braid generator
    let t: Vec<Permutation> = ["(1 2 3)", "(2 4)", "(1 4 3 2)", "(3 4)"]
        .iter()
        .map(|s| Permutation::parse(s, 4).unwrap())
        .collect();
    for i in 1..t.len() {
        let twice = braid_move(&braid_move(&t, i).unwrap(), i).unwrap();
        assert_eq!(pure_braid_generator(&t, i, i + 1).unwrap(), twice);
    }
    assert_eq!(Generators::AdjacentSquares.letters(4).len(), 3);
    assert_eq!(Generators::Pure.letters(4).len(), 6);
}

#[test]
fn bfs_and_dfs_agree() {
    let enum_config = EnumConfig::default();
    for d in 3..=6 {
        for r in 3..=5 {
            for problem in genus_zero_problems(d, r) {
                let classes = enumerate_classes(&problem, &enum_config).unwrap();
                let report = |strategy| {
                    let config = OrbitConfig {
                        strategy,
                        ..OrbitConfig::default()
                    };
                    pure_braid_orbits(&classes, &config).unwrap()
                };
                let (bfs, dfs) = (report(Search::Bfs), report(Search::Dfs));
                assert_eq!(bfs.orbits, dfs.orbits, "{problem}");
                assert_eq!(bfs.outside_input, 0, "{problem}");
            }
        }
    }
}

#[test]
fn witness_words_reach_the_base() {
    use hurwitz_core::braid::apply_word;
    use hurwitz_core::EquivalenceClass;
    let problem = hurwitz_core::HurwitzProblem::genus_zero(5, vec![2, 3, 3, 4]).unwrap();
    let classes = enumerate_classes(&problem, &EnumConfig::default()).unwrap();
    let config = OrbitConfig {
        record_witnesses: true,
        ..OrbitConfig::default()
    };
    let report = pure_braid_orbits(&classes, &config).unwrap();
    let paths = report.witness_paths.as_ref().unwrap();
    for orbit in &report.orbits {
        let base = &orbit[0];
        for class in orbit {
            let image = apply_word(class.sigma(), &paths[class]).unwrap();
            assert_eq!(&EquivalenceClass::of(&image), base);
        }
    }
}
