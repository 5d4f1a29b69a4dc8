mod common;

use common::{config, cycle_pair, perm, sized_perm, tuple};
use hurwitz_core::factorization::{canonical_form, cycle_pair_decompose, overlap_cycle_count};
use hurwitz_core::Permutation;
use proptest::prelude::*;

fn conj_all(t: &[Permutation], g: &Permutation) -> Vec<Permutation> {
    t.iter().map(|p| p.conjugate(g).unwrap()).collect()
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn conjugation_is_a_homomorphism(
        (p, q, g) in (1usize..=12).prop_flat_map(|d| (perm(d), perm(d), perm(d)))
    ) {
        let pq = p.compose(&q).unwrap();
        let lhs = pq.conjugate(&g).unwrap();
        let rhs = p.conjugate(&g).unwrap().compose(&q.conjugate(&g).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn conjugate_is_g_inverse_p_g((p, g) in (1usize..=12).prop_flat_map(|d| (perm(d), perm(d)))) {
        let c = p.conjugate(&g).unwrap();
        for x in 0..p.degree() {
            // g⁻¹(p(g(x)))
            prop_assert_eq!(c.apply(x), g.inverse().apply(p.apply(g.apply(x))));
        }
    }

    #[test]
    fn cycle_type_is_conjugation_invariant((p, g) in (1usize..=16).prop_flat_map(|d| (perm(d), perm(d)))) {
        prop_assert_eq!(p.conjugate(&g).unwrap().cycle_type(), p.cycle_type());
        prop_assert_eq!(p.conjugate(&g).unwrap().index(), p.index());
    }

    #[test]
    fn inverse_cancels((_, p) in sized_perm(20)) {
        let d = p.degree();
        prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
        prop_assert!(p.inverse().compose(&p).unwrap().is_identity());
        prop_assert_eq!(p.inverse().inverse(), p.clone());
        prop_assert_eq!(p.pow(p.order() as usize), Permutation::identity(d));
    }

    #[test]
    fn cycles_round_trip((d, p) in sized_perm(20)) {
        prop_assert_eq!(Permutation::from_cycles(&p.cycles_1based(), d).unwrap(), p.clone());
        prop_assert_eq!(Permutation::parse(&p.to_string(), d).unwrap(), p.clone());
        let moved: usize = p.cycles().iter().map(Vec::len).sum();
        prop_assert_eq!(moved, p.support().len());
    }

    #[test]
    fn canonical_form_is_conjugation_invariant(
        (t, g) in (2usize..=7, 2usize..=4).prop_flat_map(|(d, n)| (tuple(d, n), perm(d)))
    ) {
        let c = canonical_form(&t);
        prop_assert_eq!(canonical_form(&conj_all(&t, &g)), c.clone());
        prop_assert_eq!(canonical_form(&c), c.clone());
        // the canonical form is itself a simultaneous conjugate of the input
        prop_assert!(c <= conj_all(&t, &g));
    }

    #[test]
    fn pair_decomposition_properties((s, sp) in cycle_pair(10)) {
        let overlap = s.support().intersection(sp.support());
        let prod = &s * &sp;
        prop_assume!(!overlap.is_empty() && !prod.is_identity());
        let dec = cycle_pair_decompose(&s, &sp).unwrap();
        let m = dec.m();
        prop_assert!(m >= 1);
        // (i) w words non-empty
        prop_assert!(dec.w.iter().chain(&dec.w_prime).all(|w| !w.is_empty()));
        // the words spell out the two cycles
        let spell = |w: &[Vec<usize>], v: &[Vec<usize>]| -> Vec<usize> {
            w.iter().zip(v).flat_map(|(a, b)| a.iter().chain(b)).copied().collect()
        };
        let cyc = spell(&dec.w, &dec.v);
        let cyc_p = spell(&dec.w_prime, &dec.v_prime);
        for (word, p) in [(&cyc, &s), (&cyc_p, &sp)] {
            prop_assert_eq!(word.len(), p.support().len());
            for (i, &x) in word.iter().enumerate() {
                prop_assert_eq!(p.apply(x), word[(i + 1) % word.len()]);
            }
        }
        // (ii), (iii) the v words avoid the other support
        prop_assert!(dec.v_prime.iter().flatten().all(|&x| !s.support().contains(x)));
        prop_assert!(dec.v.iter().flatten().all(|&x| !sp.support().contains(x)));
        // (iv) each w is a reversed w'
        let mut tau = dec.tau.clone();
        for i in 0..m {
            let rev: Vec<usize> = dec.w_prime[dec.tau[i]].iter().rev().copied().collect();
            prop_assert_eq!(&dec.w[i], &rev);
        }
        tau.sort_unstable();
        prop_assert_eq!(tau, (0..m).collect::<Vec<_>>());
        // (v) the first points are the triple overlap
        let mut firsts: Vec<usize> = dec.w.iter().map(|w| w[0]).collect();
        firsts.sort_unstable();
        let triple: Vec<usize> = overlap.intersection(prod.support()).iter().collect();
        prop_assert_eq!(firsts, triple);
    }

    #[test]
    fn overlap_count_law((s, sp) in cycle_pair(10)) {
        let overlap = s.support().intersection(sp.support());
        prop_assume!(!overlap.is_empty());
        let prod = &s * &sp;
        let triple = overlap.intersection(prod.support());
        if triple.len() <= 2 {
            let (set, n) = overlap_cycle_count(&s, &sp).unwrap();
            prop_assert_eq!(set, triple);
            prop_assert_eq!(n, prod.cycles().len());
            prop_assert_eq!(n, triple.len());
            for c in prod.cycles() {
                prop_assert_eq!(c.iter().filter(|&&x| triple.contains(x)).count(), 1);
            }
        } else {
            prop_assert!(overlap_cycle_count(&s, &sp).is_err());
        }
    }
}
