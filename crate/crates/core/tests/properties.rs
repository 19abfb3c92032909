mod common;

use std::collections::BTreeMap;

use esakia::algebra::{algebra_iso, is_homomorphism};
use esakia::duality::{
    congruences_via_upsets, dual_homomorphism, enumerate_correct_partitions, enumerate_esakia_morphisms,
    is_esakia_morphism, partition_to_subalgebra, prime_filters, quotient_space, subalgebra_to_partition,
};
use esakia::poset::{are_isomorphic, FinitePoset};
use esakia::terms::{eval, validates, Validity};
use esakia::variety::kg_es_certificate;
use esakia::{Equation, HeytingAlgebra, Term, VarietyPresentation};
use proptest::prelude::*;

fn poset(max: usize) -> impl Strategy<Value = FinitePoset> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
            let covers: Vec<(usize, usize)> = pairs.into_iter().zip(bits).filter(|(_, b)| *b).map(|(p, _)| p).collect();
            FinitePoset::from_covers(n, &covers).unwrap()
        })
    })
}

fn term(vars: usize) -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        (0..vars).prop_map(Term::Var),
        Just(Term::Zero),
        Just(Term::One),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::meet(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::join(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Term::imp(a, b)),
        ]
    })
}

fn algebra(p: &FinitePoset) -> HeytingAlgebra {
    HeytingAlgebra::from_upsets(p).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn upset_algebras_are_heyting_and_fsi_iff_rooted(p in poset(6)) {
        let a = algebra(&p).without_provenance();
        prop_assert!(a.verify_heyting().is_ok());
        let dual = prime_filters(&a).unwrap();
        prop_assert_eq!(a.is_fsi(), dual.is_rooted());
        prop_assert!(are_isomorphic(&dual, &p).is_some());
    }

    #[test]
    fn sums_are_heyting_and_associative(p in poset(3), q in poset(3), r in poset(3)) {
        let (a, b, c) = (algebra(&p), algebra(&q), algebra(&r));
        let left = a.alg_sum(&b).alg_sum(&c);
        let right = a.alg_sum(&b.alg_sum(&c));
        prop_assert!(left.verify_heyting().is_ok());
        prop_assert!(algebra_iso(&left, &right).is_some());
        prop_assert_eq!(left.len(), a.len() + b.len() + c.len() - 2);
    }

    #[test]
    fn depth_adds_under_sums(p in poset(4), q in poset(4)) {
        prop_assert_eq!(p.sum(&q).depth(), p.depth() + q.depth());
        let rooted = FinitePoset::tower(&[FinitePoset::chain(1), p.clone()], false);
        prop_assert_eq!(rooted.width(), p.max_antichain_in(p.full()));
    }

    #[test]
    fn terms_print_and_parse_back(t in term(4)) {
        let s = t.to_string();
        let back: Term = s.parse().unwrap();
        prop_assert_eq!(back, t);
    }

    #[test]
    fn homomorphisms_preserve_evaluation(p in poset(4), q in poset(3), t in term(3), seed in any::<u64>()) {
        let maps = enumerate_esakia_morphisms(&p, &q).unwrap();
        prop_assume!(!maps.is_empty());
        let f = &maps[(seed as usize) % maps.len()];
        let (x_alg, y_alg) = (algebra(&p), algebra(&q));
        let h = dual_homomorphism(&f.map, &p, &q);
        prop_assert!(is_homomorphism(&y_alg, &x_alg, &h));
        let vals: BTreeMap<usize, usize> = (0..3).map(|i| (i, (seed as usize >> (8 * i)) % y_alg.len())).collect();
        let moved: BTreeMap<usize, usize> = vals.iter().map(|(&k, &v)| (k, h[v])).collect();
        prop_assert_eq!(h[eval(&t, &y_alg, &vals).unwrap()], eval(&t, &x_alg, &moved).unwrap());
    }

    #[test]
    fn morphism_enumeration_matches_all_maps(p in poset(4), q in poset(3)) {
        let listed = enumerate_esakia_morphisms(&p, &q).unwrap();
        let mut brute = Vec::new();
        let total = q.len().pow(p.len() as u32);
        for code in 0..total {
            let mut rest = code;
            let f: Vec<usize> = (0..p.len()).map(|_| { let v = rest % q.len(); rest /= q.len(); v }).collect();
            if is_esakia_morphism(&f, &p, &q).is_ok() {
                brute.push(f);
            }
        }
        brute.sort();
        prop_assert_eq!(listed.into_iter().map(|m| m.map).collect::<Vec<_>>(), brute);
    }

    #[test]
    fn quotient_maps_are_esakia(p in poset(6)) {
        let b = algebra(&p);
        for r in enumerate_correct_partitions(&p).unwrap() {
            let (q, map) = quotient_space(&p, &r).unwrap();
            prop_assert_eq!(q.len(), r.num_classes());
            prop_assert!(is_esakia_morphism(&map, &p, &q).is_ok());
            let s = partition_to_subalgebra(&b, &r).unwrap();
            prop_assert_eq!(subalgebra_to_partition(&b, &s).unwrap(), r.clone());
            prop_assert!(algebra_iso(&s.algebra(&b), &algebra(&q)).is_some());
        }
    }

    #[test]
    fn congruence_maps_are_homomorphisms(p in poset(5)) {
        let a = algebra(&p);
        let congs = congruences_via_upsets(&a).unwrap();
        prop_assert_eq!(congs.len(), p.all_upsets().len());
        for c in congs {
            prop_assert!(is_homomorphism(&a, &c.quotient, &c.map));
        }
    }

    #[test]
    fn validity_search_matches_naive_enumeration(p in poset(4), l in term(3), r in term(3)) {
        let a = algebra(&p);
        let eq = Equation::new(l, r);
        let vars = eq.vars();
        let m = a.len();
        let mut naive = None;
        for code in 0..m.pow(vars.len() as u32) {
            let mut rest = code;
            let mut vals = vec![0; vars.len()];
            for k in (0..vars.len()).rev() {
                vals[k] = rest % m;
                rest /= m;
            }
            let s: BTreeMap<usize, usize> = vars.iter().copied().zip(vals).collect();
            if eval(&eq.lhs, &a, &s).unwrap() != eval(&eq.rhs, &a, &s).unwrap() {
                naive = Some(s);
                break;
            }
        }
        match validates(&a, &eq).unwrap() {
            Validity::Valid => prop_assert!(naive.is_none()),
            Validity::Falsified { assignment, .. } => prop_assert_eq!(Some(assignment), naive),
        }
    }

    #[test]
    fn intervals_are_heyting(p in poset(5), i in any::<usize>(), j in any::<usize>()) {
        let a = algebra(&p);
        let (x, y) = (i % a.len(), j % a.len());
        let (lo, hi) = (a.meet(x, y), a.join(x, y));
        let (block, _) = a.interval(lo, hi).unwrap();
        prop_assert!(block.verify_heyting().is_ok());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn kg_certificates_are_monotone(p in poset(4)) {
        let v = VarietyPresentation::single(algebra(&p)).unwrap();
        let c = kg_es_certificate(&v, 3).unwrap();
        prop_assert!(c.monotone);
    }

    #[test]
    fn subalgebra_oracle_matches_partitions(p in poset(5)) {
        let b = algebra(&p);
        prop_assert_eq!(common::subalgebras_brute(&b).len(), enumerate_correct_partitions(&p).unwrap().len());
    }
}
