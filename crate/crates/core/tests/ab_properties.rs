use num_bigint::BigInt;
use proptest::prelude::*;

use straightlab::ab::{ext_group, extend_hom, hom_group, smith_normal_form, FGAbGroup, IntMatrix};

mod common;
use common::{brute_extension_exists, finite_elements, snf_instance_ok};

fn matrix(rows: usize, cols: usize, entries: &[i64]) -> IntMatrix {
    IntMatrix::from_fn(rows, cols, |r, c| BigInt::from(entries[r * cols + c]))
}

/// A unimodular matrix built from elementary operations.
fn unimodular(n: usize, ops: &[(usize, usize, i64)]) -> IntMatrix {
    let mut m = IntMatrix::identity(n);
    for &(i, j, k) in ops {
        let (i, j) = (i % n, j % n);
        if i == j {
            for c in 0..n {
                m[(i, c)] = -m[(i, c)].clone();
            }
        } else {
            for c in 0..n {
                let add = &m[(j, c)] * BigInt::from(k);
                m[(i, c)] += add;
            }
        }
    }
    m
}

fn order_strategy() -> impl Strategy<Value = Vec<u64>> {
    proptest::collection::vec(prop_oneof![Just(0u64), 1u64..7], 0..3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn smith_form_satisfies_its_contract(rows in 1usize..7, cols in 1usize..7, entries in proptest::collection::vec(-9i64..=9, 36)) {
        prop_assert!(snf_instance_ok(&matrix(rows, cols, &entries)));
    }

    #[test]
    fn invariant_factors_ignore_the_presentation(
        rows in 1usize..5,
        cols in 1usize..5,
        entries in proptest::collection::vec(-9i64..=9, 16),
        left in proptest::collection::vec((0usize..5, 0usize..5, -3i64..=3), 0..6),
        right in proptest::collection::vec((0usize..5, 0usize..5, -3i64..=3), 0..6),
    ) {
        let m = matrix(rows, cols, &entries);
        let changed = unimodular(rows, &left).checked_mul(&m).unwrap().checked_mul(&unimodular(cols, &right)).unwrap();
        prop_assert_eq!(smith_normal_form(&m).diagonal(), smith_normal_form(&changed).diagonal());
        let g = FGAbGroup::new(rows, m).unwrap();
        let h = FGAbGroup::new(rows, changed).unwrap();
        prop_assert!(g.isomorphic(&h));
    }

    #[test]
    fn hom_and_ext_are_additive(a in order_strategy(), b in order_strategy(), m in order_strategy()) {
        let (ga, gb, gm) = (FGAbGroup::from_orders(&a), FGAbGroup::from_orders(&b), FGAbGroup::from_orders(&m));
        let sum = FGAbGroup::direct_sum(&[ga.clone(), gb.clone()]);
        let ds = |x: FGAbGroup, y: FGAbGroup| FGAbGroup::direct_sum(&[x, y]);
        prop_assert!(hom_group(&sum, &gm).isomorphic(&ds(hom_group(&ga, &gm), hom_group(&gb, &gm))));
        prop_assert!(hom_group(&gm, &sum).isomorphic(&ds(hom_group(&gm, &ga), hom_group(&gm, &gb))));
        prop_assert!(ext_group(&sum, &gm).isomorphic(&ds(ext_group(&ga, &gm), ext_group(&gb, &gm))));
        prop_assert!(ext_group(&gm, &sum).isomorphic(&ds(ext_group(&gm, &ga), ext_group(&gm, &gb))));
    }

    #[test]
    fn extension_matches_enumeration(
        src in proptest::collection::vec(prop_oneof![Just(0u64), 2u64..7], 1..3),
        tgt in proptest::collection::vec(2u64..5, 1..3),
        picks in proptest::collection::vec((proptest::collection::vec(-4i64..=4, 2), 0usize..16), 0..4),
    ) {
        let source = FGAbGroup::from_orders(&src);
        let target = FGAbGroup::from_orders(&tgt);
        let targets = finite_elements(&target, &tgt);
        let constraints: Vec<_> = picks
            .iter()
            .map(|(a, t)| (a[..src.len()].iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>(), targets[t % targets.len()].clone()))
            .collect();
        let e = extend_hom(&source, &constraints, &target).unwrap();
        prop_assert_eq!(e.exists(), brute_extension_exists(&source, &constraints, &target, &targets));
        match e.hom() {
            Some(h) => {
                for (a, m) in &constraints {
                    prop_assert!(target.elem_eq(&h.apply(a), m));
                }
            }
            None => prop_assert!(e.witness().unwrap().verify(&source, &constraints, &target)),
        }
    }
}
