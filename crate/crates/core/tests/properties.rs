use std::collections::BTreeSet;

use proptest::prelude::*;

use domino_cells::cycles::{cycles_of, move_through, open_cycle_class, Coloring};
use domino_cells::operators::{apply_op, OperatorId};
use domino_cells::repr::{character_value, class_of, dimension, shape_to_rep};
use domino_cells::tableaux::{domino_rs, inverse_rs, TableauPair};
use domino_cells::weyl_d::SignedElement;

/// Elements of `W(D_n)` for `2 ≤ n ≤ max`.
fn element(max: usize) -> impl Strategy<Value = SignedElement> {
    (2..=max)
        .prop_flat_map(|n| (Just((1..=n as i64).collect::<Vec<_>>()).prop_shuffle(), prop::collection::vec(any::<bool>(), n)))
        .prop_map(|(perm, signs)| {
            let mut v: Vec<i64> = perm.iter().zip(&signs).map(|(&x, &s)| if s { -x } else { x }).collect();
            if v.iter().filter(|&&x| x < 0).count() % 2 == 1 {
                v[0] = -v[0];
            }
            SignedElement::new(&v).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn rs_round_trips(w in element(9)) {
        let p = domino_rs(&w);
        prop_assert_eq!(p.left.shape(), p.right.shape());
        prop_assert_eq!(inverse_rs(&p).unwrap(), w.clone());
        prop_assert_eq!(domino_rs(&w.inverse()), p.swap());
    }

    #[test]
    fn image_parity_rule(w in element(9)) {
        let p = domino_rs(&w);
        prop_assert_eq!((p.left.vertical_count() + p.right.vertical_count()) % 4, 0);
        prop_assert!(p.admissible_hint());
    }

    #[test]
    fn cycles_partition_and_moves_are_involutions(w in element(8)) {
        let t = domino_rs(&w).left;
        let cycles = cycles_of(&t, Coloring::A);
        let labels: BTreeSet<u8> = cycles.iter().flat_map(|c| c.labels.iter().copied()).collect();
        prop_assert_eq!(labels.len(), t.size());
        prop_assert_eq!(cycles.iter().map(|c| c.labels.len()).sum::<usize>(), t.size());
        for c in &cycles {
            let u = move_through(&t, std::slice::from_ref(c)).unwrap();
            prop_assert!(u.is_standard());
            prop_assert_eq!(u.shape() != t.shape(), c.is_open());
            let back = cycles_of(&u, Coloring::A).into_iter().find(|d| d.labels == c.labels).unwrap();
            prop_assert_eq!(move_through(&u, &[back]).unwrap(), t.clone());
        }
    }

    #[test]
    fn open_cycle_classes_are_equivalence_classes(w in element(7)) {
        let t = domino_rs(&w).left;
        let class = open_cycle_class(&t, Coloring::A).unwrap();
        prop_assert!(class.contains(&t));
        for u in &class {
            prop_assert_eq!(&open_cycle_class(u, Coloring::A).unwrap(), &class);
        }
    }

    #[test]
    fn wall_crossing_is_an_involution(w in element(7)) {
        let p = domino_rs(&w);
        for op in OperatorId::wall_fork_chain(w.rank()) {
            let OperatorId::WallCross { alpha, beta } = op else { continue };
            let out = apply_op(&p, &op).unwrap();
            if out.is_empty() {
                continue;
            }
            prop_assert_eq!(out.len(), 1);
            prop_assert_eq!(&out[0].right, &p.right);
            let back = apply_op(&out[0], &OperatorId::WallCross { alpha: beta, beta: alpha }).unwrap();
            prop_assert_eq!(&back[0], &p);
            prop_assert!(inverse_rs(&out[0]).is_ok());
        }
    }

    #[test]
    fn degree_is_character_at_identity(w in element(8)) {
        let rep = shape_to_rep(&domino_rs(&w).shape()).unwrap();
        let id = class_of(&SignedElement::identity(w.rank()));
        prop_assert_eq!(character_value(&rep, &id) as u128, dimension(&rep));
    }

    #[test]
    fn pair_json_round_trips(w in element(8)) {
        let p = domino_rs(&w);
        let s = serde_json::to_string(&p).unwrap();
        let q: TableauPair = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(q, p);
    }
}
