//! Checks against values computed here by independent, naive means.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use domino_cells::cells_kl::{CellModule, CellPartition, KLTable};
use domino_cells::repr::{class_of, classes, dimension, irreducibles, CharacterTable};
use domino_cells::tableaux::{enumerate_tableaux, Shape};
use domino_cells::weyl_d::{enumerate_group, group_order, SignedElement};

/// Standard domino tableaux counted by removing the largest domino.
fn count_by_removal(parts: &[usize], memo: &mut HashMap<Vec<usize>, u64>) -> u64 {
    if parts.is_empty() {
        return 1;
    }
    if let Some(&v) = memo.get(parts) {
        return v;
    }
    let mut total = 0;
    for i in 0..parts.len() {
        let next = parts.get(i + 1).copied().unwrap_or(0);
        // Horizontal domino at the end of row i.
        if parts[i] >= next + 2 {
            let mut p = parts.to_vec();
            p[i] -= 2;
            while p.last() == Some(&0) {
                p.pop();
            }
            total += count_by_removal(&p, memo);
        }
        // Vertical domino at the end of rows i and i + 1.
        if i + 1 < parts.len() && parts[i] == parts[i + 1] && parts.get(i + 2).copied().unwrap_or(0) < parts[i] {
            let mut p = parts.to_vec();
            p[i] -= 1;
            p[i + 1] -= 1;
            while p.last() == Some(&0) {
                p.pop();
            }
            total += count_by_removal(&p, memo);
        }
    }
    memo.insert(parts.to_vec(), total);
    total
}

#[test]
fn tableau_counts_match_removal_recursion() {
    let mut memo = HashMap::new();
    for total in (2..=14).step_by(2) {
        for s in Shape::tileable_of_total(total) {
            let n = enumerate_tableaux(&s).unwrap().len() as u64;
            assert_eq!(n, count_by_removal(s.parts(), &mut memo), "shape {s}");
        }
    }
}

#[test]
fn tileable_shapes_have_empty_two_core() {
    let mut memo = HashMap::new();
    for total in (2..=12).step_by(2) {
        for s in Shape::tileable_of_total(total) {
            assert!(count_by_removal(s.parts(), &mut memo) > 0);
        }
    }
}

#[test]
fn d3_cells_are_those_of_s4() {
    // D_3 is A_3; left cells of S_4 have sizes f^λ, one cell per standard tableau.
    let t = KLTable::compute(3, false).unwrap();
    let cells = CellPartition::compute(&t);
    let mut sizes: Vec<usize> = cells.left_cells.iter().map(Vec::len).collect();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![1, 1, 2, 2, 3, 3, 3, 3, 3, 3]);
    assert_eq!(cells.double_cells.len(), 5);
}

#[test]
fn kl_polynomials_for_the_longest_element() {
    for n in 3..=4 {
        let t = KLTable::compute(n, false).unwrap();
        let w0 = t.index_of(&SignedElement::longest(n)).unwrap();
        for x in 0..t.len() {
            assert!(t.bruhat_le(x, w0));
            assert_eq!(t.p(x, w0).0, vec![1]);
        }
        for w in 0..t.len() {
            for x in 0..t.len() {
                let p = t.p(x, w);
                if let Some(d) = p.degree() {
                    assert_eq!(p.coeff(0), 1);
                    assert!(x == w || 2 * d < t.length(w) - t.length(x));
                }
            }
        }
    }
}

#[test]
fn conjugacy_classes_by_brute_force() {
    for n in 2..=4 {
        let g: Vec<SignedElement> = enumerate_group(n).unwrap().collect();
        let mut seen = BTreeSet::new();
        let mut sizes = Vec::new();
        for x in &g {
            if seen.contains(x) {
                continue;
            }
            let orbit: BTreeSet<SignedElement> =
                g.iter().map(|h| h.multiply(x).unwrap().multiply(&h.inverse()).unwrap()).collect();
            let label = class_of(x);
            assert!(orbit.iter().all(|y| class_of(y) == label));
            sizes.push((label, orbit.len() as u128));
            seen.extend(orbit);
        }
        let ours: BTreeMap<_, _> = classes(n).into_iter().map(|c| { let s = c.size(); (c, s) }).collect();
        assert_eq!(ours, sizes.into_iter().collect::<BTreeMap<_, _>>());
        assert_eq!(irreducibles(n).len(), ours.len());
    }
}

#[test]
fn d4_degrees() {
    let mut dims: Vec<u128> = irreducibles(4).iter().map(dimension).collect();
    dims.sort_unstable();
    assert_eq!(dims, vec![1, 1, 2, 3, 3, 3, 3, 3, 3, 4, 4, 6, 8]);
    assert_eq!(dims.iter().map(|d| d * d).sum::<u128>(), group_order(4));
}

#[test]
fn cell_modules_add_up_to_the_regular_representation() {
    let t = KLTable::compute(4, false).unwrap();
    let cells = CellPartition::compute(&t);
    let modules: Vec<CellModule> = (0..cells.left_cells.len()).map(|c| CellModule::new(&t, &cells, c)).collect();
    let id = t.index_of(&SignedElement::identity(4)).unwrap();
    for w in (0..t.len()).step_by(7) {
        let sum: i64 = modules.iter().map(|m| m.character_at(&t, w)).sum();
        assert_eq!(sum, if w == id { t.len() as i64 } else { 0 });
    }
    assert!(modules.iter().all(|m| m.relations_hold(4)));
    let tab = CharacterTable::new(4);
    assert_eq!(tab.irreducibles.len(), 13);
}
