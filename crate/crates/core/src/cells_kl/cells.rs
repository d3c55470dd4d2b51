//! Left, right and two-sided cells from the μ-graph.

use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};

use super::kl::KLTable;

pub type CellId = usize;

/// Cell partitions of a [`KLTable`]. Cells are listed in order of their
/// smallest element index; members are sorted.
#[derive(Debug, Clone)]
pub struct CellPartition {
    pub left_cells: Vec<Vec<usize>>,
    pub right_cells: Vec<Vec<usize>>,
    pub double_cells: Vec<Vec<usize>>,
    left_of: Vec<CellId>,
    right_of: Vec<CellId>,
    double_of: Vec<CellId>,
}

impl CellPartition {
    pub fn compute(t: &KLTable) -> Self {
        let size = t.len();
        // y -> x whenever x ≤_L y through one μ-edge.
        let mut left = Vec::new();
        let mut right = Vec::new();
        for w in 0..size {
            for &(x, _) in t.mu_list(w) {
                let x = x as usize;
                for (a, b) in [(x, w), (w, x)] {
                    if !t.left_descents(a).is_subset(t.left_descents(b)) {
                        left.push((b, a));
                    }
                    if !t.right_descents(a).is_subset(t.right_descents(b)) {
                        right.push((b, a));
                    }
                }
            }
        }
        let (left_cells, left_of) = scc(size, &left);
        let (right_cells, right_of) = scc(size, &right);
        let both: Vec<(usize, usize)> = left.iter().chain(right.iter()).copied().collect();
        let (double_cells, double_of) = scc(size, &both);
        CellPartition { left_cells, right_cells, double_cells, left_of, right_of, double_of }
    }

    pub fn left_cell_of(&self, w: usize) -> CellId {
        self.left_of[w]
    }

    pub fn right_cell_of(&self, w: usize) -> CellId {
        self.right_of[w]
    }

    pub fn double_cell_of(&self, w: usize) -> CellId {
        self.double_of[w]
    }

    /// Left cells contained in a double cell.
    pub fn left_cells_in(&self, d: CellId) -> Vec<CellId> {
        let mut v: Vec<CellId> =
            self.double_cells[d].iter().map(|&w| self.left_of[w]).collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

fn scc(size: usize, edges: &[(usize, usize)]) -> (Vec<Vec<usize>>, Vec<usize>) {
    let mut g: DiGraph<(), ()> = DiGraph::with_capacity(size, edges.len());
    for _ in 0..size {
        g.add_node(());
    }
    for &(a, b) in edges {
        g.add_edge(NodeIndex::new(a), NodeIndex::new(b), ());
    }
    let mut comps: Vec<Vec<usize>> = tarjan_scc(&g)
        .into_iter()
        .map(|c| {
            let mut v: Vec<usize> = c.into_iter().map(|n| n.index()).collect();
            v.sort_unstable();
            v
        })
        .collect();
    comps.sort();
    let mut of = vec![0; size];
    for (i, c) in comps.iter().enumerate() {
        for &w in c {
            of[w] = i;
        }
    }
    (comps, of)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn small_counts() {
        let t2 = KLTable::compute(2, false).unwrap();
        let c2 = CellPartition::compute(&t2);
        assert_eq!(c2.left_cells.len(), 4);
        let t3 = KLTable::compute(3, false).unwrap();
        let c3 = CellPartition::compute(&t3);
        assert_eq!(c3.left_cells.len(), 10);
        // S_4 has five two-sided cells
        assert_eq!(c3.double_cells.len(), 5);
    }

    #[test]
    fn right_cells_are_inverse_left_cells() {
        for n in [3, 4] {
            let t = KLTable::compute(n, false).unwrap();
            let c = CellPartition::compute(&t);
            let inv: BTreeSet<Vec<usize>> = c
                .left_cells
                .iter()
                .map(|cell| {
                    let mut v: Vec<usize> = cell.iter().map(|&w| t.inverse_index(w)).collect();
                    v.sort_unstable();
                    v
                })
                .collect();
            let right: BTreeSet<Vec<usize>> = c.right_cells.iter().cloned().collect();
            assert_eq!(inv, right);
            for w in 0..t.len() {
                assert_eq!(c.double_cell_of(w), c.double_cell_of(t.inverse_index(w)));
                // right descents are constant on left cells
                let cell = &c.left_cells[c.left_cell_of(w)];
                assert_eq!(t.right_descents(cell[0]), t.right_descents(w));
            }
            for d in &c.double_cells {
                let lc: usize = c.left_cells_in(c.double_cell_of(d[0])).iter().map(|&l| c.left_cells[l].len()).sum();
                assert_eq!(lc, d.len());
            }
        }
    }
}
