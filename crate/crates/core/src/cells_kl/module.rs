//! Left cell modules at `q = 1` in the basis `C_w`.
//!
//! `s·C_w = −C_w` when `s ∈ L(w)`, otherwise
//! `s·C_w = C_w + Σ μ̃(y,w) C_y` over `y` in the cell with `s ∈ L(y)`;
//! terms outside the cell vanish in the quotient by lower cells.
//! The identity cell is the trivial representation.

use std::collections::HashMap;

use crate::linalg::{identity, mat_mul};
use crate::weyl_d::SimpleRoot;

use super::cells::{CellId, CellPartition};
use super::kl::KLTable;

#[derive(Debug, Clone)]
pub struct CellModule {
    pub cell: CellId,
    /// Basis labels (element indices), sorted.
    pub basis: Vec<usize>,
    pos: HashMap<usize, usize>,
    /// `gens[s.index()]`, column `j` is the image of basis vector `j`.
    gens: Vec<Vec<Vec<i64>>>,
}

impl CellModule {
    pub fn new(t: &KLTable, cells: &CellPartition, cell: CellId) -> Self {
        let basis = cells.left_cells[cell].clone();
        let pos: HashMap<usize, usize> = basis.iter().enumerate().map(|(i, &w)| (w, i)).collect();
        let d = basis.len();
        let gens = SimpleRoot::all(t.rank())
            .into_iter()
            .map(|s| {
                let mut m = vec![vec![0i64; d]; d];
                for (j, &w) in basis.iter().enumerate() {
                    if t.left_descents(w).contains(s) {
                        m[j][j] = -1;
                        continue;
                    }
                    m[j][j] = 1;
                    for (i, &y) in basis.iter().enumerate() {
                        if t.left_descents(y).contains(s) {
                            m[i][j] += t.mu_sym(y, w);
                        }
                    }
                }
                m
            })
            .collect();
        CellModule { cell, basis, pos, gens }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn position(&self, w: usize) -> Option<usize> {
        self.pos.get(&w).copied()
    }

    pub fn generator(&self, s: SimpleRoot) -> &[Vec<i64>] {
        &self.gens[s.index()]
    }

    /// Generator matrices indexed by [`SimpleRoot::index`].
    pub fn generators(&self) -> &[Vec<Vec<i64>>] {
        &self.gens
    }

    /// Matrix of the group element with index `w`, via a reduced word.
    pub fn matrix_of(&self, t: &KLTable, mut w: usize) -> Vec<Vec<i64>> {
        let mut m = identity(self.dim());
        while let Some(s) = t.left_descents(w).iter().next() {
            m = mat_mul(&m, &self.gens[s.index()]);
            w = t.left_mul_index(s, w);
        }
        m
    }

    pub fn character_at(&self, t: &KLTable, w: usize) -> i64 {
        let m = self.matrix_of(t, w);
        (0..self.dim()).map(|i| m[i][i]).sum()
    }

    /// Checks `s² = 1` and the braid relations.
    pub fn relations_hold(&self, n: usize) -> bool {
        let id = identity(self.dim());
        let roots = SimpleRoot::all(n);
        for &s in &roots {
            let m = self.generator(s);
            if mat_mul(m, m) != id {
                return false;
            }
        }
        for (i, &s) in roots.iter().enumerate() {
            for &r in &roots[i + 1..] {
                let order = if s.adjacent(r) { 3 } else { 2 };
                let st = mat_mul(self.generator(s), self.generator(r));
                let mut p = id.clone();
                for _ in 0..order {
                    p = mat_mul(&p, &st);
                }
                if p != id {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_cell_is_trivial() {
        let t = KLTable::compute(3, false).unwrap();
        let c = CellPartition::compute(&t);
        let m = CellModule::new(&t, &c, c.left_cell_of(0));
        assert_eq!(m.dim(), 1);
        for s in SimpleRoot::all(3) {
            assert_eq!(m.generator(s), &[vec![1]]);
        }
    }

    #[test]
    fn relations_and_regular_character() {
        for n in [3, 4] {
            let t = KLTable::compute(n, false).unwrap();
            let c = CellPartition::compute(&t);
            let mods: Vec<CellModule> =
                (0..c.left_cells.len()).map(|i| CellModule::new(&t, &c, i)).collect();
            assert_eq!(mods.iter().map(CellModule::dim).sum::<usize>(), t.len());
            for m in &mods {
                assert!(m.relations_hold(n));
            }
            for w in 1..t.len() {
                let chi: i64 = mods.iter().map(|m| m.character_at(&t, w)).sum();
                assert_eq!(chi, 0, "regular character at {}", t.element(w));
            }
        }
    }
}
