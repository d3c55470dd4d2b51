//! Linear extensions of tableau operators to left cell modules.
//!
//! An operator sends `C_w` to the sum of `C_{w'}` over its outputs `w'`,
//! and to zero where it is undefined.
//! The map is checked against the generator matrices, and on each
//! isotypic component common to source and target.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::Result;
use crate::linalg::{apply, q, Span, Q};
use crate::operators::{apply_op, OperatorId};
use crate::repr::{class_of, Bipartition, CharacterTable};
use crate::tableaux::{domino_rs, inverse_rs};

use super::cells::{CellId, CellPartition};
use super::kl::KLTable;
use super::module::CellModule;

#[derive(Debug, Clone, Serialize)]
pub struct IsotypicCheck {
    pub rep: Bipartition,
    pub source_dim: usize,
    pub target_dim: usize,
    /// Rank of the map restricted to the source component.
    pub image_rank: usize,
    /// The source component maps injectively into the target component, so
    /// onto one copy of it.
    pub isomorphic: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct EquivarianceReport {
    pub operator: String,
    pub source: CellId,
    pub targets: Vec<CellId>,
    /// Basis elements of the source on which the operator is defined.
    pub defined_on: usize,
    pub source_dim: usize,
    /// Defined on no element of the source.
    pub skipped: bool,
    /// Defined on part of the source only; the map is zero elsewhere.
    pub partial: bool,
    pub commutes: bool,
    /// Every output lies in the right cell of its input.
    pub preserves_right_cells: bool,
    pub components: Vec<IsotypicCheck>,
    pub pass: bool,
}

/// Equivariance of the linear extension of `op` on the left cell `c1`.
pub fn equivariance_check(t: &KLTable, cells: &CellPartition, op: &OperatorId, c1: CellId) -> Result<EquivarianceReport> {
    let tab = CharacterTable::new(t.rank());
    equivariance_of_map(t, cells, &tab, c1, &op.to_string(), |w| op_images(t, op, w))
}

fn op_images(t: &KLTable, op: &OperatorId, w: usize) -> Result<Vec<usize>> {
    apply_op(&domino_rs(t.element(w)), op)?
        .iter()
        .map(|p| Ok(t.index_of(&inverse_rs(p)?).expect("image element in table")))
        .collect()
}

/// Wall-crossing, fork, chain and enlarged operators of `rank` on every
/// left cell; cells where an operator is undefined are left out.
pub fn equivariance_sweep(t: &KLTable, cells: &CellPartition) -> Result<Vec<EquivarianceReport>> {
    use rayon::prelude::*;
    let n = t.rank();
    let mut ops = OperatorId::wall_fork_chain(n);
    ops.extend(OperatorId::enlarged_family(n));
    let tab = CharacterTable::new(n);
    let jobs: Vec<(&OperatorId, CellId)> =
        ops.iter().flat_map(|op| (0..cells.left_cells.len()).map(move |c| (op, c))).collect();
    let reports: Vec<EquivarianceReport> = jobs
        .par_iter()
        .map(|&(op, c)| {
            equivariance_of_map(t, cells, &tab, c, &op.to_string(), |w| op_images(t, op, w))
        })
        .collect::<Result<_>>()?;
    Ok(reports.into_iter().filter(|r| !r.skipped).collect())
}

/// As [`equivariance_check`] for an arbitrary basis map `f`.
pub fn equivariance_of_map(
    t: &KLTable,
    cells: &CellPartition,
    tab: &CharacterTable,
    c1: CellId,
    name: &str,
    f: impl Fn(usize) -> Result<Vec<usize>>,
) -> Result<EquivarianceReport> {
    let source = CellModule::new(t, cells, c1);
    let images: Vec<Vec<usize>> = source.basis.iter().map(|&w| f(w)).collect::<Result<_>>()?;
    let defined_on = images.iter().filter(|v| !v.is_empty()).count();
    let targets: Vec<CellId> =
        images.iter().flatten().map(|&w| cells.left_cell_of(w)).collect::<BTreeSet<_>>().into_iter().collect();
    let mut report = EquivarianceReport {
        operator: name.to_string(),
        source: c1,
        targets: targets.clone(),
        defined_on,
        source_dim: source.dim(),
        skipped: defined_on == 0,
        partial: defined_on > 0 && defined_on < source.dim(),
        commutes: true,
        preserves_right_cells: true,
        components: Vec::new(),
        pass: true,
    };
    if report.skipped {
        return Ok(report);
    }
    report.preserves_right_cells = source.basis.iter().zip(&images).all(|(&w, outs)| {
        outs.iter().all(|&v| cells.right_cell_of(v) == cells.right_cell_of(w))
    });

    let target = DirectSum::new(t, cells, &targets);
    // Column j of `m` is the image of source basis vector j.
    let mut m = vec![vec![0i64; source.dim()]; target.dim];
    for (j, outs) in images.iter().enumerate() {
        for &v in outs {
            m[target.position(v)][j] += 1;
        }
    }
    let gens = target.generators(t.rank());
    report.commutes = source
        .generators()
        .iter()
        .zip(&gens)
        .all(|(g1, g2)| mul(&m, g1) == mul(g2, &m));

    let sums1 = class_sums(t, tab, &[&source]);
    let mods: Vec<CellModule> = targets.iter().map(|&c| CellModule::new(t, cells, c)).collect();
    let sums2 = class_sums(t, tab, &mods.iter().collect::<Vec<_>>());
    for (i, rep) in tab.irreducibles.iter().enumerate() {
        let iso1 = isotypic(&sums1, &tab.values[i], source.dim());
        let iso2 = isotypic(&sums2, &tab.values[i], target.dim);
        if iso1.rank() == 0 || iso2.rank() == 0 {
            continue;
        }
        let mut img = Span::new(target.dim);
        for b in iso1.basis() {
            img.insert(&apply_q(&m, b));
        }
        let contained = img.basis().iter().all(|v| iso2.contains(v));
        let isomorphic = contained && img.rank() == iso1.rank();
        report.components.push(IsotypicCheck {
            rep: rep.clone(),
            source_dim: iso1.rank(),
            target_dim: iso2.rank(),
            image_rank: img.rank(),
            isomorphic,
        });
    }
    report.pass = report.commutes && report.components.iter().all(|c| c.isomorphic);
    Ok(report)
}

/// Block diagonal sum of several left cell modules.
struct DirectSum {
    mods: Vec<CellModule>,
    offsets: Vec<usize>,
    dim: usize,
}

impl DirectSum {
    fn new(t: &KLTable, cells: &CellPartition, ids: &[CellId]) -> Self {
        let mods: Vec<CellModule> = ids.iter().map(|&c| CellModule::new(t, cells, c)).collect();
        let mut offsets = Vec::new();
        let mut dim = 0;
        for m in &mods {
            offsets.push(dim);
            dim += m.dim();
        }
        DirectSum { mods, offsets, dim }
    }

    fn position(&self, w: usize) -> usize {
        self.mods
            .iter()
            .zip(&self.offsets)
            .find_map(|(m, o)| m.position(w).map(|p| o + p))
            .expect("target element lies in a target cell")
    }

    fn generators(&self, n: usize) -> Vec<Vec<Vec<i64>>> {
        (0..n)
            .map(|s| {
                let mut g = vec![vec![0i64; self.dim]; self.dim];
                for (m, &o) in self.mods.iter().zip(&self.offsets) {
                    for (i, row) in m.generators()[s].iter().enumerate() {
                        for (j, &x) in row.iter().enumerate() {
                            g[o + i][o + j] = x;
                        }
                    }
                }
                g
            })
            .collect()
    }
}

fn mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| (0..cols).map(|j| row.iter().zip(b).map(|(x, r)| x * r[j]).sum()).collect())
        .collect()
}

fn apply_q(m: &[Vec<i64>], v: &[Q]) -> Vec<Q> {
    if m.is_empty() {
        return Vec::new();
    }
    apply(m, v)
}

/// Per class, the sum of the matrices of its elements on a direct sum of
/// modules (block diagonal, flattened to one matrix).
fn class_sums(t: &KLTable, tab: &CharacterTable, mods: &[&CellModule]) -> Vec<Vec<Vec<i64>>> {
    let dim: usize = mods.iter().map(|m| m.dim()).sum();
    let mut sums = vec![vec![vec![0i64; dim]; dim]; tab.classes.len()];
    for g in 0..t.len() {
        let c = tab.class_index(&class_of(t.element(g))).expect("class label in table");
        let mut o = 0;
        for m in mods {
            let mat = m.matrix_of(t, g);
            for (i, row) in mat.iter().enumerate() {
                for (j, &x) in row.iter().enumerate() {
                    sums[c][o + i][o + j] += x;
                }
            }
            o += m.dim();
        }
    }
    sums
}

/// Image of `Σ_g χ(g) g`, the isotypic component of `χ`.
fn isotypic(sums: &[Vec<Vec<i64>>], chi: &[i64], dim: usize) -> Span {
    let mut a = vec![vec![0i64; dim]; dim];
    for (s, &x) in sums.iter().zip(chi) {
        for i in 0..dim {
            for j in 0..dim {
                a[i][j] += x * s[i][j];
            }
        }
    }
    let mut span = Span::new(dim);
    for j in 0..dim {
        let col: Vec<Q> = (0..dim).map(|i| q(a[i][j])).collect();
        span.insert(&col);
    }
    span
}
