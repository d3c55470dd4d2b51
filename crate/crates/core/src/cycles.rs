//! Cycles of domino tableaux, moving through them, and extended open
//! cycles of one tableau relative to another.
//!
//! Under a coloring every cell is fixed or variable, and every domino
//! covers one of each. A perturbation of a tableau on a label set `S` is a
//! different standard tableau with the same dominoes outside `S` in which
//! every domino of `S` keeps its fixed cell. A cycle is a minimal label set
//! admitting a perturbation; moving through it applies that perturbation.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tableaux::{inverse_rs, Cell, Domino, DominoTableau, Shape, TableauPair};

#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Coloring {
    /// Fixed cells `(i,j)` with `i+j` even.
    A,
    /// Fixed cells `(i,j)` with `i+j` odd.
    B,
}

impl Coloring {
    pub fn is_fixed(self, (r, c): Cell) -> bool {
        let even = (r as usize + c as usize).is_multiple_of(2);
        even == (self == Coloring::A)
    }

    pub fn other(self) -> Coloring {
        match self {
            Coloring::A => Coloring::B,
            Coloring::B => Coloring::A,
        }
    }

    fn split(self, d: Domino) -> (Cell, Cell) {
        if self.is_fixed(d.0) {
            (d.0, d.1)
        } else {
            (d.1, d.0)
        }
    }
}

impl std::fmt::Display for Coloring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Coloring::A => "A",
            Coloring::B => "B",
        })
    }
}

/// The shape change of an open cycle.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OpenData {
    pub removed: Cell,
    pub added: Cell,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    /// Sorted labels.
    pub labels: Vec<u8>,
    pub coloring: Coloring,
    pub open: Option<OpenData>,
    /// New positions of the labels, in label order.
    targets: Vec<Domino>,
}

impl Cycle {
    pub fn is_open(&self) -> bool {
        self.open.is_some()
    }

    pub fn contains(&self, label: u8) -> bool {
        self.labels.binary_search(&label).is_ok()
    }

    pub fn min_label(&self) -> u8 {
        self.labels[0]
    }
}

fn neighbours((r, c): Cell) -> impl Iterator<Item = Cell> {
    let (r, c) = (r as i16, c as i16);
    [(r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)]
        .into_iter()
        .filter(|&(a, b)| a >= 0 && b >= 0 && a < 255 && b < 255)
        .map(|(a, b)| (a as u8, b as u8))
}

/// The three other dominoes through the fixed cell of `d`.
fn alternatives(d: Domino, c: Coloring) -> Vec<Domino> {
    let (f, v) = c.split(d);
    neighbours(f).filter(|&x| x != v).map(|x| Domino::new(f.min(x), f.max(x)).unwrap()).collect()
}

struct Search<'a> {
    old: &'a [Domino],
    coloring: Coloring,
    shape_cells: BTreeSet<Cell>,
    fixed_owner: BTreeMap<Cell, usize>,
    best: Option<(Vec<usize>, Vec<Domino>)>,
}

impl Search<'_> {
    fn run(&mut self, cur: &mut Vec<Domino>, moved: &mut Vec<bool>, left_empty: &mut Vec<Cell>) {
        let count = moved.iter().filter(|&&m| m).count();
        if let Some((b, _)) = &self.best {
            if count >= b.len() {
                return;
            }
        }
        // Coverage of the current configuration.
        let mut cover: BTreeMap<Cell, Vec<usize>> = BTreeMap::new();
        for (i, d) in cur.iter().enumerate() {
            for x in d.cells() {
                cover.entry(x).or_default().push(i);
            }
        }
        // A moved domino sitting on an unmoved one forces the latter to move.
        for owners in cover.values() {
            if owners.len() > 1 {
                let unmoved: Vec<usize> = owners.iter().copied().filter(|&i| !moved[i]).collect();
                if unmoved.len() != 1 || owners.len() != 2 {
                    return;
                }
                self.move_each(unmoved[0], cur, moved, left_empty);
                return;
            }
        }
        // Vacated cells of the old shape: leave empty, or fill from a
        // neighbouring fixed cell.
        let hole = self
            .shape_cells
            .iter()
            .copied()
            .find(|x| !cover.contains_key(x) && !left_empty.contains(x));
        if let Some(h) = hole {
            left_empty.push(h);
            self.run(cur, moved, left_empty);
            left_empty.pop();
            for f in neighbours(h) {
                if let Some(&j) = self.fixed_owner.get(&f) {
                    if moved[j] {
                        continue;
                    }
                    let prev = cur[j];
                    cur[j] = Domino::new(f.min(h), f.max(h)).unwrap();
                    moved[j] = true;
                    self.run(cur, moved, left_empty);
                    moved[j] = false;
                    cur[j] = prev;
                }
            }
            return;
        }
        if count == 0 {
            return;
        }
        if DominoTableau::try_from_positions(cur).is_some() {
            let set: Vec<usize> = (0..cur.len()).filter(|&i| moved[i]).collect();
            self.best = Some((set, cur.clone()));
        }
    }

    fn move_each(&mut self, i: usize, cur: &mut Vec<Domino>, moved: &mut Vec<bool>, left_empty: &mut Vec<Cell>) {
        let prev = cur[i];
        moved[i] = true;
        for alt in alternatives(self.old[i], self.coloring) {
            cur[i] = alt;
            self.run(cur, moved, left_empty);
        }
        cur[i] = prev;
        moved[i] = false;
    }
}

fn shape_cells(t: &DominoTableau) -> BTreeSet<Cell> {
    t.shape().cells().collect()
}

fn make_cycle(t: &DominoTableau, c: Coloring, labels: &[usize], new: &[Domino]) -> Cycle {
    let before = shape_cells(t);
    let after: BTreeSet<Cell> = new.iter().flat_map(|d| d.cells()).collect();
    let removed: Vec<Cell> = before.difference(&after).copied().collect();
    let added: Vec<Cell> = after.difference(&before).copied().collect();
    let open = match (removed.as_slice(), added.as_slice()) {
        ([], []) => None,
        ([r], [a]) => Some(OpenData { removed: *r, added: *a }),
        _ => unreachable!("a cycle changes at most one cell each way"),
    };
    Cycle {
        labels: labels.iter().map(|&i| i as u8 + 1).collect(),
        coloring: c,
        open,
        targets: labels.iter().map(|&i| new[i]).collect(),
    }
}

/// The cycle of `t` containing `label`.
fn cycle_containing(t: &DominoTableau, old: &[Domino], c: Coloring, label: usize) -> Option<Cycle> {
    let fixed_owner = old.iter().enumerate().map(|(i, d)| (c.split(*d).0, i)).collect();
    let mut s = Search { old, coloring: c, shape_cells: shape_cells(t), fixed_owner, best: None };
    let mut cur = old.to_vec();
    let mut moved = vec![false; old.len()];
    s.move_each(label, &mut cur, &mut moved, &mut Vec::new());
    s.best.map(|(set, new)| make_cycle(t, c, &set, &new))
}

/// The cycles of `t` under `c`, ordered by smallest label. A domino that
/// admits no perturbation at all (under coloring B, the domino covering the
/// corner cell) lies in no cycle.
pub fn cycles_of(t: &DominoTableau, c: Coloring) -> Vec<Cycle> {
    let old = t.positions();
    let mut covered = vec![false; old.len()];
    let mut out = Vec::new();
    for k in 0..old.len() {
        if covered[k] {
            continue;
        }
        let Some(cyc) = cycle_containing(t, &old, c, k) else {
            continue;
        };
        for &l in &cyc.labels {
            debug_assert!(!covered[l as usize - 1], "cycles overlap");
            covered[l as usize - 1] = true;
        }
        out.push(cyc);
    }
    out
}

/// Simultaneous move through a set of cycles of `t` (all of one coloring).
pub fn move_through(t: &DominoTableau, cycles: &[Cycle]) -> Result<DominoTableau> {
    let Some(first) = cycles.first() else {
        return Ok(t.clone());
    };
    if cycles.iter().any(|c| c.coloring != first.coloring) {
        return Err(Error::MixedColorings);
    }
    let actual = cycles_of(t, first.coloring);
    let mut pos = t.positions();
    for cyc in cycles {
        if !actual.contains(cyc) {
            return Err(Error::NotACycle(cyc.labels.clone()));
        }
        for (&l, &d) in cyc.labels.iter().zip(&cyc.targets) {
            pos[l as usize - 1] = d;
        }
    }
    DominoTableau::try_from_positions(&pos)
        .ok_or_else(|| Error::Invalid("simultaneous move did not give a standard tableau".into()))
}

/// Moves through the cycles of `t` whose smallest labels are listed.
pub fn move_through_labels(t: &DominoTableau, c: Coloring, mins: &[u8]) -> Result<DominoTableau> {
    let cyc: Vec<Cycle> = cycles_of(t, c).into_iter().filter(|x| mins.contains(&x.min_label())).collect();
    if cyc.len() != mins.len() {
        return Err(Error::NotACycle(mins.to_vec()));
    }
    move_through(t, &cyc)
}

/// Brute-force perturbation count on an exact label set (every domino of
/// the set moves). Exponential; used as a test oracle at small size.
pub fn strict_perturbations(t: &DominoTableau, c: Coloring, labels: &[u8]) -> Vec<DominoTableau> {
    let old = t.positions();
    let alts: Vec<Vec<Domino>> = labels.iter().map(|&l| alternatives(old[l as usize - 1], c)).collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; labels.len()];
    loop {
        let mut pos = old.clone();
        for (j, &l) in labels.iter().enumerate() {
            pos[l as usize - 1] = alts[j][idx[j]];
        }
        if let Some(u) = DominoTableau::try_from_positions(&pos) {
            out.push(u);
        }
        let mut j = 0;
        while j < idx.len() {
            idx[j] += 1;
            if idx[j] < alts[j].len() {
                break;
            }
            idx[j] = 0;
            j += 1;
        }
        if j == idx.len() {
            break;
        }
    }
    out
}

/// Cycles by exhaustive subset search from the semantic definition.
pub fn cycles_by_definition(t: &DominoTableau, c: Coloring) -> Vec<Vec<u8>> {
    let n = t.size();
    let mut admits: Vec<bool> = vec![false; 1 << n];
    let mut minimal = Vec::new();
    for mask in 1usize..(1 << n) {
        let labels: Vec<u8> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| i as u8 + 1).collect();
        let strict = !strict_perturbations(t, c, &labels).is_empty();
        let sub = (0..n).any(|i| mask >> i & 1 == 1 && admits[mask & !(1 << i)]);
        admits[mask] = strict || sub;
        if strict && !sub {
            minimal.push(labels);
        }
    }
    minimal.sort();
    minimal
}

/// A same-shape restoring move: open cycles of the left tableau together
/// with open cycles of the right one. Cycles are named by smallest label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PairMove {
    pub left_cycles: Vec<u8>,
    pub right_cycles: Vec<u8>,
}

fn cell_change(cycles: &[&Cycle], mask: usize) -> (BTreeSet<Cell>, BTreeSet<Cell>) {
    let mut rem = BTreeSet::new();
    let mut add = BTreeSet::new();
    for (i, c) in cycles.iter().enumerate() {
        if mask >> i & 1 == 1 {
            let o = c.open.unwrap();
            rem.insert(o.removed);
            add.insert(o.added);
        }
    }
    (rem, add)
}

fn shape_after(base: &BTreeSet<Cell>, change: &(BTreeSet<Cell>, BTreeSet<Cell>)) -> BTreeSet<Cell> {
    base.difference(&change.0).chain(change.1.iter()).copied().collect()
}

/// Tableaux obtained from `t` by moving through subsets of its open cycles,
/// sorted.
pub fn open_cycle_class(t: &DominoTableau, c: Coloring) -> Result<Vec<DominoTableau>> {
    let open: Vec<Cycle> = cycles_of(t, c).into_iter().filter(Cycle::is_open).collect();
    let mut out = BTreeSet::new();
    for m in 0u32..1 << open.len() {
        let sel: Vec<Cycle> = (0..open.len()).filter(|i| m >> i & 1 == 1).map(|i| open[i].clone()).collect();
        out.insert(move_through(t, &sel)?);
    }
    Ok(out.into_iter().collect())
}

/// Minimal pair moves with nonempty left part, under coloring `c`. A
/// selection restores the pair when both moved tableaux have one shape and
/// the moved pair is again in the image of the correspondence.
pub fn minimal_pair_moves(t1: &DominoTableau, t2: &DominoTableau, c: Coloring) -> Result<Vec<PairMove>> {
    if t1.shape() != t2.shape() {
        return Err(Error::ShapeMismatch(t1.shape().parts().to_vec(), t2.shape().parts().to_vec()));
    }
    let base = shape_cells(t1);
    let c1 = cycles_of(t1, c);
    let c2 = cycles_of(t2, c);
    let o1: Vec<&Cycle> = c1.iter().filter(|x| x.is_open()).collect();
    let o2: Vec<&Cycle> = c2.iter().filter(|x| x.is_open()).collect();
    let s1: Vec<BTreeSet<Cell>> = (0..1usize << o1.len()).map(|m| shape_after(&base, &cell_change(&o1, m))).collect();
    let s2: Vec<BTreeSet<Cell>> = (0..1usize << o2.len()).map(|m| shape_after(&base, &cell_change(&o2, m))).collect();
    let pick = |cs: &[&Cycle], m: usize| -> Vec<Cycle> {
        cs.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, x)| (*x).clone()).collect()
    };
    let mut restoring = vec![vec![false; s2.len()]; s1.len()];
    for a in 0..s1.len() {
        for b in 0..s2.len() {
            if (a, b) == (0, 0) || s1[a] != s2[b] {
                continue;
            }
            let (Ok(l), Ok(r)) = (move_through(t1, &pick(&o1, a)), move_through(t2, &pick(&o2, b))) else {
                continue;
            };
            restoring[a][b] = TableauPair::new(l, r).is_ok_and(|p| inverse_rs(&p).is_ok());
        }
    }
    let mut out = Vec::new();
    for a in 1..s1.len() {
        for b in 0..s2.len() {
            if !restoring[a][b] {
                continue;
            }
            let proper = (0..s1.len()).any(|a2| {
                a2 & !a == 0 && (0..s2.len()).any(|b2| b2 & !b == 0 && (a2, b2) != (a, b) && restoring[a2][b2])
            });
            if !proper {
                out.push(PairMove {
                    left_cycles: (0..o1.len()).filter(|i| a >> i & 1 == 1).map(|i| o1[i].min_label()).collect(),
                    right_cycles: (0..o2.len()).filter(|i| b >> i & 1 == 1).map(|i| o2[i].min_label()).collect(),
                });
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Extended open cycles of `(t1, t2)`: the minimal pair moves that are
/// independent under symmetric difference, taken greedily in sorted order.
/// Every minimal move is a sum of the returned ones.
pub fn extended_open_cycles(t1: &DominoTableau, t2: &DominoTableau, c: Coloring) -> Result<Vec<PairMove>> {
    let mut basis: Vec<PairMove> = Vec::new();
    let mut span: BTreeSet<(Vec<u8>, Vec<u8>)> = BTreeSet::from([(Vec::new(), Vec::new())]);
    for m in minimal_pair_moves(t1, t2, c)? {
        let key = (m.left_cycles.clone(), m.right_cycles.clone());
        if span.contains(&key) {
            continue;
        }
        let shifted: Vec<(Vec<u8>, Vec<u8>)> =
            span.iter().map(|(l, r)| (sym_diff(l, &m.left_cycles), sym_diff(r, &m.right_cycles))).collect();
        span.extend(shifted);
        basis.push(m);
    }
    Ok(basis)
}

fn sym_diff(a: &[u8], b: &[u8]) -> Vec<u8> {
    let a: BTreeSet<u8> = a.iter().copied().collect();
    let b: BTreeSet<u8> = b.iter().copied().collect();
    a.symmetric_difference(&b).copied().collect()
}

/// Applies a set of pair moves of `p`. Moves compose by symmetric difference
/// of their cycles, so a cycle named by two selected moves stays put.
pub fn apply_pair_move(p: &TableauPair, moves: &[PairMove], c: Coloring) -> Result<TableauPair> {
    if moves.is_empty() {
        return Ok(p.clone());
    }
    let current = minimal_pair_moves(&p.left, &p.right, c)?;
    if moves.iter().any(|m| !current.contains(m)) {
        return Err(Error::StaleMoveSet);
    }
    let (l, r) = moves.iter().fold((Vec::new(), Vec::new()), |(l, r), m| {
        (sym_diff(&l, &m.left_cycles), sym_diff(&r, &m.right_cycles))
    });
    let left = move_through_labels(&p.left, c, &l)?;
    let right = move_through_labels(&p.right, c, &r)?;
    TableauPair::new(left, right)
}

/// All pairs reachable from `p` by subsets of its extended open cycles,
/// keyed by the subset (as a bitmask over the returned move list).
pub fn reachable_pairs(p: &TableauPair, c: Coloring) -> Result<(Vec<PairMove>, Vec<TableauPair>)> {
    let moves = extended_open_cycles(&p.left, &p.right, c)?;
    let mut out = Vec::with_capacity(1 << moves.len());
    for mask in 0usize..(1 << moves.len()) {
        let sel: Vec<PairMove> =
            moves.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, m)| m.clone()).collect();
        out.push(apply_pair_move(p, &sel, c)?);
    }
    Ok((moves, out))
}

#[derive(Serialize)]
struct CycleJson {
    labels: Vec<u8>,
    open: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    removed: Option<[u32; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    added: Option<[u32; 2]>,
}

/// The cycle report `{"coloring":..,"cycles":[..]}` with one-based cells.
pub fn cycle_report(t: &DominoTableau, c: Coloring) -> serde_json::Value {
    let one = |x: Cell| [x.0 as u32 + 1, x.1 as u32 + 1];
    let cycles: Vec<CycleJson> = cycles_of(t, c)
        .into_iter()
        .map(|cy| CycleJson {
            labels: cy.labels.clone(),
            open: cy.is_open(),
            removed: cy.open.map(|o| one(o.removed)),
            added: cy.open.map(|o| one(o.added)),
        })
        .collect();
    serde_json::json!({ "coloring": c.to_string(), "cycles": cycles })
}

/// Shape reached by moving through the given open cycles.
pub fn shape_after_cycles(t: &DominoTableau, cycles: &[Cycle]) -> Shape {
    let mut cells = shape_cells(t);
    for c in cycles {
        if let Some(o) = c.open {
            cells.remove(&o.removed);
            cells.insert(o.added);
        }
    }
    let mut rows: Vec<usize> = Vec::new();
    for (r, _) in cells {
        let r = r as usize;
        if rows.len() <= r {
            rows.resize(r + 1, 0);
        }
        rows[r] += 1;
    }
    Shape::new(rows).expect("moves keep a partition")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::enumerate_tableaux;

    fn tab(map: &[(u8, [Cell; 2])]) -> DominoTableau {
        DominoTableau::validate(&map.iter().copied().collect()).unwrap()
    }

    #[test]
    fn corner_domino_is_rigid_under_b() {
        let t = tab(&[(1, [(0, 0), (0, 1)])]);
        assert!(cycles_of(&t, Coloring::B).is_empty());
        assert!(cycles_by_definition(&t, Coloring::B).is_empty());
    }

    #[test]
    fn single_domino() {
        let t = tab(&[(1, [(0, 0), (0, 1)])]);
        let cs = cycles_of(&t, Coloring::A);
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].labels, vec![1]);
        let o = cs[0].open.unwrap();
        assert_eq!((o.removed, o.added), ((0, 1), (1, 0)));
        let u = move_through(&t, &cs).unwrap();
        assert_eq!(u.shape().parts(), &[1, 1]);
    }

    #[test]
    fn row_of_two() {
        let t = tab(&[(1, [(0, 0), (0, 1)]), (2, [(0, 2), (0, 3)])]);
        let cs = cycles_of(&t, Coloring::A);
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].labels, vec![1, 2]);
        let u = move_through(&t, &cs).unwrap();
        assert_eq!(u.shape().parts(), &[3, 1]);
        assert_eq!(u.domino(1), Some(Domino::vertical(0, 0)));
        assert_eq!(u.domino(2), Some(Domino::horizontal(0, 1)));
        let back = cycles_of(&u, Coloring::A);
        assert_eq!(move_through(&u, &back).unwrap(), t);
    }

    #[test]
    fn errors() {
        let t = tab(&[(1, [(0, 0), (0, 1)]), (2, [(0, 2), (0, 3)])]);
        let a = cycles_of(&t, Coloring::A);
        assert!(cycles_of(&t, Coloring::B).is_empty());
        let b = Shape::tileable_of_total(6)
            .iter()
            .flat_map(|s| enumerate_tableaux(s).unwrap())
            .flat_map(|u| cycles_of(&u, Coloring::B))
            .next()
            .unwrap();
        let mixed = [a[0].clone(), b];
        assert!(matches!(move_through(&t, &mixed), Err(Error::MixedColorings)));
        let u = tab(&[(1, [(0, 0), (1, 0)]), (2, [(0, 1), (1, 1)])]);
        let foreign = cycles_of(&u, Coloring::A);
        assert!(matches!(move_through(&t, &foreign), Err(Error::NotACycle(_))));
        assert_eq!(move_through(&t, &[]).unwrap(), t);
    }

    #[test]
    fn matches_definition_small() {
        for total in (2..=8).step_by(2) {
            for shape in Shape::tileable_of_total(total) {
                for t in enumerate_tableaux(&shape).unwrap() {
                    for c in [Coloring::A, Coloring::B] {
                        let fast: Vec<Vec<u8>> = cycles_of(&t, c).into_iter().map(|x| x.labels).collect();
                        assert_eq!(fast, cycles_by_definition(&t, c), "{t:?} {c}");
                    }
                }
            }
        }
    }

    #[test]
    fn self_pair_moves_are_symmetric() {
        for total in [6, 8] {
            for shape in Shape::tileable_of_total(total) {
                for t in enumerate_tableaux(&shape).unwrap() {
                    let p = TableauPair::new(t.clone(), t.clone()).unwrap();
                    if inverse_rs(&p).is_err() {
                        continue;
                    }
                    for m in extended_open_cycles(&t, &t, Coloring::A).unwrap() {
                        assert_eq!(m.left_cycles, m.right_cycles);
                    }
                }
            }
        }
    }

    #[test]
    fn pair_moves_stay_in_image_and_invert() {
        for total in [4, 6, 8] {
            for shape in Shape::tileable_of_total(total) {
                let tabs = enumerate_tableaux(&shape).unwrap();
                for l in &tabs {
                    for r in &tabs {
                        let p = TableauPair::new(l.clone(), r.clone()).unwrap();
                        if inverse_rs(&p).is_err() {
                            continue;
                        }
                        let (moves, reached) = reachable_pairs(&p, Coloring::A).unwrap();
                        let distinct: BTreeSet<&TableauPair> = reached.iter().collect();
                        assert_eq!(distinct.len(), 1 << moves.len());
                        for q in &reached {
                            assert!(inverse_rs(q).is_ok());
                            let (_, back) = reachable_pairs(q, Coloring::A).unwrap();
                            assert!(back.contains(&p));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn report_json() {
        let t = tab(&[(1, [(0, 0), (0, 1)])]);
        let v = cycle_report(&t, Coloring::A);
        assert_eq!(
            v,
            serde_json::json!({"coloring":"A","cycles":[{"labels":[1],"open":true,"removed":[1,2],"added":[2,1]}]})
        );
    }
}
