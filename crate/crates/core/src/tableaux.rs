//! Shapes, standard domino tableaux and the domino Robinson–Schensted
//! correspondence `w ↦ (T_L(w), T_R(w))` for signed permutations.
//!
//! Cells are `(row, column)` pairs, zero-based internally and one-based in
//! JSON. The correspondence inserts `w(1), ..., w(n)`: a positive value
//! enters as a horizontal domino at the end of the first row, a negative
//! value as a vertical domino at the bottom of the first column, and larger
//! dominoes are bumped. The insertion tableau carries the labels `|w(k)|`
//! and the recording tableau labels the domino added at step `k` by `k`.
//!
//! Which of the two is the left tableau is fixed by [`LEFT_IS_RECORDING`]:
//! the left tableau is the one that determines the Kazhdan–Lusztig left
//! cell, which makes right star operations `w ↦ w·s` act on the left
//! tableau only.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weyl_d::SignedElement;

/// `T_L` is the recording tableau and `T_R` the insertion tableau.
pub const LEFT_IS_RECORDING: bool = true;

pub type Cell = (u8, u8);

/// A partition, stored as weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Shape(Vec<usize>);

impl Shape {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        parts.retain(|&p| p > 0);
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!("parts {parts:?} are not weakly decreasing")));
        }
        Ok(Shape(parts))
    }

    pub(crate) fn from_rows(rows: impl IntoIterator<Item = usize>) -> Self {
        Shape(rows.into_iter().filter(|&p| p > 0).collect())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn row(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn col(&self, j: usize) -> usize {
        self.0.iter().take_while(|&&p| p > j).count()
    }

    pub fn contains(&self, (r, c): Cell) -> bool {
        (c as usize) < self.row(r as usize)
    }

    pub fn transpose(&self) -> Shape {
        let w = self.row(0);
        Shape((0..w).map(|j| self.col(j)).collect())
    }

    /// Tileable by dominoes, i.e. the 2-core is empty.
    pub fn is_tileable(&self) -> bool {
        let (odd, even) = beta_split(&self.0);
        odd.len() == even.len()
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p).map(move |j| (i as u8, j as u8)))
    }

    /// All tileable shapes of the given even total.
    pub fn tileable_of_total(total: usize) -> Vec<Shape> {
        partitions(total).into_iter().map(Shape).filter(Shape::is_tileable).collect()
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl std::str::FromStr for Shape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        if t.is_empty() {
            return Ok(Shape::default());
        }
        let parts = t
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{s:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Shape::new(parts)
    }
}

impl Serialize for Shape {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Shape {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Shape::new(Vec::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            go(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn beta_numbers(parts: &[usize]) -> Vec<usize> {
    let m = parts.len() + parts.len() % 2;
    (0..m).map(|i| parts.get(i).copied().unwrap_or(0) + (m - 1 - i)).collect()
}

fn beta_split(parts: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut odd = Vec::new();
    let mut even = Vec::new();
    for b in beta_numbers(parts) {
        if b % 2 == 1 {
            odd.push((b - 1) / 2);
        } else {
            even.push(b / 2);
        }
    }
    (odd, even)
}

fn beads_to_partition(beads: &[usize]) -> Vec<usize> {
    let mut b = beads.to_vec();
    b.sort_unstable_by(|x, y| y.cmp(x));
    let k = b.len();
    b.iter().enumerate().map(|(j, &x)| x - (k - 1 - j)).filter(|&p| p > 0).collect()
}

/// The 2-quotient `(odd-bead part, even-bead part)`, computed from an even
/// number of beta-numbers. With this slot convention `(1,1) ↦ (∅, (1))`
/// and the one-row shape `(2n) ↦ ((n), ∅)`.
pub fn two_quotient(shape: &Shape) -> Result<(Vec<usize>, Vec<usize>)> {
    let (odd, even) = beta_split(shape.parts());
    if odd.len() != even.len() {
        return Err(Error::UntileableShape(shape.parts().to_vec()));
    }
    Ok((beads_to_partition(&odd), beads_to_partition(&even)))
}

/// Inverse of [`two_quotient`] for shapes with empty 2-core.
pub fn quotient_to_shape(q: &(Vec<usize>, Vec<usize>), total: usize) -> Result<Shape> {
    let (a, b) = q;
    let size: usize = a.iter().sum::<usize>() + b.iter().sum::<usize>();
    if 2 * size != total {
        return Err(Error::Invalid(format!("quotient of size {size} does not match total {total}")));
    }
    let k = a.len().max(b.len());
    let mut beads: Vec<usize> = Vec::with_capacity(2 * k);
    for j in 0..k {
        beads.push(2 * (a.get(j).copied().unwrap_or(0) + (k - 1 - j)) + 1);
        beads.push(2 * (b.get(j).copied().unwrap_or(0) + (k - 1 - j)));
    }
    Ok(Shape(beads_to_partition(&beads)))
}

/// A domino as its two cells, top/left cell first.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Domino(pub Cell, pub Cell);

impl Domino {
    pub fn new(a: Cell, b: Cell) -> Option<Domino> {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        let adjacent = (a.0 == b.0 && a.1 + 1 == b.1) || (a.1 == b.1 && a.0 + 1 == b.0);
        adjacent.then_some(Domino(a, b))
    }

    pub fn horizontal(r: usize, c: usize) -> Domino {
        Domino((r as u8, c as u8), (r as u8, c as u8 + 1))
    }

    pub fn vertical(r: usize, c: usize) -> Domino {
        Domino((r as u8, c as u8), (r as u8 + 1, c as u8))
    }

    pub fn is_horizontal(&self) -> bool {
        self.0 .0 == self.1 .0
    }

    pub fn is_vertical(&self) -> bool {
        !self.is_horizontal()
    }

    pub fn cells(&self) -> [Cell; 2] {
        [self.0, self.1]
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.0 == c || self.1 == c
    }

    pub fn transpose(&self) -> Domino {
        Domino((self.0 .1, self.0 .0), (self.1 .1, self.1 .0))
    }
}

/// A standard domino tableau, stored as its label grid.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DominoTableau {
    rows: Vec<Vec<u8>>,
}

/// Why a labelled domino configuration is not a standard domino tableau.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub label: u8,
    pub reason: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "label {}: {}", self.label, self.reason)
    }
}

impl DominoTableau {
    pub fn empty() -> Self {
        DominoTableau { rows: Vec::new() }
    }

    /// Checks a label → cells map: labels `1..=n`, adjacent cells, and every
    /// prefix `1..=k` covering a Young diagram.
    pub fn validate(dominoes: &BTreeMap<u8, [Cell; 2]>) -> std::result::Result<Self, Violation> {
        let n = dominoes.len();
        let mut grid: BTreeMap<Cell, u8> = BTreeMap::new();
        for k in 1..=n as u8 {
            let Some(&[a, b]) = dominoes.get(&k) else {
                let label = dominoes.keys().copied().find(|&l| l == 0 || l as usize > n).unwrap_or(k);
                return Err(Violation { label, reason: "labels are not 1..n".into() });
            };
            if Domino::new(a, b).is_none() {
                return Err(Violation { label: k, reason: "cells are not adjacent".into() });
            }
            for c in [a, b] {
                if grid.insert(c, k).is_some() {
                    return Err(Violation { label: k, reason: format!("cell {c:?} is covered twice") });
                }
            }
            // Prefix 1..=k must be a Young diagram.
            for c in [a, b] {
                let above_ok = c.0 == 0 || grid.contains_key(&(c.0 - 1, c.1));
                let left_ok = c.1 == 0 || grid.contains_key(&(c.0, c.1 - 1));
                if !above_ok || !left_ok {
                    return Err(Violation {
                        label: k,
                        reason: format!("labels 1..={k} do not cover a Young diagram"),
                    });
                }
            }
        }
        let nrows = grid.keys().map(|c| c.0 as usize + 1).max().unwrap_or(0);
        let mut rows = vec![Vec::new(); nrows];
        for (&(r, _), &k) in &grid {
            rows[r as usize].push(k);
        }
        Ok(DominoTableau { rows })
    }

    pub(crate) fn from_positions(pos: &[Domino]) -> Self {
        let mut rows: Vec<Vec<u8>> = Vec::new();
        let mut cells: Vec<(Cell, u8)> = Vec::with_capacity(2 * pos.len());
        for (i, d) in pos.iter().enumerate() {
            for c in d.cells() {
                cells.push((c, i as u8 + 1));
            }
        }
        cells.sort_unstable();
        for ((r, _), k) in cells {
            let r = r as usize;
            if rows.len() <= r {
                rows.resize(r + 1, Vec::new());
            }
            rows[r].push(k);
        }
        DominoTableau { rows }
    }

    /// Builds a tableau from positions indexed by `label − 1`, or `None` if
    /// they do not form a standard domino tableau.
    pub fn try_from_positions(pos: &[Domino]) -> Option<Self> {
        let mut cells: Vec<(Cell, u8)> = Vec::with_capacity(2 * pos.len());
        for (i, d) in pos.iter().enumerate() {
            Domino::new(d.0, d.1)?;
            for c in d.cells() {
                cells.push((c, i as u8 + 1));
            }
        }
        cells.sort_unstable();
        let mut rows: Vec<Vec<u8>> = Vec::new();
        for ((r, c), k) in cells {
            let r = r as usize;
            if rows.len() < r {
                return None;
            }
            if rows.len() == r {
                rows.push(Vec::new());
            }
            if rows[r].len() != c as usize {
                return None;
            }
            rows[r].push(k);
        }
        let t = DominoTableau { rows };
        t.is_standard().then_some(t)
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    /// Number of dominoes.
    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn shape(&self) -> Shape {
        Shape::from_rows(self.rows.iter().map(Vec::len))
    }

    pub fn label_at(&self, (r, c): Cell) -> Option<u8> {
        self.rows.get(r as usize).and_then(|row| row.get(c as usize)).copied()
    }

    /// Domino positions indexed by `label − 1`.
    pub fn positions(&self) -> Vec<Domino> {
        let n = self.size();
        let mut first: Vec<Option<Cell>> = vec![None; n];
        let mut out = vec![Domino((0, 0), (0, 0)); n];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &k) in row.iter().enumerate() {
                let cell = (r as u8, c as u8);
                match first[k as usize - 1] {
                    None => first[k as usize - 1] = Some(cell),
                    Some(a) => out[k as usize - 1] = Domino(a, cell),
                }
            }
        }
        out
    }

    pub fn domino(&self, label: u8) -> Option<Domino> {
        (1..=self.size() as u8).contains(&label).then(|| self.positions()[label as usize - 1])
    }

    pub fn vertical_count(&self) -> usize {
        self.positions().iter().filter(|d| d.is_vertical()).count()
    }

    pub fn transpose(&self) -> Self {
        let pos: Vec<Domino> = self.positions().iter().map(Domino::transpose).collect();
        Self::from_positions(&pos)
    }

    /// The subtableau formed by labels `1..=k`.
    pub fn leading_subtableau(&self, k: usize) -> Self {
        let pos = self.positions();
        Self::from_positions(&pos[..k.min(pos.len())])
    }

    /// The same tableau with two labels interchanged (not validated).
    pub fn swap_labels(&self, a: u8, b: u8) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&k| if k == a { b } else if k == b { a } else { k })
                    .collect()
            })
            .collect();
        DominoTableau { rows }
    }

    /// Re-validates the grid. Used on results of label surgery.
    pub fn is_standard(&self) -> bool {
        let n = self.size();
        let mut count = vec![0u8; n + 1];
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 && row.len() > self.rows[r - 1].len() {
                return false;
            }
            for (c, &k) in row.iter().enumerate() {
                if k == 0 || k as usize > n {
                    return false;
                }
                count[k as usize] += 1;
                if c > 0 && row[c - 1] > k {
                    return false;
                }
                if r > 0 && self.rows[r - 1][c] > k {
                    return false;
                }
            }
        }
        count[1..].iter().all(|&x| x == 2)
            && self.positions().iter().all(|d| Domino::new(d.0, d.1).is_some())
    }

    pub fn to_map(&self) -> BTreeMap<u8, [Cell; 2]> {
        self.positions().iter().enumerate().map(|(i, d)| (i as u8 + 1, d.cells())).collect()
    }
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    shape: Vec<usize>,
    dominoes: BTreeMap<String, [[u32; 2]; 2]>,
}

impl Serialize for DominoTableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let dominoes = self
            .positions()
            .iter()
            .enumerate()
            .map(|(i, d)| {
                let f = |c: Cell| [c.0 as u32 + 1, c.1 as u32 + 1];
                ((i + 1).to_string(), [f(d.0), f(d.1)])
            })
            .collect();
        TableauJson { shape: self.shape().parts().to_vec(), dominoes }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for DominoTableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = TableauJson::deserialize(d)?;
        let mut map = BTreeMap::new();
        for (k, [a, b]) in j.dominoes {
            let label: u8 = k.parse().map_err(D::Error::custom)?;
            let cell = |c: [u32; 2]| -> std::result::Result<Cell, D::Error> {
                if c[0] == 0 || c[1] == 0 || c[0] > 255 || c[1] > 255 {
                    return Err(D::Error::custom("cells are one-based"));
                }
                Ok((c[0] as u8 - 1, c[1] as u8 - 1))
            };
            map.insert(label, [cell(a)?, cell(b)?]);
        }
        let t = DominoTableau::validate(&map).map_err(|v| D::Error::custom(v.to_string()))?;
        if t.shape().parts() != j.shape.as_slice() {
            return Err(D::Error::custom("declared shape does not match dominoes"));
        }
        Ok(t)
    }
}

/// A pair of same-shape tableaux `(T_1, T_2) = (left, right)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TableauPair {
    pub left: DominoTableau,
    pub right: DominoTableau,
}

impl TableauPair {
    pub fn new(left: DominoTableau, right: DominoTableau) -> Result<Self> {
        if left.shape() != right.shape() {
            return Err(Error::ShapeMismatch(left.shape().parts().to_vec(), right.shape().parts().to_vec()));
        }
        Ok(TableauPair { left, right })
    }

    pub fn shape(&self) -> Shape {
        self.left.shape()
    }

    pub fn transpose(&self) -> Self {
        TableauPair { left: self.left.transpose(), right: self.right.transpose() }
    }

    pub fn swap(&self) -> Self {
        TableauPair { left: self.right.clone(), right: self.left.clone() }
    }

    /// Fast admissibility filter: the total number of vertical dominoes in
    /// the two tableaux is divisible by 4. Agrees with [`inverse_rs`] on
    /// every same-shape pair of rank at most 5; image membership is still
    /// decided by [`inverse_rs`].
    pub fn admissible_hint(&self) -> bool {
        (self.left.vertical_count() + self.right.vertical_count()).is_multiple_of(4)
    }
}

/// Every standard domino tableau of `shape`.
pub fn enumerate_tableaux(shape: &Shape) -> Result<Vec<DominoTableau>> {
    if !shape.is_tileable() {
        return Err(Error::UntileableShape(shape.parts().to_vec()));
    }
    let n = shape.total() / 2;
    let mut out = Vec::new();
    let mut rows = shape.parts().to_vec();
    let mut pos = vec![Domino((0, 0), (0, 0)); n];
    fn go(rows: &mut Vec<usize>, k: usize, pos: &mut Vec<Domino>, out: &mut Vec<DominoTableau>) {
        if k == 0 {
            out.push(DominoTableau::from_positions(pos));
            return;
        }
        for i in 0..rows.len() {
            let len = rows[i];
            if len == 0 {
                continue;
            }
            let below = rows.get(i + 1).copied().unwrap_or(0);
            // horizontal at the end of row i
            if len >= 2 && below <= len - 2 {
                rows[i] -= 2;
                pos[k - 1] = Domino::horizontal(i, len - 2);
                go(rows, k - 1, pos, out);
                rows[i] += 2;
            }
            // vertical at the bottom of column len-1 spanning rows i, i+1
            if below == len && rows.get(i + 2).copied().unwrap_or(0) < len {
                rows[i] -= 1;
                rows[i + 1] -= 1;
                pos[k - 1] = Domino::vertical(i, len - 1);
                go(rows, k - 1, pos, out);
                rows[i] += 1;
                rows[i + 1] += 1;
            }
        }
    }
    go(&mut rows, n, &mut pos, &mut out);
    out.sort();
    Ok(out)
}

/// Mutable row lengths used during insertion.
#[derive(Debug, Clone, Default)]
struct Rows(Vec<usize>);

impl Rows {
    fn row(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    fn col(&self, j: usize) -> usize {
        self.0.iter().take_while(|&&p| p > j).count()
    }

    fn add(&mut self, c: Cell) {
        let r = c.0 as usize;
        if self.0.len() <= r {
            self.0.resize(r + 1, 0);
        }
        debug_assert_eq!(self.0[r], c.1 as usize);
        self.0[r] += 1;
    }

    fn add_domino(&mut self, d: Domino) {
        self.add(d.0);
        self.add(d.1);
    }

}

/// The 2x2 square containing three given cells (an L-tromino).
fn square_of(cells: &[Cell]) -> [Cell; 4] {
    let r = cells.iter().map(|c| c.0).min().unwrap();
    let c = cells.iter().map(|c| c.1).min().unwrap();
    [(r, c), (r, c + 1), (r + 1, c), (r + 1, c + 1)]
}

fn complement_in(square: &[Cell; 4], d: &[Cell; 2]) -> Option<Domino> {
    let rest: Vec<Cell> = square.iter().copied().filter(|c| !d.contains(c)).collect();
    (rest.len() == 2).then(|| Domino::new(rest[0], rest[1])).flatten()
}

/// Inserts `value` (horizontal if positive) into the insertion tableau
/// `p` (indexed by label − 1, `None` for labels not yet present) and
/// returns the cells added to the shape.
fn insert(p: &mut [Option<Domino>], value: i8) -> Domino {
    let x = value.unsigned_abs() as usize;
    let mut shape = Rows::default();
    for d in p[..x - 1].iter().flatten() {
        shape.add_domino(*d);
    }
    let new = if value > 0 {
        Domino::horizontal(0, shape.row(0))
    } else {
        Domino::vertical(shape.col(0), 0)
    };
    p[x - 1] = Some(new);
    shape.add_domino(new);
    let mut e = new;
    for slot in p[x..].iter_mut() {
        let Some(d) = *slot else { continue };
        let shared = d.cells().iter().filter(|c| e.contains(**c)).count();
        match shared {
            0 => shape.add_domino(d),
            2 => {
                let moved = if d.is_horizontal() {
                    let i = d.0 .0 as usize + 1;
                    Domino::horizontal(i, shape.row(i))
                } else {
                    let j = d.0 .1 as usize + 1;
                    Domino::vertical(shape.col(j), j)
                };
                shape.add_domino(moved);
                *slot = Some(moved);
                e = moved;
            }
            _ => {
                let mut three: Vec<Cell> = e.cells().to_vec();
                three.extend(d.cells().iter().filter(|c| !e.contains(**c)));
                let sq = square_of(&three);
                let moved = complement_in(&sq, &e.cells()).expect("square complement");
                let next = complement_in(&sq, &d.cells()).expect("square complement");
                // the shape gains the rest of the square
                let outside = d.cells().into_iter().find(|c| !e.contains(*c)).unwrap();
                let corner = sq.iter().copied().find(|c| !three.contains(c)).unwrap();
                add_sorted(&mut shape, &[outside, corner]);
                *slot = Some(moved);
                e = next;
            }
        }
    }
    e
}

fn add_sorted(shape: &mut Rows, cells: &[Cell]) {
    let mut cs = cells.to_vec();
    cs.sort_unstable_by_key(|c| (c.1, c.0));
    // Cells are added column by column so every intermediate row stays
    // contiguous.
    let mut pending = cs;
    while !pending.is_empty() {
        let idx = pending
            .iter()
            .position(|&(r, c)| shape.row(r as usize) == c as usize)
            .expect("cells extend the shape");
        let c = pending.remove(idx);
        shape.add(c);
    }
}

fn shape_rows(p: &[Option<Domino>]) -> Rows {
    let mut cells: Vec<Cell> = p.iter().flatten().flat_map(|d| d.cells()).collect();
    cells.sort_unstable();
    let mut rows = Rows::default();
    for c in cells {
        rows.add(c);
    }
    rows
}

/// Insertion and recording tableaux of a signed permutation (any signs).
pub fn insertion_recording(w: &SignedElement) -> (DominoTableau, DominoTableau) {
    let n = w.rank();
    let mut p: Vec<Option<Domino>> = vec![None; n];
    let mut q: Vec<Domino> = Vec::with_capacity(n);
    for &v in w.entries() {
        q.push(insert(&mut p, v));
    }
    let p: Vec<Domino> = p.into_iter().map(Option::unwrap).collect();
    (DominoTableau::from_positions(&p), DominoTableau::from_positions(&q))
}

/// The domino Robinson–Schensted correspondence `w ↦ (T_L(w), T_R(w))`.
pub fn domino_rs(w: &SignedElement) -> TableauPair {
    let (p, q) = insertion_recording(w);
    if LEFT_IS_RECORDING {
        TableauPair { left: q, right: p }
    } else {
        TableauPair { left: p, right: q }
    }
}

/// Reverse insertion for any same-shape pair; the result may have an odd
/// number of negative entries (a `B_n` element).
pub fn inverse_rs_signed(pair: &TableauPair) -> Result<SignedElement> {
    let (ins, rec) = if LEFT_IS_RECORDING { (&pair.right, &pair.left) } else { (&pair.left, &pair.right) };
    if ins.shape() != rec.shape() {
        return Err(Error::ShapeMismatch(ins.shape().parts().to_vec(), rec.shape().parts().to_vec()));
    }
    if !ins.is_standard() || !rec.is_standard() {
        return Err(Error::InvalidTableau("pair contains a non-standard tableau".into()));
    }
    let n = ins.size();
    let mut p: Vec<Option<Domino>> = ins.positions().into_iter().map(Some).collect();
    let q = rec.positions();
    let mut out = vec![0i8; n];
    for step in (0..n).rev() {
        let mut e = q[step];
        let mut found = None;
        for y in (0..n).rev() {
            let Some(d) = p[y] else { continue };
            let shared = d.cells().iter().filter(|c| e.contains(**c)).count();
            match shared {
                0 => {}
                2 => {
                    if d.is_horizontal() && d.0 .0 == 0 {
                        found = Some((y, 1i8));
                        p[y] = None;
                        break;
                    }
                    if d.is_vertical() && d.0 .1 == 0 {
                        found = Some((y, -1i8));
                        p[y] = None;
                        break;
                    }
                    let rows = shape_rows(&p[..y]);
                    let back = if d.is_horizontal() {
                        let i = d.0 .0 as usize - 1;
                        let len = rows.row(i);
                        if len < 2 {
                            return Err(Error::InvalidTableau("reverse bump out of shape".into()));
                        }
                        Domino::horizontal(i, len - 2)
                    } else {
                        let j = d.0 .1 as usize - 1;
                        let len = rows.col(j);
                        if len < 2 {
                            return Err(Error::InvalidTableau("reverse bump out of shape".into()));
                        }
                        Domino::vertical(len - 2, j)
                    };
                    p[y] = Some(back);
                    e = back;
                }
                _ => {
                    let mut three: Vec<Cell> = d.cells().to_vec();
                    three.extend(e.cells().iter().filter(|c| !d.contains(**c)));
                    let sq = square_of(&three);
                    let prev_e = complement_in(&sq, &d.cells())
                        .ok_or_else(|| Error::InvalidTableau("bad overlap".into()))?;
                    let prev_d = complement_in(&sq, &e.cells())
                        .ok_or_else(|| Error::InvalidTableau("bad overlap".into()))?;
                    p[y] = Some(prev_d);
                    e = prev_e;
                }
            }
        }
        let (y, sign) = found.ok_or_else(|| Error::InvalidTableau("reverse insertion did not terminate".into()))?;
        out[step] = sign * (y as i8 + 1);
    }
    Ok(SignedElement::from_raw(out))
}

/// Inverse of [`domino_rs`] on its image.
pub fn inverse_rs(pair: &TableauPair) -> Result<SignedElement> {
    let w = inverse_rs_signed(pair)?;
    if !w.is_type_d() {
        return Err(Error::NotInImage);
    }
    if cfg!(debug_assertions) {
        debug_assert_eq!(&domino_rs(&w), pair);
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl_d::{enumerate_group, enumerate_signed};
    use std::collections::HashSet;

    fn shape(p: &[usize]) -> Shape {
        Shape::new(p.to_vec()).unwrap()
    }

    fn map(entries: &[(u8, [(u8, u8); 2])]) -> BTreeMap<u8, [Cell; 2]> {
        // one-based input
        entries
            .iter()
            .map(|&(k, [a, b])| (k, [(a.0 - 1, a.1 - 1), (b.0 - 1, b.1 - 1)]))
            .collect()
    }

    #[test]
    fn validate_examples() {
        assert!(DominoTableau::validate(&map(&[(1, [(1, 1), (1, 2)])])).is_ok());
        let bad = DominoTableau::validate(&map(&[(1, [(1, 1), (1, 2)]), (2, [(2, 2), (2, 3)])]));
        assert_eq!(bad.unwrap_err().label, 2);
        let gap = DominoTableau::validate(&map(&[(1, [(1, 1), (1, 3)])]));
        assert_eq!(gap.unwrap_err().label, 1);
        let missing = DominoTableau::validate(&map(&[(2, [(1, 1), (1, 2)])]));
        assert!(missing.is_err());
    }

    /// Independent oracle: count tilings by brute-force placement of
    /// labels into cells, then filter standardness.
    fn brute_count(s: &Shape) -> usize {
        let cells: Vec<Cell> = s.cells().collect();
        let n = cells.len() / 2;
        let mut count = 0;
        let mut assign: BTreeMap<Cell, u8> = BTreeMap::new();
        fn go(cells: &[Cell], assign: &mut BTreeMap<Cell, u8>, n: usize, count: &mut usize) {
            let free: Vec<Cell> = cells.iter().copied().filter(|c| !assign.contains_key(c)).collect();
            if free.is_empty() {
                let mut m: BTreeMap<u8, Vec<Cell>> = BTreeMap::new();
                for (c, k) in assign.iter() {
                    m.entry(*k).or_default().push(*c);
                }
                let mm = m.into_iter().map(|(k, v)| (k, [v[0], v[1]])).collect();
                if DominoTableau::validate(&mm).is_ok() {
                    *count += 1;
                }
                return;
            }
            let a = free[0];
            for b in [(a.0, a.1 + 1), (a.0 + 1, a.1)] {
                if free.contains(&b) {
                    for label in 1..=n as u8 {
                        if assign.values().any(|&l| l == label) {
                            continue;
                        }
                        assign.insert(a, label);
                        assign.insert(b, label);
                        go(cells, assign, n, count);
                        assign.remove(&a);
                        assign.remove(&b);
                    }
                }
            }
        }
        go(&cells, &mut assign, n, &mut count);
        count
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate_tableaux(&shape(&[2, 2])).unwrap().len(), 2);
        assert_eq!(enumerate_tableaux(&shape(&[3, 1])).unwrap().len(), 1);
        assert_eq!(enumerate_tableaux(&shape(&[4])).unwrap().len(), 1);
        assert!(matches!(enumerate_tableaux(&shape(&[2, 1])), Err(Error::UntileableShape(_))));
        assert!(enumerate_tableaux(&shape(&[3, 3])).is_ok());
        assert!(enumerate_tableaux(&shape(&[3])).is_err());
    }

    #[test]
    fn enumerate_matches_brute_force() {
        for total in [2, 4, 6, 8] {
            for s in Shape::tileable_of_total(total) {
                let ts = enumerate_tableaux(&s).unwrap();
                let distinct: HashSet<_> = ts.iter().collect();
                assert_eq!(distinct.len(), ts.len());
                assert!(ts.iter().all(|t| t.is_standard() && t.shape() == s));
                assert_eq!(ts.len(), brute_count(&s), "{s}");
            }
        }
    }

    #[test]
    fn rs_small_examples() {
        let id = SignedElement::identity(3);
        let p = domino_rs(&id);
        assert_eq!(p.left.shape(), shape(&[6]));
        assert_eq!(p.right.shape(), shape(&[6]));
        let w = SignedElement::new(&[-2, -1]).unwrap();
        let p = domino_rs(&w);
        assert_eq!(p.left, p.right);
        assert_eq!(p.left.shape(), shape(&[2, 2]));
        assert!(p.left.positions().iter().all(Domino::is_vertical));
        assert_eq!(inverse_rs(&p).unwrap(), w);
    }

    #[test]
    fn rs_is_a_bijection_onto_same_shape_pairs_for_b_n() {
        for n in 1..=4 {
            let mut seen = HashSet::new();
            for w in enumerate_signed(n) {
                let (p, q) = insertion_recording(&w);
                assert!(p.is_standard() && q.is_standard(), "{w}");
                assert_eq!(p.shape(), q.shape());
                assert!(seen.insert((p, q)));
                let pair = domino_rs(&w);
                assert_eq!(inverse_rs_signed(&pair).unwrap(), w);
            }
            let pairs: usize = Shape::tileable_of_total(2 * n)
                .iter()
                .map(|s| enumerate_tableaux(s).unwrap().len().pow(2))
                .sum();
            assert_eq!(seen.len(), pairs);
        }
    }

    #[test]
    fn not_in_image_examples() {
        let ts = enumerate_tableaux(&shape(&[2, 2])).unwrap();
        let h = ts.iter().find(|t| t.positions()[0].is_horizontal()).unwrap().clone();
        let v = ts.iter().find(|t| t.positions()[0].is_vertical()).unwrap().clone();
        let pair = TableauPair::new(h, v).unwrap();
        assert_eq!(inverse_rs(&pair), Err(Error::NotInImage));
        let t = enumerate_tableaux(&shape(&[3, 1])).unwrap().remove(0);
        let pair = TableauPair::new(t.clone(), t).unwrap();
        assert_eq!(inverse_rs(&pair), Err(Error::NotInImage));
    }

    #[test]
    fn swap_and_involution_laws() {
        for n in 2..=4 {
            for w in enumerate_group(n).unwrap() {
                let p = domino_rs(&w);
                assert_eq!(domino_rs(&w.inverse()), p.swap(), "{w}");
                assert_eq!(w.is_involution(), p.left == p.right);
                assert!(p.admissible_hint());
            }
        }
    }

    #[test]
    fn admissibility_hint_matches_image() {
        for n in 1..=5 {
            for w in enumerate_signed(n) {
                let p = domino_rs(&w);
                assert_eq!(p.admissible_hint(), w.is_type_d());
                assert_eq!(inverse_rs(&p).is_ok(), w.is_type_d());
            }
        }
    }

    #[test]
    fn transpose_and_prefix() {
        let row = enumerate_tableaux(&shape(&[4])).unwrap().remove(0);
        assert_eq!(row.transpose().shape(), shape(&[1, 1, 1, 1]));
        for total in [2, 4, 6, 8] {
            for s in Shape::tileable_of_total(total) {
                for t in enumerate_tableaux(&s).unwrap() {
                    assert_eq!(t.transpose().transpose(), t);
                    assert!(t.transpose().is_standard());
                    assert_eq!(t.leading_subtableau(t.size()), t);
                }
            }
        }
        for total in [10, 12] {
            for s in Shape::tileable_of_total(total) {
                for t in enumerate_tableaux(&s).unwrap() {
                    for k in 0..=t.size() {
                        let sub = t.leading_subtableau(k);
                        assert!(sub.is_standard());
                        assert_eq!(sub.size(), k);
                    }
                }
            }
        }
    }

    /// Independent oracle for the 2-quotient: repeatedly strip removable
    /// dominoes, tracking which runner of the abacus each removal uses.
    #[test]
    fn two_quotient_examples() {
        assert_eq!(two_quotient(&shape(&[1, 1])).unwrap(), (vec![], vec![1]));
        assert_eq!(two_quotient(&shape(&[2, 2])).unwrap(), (vec![1], vec![1]));
        assert_eq!(two_quotient(&shape(&[2])).unwrap(), (vec![1], vec![]));
        assert_eq!(two_quotient(&shape(&[8])).unwrap(), (vec![4], vec![]));
        assert!(two_quotient(&shape(&[2, 1])).is_err());
        for total in (2..=12).step_by(2) {
            for s in Shape::tileable_of_total(total) {
                let q = two_quotient(&s).unwrap();
                assert_eq!(q.0.iter().sum::<usize>() + q.1.iter().sum::<usize>(), total / 2);
                assert_eq!(quotient_to_shape(&q, total).unwrap(), s);
            }
        }
    }

    #[test]
    fn quotient_sizes_match_domino_orientation_count() {
        // Each tableau of a shape has the same number of vertical dominoes
        // modulo 2; the quotient map is a bijection onto bipartitions.
        for total in (2..=10).step_by(2) {
            let shapes = Shape::tileable_of_total(total);
            let qs: HashSet<_> = shapes.iter().map(|s| two_quotient(s).unwrap()).collect();
            assert_eq!(qs.len(), shapes.len());
            let n = total / 2;
            let bip: usize = (0..=n).map(|k| partitions(k).len() * partitions(n - k).len()).sum();
            assert_eq!(qs.len(), bip);
        }
    }

    #[test]
    fn json_roundtrip() {
        let t = enumerate_tableaux(&shape(&[3, 3, 1, 1])).unwrap().remove(0);
        let s = serde_json::to_string(&t).unwrap();
        let back: DominoTableau = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
        let single: DominoTableau =
            serde_json::from_str(r#"{"shape":[2],"dominoes":{"1":[[1,1],[1,2]]}}"#).unwrap();
        assert_eq!(single.shape(), shape(&[2]));
        assert!(serde_json::from_str::<DominoTableau>(r#"{"shape":[2],"dominoes":{"1":[[1,1],[1,3]]}}"#).is_err());
    }
}
