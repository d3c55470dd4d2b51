//! Cell intersections, the signed sums `R_σ` and the submodules they generate.

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::cycles::{reachable_pairs, Coloring, PairMove};
use crate::error::{Error, Result};
use crate::linalg::{apply, Span, Q};
use crate::repr::{is_special_shape, is_very_even, shape_to_rep, Bipartition, CharacterTable};
use crate::tableaux::{domino_rs, inverse_rs, Shape};

use super::cells::{CellId, CellPartition};
use super::kl::KLTable;
use super::module::CellModule;

/// Coloring whose extended open cycles index cell intersections.
pub const CELL_COLORING: Coloring = Coloring::A;

#[derive(Debug, Clone, Serialize)]
pub struct IntersectionMember {
    pub element: usize,
    /// Subset of [`CellIntersection::moves`] carrying `x` to this element.
    pub mask: usize,
    pub shape: Shape,
}

/// `C ∩ R`: elements `w ∈ C` with `w⁻¹ ∈ R`, indexed by subsets of the
/// extended open cycles of `T_L(x)` relative to `T_R(x)`.
#[derive(Debug, Clone, Serialize)]
pub struct CellIntersection {
    pub left: CellId,
    pub right: CellId,
    pub x: usize,
    pub moves: Vec<PairMove>,
    /// Indexed by mask.
    pub members: Vec<IntersectionMember>,
}

impl CellIntersection {
    pub fn r(&self) -> usize {
        self.moves.len()
    }

    pub fn shapes(&self) -> Vec<Shape> {
        self.members.iter().map(|m| m.shape.clone()).collect()
    }
}

/// Elements of `C ∩ R`, sorted.
pub fn intersection_elements(t: &KLTable, cells: &CellPartition, c: CellId, r: CellId) -> Vec<usize> {
    cells.left_cells[c].iter().copied().filter(|&w| cells.left_cell_of(t.inverse_index(w)) == r).collect()
}

/// The intersection based at its unique element of special shape.
pub fn cell_intersection(t: &KLTable, cells: &CellPartition, c: CellId, r: CellId) -> Result<CellIntersection> {
    let elems = checked_elements(t, cells, c, r)?;
    let mut special = Vec::new();
    for &w in &elems {
        if is_special_shape(&domino_rs(t.element(w)).shape())? {
            special.push(w);
        }
    }
    if special.len() != 1 {
        return Err(Error::NoSpecialElement(special.len()));
    }
    intersection_from(t, cells, c, r, special[0])
}

fn checked_elements(t: &KLTable, cells: &CellPartition, c: CellId, r: CellId) -> Result<Vec<usize>> {
    let d = cells.double_cell_of(cells.left_cells[c][0]);
    if d != cells.double_cell_of(cells.left_cells[r][0]) {
        return Err(Error::NoCommonDoubleCell);
    }
    let elems = intersection_elements(t, cells, c, r);
    if elems.is_empty() {
        return Err(Error::Invalid(format!("left cells {c} and {r} have empty intersection")));
    }
    Ok(elems)
}

/// The intersection based at a chosen member `x`. Fails when the pairs
/// reachable from `x` are not exactly the intersection.
pub fn intersection_from(t: &KLTable, cells: &CellPartition, c: CellId, r: CellId, x: usize) -> Result<CellIntersection> {
    let elems = checked_elements(t, cells, c, r)?;
    if elems.binary_search(&x).is_err() {
        return Err(Error::Invalid(format!("element {} is not in the intersection", t.element(x))));
    }
    let (moves, pairs) = reachable_pairs(&domino_rs(t.element(x)), CELL_COLORING)?;
    let mut members = Vec::with_capacity(pairs.len());
    for (mask, p) in pairs.iter().enumerate() {
        let w = inverse_rs(p)?;
        let element = t.index_of(&w).ok_or_else(|| Error::Invalid("element outside the table".into()))?;
        members.push(IntersectionMember { element, mask, shape: p.shape() });
    }
    let mut got: Vec<usize> = members.iter().map(|m| m.element).collect();
    got.sort_unstable();
    got.dedup();
    if got != elems || members.len() != elems.len() {
        return Err(Error::Invalid(format!(
            "intersection of cells {c}, {r} has {} elements but {} pairs are reachable",
            elems.len(),
            members.len()
        )));
    }
    Ok(CellIntersection { left: c, right: r, x, moves, members })
}

/// `R_σ` as signs over the intersection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsotypicVector {
    pub shape: Shape,
    /// The subset `{e_j}` carrying `T_L(x)` to shape `σ`.
    pub target_mask: usize,
    pub support: Vec<usize>,
    pub signs: Vec<i8>,
}

impl IsotypicVector {
    /// Coordinates in the basis of a cell module containing the support.
    pub fn in_module(&self, m: &CellModule) -> Vec<Q> {
        let mut v = vec![Q::zero(); m.dim()];
        for (&w, &s) in self.support.iter().zip(&self.signs) {
            let i = m.position(w).expect("support lies in the cell");
            v[i] = Q::from_integer(s.into());
        }
        v
    }
}

pub fn r_sigma(inter: &CellIntersection, sigma: &Shape) -> Result<IsotypicVector> {
    if is_very_even(sigma)? {
        return Err(Error::VeryEvenShape(sigma.parts().to_vec()));
    }
    let hits: Vec<usize> = inter.members.iter().filter(|m| &m.shape == sigma).map(|m| m.mask).collect();
    let target_mask = match hits.as_slice() {
        [] => return Err(Error::UnreachableShape(sigma.parts().to_vec())),
        [m] => *m,
        _ => return Err(Error::Invalid(format!("shape {sigma} is reached by {} subsets", hits.len()))),
    };
    Ok(signed_sum(inter, sigma.clone(), target_mask))
}

/// `Σ (−1)^{|f(w) ∩ E|} C_w` for the subset `E` given by `target_mask`.
pub fn signed_sum(inter: &CellIntersection, shape: Shape, target_mask: usize) -> IsotypicVector {
    let support = inter.members.iter().map(|m| m.element).collect();
    let signs = inter
        .members
        .iter()
        .map(|m| if (m.mask & target_mask).count_ones().is_multiple_of(2) { 1 } else { -1 })
        .collect();
    IsotypicVector { shape, target_mask, support, signs }
}

/// The `W`-submodule generated by `v`.
pub fn generate_submodule(m: &CellModule, v: &[Q]) -> Span {
    let mut span = Span::new(m.dim());
    let mut queue = vec![v.to_vec()];
    let gens = m.generators();
    while let Some(u) = queue.pop() {
        if !span.insert(&u) {
            continue;
        }
        for g in gens {
            queue.push(apply(g, &u));
        }
    }
    span
}

/// Character of a submodule on the classes of `tab`.
pub fn submodule_character(t: &KLTable, m: &CellModule, span: &Span, tab: &CharacterTable) -> Vec<i64> {
    tab.classes
        .iter()
        .map(|cl| {
            let g = t.index_of(&cl.representative()).expect("class representative in table");
            let mat = m.matrix_of(t, g);
            let mut tr = Q::zero();
            for (i, b) in span.basis().iter().enumerate() {
                let coords = span.coordinates(&apply(&mat, b)).expect("submodule is stable");
                tr += &coords[i];
            }
            assert!(tr.is_integer());
            i64::try_from(tr.to_integer()).expect("small character value")
        })
        .collect()
}

/// Multiplicities of the irreducibles in a cell module.
pub fn cell_decomposition(t: &KLTable, m: &CellModule, tab: &CharacterTable) -> Vec<i64> {
    let vals: Vec<i64> = tab
        .classes
        .iter()
        .map(|cl| m.character_at(t, t.index_of(&cl.representative()).expect("class representative")))
        .collect();
    tab.decompose(&vals).expect("cell characters are characters")
}

#[derive(Debug, Clone, Serialize)]
pub struct Theorem2Report {
    pub left: CellId,
    pub right: CellId,
    pub shape: Option<Shape>,
    pub rep: Option<Bipartition>,
    pub very_even: bool,
    pub expected_dim: u128,
    pub dim: usize,
    pub character_matches: bool,
    pub multiplicity: i64,
    pub pass: bool,
    pub detail: String,
}

impl Theorem2Report {
    fn failure(left: CellId, right: CellId, shape: Option<Shape>, detail: String) -> Self {
        Theorem2Report {
            left,
            right,
            shape,
            rep: None,
            very_even: false,
            expected_dim: 0,
            dim: 0,
            character_matches: false,
            multiplicity: 0,
            pass: false,
            detail,
        }
    }
}

/// Checks that `R_σ` generates an irreducible submodule of `C` on which `W`
/// acts by the representation of `σ`. For very even `σ` both cells are
/// checked to be irreducible instead.
pub fn verify_theorem2(
    t: &KLTable,
    cells: &CellPartition,
    tab: &CharacterTable,
    c: CellId,
    r: CellId,
    sigma: &Shape,
) -> Theorem2Report {
    let rep = match shape_to_rep(sigma) {
        Ok(b) => b,
        Err(e) => return Theorem2Report::failure(c, r, Some(sigma.clone()), e.to_string()),
    };
    if rep.is_degenerate() {
        let irreducible = |cell: CellId| {
            let m = CellModule::new(t, cells, cell);
            let dec = cell_decomposition(t, &m, tab);
            dec.iter().sum::<i64>() == 1 && dec.iter().all(|&k| k >= 0)
        };
        let ok = irreducible(c) && irreducible(r);
        return Theorem2Report {
            left: c,
            right: r,
            shape: Some(sigma.clone()),
            rep: Some(rep),
            very_even: true,
            expected_dim: 0,
            dim: 0,
            character_matches: ok,
            multiplicity: i64::from(ok),
            pass: ok,
            detail: if ok { "both cells irreducible".into() } else { "a cell is reducible".into() },
        };
    }
    let inter = match cell_intersection(t, cells, c, r) {
        Ok(i) => i,
        Err(e) => return Theorem2Report::failure(c, r, Some(sigma.clone()), e.to_string()),
    };
    let v = match r_sigma(&inter, sigma) {
        Ok(v) => v,
        Err(e) => return Theorem2Report::failure(c, r, Some(sigma.clone()), e.to_string()),
    };
    submodule_report(t, cells, tab, &inter, &v, rep)
}

fn submodule_report(
    t: &KLTable,
    cells: &CellPartition,
    tab: &CharacterTable,
    inter: &CellIntersection,
    v: &IsotypicVector,
    rep: Bipartition,
) -> Theorem2Report {
    let m = CellModule::new(t, cells, inter.left);
    let span = generate_submodule(&m, &v.in_module(&m));
    let chi = submodule_character(t, &m, &span, tab);
    let dec = tab.decompose(&chi).unwrap_or_default();
    let idx = tab.irrep_index(&rep);
    let expected_dim = crate::repr::dimension(&rep);
    let multiplicity = idx.and_then(|i| dec.get(i).copied()).unwrap_or(0);
    let character_matches = idx.is_some_and(|i| chi == tab.values[i]);
    let pass = character_matches && span.rank() as u128 == expected_dim && multiplicity == 1;
    let detail = if pass {
        String::new()
    } else {
        let got: Vec<String> = tab
            .irreducibles
            .iter()
            .zip(&dec)
            .filter(|(_, &k)| k != 0)
            .map(|(b, k)| format!("{b}x{k}"))
            .collect();
        format!("generated submodule decomposes as {}", got.join(" + "))
    };
    Theorem2Report {
        left: inter.left,
        right: inter.right,
        shape: Some(v.shape.clone()),
        rep: Some(rep),
        very_even: false,
        expected_dim,
        dim: span.rank(),
        character_matches,
        multiplicity,
        pass,
        detail,
    }
}

/// All `(C, R, σ)` with `C, R` in one double cell and `σ` a shape reachable
/// in their intersection. Intersections without a usable base element
/// produce one failing report.
pub fn verify_theorem2_all(t: &KLTable, cells: &CellPartition) -> Vec<Theorem2Report> {
    let tab = CharacterTable::new(t.rank());
    let pairs: Vec<(CellId, CellId)> = (0..cells.double_cells.len())
        .flat_map(|d| {
            let ls = cells.left_cells_in(d);
            ls.iter().flat_map(|&a| ls.iter().map(move |&b| (a, b))).collect::<Vec<_>>()
        })
        .collect();
    let mut out: Vec<Theorem2Report> = pairs
        .par_iter()
        .flat_map_iter(|&(c, r)| {
            let shapes = match cell_intersection(t, cells, c, r) {
                Ok(inter) => inter.shapes(),
                Err(e) => return vec![Theorem2Report::failure(c, r, None, e.to_string())],
            };
            let mut shapes = shapes;
            shapes.sort();
            shapes.dedup();
            shapes.iter().map(|s| verify_theorem2(t, cells, &tab, c, r, s)).collect()
        })
        .collect();
    out.sort_by(|a, b| (a.left, a.right, &a.shape).cmp(&(b.left, b.right, &b.shape)));
    out
}

/// Convention-free form of the rule: for every base element and every
/// subset `E` of its extended open cycles, the signed sum generates an
/// irreducible submodule, and the `2^r` sums realise distinct common
/// constituents of `C` and `R`. Returns the representations in mask order.
pub fn signed_sums_irreducible(
    t: &KLTable,
    cells: &CellPartition,
    tab: &CharacterTable,
    c: CellId,
    r: CellId,
) -> Result<Vec<Bipartition>> {
    let elems = checked_elements(t, cells, c, r)?;
    let inter = intersection_from(t, cells, c, r, elems[0])?;
    let m = CellModule::new(t, cells, c);
    let mut reps = Vec::new();
    for e in 0..inter.members.len() {
        let v = signed_sum(&inter, inter.members[e].shape.clone(), e);
        let span = generate_submodule(&m, &v.in_module(&m));
        let dec = tab.decompose(&submodule_character(t, &m, &span, tab)).unwrap_or_default();
        let nz: Vec<usize> = (0..dec.len()).filter(|&i| dec[i] != 0).collect();
        if nz.len() != 1 || dec[nz[0]] != 1 {
            return Err(Error::Invalid(format!("signed sum {e} generates a reducible submodule")));
        }
        reps.push(tab.irreducibles[nz[0]].clone());
    }
    let mut distinct = reps.clone();
    distinct.sort();
    distinct.dedup();
    if distinct.len() != reps.len() {
        return Err(Error::Invalid("signed sums repeat a representation".into()));
    }
    Ok(reps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repr::a_value;

    fn d3() -> (KLTable, CellPartition, CharacterTable) {
        let t = KLTable::compute(3, false).unwrap();
        let c = CellPartition::compute(&t);
        (t, c, CharacterTable::new(3))
    }

    #[test]
    fn identity_intersection() {
        let (t, c, _) = d3();
        let id = c.left_cell_of(0);
        let inter = cell_intersection(&t, &c, id, id).unwrap();
        assert_eq!(inter.r(), 0);
        assert_eq!(inter.x, 0);
        let v = r_sigma(&inter, &inter.members[0].shape).unwrap();
        assert_eq!(v.signs, vec![1]);
        assert_eq!(v.support, vec![0]);
    }

    #[test]
    fn errors() {
        let (t, c, _) = d3();
        let a = c.left_cell_of(0);
        let b = c.left_cell_of(t.len() - 1);
        assert_eq!(cell_intersection(&t, &c, a, b).unwrap_err(), Error::NoCommonDoubleCell);
        let inter = cell_intersection(&t, &c, a, a).unwrap();
        let far = Shape::new(vec![2, 2, 2]).unwrap();
        assert!(matches!(r_sigma(&inter, &far), Err(Error::UnreachableShape(_))));
        let ve = Shape::new(vec![4, 4]).unwrap();
        assert!(matches!(r_sigma(&inter, &ve), Err(Error::VeryEvenShape(_))));
    }

    #[test]
    fn theorem2_d3() {
        let (t, c, _) = d3();
        let reports = verify_theorem2_all(&t, &c);
        assert!(!reports.is_empty());
        for r in &reports {
            assert!(r.pass, "{r:?}");
        }
    }

    #[test]
    fn sign_of_x_and_sign_independence() {
        let (t, c, tab) = d3();
        for d in 0..c.double_cells.len() {
            for &a in &c.left_cells_in(d) {
                for &b in &c.left_cells_in(d) {
                    let inter = cell_intersection(&t, &c, a, b).unwrap();
                    let m = CellModule::new(&t, &c, a);
                    for s in inter.shapes() {
                        let v = r_sigma(&inter, &s).unwrap();
                        let xi = v.support.iter().position(|&w| w == inter.x).unwrap();
                        assert_eq!(v.signs[xi], 1);
                        let plus = v.in_module(&m);
                        let minus: Vec<Q> = plus.iter().map(|q| -q.clone()).collect();
                        let (p, n) = (generate_submodule(&m, &plus), generate_submodule(&m, &minus));
                        assert_eq!(p.basis(), n.basis());
                    }
                    assert!(signed_sums_irreducible(&t, &c, &tab, a, b).is_ok());
                }
            }
        }
    }

    #[test]
    fn a_value_constant_on_double_cells() {
        let (t, c, tab) = d3();
        for d in 0..c.double_cells.len() {
            let mut seen = Vec::new();
            for &l in &c.left_cells_in(d) {
                let m = CellModule::new(&t, &c, l);
                let dec = cell_decomposition(&t, &m, &tab);
                for (b, &k) in tab.irreducibles.iter().zip(&dec) {
                    if k != 0 {
                        seen.push(a_value(b));
                    }
                }
            }
            seen.dedup();
            assert_eq!(seen.len(), 1);
        }
    }
}
