//! Cell intersections at the tableau level, and the rank 9 worked example
//! built on the quasi staircase `λ_2 = (5,4,4,2,2,1)`.
//!
//! No Kazhdan–Lusztig data is used here: members are tableau pairs, signs
//! come from the extended open cycles, and representations from `repr`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::cycles::{self, reachable_pairs, PairMove};
use crate::error::{Error, Result};
use crate::operators::quasi_staircase_tables;
use crate::repr::{is_special_rep, is_very_even, shape_to_rep, truncated_induction_with, Bipartition};
use crate::tableaux::{inverse_rs, DominoTableau, Shape, TableauPair};

use super::isotypic::CELL_COLORING;

/// Pairs reachable from `base` through subsets of its extended open cycles.
#[derive(Debug, Clone, Serialize)]
pub struct PairIntersection {
    pub base: TableauPair,
    pub moves: Vec<PairMove>,
    /// Indexed by mask over `moves`.
    pub members: Vec<TableauPair>,
}

impl PairIntersection {
    pub fn new(base: &TableauPair) -> Result<Self> {
        inverse_rs(base)?;
        let (moves, members) = reachable_pairs(base, CELL_COLORING)?;
        Ok(PairIntersection { base: base.clone(), moves, members })
    }

    pub fn r(&self) -> usize {
        self.moves.len()
    }

    /// `σ_w = (−1)^{|f(w) ∩ E|}` by mask, where `E` carries the base to `σ`.
    pub fn signs(&self, sigma: &Shape) -> Result<Vec<i8>> {
        if is_very_even(sigma)? {
            return Err(Error::VeryEvenShape(sigma.parts().to_vec()));
        }
        let hits: Vec<usize> = (0..self.members.len()).filter(|&m| self.members[m].shape() == *sigma).collect();
        let target = match hits.as_slice() {
            [] => return Err(Error::UnreachableShape(sigma.parts().to_vec())),
            [m] => *m,
            _ => return Err(Error::Invalid(format!("shape {sigma} is reached by {} subsets", hits.len()))),
        };
        Ok((0..self.members.len()).map(|m| if (m & target).count_ones() % 2 == 0 { 1 } else { -1 }).collect())
    }
}

/// Tableaux obtained from `t` by moving through subsets of its open cycles.
pub fn open_cycle_class(t: &DominoTableau) -> Result<Vec<DominoTableau>> {
    cycles::open_cycle_class(t, CELL_COLORING)
}

/// Elements `w` with both tableaux in the open cycle class of `t`: the
/// intersection `C ∩ C⁻¹` for the cell carried by `t`.
pub fn self_intersection(t: &DominoTableau) -> Result<Vec<TableauPair>> {
    let class = open_cycle_class(t)?;
    let mut out = Vec::new();
    for l in &class {
        for r in &class {
            if l.shape() != r.shape() {
                continue;
            }
            let p = TableauPair { left: l.clone(), right: r.clone() };
            if inverse_rs(&p).is_ok() {
                out.push(p);
            }
        }
    }
    Ok(out)
}

/// Constituents listed for the rank 9 cell, as printed (one entry is
/// misprinted).
pub const LISTED_CONSTITUENTS: [&[usize]; 4] = [&[5, 5, 3, 3, 1, 1], &[5, 4, 4, 2, 1, 1], &[5, 5, 3, 2, 2, 1], &[5, 4, 4, 3, 1, 1]];

/// Order of the basis elements `x_p` in the displayed sums.
pub const DISPLAY_ORDER: [&[usize]; 4] = [&[5, 5, 3, 3, 1, 1], &[5, 4, 4, 2, 2, 1], &[5, 5, 3, 2, 2, 1], &[5, 4, 4, 3, 1, 1]];

/// Displayed sign patterns, in [`DISPLAY_ORDER`].
pub const DISPLAYED_553311: [i8; 4] = [1, 1, 1, 1];
pub const DISPLAYED_553221: [i8; 4] = [1, -1, -1, 1];
/// The two alternatives offered for `(5,4,4,2,2,1)` and `(5,4,4,3,1,1)`.
pub const ALTERNATIVES: [[[i8; 4]; 2]; 2] = [[[1, 1, -1, -1], [1, -1, 1, -1]], [[1, -1, 1, -1], [1, 1, -1, -1]]];

#[derive(Debug, Clone, Serialize)]
pub struct ListedShape {
    pub parts: Vec<usize>,
    pub sum: usize,
    /// Set when the parts do not sum to 18; `correction` then holds the
    /// reachable shape the entry stands for.
    pub misprint: bool,
    pub correction: Option<Shape>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExampleMember {
    pub pair: TableauPair,
    pub mask: usize,
    pub shape: Shape,
    pub rep: Bipartition,
    pub special: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SignCheck {
    /// Shape named in the displayed sum.
    pub sigma: Shape,
    /// Shape of the member carrying the same representation.
    pub realised_by: Shape,
    /// Signs of `R_σ` in [`DISPLAY_ORDER`].
    pub signs: Vec<i8>,
}

#[derive(Debug, Clone, Serialize)]
pub struct WorkedExampleReport {
    pub t1: DominoTableau,
    pub class_size: usize,
    pub base: TableauPair,
    pub r: usize,
    pub members: Vec<ExampleMember>,
    pub listed: Vec<ListedShape>,
    /// Member shapes equal the corrected listed shapes.
    pub shapes_match: bool,
    /// Member representations equal those of the corrected listed shapes.
    pub reps_match: bool,
    /// `R_σ` for each shape of [`DISPLAY_ORDER`], members matched by representation.
    pub sign_checks: Vec<SignCheck>,
    pub first_pattern_matches: bool,
    pub second_pattern_matches: bool,
    /// Index into [`ALTERNATIVES`] agreeing with the computed signs.
    pub alternative: Option<usize>,
    pub truncated_induction: Vec<Bipartition>,
    pub truncated_expected: Vec<Bipartition>,
    pub truncated_matches: bool,
}

fn up_to_sign(a: &[i8], b: &[i8]) -> bool {
    a == b || a.iter().zip(b).all(|(x, y)| *x == -*y)
}

fn shape(p: &[usize]) -> Shape {
    Shape::new(p.to_vec()).expect("partition")
}

/// Builds the rank 9 example from the calibrated model tableau for `λ_2`.
pub fn worked_example() -> Result<WorkedExampleReport> {
    let t1 = quasi_staircase_tables(2)?.t1;
    let class_size = open_cycle_class(&t1)?.len();
    let elements = self_intersection(&t1)?;
    let special: Vec<&TableauPair> =
        elements.iter().filter(|p| shape_to_rep(&p.shape()).is_ok_and(|b| is_special_rep(&b))).collect();
    let base = match special.as_slice() {
        [x] => (*x).clone(),
        _ => return Err(Error::NoSpecialElement(special.len())),
    };
    let inter = PairIntersection::new(&base)?;
    let got: BTreeSet<&TableauPair> = inter.members.iter().collect();
    let want: BTreeSet<&TableauPair> = elements.iter().collect();
    if got != want {
        return Err(Error::Invalid(format!(
            "{} elements but {} pairs reachable from the special one",
            elements.len(),
            inter.members.len()
        )));
    }
    let members: Vec<ExampleMember> = inter
        .members
        .iter()
        .enumerate()
        .map(|(mask, p)| {
            let rep = shape_to_rep(&p.shape())?;
            Ok(ExampleMember { pair: p.clone(), mask, shape: p.shape(), special: is_special_rep(&rep), rep })
        })
        .collect::<Result<_>>()?;

    let member_shapes: BTreeSet<Shape> = members.iter().map(|m| m.shape.clone()).collect();
    let listed: Vec<ListedShape> = LISTED_CONSTITUENTS
        .iter()
        .map(|p| {
            let sum: usize = p.iter().sum();
            let misprint = sum != 18;
            let correction = misprint.then(|| {
                DISPLAY_ORDER.iter().map(|q| shape(q)).find(|q| !LISTED_CONSTITUENTS.iter().any(|l| *l == q.parts()))
            });
            ListedShape { parts: p.to_vec(), sum, misprint, correction: correction.flatten() }
        })
        .collect();
    let corrected: BTreeSet<Shape> = listed
        .iter()
        .map(|l| l.correction.clone().unwrap_or_else(|| shape(&l.parts)))
        .collect();
    let shapes_match = corrected == member_shapes;
    let reps_of = |s: &BTreeSet<Shape>| -> Result<BTreeSet<Bipartition>> { s.iter().map(shape_to_rep).collect() };
    let reps_match = reps_of(&corrected)? == members.iter().map(|m| m.rep.clone()).collect();

    // Members in display order, matched through their representation.
    let order: Vec<usize> = DISPLAY_ORDER
        .iter()
        .map(|p| {
            let b = shape_to_rep(&shape(p))?;
            members
                .iter()
                .position(|m| m.rep == b)
                .ok_or_else(|| Error::Invalid(format!("no member carries the representation of {}", shape(p))))
        })
        .collect::<Result<_>>()?;
    let sign_checks: Vec<SignCheck> = DISPLAY_ORDER
        .iter()
        .zip(&order)
        .map(|(p, &i)| {
            let by_mask = inter.signs(&members[i].shape)?;
            Ok(SignCheck {
                sigma: shape(p),
                realised_by: members[i].shape.clone(),
                signs: order.iter().map(|&j| by_mask[j]).collect(),
            })
        })
        .collect::<Result<_>>()?;
    let first_pattern_matches = up_to_sign(&sign_checks[0].signs, &DISPLAYED_553311);
    let second_pattern_matches = up_to_sign(&sign_checks[2].signs, &DISPLAYED_553221);
    let alternative = ALTERNATIVES
        .iter()
        .position(|alt| up_to_sign(&sign_checks[1].signs, &alt[0]) && up_to_sign(&sign_checks[3].signs, &alt[1]));

    let small = shape_to_rep(&shape(&[3, 2, 2, 1, 1, 1]))?;
    let truncated_induction = truncated_induction_with(5, 9, &small, &[1, 1, 1, 1])?;
    let truncated_expected: Vec<Bipartition> =
        [shape(&[5, 4, 4, 3, 1, 1]), shape(&[5, 4, 4, 2, 2, 1])].iter().map(shape_to_rep).collect::<Result<_>>()?;
    let truncated_matches = truncated_induction.iter().collect::<BTreeSet<_>>() == truncated_expected.iter().collect();

    Ok(WorkedExampleReport {
        t1,
        class_size,
        base,
        r: inter.r(),
        members,
        listed,
        shapes_match,
        reps_match,
        sign_checks,
        first_pattern_matches,
        second_pattern_matches,
        alternative,
        truncated_induction,
        truncated_expected,
        truncated_matches,
    })
}
