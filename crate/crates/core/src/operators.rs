//! Operators on tableau pairs that fix the right tableau, and orbits under
//! them.
//!
//! Wall-crossing operators are realised on elements: `T_{αβ}` is defined on
//! `w` with `β ∈ R(w)`, `α ∉ R(w)` and returns the unique `w·s_γ`,
//! `γ ∈ {α, β}`, with `α ∈ R`, `β ∉ R`. Right multiplication changes only
//! the left tableau, except for the pair `{α₁', α₃}`, which is handled by
//! the fork operators and used only where the right tableau survives.
//!
//! The quasi staircase operators swap the two largest dominoes of a model
//! subtableau; their enlargements act on whole cell intersections.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::cycles::{cycles_of, open_cycle_class, Coloring};
use crate::error::{Error, Result};
use crate::tableaux::{domino_rs, enumerate_tableaux, inverse_rs, Domino, DominoTableau, Shape, TableauPair};
use crate::weyl_d::{RootSet, SignedElement, SimpleRoot};

/// Coloring used to move through open cycles in the enlarged operators.
pub const ENLARGE_COLORING: Coloring = Coloring::A;

#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ForkDirection {
    /// `T^L_{α₁'α₃}`.
    Alpha1PrimeToAlpha3,
    /// `T^L_{α₃α₁'}`.
    Alpha3ToAlpha1Prime,
}

#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChainDirection {
    /// `U^L_{αX}`.
    AlphaX,
    /// `U^L_{Xα}`.
    XAlpha,
}

/// Which model pair an `S` or `T` operator uses, and whether it is transposed.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SVariant {
    S,
    SPrime,
    STranspose,
    SPrimeTranspose,
}

impl SVariant {
    pub const ALL: [SVariant; 4] = [SVariant::S, SVariant::SPrime, SVariant::STranspose, SVariant::SPrimeTranspose];

    fn primed(self) -> bool {
        matches!(self, SVariant::SPrime | SVariant::SPrimeTranspose)
    }

    fn transposed(self) -> bool {
        matches!(self, SVariant::STranspose | SVariant::SPrimeTranspose)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum OperatorId {
    WallCross { alpha: SimpleRoot, beta: SimpleRoot },
    ForkL { direction: ForkDirection },
    ChainL { direction: ChainDirection },
    QuasiS { n: usize },
    QuasiSPrime { n: usize },
    QuasiSTranspose { n: usize },
    QuasiSPrimeTranspose { n: usize },
    Enlarged { variant: SVariant, n: usize },
}

impl OperatorId {
    pub fn quasi(variant: SVariant, n: usize) -> Self {
        match variant {
            SVariant::S => OperatorId::QuasiS { n },
            SVariant::SPrime => OperatorId::QuasiSPrime { n },
            SVariant::STranspose => OperatorId::QuasiSTranspose { n },
            SVariant::SPrimeTranspose => OperatorId::QuasiSPrimeTranspose { n },
        }
    }

    /// Wall-crossing for every ordered adjacent pair other than `{α₁', α₃}`,
    /// both fork operators and both chain truncations.
    pub fn wall_fork_chain(rank: usize) -> Vec<OperatorId> {
        let mut ops: Vec<OperatorId> = SimpleRoot::adjacent_pairs(rank)
            .into_iter()
            .filter(|&(a, b)| !is_fork_pair(a, b))
            .map(|(alpha, beta)| OperatorId::WallCross { alpha, beta })
            .collect();
        if rank >= 3 {
            ops.push(OperatorId::ForkL { direction: ForkDirection::Alpha1PrimeToAlpha3 });
            ops.push(OperatorId::ForkL { direction: ForkDirection::Alpha3ToAlpha1Prime });
            ops.push(OperatorId::ChainL { direction: ChainDirection::AlphaX });
            ops.push(OperatorId::ChainL { direction: ChainDirection::XAlpha });
        }
        ops
    }

    /// `S_m, S_m', ᵗS_m, ᵗS_m'` for every `m` whose model fits in rank `rank`.
    pub fn quasi_family(rank: usize) -> Vec<OperatorId> {
        let mut ops = Vec::new();
        for m in 1.. {
            if (m + 1) * (m + 1) > rank {
                break;
            }
            for v in SVariant::ALL {
                if !v.primed() || (m + 1) * (m + 2) <= rank {
                    ops.push(OperatorId::quasi(v, m));
                }
            }
        }
        ops
    }

    /// `T_m, T_m', ᵗT_m, ᵗT_m'` for every `m` whose model fits in rank `rank`.
    pub fn enlarged_family(rank: usize) -> Vec<OperatorId> {
        let mut ops = Vec::new();
        for m in 1.. {
            if (m + 1) * (m + 1) > rank {
                break;
            }
            for variant in SVariant::ALL {
                if !variant.primed() || (m + 1) * (m + 2) <= rank {
                    ops.push(OperatorId::Enlarged { variant, n: m });
                }
            }
        }
        ops
    }
}

impl fmt::Display for OperatorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorId::WallCross { alpha, beta } => write!(f, "T_{{{alpha},{beta}}}"),
            OperatorId::ForkL { direction: ForkDirection::Alpha1PrimeToAlpha3 } => write!(f, "T^L_{{1',3}}"),
            OperatorId::ForkL { direction: ForkDirection::Alpha3ToAlpha1Prime } => write!(f, "T^L_{{3,1'}}"),
            OperatorId::ChainL { direction: ChainDirection::AlphaX } => write!(f, "U^L_{{aX}}"),
            OperatorId::ChainL { direction: ChainDirection::XAlpha } => write!(f, "U^L_{{Xa}}"),
            OperatorId::QuasiS { n } => write!(f, "S_{n}"),
            OperatorId::QuasiSPrime { n } => write!(f, "S'_{n}"),
            OperatorId::QuasiSTranspose { n } => write!(f, "tS_{n}"),
            OperatorId::QuasiSPrimeTranspose { n } => write!(f, "tS'_{n}"),
            OperatorId::Enlarged { variant, n } => {
                let name = match variant {
                    SVariant::S => "T",
                    SVariant::SPrime => "T'",
                    SVariant::STranspose => "tT",
                    SVariant::SPrimeTranspose => "tT'",
                };
                write!(f, "{name}_{n}")
            }
        }
    }
}

fn is_fork_pair(a: SimpleRoot, b: SimpleRoot) -> bool {
    matches!(
        (a, b),
        (SimpleRoot::Alpha1Prime, SimpleRoot::Alpha(3)) | (SimpleRoot::Alpha(3), SimpleRoot::Alpha1Prime)
    )
}

fn domain_error(what: impl fmt::Display) -> Error {
    Error::DomainViolation(what.to_string())
}

/// Element-level `T_{αβ}`.
pub fn star_element(w: &SignedElement, alpha: SimpleRoot, beta: SimpleRoot) -> Result<SignedElement> {
    let n = w.rank();
    for r in [alpha, beta] {
        if !r.valid_for(n) {
            return Err(Error::InvalidRoot(r.to_string(), n));
        }
    }
    if !alpha.adjacent(beta) {
        return Err(Error::Invalid(format!("roots {alpha} and {beta} are not adjacent")));
    }
    let op = OperatorId::WallCross { alpha, beta };
    let rd = w.right_descents();
    if !rd.contains(beta) || rd.contains(alpha) {
        return Err(domain_error(op));
    }
    [w.right_mul(alpha), w.right_mul(beta)]
        .into_iter()
        .find(|x| {
            let r = x.right_descents();
            r.contains(alpha) && !r.contains(beta)
        })
        .ok_or_else(|| domain_error(op))
}

/// `T_{αβ}` on a tableau pair. Fails rather than change the right tableau.
pub fn star_op(p: &TableauPair, alpha: SimpleRoot, beta: SimpleRoot) -> Result<TableauPair> {
    let w = inverse_rs(p)?;
    let q = domino_rs(&star_element(&w, alpha, beta)?);
    if q.right != p.right {
        return Err(Error::RightTableauNotPreserved(OperatorId::WallCross { alpha, beta }.to_string()));
    }
    Ok(q)
}

/// `T^L_{α₁'α₃}` or `T^L_{α₃α₁'}`, restricted to pairs whose right tableau
/// it preserves.
pub fn fork_op(p: &TableauPair, direction: ForkDirection) -> Result<Vec<TableauPair>> {
    let (a, b) = match direction {
        ForkDirection::Alpha1PrimeToAlpha3 => (SimpleRoot::Alpha1Prime, SimpleRoot::Alpha(3)),
        ForkDirection::Alpha3ToAlpha1Prime => (SimpleRoot::Alpha(3), SimpleRoot::Alpha1Prime),
    };
    let op = OperatorId::ForkL { direction };
    if p.left.size() < 3 {
        return Err(domain_error(op));
    }
    let w = inverse_rs(p)?;
    let x = star_element(&w, a, b).map_err(|_| domain_error(&op))?;
    let q = domino_rs(&x);
    if q.right != p.right {
        return Err(Error::RightTableauNotPreserved(op.to_string()));
    }
    Ok(vec![q])
}

/// Whether `fork_op` keeps the right tableau, read off the left tableau:
/// the cycle of the 3-domino is closed under coloring A, or the 3-domino
/// turns from vertical to horizontal (`α₁' → α₃`) or from horizontal to
/// vertical (`α₃ → α₁'`).
pub fn fork_preserves(before: &DominoTableau, after: &DominoTableau, direction: ForkDirection) -> bool {
    let closed = cycles_of(before, Coloring::A).into_iter().find(|c| c.contains(3)).is_none_or(|c| !c.is_open());
    let (Some(d0), Some(d1)) = (before.domino(3), after.domino(3)) else {
        return false;
    };
    closed
        || match direction {
            ForkDirection::Alpha1PrimeToAlpha3 => d0.is_vertical() && d1.is_horizontal(),
            ForkDirection::Alpha3ToAlpha1Prime => d0.is_horizontal() && d1.is_vertical(),
        }
}

const X_ROOTS: [SimpleRoot; 2] = [SimpleRoot::Alpha1, SimpleRoot::Alpha1Prime];

fn meets_x(r: RootSet) -> bool {
    X_ROOTS.iter().any(|&x| r.contains(x))
}

/// The untruncated `T^L_{αX}` / `T^L_{Xα}` on elements, with `α = α₃` and
/// `X = {α₁, α₁'}`. `αX` is defined when `α ∉ R(w)` and `X` meets `R(w)`
/// and returns the `w·s_γ`, `γ ∈ {α₃, α₁, α₁'}`, with `α ∈ R` and `X`
/// disjoint from `R`; `Xα` is the reverse.
pub fn chain_full(w: &SignedElement, direction: ChainDirection) -> Result<Vec<SignedElement>> {
    let op = OperatorId::ChainL { direction };
    if w.rank() < 3 {
        return Err(domain_error(op));
    }
    let a = SimpleRoot::Alpha(3);
    let rd = w.right_descents();
    let (dom, target): (bool, fn(RootSet) -> bool) = match direction {
        ChainDirection::AlphaX => (!rd.contains(a) && meets_x(rd), |r| r.contains(SimpleRoot::Alpha(3)) && !meets_x(r)),
        ChainDirection::XAlpha => (rd.contains(a) && !meets_x(rd), |r| !r.contains(SimpleRoot::Alpha(3)) && meets_x(r)),
    };
    if !dom {
        return Err(domain_error(op));
    }
    let out: Vec<SignedElement> = [a, X_ROOTS[0], X_ROOTS[1]]
        .into_iter()
        .map(|g| w.right_mul(g))
        .filter(|y| target(y.right_descents()))
        .collect();
    if out.is_empty() {
        return Err(domain_error(op));
    }
    Ok(out)
}

/// `U^L_{αX}` / `U^L_{Xα}`: the outputs of the full operator that keep the
/// right tableau. May be empty.
pub fn chain_ops(p: &TableauPair, direction: ChainDirection) -> Result<Vec<TableauPair>> {
    let w = inverse_rs(p)?;
    let mut out: Vec<TableauPair> = chain_full(&w, direction)?
        .iter()
        .map(domino_rs)
        .filter(|q| q.right == p.right)
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// `λ_n = (2n+1, …, n+3, n+2, n+2, n, n, n−1, …, 1)`.
pub fn lambda_shape(n: usize) -> Shape {
    let mut parts: Vec<usize> = (n + 3..=2 * n + 1).rev().collect();
    parts.extend([n + 2, n + 2, n, n]);
    parts.extend((1..n).rev());
    Shape::new(parts).expect("partition")
}

/// `μ_n = (2n+2, 2n+1, …, n+3, n+2, n+2, n, n, n−1, …, 1)`.
pub fn mu_shape(n: usize) -> Shape {
    let mut parts: Vec<usize> = (n + 3..=2 * n + 2).rev().collect();
    parts.extend([n + 2, n + 2, n, n]);
    parts.extend((1..n).rev());
    Shape::new(parts).expect("partition")
}

/// Model tableaux `T̃_1, Ũ_1` of shape `λ_n` and `T̃_2, Ũ_2` of shape `μ_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuasiStaircaseTable {
    pub n: usize,
    pub lambda_shape: Shape,
    pub mu_shape: Shape,
    pub t1: DominoTableau,
    pub u1: DominoTableau,
    pub t2: DominoTableau,
    pub u2: DominoTableau,
    /// Whether both models come from the calibrated data set rather than
    /// the canonical fill.
    pub calibrated: bool,
}

#[derive(Deserialize)]
struct ModelRecord {
    n: usize,
    #[serde(default)]
    t1: Option<DominoTableau>,
    #[serde(default)]
    t2: Option<DominoTableau>,
}

fn persisted() -> &'static HashMap<usize, ModelRecord> {
    static DATA: OnceLock<HashMap<usize, ModelRecord>> = OnceLock::new();
    DATA.get_or_init(|| {
        let recs: Vec<ModelRecord> =
            serde_json::from_str(include_str!("../data/quasi_staircase.json")).expect("model tableau data");
        recs.into_iter().map(|r| (r.n, r)).collect()
    })
}

/// Cells of the two largest dominoes in a quasi staircase of parameter `n`:
/// the horizontal one ending the row above the two rows of length `n`, and
/// the vertical one ending those two rows.
pub fn largest_domino_cells(shape: &Shape, n: usize) -> (Domino, Domino) {
    let r = shape.parts().iter().position(|&p| p == n).expect("row of length n");
    let above = shape.row(r - 1);
    (Domino::horizontal(r - 1, above - 2), Domino::vertical(r, n - 1))
}

/// Fills `shape` by repeatedly removing the lowest removable domino, with
/// `fixed` pinned at the top labels (in order).
fn canonical_fill(shape: &Shape, fixed: &[Domino]) -> Result<DominoTableau> {
    let mut rows = shape.parts().to_vec();
    for d in fixed.iter().rev() {
        for (r, _) in d.cells() {
            rows[r as usize] -= 1;
        }
    }
    let mut pos: Vec<Domino> = Vec::new();
    loop {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        if rows.is_empty() {
            break;
        }
        let k = rows.len();
        let below = |i: usize| if i + 1 < k { rows[i + 1] } else { 0 };
        let next = (0..k).rev().find_map(|i| {
            if rows[i] >= below(i) + 2 {
                Some(Domino::horizontal(i, rows[i] - 2))
            } else if i + 1 < k && rows[i] == rows[i + 1] && rows[i + 1] > below(i + 1) {
                Some(Domino::vertical(i, rows[i] - 1))
            } else {
                None
            }
        });
        let d = next.ok_or_else(|| Error::UntileableShape(shape.parts().to_vec()))?;
        for (r, _) in d.cells() {
            rows[r as usize] -= 1;
        }
        pos.push(d);
    }
    pos.reverse();
    pos.extend_from_slice(fixed);
    DominoTableau::try_from_positions(&pos).ok_or_else(|| Error::InvalidTableau("canonical fill".into()))
}

fn model_pair(shape: &Shape, n: usize, stored: Option<&DominoTableau>) -> Result<(DominoTableau, DominoTableau)> {
    let (h, v) = largest_domino_cells(shape, n);
    let t = match stored {
        Some(t) => t.clone(),
        None => canonical_fill(shape, &[h, v])?,
    };
    let k = t.size() as u8;
    if t.shape() != *shape || t.domino(k - 1) != Some(h) || t.domino(k) != Some(v) {
        return Err(Error::InvalidTableau(format!("model tableau for n = {n} breaks the quasi staircase layout")));
    }
    let u = t.swap_labels(k - 1, k);
    if !u.is_standard() {
        return Err(Error::InvalidTableau(format!("swapped model tableau for n = {n} is not standard")));
    }
    Ok((t, u))
}

/// Model tableaux for `n`. Calibrated data is used where present; otherwise
/// the non-largest dominoes are filled canonically.
pub fn quasi_staircase_tables(n: usize) -> Result<QuasiStaircaseTable> {
    if n == 0 {
        return Err(Error::Invalid("quasi staircase parameter must be at least 1".into()));
    }
    let lambda = lambda_shape(n);
    let mu = mu_shape(n);
    let rec = persisted().get(&n);
    let (t1, u1) = model_pair(&lambda, n, rec.and_then(|r| r.t1.as_ref()))?;
    let (t2, u2) = model_pair(&mu, n, rec.and_then(|r| r.t2.as_ref()))?;
    let calibrated = rec.is_some_and(|r| r.t1.is_some() && r.t2.is_some());
    Ok(QuasiStaircaseTable { n, lambda_shape: lambda, mu_shape: mu, t1, u1, t2, u2, calibrated })
}

fn tables(n: usize) -> Result<&'static QuasiStaircaseTable> {
    static CACHE: OnceLock<std::sync::Mutex<HashMap<usize, &'static QuasiStaircaseTable>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let mut g = cache.lock().expect("table cache");
    if let Some(t) = g.get(&n) {
        return Ok(t);
    }
    let t: &'static QuasiStaircaseTable = Box::leak(Box::new(quasi_staircase_tables(n)?));
    g.insert(n, t);
    Ok(t)
}

/// Swaps the two largest dominoes of the prefix of `left` when that prefix
/// is the model `t` or its swap `u`.
pub fn swap_with_model(left: &DominoTableau, t: &DominoTableau, u: &DominoTableau) -> Option<DominoTableau> {
    let k = t.size();
    if left.size() < k {
        return None;
    }
    let lead = left.leading_subtableau(k);
    if lead != *t && lead != *u {
        return None;
    }
    Some(left.swap_labels(k as u8 - 1, k as u8))
}

fn swap_prefix(left: &DominoTableau, primed: bool, n: usize) -> Option<DominoTableau> {
    let tab = tables(n).ok()?;
    if primed {
        swap_with_model(left, &tab.t2, &tab.u2)
    } else {
        swap_with_model(left, &tab.t1, &tab.u1)
    }
}

fn s_left(left: &DominoTableau, variant: SVariant, n: usize) -> Option<DominoTableau> {
    if variant.transposed() {
        swap_prefix(&left.transpose(), variant.primed(), n).map(|t| t.transpose())
    } else {
        swap_prefix(left, variant.primed(), n)
    }
}

/// `S_n, S_n', ᵗS_n, ᵗS_n'`: swap the two largest dominoes of the model
/// prefix of the left tableau; the right tableau is untouched.
pub fn s_op(p: &TableauPair, variant: SVariant, n: usize) -> Result<TableauPair> {
    let left = s_left(&p.left, variant, n).ok_or_else(|| domain_error(OperatorId::quasi(variant, n)))?;
    Ok(TableauPair { left, right: p.right.clone() })
}

/// `T_n` and its variants, which act on cell intersections. The left
/// tableau is moved through open cycles into the domain of the matching `S`
/// operator and swapped; the images are the pairs in the image of the
/// correspondence whose left tableau is in the open cycle class of a swapped
/// tableau and whose right tableau is in the class of `p.right`. The right
/// tableau moves inside its right cell, so these operators are not used in
/// orbit closures.
pub fn enlarged_op(p: &TableauPair, variant: SVariant, n: usize) -> Result<Vec<TableauPair>> {
    let mut lefts = BTreeSet::new();
    for l in open_cycle_class(&p.left, ENLARGE_COLORING)? {
        if let Some(swapped) = s_left(&l, variant, n) {
            lefts.extend(open_cycle_class(&swapped, ENLARGE_COLORING)?);
        }
    }
    if lefts.is_empty() {
        return Err(domain_error(OperatorId::Enlarged { variant, n }));
    }
    let rights = open_cycle_class(&p.right, ENLARGE_COLORING)?;
    let mut out = Vec::new();
    for l in &lefts {
        for r in rights.iter().filter(|r| r.shape() == l.shape()) {
            let q = TableauPair { left: l.clone(), right: r.clone() };
            if inverse_rs(&q).is_ok() {
                out.push(q);
            }
        }
    }
    Ok(out)
}

/// One operator applied to one pair. Domain failures give the empty set.
pub fn apply_op(p: &TableauPair, op: &OperatorId) -> Result<Vec<TableauPair>> {
    let res = match *op {
        OperatorId::WallCross { alpha, beta } => star_op(p, alpha, beta).map(|q| vec![q]),
        OperatorId::ForkL { direction } => fork_op(p, direction),
        OperatorId::ChainL { direction } => chain_ops(p, direction),
        OperatorId::QuasiS { n } => s_op(p, SVariant::S, n).map(|q| vec![q]),
        OperatorId::QuasiSPrime { n } => s_op(p, SVariant::SPrime, n).map(|q| vec![q]),
        OperatorId::QuasiSTranspose { n } => s_op(p, SVariant::STranspose, n).map(|q| vec![q]),
        OperatorId::QuasiSPrimeTranspose { n } => s_op(p, SVariant::SPrimeTranspose, n).map(|q| vec![q]),
        OperatorId::Enlarged { variant, n } => enlarged_op(p, variant, n),
    };
    match res {
        Ok(v) => Ok(v),
        Err(Error::DomainViolation(_) | Error::RightTableauNotPreserved(_) | Error::InvalidRoot(..)) => Ok(Vec::new()),
        Err(e) => Err(e),
    }
}

/// Left-to-right composition with set-valued threading.
pub fn apply_sequence(p: &TableauPair, seq: &[OperatorId]) -> Result<Vec<TableauPair>> {
    let mut cur: BTreeSet<TableauPair> = BTreeSet::from([p.clone()]);
    for op in seq {
        let mut next = BTreeSet::new();
        for q in &cur {
            next.extend(apply_op(q, op)?);
        }
        cur = next;
    }
    Ok(cur.into_iter().collect())
}

/// An orbit member with the operator sequence that reaches it from the seed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitMember {
    pub pair: TableauPair,
    pub witness: Vec<OperatorId>,
}

/// Breadth-first closure of `seed` under `ops`, which must fix the right
/// tableau.
pub fn orbit_closure(seed: &TableauPair, ops: &[OperatorId]) -> Result<Vec<OrbitMember>> {
    let mut seen: HashMap<TableauPair, usize> = HashMap::new();
    let mut members = vec![OrbitMember { pair: seed.clone(), witness: Vec::new() }];
    seen.insert(seed.clone(), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let p = members[i].pair.clone();
        for op in ops {
            for q in apply_op(&p, op)? {
                if q.right != seed.right {
                    return Err(Error::RightTableauNotPreserved(op.to_string()));
                }
                if seen.contains_key(&q) {
                    continue;
                }
                let mut witness = members[i].witness.clone();
                witness.push(op.clone());
                seen.insert(q.clone(), members.len());
                queue.push_back(members.len());
                members.push(OrbitMember { pair: q, witness });
            }
        }
    }
    Ok(members)
}

/// Left tableaux `T` with `(T, right)` in the image of the correspondence.
pub fn admissible_lefts(right: &DominoTableau) -> Result<Vec<DominoTableau>> {
    let mut out = Vec::new();
    for t in enumerate_tableaux(&right.shape())? {
        let p = TableauPair { left: t, right: right.clone() };
        if p.admissible_hint() && inverse_rs(&p).is_ok() {
            out.push(p.left);
        }
    }
    Ok(out)
}

/// Orbits of `ops` on the admissible pairs with right tableau `right`,
/// largest first. A complete operator set gives a single orbit.
pub fn deficiency_report(right: &DominoTableau, ops: &[OperatorId]) -> Result<Vec<Vec<DominoTableau>>> {
    let mut remaining: BTreeSet<DominoTableau> = admissible_lefts(right)?.into_iter().collect();
    let mut orbits = Vec::new();
    while let Some(first) = remaining.iter().next().cloned() {
        let seed = TableauPair { left: first, right: right.clone() };
        let orbit: Vec<DominoTableau> = orbit_closure(&seed, ops)?.into_iter().map(|m| m.pair.left).collect();
        for t in &orbit {
            remaining.remove(t);
        }
        orbits.push(orbit);
    }
    orbits.sort_by_key(|o| std::cmp::Reverse(o.len()));
    Ok(orbits)
}

/// Orbit data for one right tableau.
#[derive(Debug, Clone, Serialize)]
pub struct Theorem1Record {
    pub shape: Shape,
    pub right: DominoTableau,
    pub admissible: usize,
    /// Orbit sizes, largest first.
    pub orbits: Vec<usize>,
    pub pass: bool,
}

/// Orbit decomposition under `ops` for every right tableau of `shape` that
/// has admissible partners, in enumeration order.
pub fn verify_theorem1_shape(shape: &Shape, ops: &[OperatorId]) -> Result<Vec<Theorem1Record>> {
    use rayon::prelude::*;
    let rights = enumerate_tableaux(shape)?;
    let recs: Vec<Option<Theorem1Record>> = rights
        .par_iter()
        .map(|right| -> Result<Option<Theorem1Record>> {
            let orbits: Vec<usize> = deficiency_report(right, ops)?.iter().map(Vec::len).collect();
            if orbits.is_empty() {
                return Ok(None);
            }
            Ok(Some(Theorem1Record {
                shape: shape.clone(),
                right: right.clone(),
                admissible: orbits.iter().sum(),
                pass: orbits.len() == 1,
                orbits,
            }))
        })
        .collect::<Result<_>>()?;
    Ok(recs.into_iter().flatten().collect())
}

/// [`verify_theorem1_shape`] over every tileable shape of `total`.
pub fn verify_theorem1(total: usize, ops: &[OperatorId]) -> Result<Vec<Theorem1Record>> {
    let mut out = Vec::new();
    for shape in Shape::tileable_of_total(total) {
        out.extend(verify_theorem1_shape(&shape, ops)?);
    }
    Ok(out)
}

/// Wall-crossing, fork and chain operators plus the `S` family for `rank`.
pub fn theorem1_operators(rank: usize) -> Vec<OperatorId> {
    let mut ops = OperatorId::wall_fork_chain(rank);
    ops.extend(OperatorId::quasi_family(rank));
    ops
}
