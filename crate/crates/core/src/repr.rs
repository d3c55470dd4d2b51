//! Irreducible representations of `W(D_n)`: bipartition labels, symbols and
//! a-values, characters, specialness, and (truncated) parabolic induction.
//!
//! Characters of `W(B_n)` come from the wreath-product Murnaghan–Nakayama
//! rule, with `((n),∅)` trivial; a cycle with negative sign removed from the
//! second component contributes a factor `−1`. For `α ≠ β` the `D_n`
//! character of `{α,β}` is the restriction. For `{α,α}±` the value is
//! `χ_B/2` off the split classes and `(χ_B ± d)/2` on them, where for a
//! split class with cycle type `2ρ`, `d = 2^{ℓ(ρ)} χ^{S_{n/2}}_α(ρ)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tableaux::{partitions, two_quotient, Shape};
use crate::weyl_d::SignedElement;

pub type Partition = Vec<usize>;

#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// An irreducible `W(D_n)` label `{first, second}`, stored with
/// `first ≥ second`. `sign` is set only when the two parts coincide.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bipartition {
    pub first: Partition,
    pub second: Partition,
    pub sign: Option<Sign>,
}

impl Bipartition {
    pub fn new(a: Partition, b: Partition, sign: Option<Sign>) -> Self {
        let (first, second) = if a >= b { (a, b) } else { (b, a) };
        let sign = if first == second { sign } else { None };
        Bipartition { first, second, sign }
    }

    pub fn rank(&self) -> usize {
        self.first.iter().sum::<usize>() + self.second.iter().sum::<usize>()
    }

    pub fn is_degenerate(&self) -> bool {
        self.first == self.second
    }

    /// The same label with the sign forgotten.
    pub fn unsigned(&self) -> Bipartition {
        Bipartition { sign: None, ..self.clone() }
    }

    pub fn trivial(n: usize) -> Self {
        Bipartition::new(vec![n], vec![], None)
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = |x: &Partition| {
            if x.is_empty() {
                "-".to_string()
            } else {
                x.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
            }
        };
        write!(f, "{{({}),({})}}", p(&self.first), p(&self.second))?;
        match self.sign {
            Some(Sign::Plus) => write!(f, "+"),
            Some(Sign::Minus) => write!(f, "-"),
            None => Ok(()),
        }
    }
}

/// All irreducible labels of `W(D_n)`; degenerate labels appear as `+` and `−`.
pub fn irreducibles(n: usize) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for k in 0..=n {
        if 2 * k > n {
            break;
        }
        for a in partitions(n - k) {
            for b in partitions(k) {
                if 2 * k == n {
                    if a < b {
                        continue;
                    }
                    if a == b {
                        out.push(Bipartition::new(a.clone(), b.clone(), Some(Sign::Plus)));
                        out.push(Bipartition::new(a.clone(), b, Some(Sign::Minus)));
                        continue;
                    }
                }
                out.push(Bipartition::new(a.clone(), b, None));
            }
        }
    }
    out.sort();
    out
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn binomial(n: usize, k: usize) -> u128 {
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Number of standard Young tableaux, by the hook length formula.
pub fn syt_count(p: &[usize]) -> u128 {
    let n: usize = p.iter().sum();
    let conj = conjugate(p);
    let mut hooks: u128 = 1;
    for (i, &row) in p.iter().enumerate() {
        for j in 0..row {
            hooks *= (row - j + conj[j] - i - 1) as u128;
        }
    }
    factorial(n) / hooks
}

pub fn conjugate(p: &[usize]) -> Partition {
    let m = p.first().copied().unwrap_or(0);
    (0..m).map(|j| p.iter().filter(|&&r| r > j).count()).collect()
}

pub fn dimension(b: &Bipartition) -> u128 {
    let n = b.rank();
    let d = binomial(n, b.first.iter().sum()) * syt_count(&b.first) * syt_count(&b.second);
    if b.sign.is_some() {
        d / 2
    } else {
        d
    }
}

/// Two rows of beta-numbers of equal length.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Symbol {
    pub top: Vec<usize>,
    pub bottom: Vec<usize>,
}

impl Symbol {
    /// Symbol of the ordered pair `(top, bottom)`; both rows get
    /// `max(ℓ(top), ℓ(bottom))` entries, increasing.
    pub fn of_pair(top: &[usize], bottom: &[usize]) -> Symbol {
        let m = top.len().max(bottom.len()).max(1);
        let row = |p: &[usize]| -> Vec<usize> {
            (0..m).map(|i| p.get(m - 1 - i).copied().unwrap_or(0) + i).collect()
        };
        Symbol { top: row(top), bottom: row(bottom) }
    }

    pub fn to_pair(&self) -> (Partition, Partition) {
        let part = |row: &[usize]| -> Partition {
            let mut p: Partition = row.iter().enumerate().map(|(i, &x)| x - i).filter(|&x| x > 0).collect();
            p.reverse();
            p
        };
        (part(&self.top), part(&self.bottom))
    }

    fn pair_min_sum(&self) -> usize {
        let mut all: Vec<usize> = self.top.iter().chain(&self.bottom).copied().collect();
        all.sort_unstable();
        // Σ over unordered pairs of min = Σ_i x_i · (number of later entries)
        let k = all.len();
        all.iter().enumerate().map(|(i, &x)| x * (k - 1 - i)).sum()
    }

    pub fn a_value(&self) -> usize {
        let m = self.top.len();
        let zero = Symbol { top: (0..m).collect(), bottom: (0..m).collect() };
        self.pair_min_sum() - zero.pair_min_sum()
    }

    /// `bottom₁ ≤ top₁ ≤ bottom₂ ≤ top₂ ≤ …`.
    pub fn interleaves(&self) -> bool {
        let mut seq = Vec::with_capacity(2 * self.top.len());
        for (t, b) in self.top.iter().zip(&self.bottom) {
            seq.push(*b);
            seq.push(*t);
        }
        seq.windows(2).all(|w| w[0] <= w[1])
    }
}

pub fn a_value(b: &Bipartition) -> usize {
    Symbol::of_pair(&b.first, &b.second).a_value()
}

/// A representation is special iff one ordering of its symbol interleaves.
pub fn is_special_rep(b: &Bipartition) -> bool {
    Symbol::of_pair(&b.first, &b.second).interleaves() || Symbol::of_pair(&b.second, &b.first).interleaves()
}

/// The unordered 2-quotient; degenerate labels carry no sign.
pub fn shape_to_rep(s: &Shape) -> Result<Bipartition> {
    let (a, b) = two_quotient(s)?;
    Ok(Bipartition::new(a, b, None))
}

pub fn is_very_even(s: &Shape) -> Result<bool> {
    let (a, b) = two_quotient(s)?;
    Ok(a == b)
}

/// A shape is special when its representation is special.
pub fn is_special_shape(s: &Shape) -> Result<bool> {
    Ok(is_special_rep(&shape_to_rep(s)?))
}

/// A conjugacy class of `W(D_n)`: signed cycle type plus, for split
/// classes (all cycles positive and even), a sign.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClassLabel {
    pub positive: Partition,
    pub negative: Partition,
    pub split: Option<Sign>,
}

impl ClassLabel {
    pub fn rank(&self) -> usize {
        self.positive.iter().sum::<usize>() + self.negative.iter().sum::<usize>()
    }

    pub fn is_split_type(positive: &[usize], negative: &[usize]) -> bool {
        negative.is_empty() && positive.iter().all(|&k| k % 2 == 0)
    }

    /// Size of the class in `W(D_n)`.
    pub fn size(&self) -> u128 {
        let n = self.rank();
        let mut z: u128 = 1;
        for part in [&self.positive, &self.negative] {
            let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
            for &k in part.iter() {
                *counts.entry(k).or_default() += 1;
            }
            for (k, c) in counts {
                z *= (2 * k as u128).pow(c as u32) * factorial(c);
            }
        }
        let b = factorial(n) * (1u128 << n) / z;
        if self.split.is_some() {
            b / 2
        } else {
            b
        }
    }

    /// A representative: consecutive cycles, positive ones first; each
    /// negative cycle carries a single sign change on its last entry. The
    /// `−` split class is conjugate to the `+` one by a sign change.
    pub fn representative(&self) -> SignedElement {
        let n = self.rank();
        let mut e = vec![0i64; n];
        let mut start = 0;
        let cycles = self.positive.iter().map(|&k| (k, 1i64)).chain(self.negative.iter().map(|&k| (k, -1i64)));
        for (k, sign) in cycles {
            for i in 0..k {
                let src = start + i;
                let dst = start + (i + 1) % k;
                e[src] = (dst + 1) as i64 * if i + 1 == k { sign } else { 1 };
            }
            start += k;
        }
        let w = SignedElement::new_signed(&e).expect("valid cycle data");
        if self.split == Some(Sign::Minus) {
            // conjugate by the sign change of 1
            let mut t: Vec<i64> = (1..=n as i64).collect();
            t[0] = -1;
            let t = SignedElement::new_signed(&t).unwrap();
            t.multiply(&w).unwrap().multiply(&t).unwrap()
        } else {
            w
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = |x: &Partition| x.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        write!(f, "[{}|{}]", p(&self.positive), p(&self.negative))?;
        match self.split {
            Some(Sign::Plus) => write!(f, "+"),
            Some(Sign::Minus) => write!(f, "-"),
            None => Ok(()),
        }
    }
}

/// All classes of `W(D_n)`, sorted.
pub fn classes(n: usize) -> Vec<ClassLabel> {
    let mut out = Vec::new();
    for k in 0..=n {
        for pos in partitions(n - k) {
            for neg in partitions(k) {
                if neg.len() % 2 == 1 {
                    continue;
                }
                if ClassLabel::is_split_type(&pos, &neg) {
                    for s in [Sign::Plus, Sign::Minus] {
                        out.push(ClassLabel { positive: pos.clone(), negative: neg.clone(), split: Some(s) });
                    }
                } else {
                    out.push(ClassLabel { positive: pos.clone(), negative: neg.clone(), split: None });
                }
            }
        }
    }
    out.sort();
    out
}

/// The class of an element.
pub fn class_of(w: &SignedElement) -> ClassLabel {
    let (pos, neg) = w.signed_cycle_type();
    let split = ClassLabel::is_split_type(&pos, &neg).then(|| {
        // A conjugator g with g·rep·g⁻¹ = w, built cycle by cycle; the
        // centraliser of rep lies in D_n, so the parity of g decides.
        let n = w.rank();
        let orbit_len = |b: i8| {
            let mut len = 1;
            let mut x = w.apply(b).abs();
            while x != b {
                x = w.apply(x).abs();
                len += 1;
            }
            len
        };
        let mut g = Vec::with_capacity(n);
        let mut used = vec![false; n];
        for &k in &pos {
            let b1 = (1..=n as i8).find(|&b| !used[b as usize - 1] && orbit_len(b) == k).unwrap();
            let mut img = b1;
            for _ in 0..k {
                g.push(img);
                used[img.unsigned_abs() as usize - 1] = true;
                img = w.apply(img);
            }
        }
        if g.iter().filter(|&&x| x < 0).count() % 2 == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    });
    ClassLabel { positive: pos, negative: neg, split }
}

fn beta_set(p: &[usize], len: usize) -> Vec<usize> {
    (0..len).map(|i| p.get(i).copied().unwrap_or(0) + (len - 1 - i)).collect()
}

fn from_beta(beta: &[usize]) -> Partition {
    let mut b = beta.to_vec();
    b.sort_unstable_by(|x, y| y.cmp(x));
    let l = b.len();
    b.iter().enumerate().map(|(i, &x)| x - (l - 1 - i)).filter(|&x| x > 0).collect()
}

/// Partitions obtained by removing a rim hook of length `k`, with sign
/// `(−1)^{height}`.
fn remove_rim_hooks(p: &[usize], k: usize) -> Vec<(Partition, i64)> {
    let len = p.len() + k;
    let beta = beta_set(p, len);
    let mut out = Vec::new();
    for (idx, &x) in beta.iter().enumerate() {
        if x < k || beta.contains(&(x - k)) {
            continue;
        }
        let between = beta.iter().filter(|&&y| y > x - k && y < x).count();
        let mut nb = beta.clone();
        nb[idx] = x - k;
        out.push((from_beta(&nb), if between % 2 == 0 { 1 } else { -1 }));
    }
    out
}

/// `χ^λ` of the symmetric group at cycle type `rho`.
pub fn symmetric_character(lambda: &[usize], rho: &[usize]) -> i64 {
    fn go(lambda: &[usize], rho: &[usize], memo: &mut HashMap<(Partition, usize), i64>) -> i64 {
        if rho.is_empty() {
            return i64::from(lambda.is_empty());
        }
        let key = (lambda.to_vec(), rho.len());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let v = remove_rim_hooks(lambda, rho[0]).iter().map(|(mu, s)| s * go(mu, &rho[1..], memo)).sum();
        memo.insert(key, v);
        v
    }
    go(lambda, rho, &mut HashMap::new())
}

/// `χ^{(α,β)}` of `W(B_n)` at the signed cycle type `(positive, negative)`.
pub fn hyperoctahedral_character(alpha: &[usize], beta: &[usize], positive: &[usize], negative: &[usize]) -> i64 {
    let mut cycles: Vec<(usize, i64)> =
        positive.iter().map(|&k| (k, 1)).chain(negative.iter().map(|&k| (k, -1))).collect();
    cycles.sort_unstable_by(|x, y| y.cmp(x));
    type Memo = HashMap<(Partition, Partition, usize), i64>;
    fn go(a: &[usize], b: &[usize], cycles: &[(usize, i64)], memo: &mut Memo) -> i64 {
        let Some(&(k, eps)) = cycles.first() else {
            return i64::from(a.is_empty() && b.is_empty());
        };
        let key = (a.to_vec(), b.to_vec(), cycles.len());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let mut v = 0;
        for (mu, s) in remove_rim_hooks(a, k) {
            v += s * go(&mu, b, &cycles[1..], memo);
        }
        for (mu, s) in remove_rim_hooks(b, k) {
            v += eps * s * go(a, &mu, &cycles[1..], memo);
        }
        memo.insert(key, v);
        v
    }
    go(alpha, beta, &cycles, &mut HashMap::new())
}

/// Character value of an irreducible of `W(D_n)` on a class.
pub fn character_value(b: &Bipartition, c: &ClassLabel) -> i64 {
    let chi_b = hyperoctahedral_character(&b.first, &b.second, &c.positive, &c.negative);
    let Some(sign) = b.sign else {
        return chi_b;
    };
    let Some(class_sign) = c.split else {
        return chi_b / 2;
    };
    let half: Vec<usize> = c.positive.iter().map(|&k| k / 2).collect();
    let d = (1i64 << half.len()) * symmetric_character(&b.first, &half);
    (chi_b + sign.value() * class_sign.value() * d) / 2
}

/// Class function values indexed like [`classes`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterVector {
    pub values: BTreeMap<ClassLabel, i64>,
}

pub fn character(b: &Bipartition) -> CharacterVector {
    let values = classes(b.rank()).into_iter().map(|c| {
        let v = character_value(b, &c);
        (c, v)
    });
    CharacterVector { values: values.collect() }
}

/// The character table of `W(D_n)`.
#[derive(Debug, Clone, Serialize)]
pub struct CharacterTable {
    pub n: usize,
    pub classes: Vec<ClassLabel>,
    pub class_sizes: Vec<u128>,
    pub irreducibles: Vec<Bipartition>,
    /// `values[i][j]` = character `i` at class `j`.
    pub values: Vec<Vec<i64>>,
}

pub fn group_order(n: usize) -> u128 {
    factorial(n) << (n - 1)
}

impl CharacterTable {
    pub fn new(n: usize) -> Self {
        let classes = classes(n);
        let class_sizes = classes.iter().map(ClassLabel::size).collect();
        let irreducibles = irreducibles(n);
        let values = irreducibles.iter().map(|b| classes.iter().map(|c| character_value(b, c)).collect()).collect();
        CharacterTable { n, classes, class_sizes, irreducibles, values }
    }

    pub fn class_index(&self, c: &ClassLabel) -> Option<usize> {
        self.classes.binary_search(c).ok()
    }

    pub fn irrep_index(&self, b: &Bipartition) -> Option<usize> {
        self.irreducibles.binary_search(b).ok()
    }

    /// `|W| · ⟨f, g⟩` for class functions given as value rows.
    pub fn scaled_inner(&self, f: &[i64], g: &[i64]) -> i128 {
        f.iter()
            .zip(g)
            .zip(&self.class_sizes)
            .map(|((a, b), &s)| *a as i128 * *b as i128 * s as i128)
            .sum()
    }

    /// Multiplicities of the irreducibles in a class function, if integral.
    pub fn decompose(&self, f: &[i64]) -> Option<Vec<i64>> {
        let order = group_order(self.n) as i128;
        self.values
            .iter()
            .map(|chi| {
                let s = self.scaled_inner(chi, f);
                (s % order == 0).then_some((s / order) as i64)
            })
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "classes": self.classes.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "class_sizes": self.class_sizes.iter().map(|s| *s as u64).collect::<Vec<_>>(),
            "irreducibles": self.irreducibles.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "values": self.values,
        })
    }
}

fn check_embedding(k: usize, n: usize) -> Result<()> {
    if k >= n || k < 2 {
        return Err(Error::Invalid(format!("need 2 ≤ k < n, got k={k}, n={n}")));
    }
    Ok(())
}

/// Multiplicities of the irreducibles of `W(D_n)` in the induced character
/// of `b` from the coordinate parabolic `W(D_k)`.
pub fn parabolic_induction(k: usize, n: usize, b: &Bipartition) -> Result<BTreeMap<Bipartition, i64>> {
    check_embedding(k, n)?;
    if b.rank() != k {
        return Err(Error::RankMismatch(b.rank(), k));
    }
    let big = CharacterTable::new(n);
    // Fuse classes of W(D_k): pad with positive fixed points.
    let mut fused = vec![0i128; big.classes.len()];
    for c in classes(k) {
        let mut pos = c.positive.clone();
        pos.extend(std::iter::repeat_n(1, n - k));
        let target = ClassLabel { positive: pos, negative: c.negative.clone(), split: None };
        let j = big.class_index(&target).expect("padded class exists");
        fused[j] += c.size() as i128 * character_value(b, &c) as i128;
    }
    // Ind χ(c) = |G| / (|c| |H|) · Σ_{d ⊂ c} |d| χ(d)
    let g = group_order(n) as i128;
    let h = group_order(k) as i128;
    let induced: Vec<i64> = fused
        .iter()
        .zip(&big.class_sizes)
        .map(|(&s, &size)| {
            let num = g * s;
            let den = size as i128 * h;
            debug_assert_eq!(num % den, 0);
            (num / den) as i64
        })
        .collect();
    let mult = big.decompose(&induced).ok_or_else(|| Error::Invalid("non-integral induction".into()))?;
    Ok(big.irreducibles.iter().cloned().zip(mult).filter(|(_, m)| *m != 0).collect())
}

/// Multiplicities of the irreducibles of `W(D_n)` induced from the maximal
/// parabolic `W(D_k) × S_{n−k}` (last `n − k` coordinates permuted) with the
/// representation `b ⊠ χ^λ`.
pub fn parabolic_induction_with(k: usize, n: usize, b: &Bipartition, lambda: &[usize]) -> Result<BTreeMap<Bipartition, i64>> {
    check_embedding(k, n)?;
    if b.rank() != k {
        return Err(Error::RankMismatch(b.rank(), k));
    }
    let m = n - k;
    if lambda.iter().sum::<usize>() != m {
        return Err(Error::RankMismatch(lambda.iter().sum(), m));
    }
    let big = CharacterTable::new(n);
    let mut fused = vec![0i128; big.classes.len()];
    for c in classes(k) {
        let rep = c.representative();
        for rho in partitions(m) {
            let mut e: Vec<i64> = rep.entries().iter().map(|&x| x as i64).collect();
            let mut start = k;
            for &len in &rho {
                for i in 0..len {
                    e.push((start + (i + 1) % len + 1) as i64);
                }
                start += len;
            }
            let w = SignedElement::new_signed(&e).expect("valid block element");
            let j = big.class_index(&class_of(&w)).expect("class exists");
            let weight = c.size() as i128 * symmetric_class_size(&rho) as i128;
            fused[j] += weight * character_value(b, &c) as i128 * symmetric_character(lambda, &rho) as i128;
        }
    }
    let g = group_order(n) as i128;
    let h = group_order(k) as i128 * factorial(m) as i128;
    let induced: Vec<i64> = fused
        .iter()
        .zip(&big.class_sizes)
        .map(|(&s, &size)| ((g * s) / (size as i128 * h)) as i64)
        .collect();
    let mult = big.decompose(&induced).ok_or_else(|| Error::Invalid("non-integral induction".into()))?;
    Ok(big.irreducibles.iter().cloned().zip(mult).filter(|(_, m)| *m != 0).collect())
}

fn symmetric_class_size(rho: &[usize]) -> u128 {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &k in rho {
        *counts.entry(k).or_default() += 1;
    }
    let z: u128 = counts.iter().map(|(&k, &c)| (k as u128).pow(c as u32) * factorial(c)).product();
    factorial(rho.iter().sum()) / z
}

/// Constituents of the induced representation whose a-value equals `a(b)`.
pub fn truncated_induction(k: usize, n: usize, b: &Bipartition) -> Result<Vec<Bipartition>> {
    let a = a_value(b);
    let ind = parabolic_induction(k, n, b)?;
    Ok(ind.into_keys().filter(|c| a_value(c) == a).collect())
}

/// a-value of the irreducible `χ^λ` of a symmetric group: `Σ (i−1) λ_i`.
pub fn symmetric_a_value(lambda: &[usize]) -> usize {
    lambda.iter().enumerate().map(|(i, &p)| i * p).sum()
}

/// Truncated induction from `W(D_k) × S_{n−k}` with `b ⊠ χ^λ`: the
/// constituents of a-value `a(b) + a(λ)`.
pub fn truncated_induction_with(k: usize, n: usize, b: &Bipartition, lambda: &[usize]) -> Result<Vec<Bipartition>> {
    let a = a_value(b) + symmetric_a_value(lambda);
    let ind = parabolic_induction_with(k, n, b, lambda)?;
    Ok(ind.into_keys().filter(|c| a_value(c) == a).collect())
}

/// Checks `⟨χ_i, χ_j⟩ = δ_ij` over the full table.
pub fn rows_orthonormal(t: &CharacterTable) -> bool {
    let order = group_order(t.n) as i128;
    t.values.iter().enumerate().all(|(i, a)| {
        t.values.iter().enumerate().all(|(j, b)| t.scaled_inner(a, b) == if i == j { order } else { 0 })
    })
}

/// `Σ dim² = |W|`.
pub fn dimension_squares_sum(n: usize) -> bool {
    irreducibles(n).iter().map(|b| dimension(b).pow(2)).sum::<u128>() == group_order(n)
}

/// Second orthogonality at one pair of classes:
/// `Σ_χ χ(a) χ(b) = δ_ab |W| / |a|`.
pub fn columns_orthogonal(irreps: &[Bipartition], a: &ClassLabel, b: &ClassLabel) -> bool {
    let sum: i128 = irreps.iter().map(|x| character_value(x, a) as i128 * character_value(x, b) as i128).sum();
    let expected = if a == b { (group_order(a.rank()) / a.size()) as i128 } else { 0 };
    sum == expected
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl_d::{enumerate_group, enumerate_signed};

    fn bp(a: &[usize], b: &[usize]) -> Bipartition {
        Bipartition::new(a.to_vec(), b.to_vec(), None)
    }

    #[test]
    fn dimensions() {
        for n in [3, 4, 5] {
            let s: u128 = irreducibles(n).iter().map(|b| dimension(b).pow(2)).sum();
            assert_eq!(s, group_order(n));
        }
        assert_eq!(dimension(&Bipartition::trivial(4)), 1);
        assert_eq!(dimension(&bp(&[1], &[1, 1, 1])), 4);
    }

    #[test]
    fn class_sizes_sum() {
        for n in 2..=6 {
            let s: u128 = classes(n).iter().map(ClassLabel::size).sum();
            assert_eq!(s, group_order(n));
        }
    }

    #[test]
    fn class_of_matches_enumeration() {
        for n in 2..=5 {
            let mut counts: BTreeMap<ClassLabel, u128> = BTreeMap::new();
            for w in enumerate_group(n).unwrap() {
                *counts.entry(class_of(&w)).or_default() += 1;
            }
            for c in classes(n) {
                assert_eq!(counts.get(&c).copied().unwrap_or(0), c.size(), "{c}");
                assert_eq!(class_of(&c.representative()), c);
            }
        }
    }

    #[test]
    fn orthonormal_tables() {
        for n in 2..=5 {
            let t = CharacterTable::new(n);
            let order = group_order(n) as i128;
            for (i, a) in t.values.iter().enumerate() {
                for (j, b) in t.values.iter().enumerate() {
                    let ip = t.scaled_inner(a, b);
                    assert_eq!(ip, if i == j { order } else { 0 }, "n={n} {} {}", t.irreducibles[i], t.irreducibles[j]);
                }
            }
        }
    }

    #[test]
    fn table_checks() {
        for n in 2..=5 {
            let t = CharacterTable::new(n);
            assert!(rows_orthonormal(&t) && dimension_squares_sum(n));
            for a in &t.classes {
                for b in &t.classes {
                    assert!(columns_orthogonal(&t.irreducibles, a, b), "{a} {b}");
                }
            }
        }
    }

    #[test]
    fn identity_value_is_dimension() {
        for n in 2..=6 {
            let id = ClassLabel { positive: vec![1; n], negative: vec![], split: None };
            for b in irreducibles(n) {
                assert_eq!(character_value(&b, &id) as u128, dimension(&b));
            }
        }
    }

    #[test]
    fn hyperoctahedral_orthonormal_by_enumeration() {
        for n in 2..=4 {
            let elems: Vec<SignedElement> = enumerate_signed(n).collect();
            let types: Vec<(Partition, Partition)> = elems.iter().map(|w| w.signed_cycle_type()).collect();
            let mut labels = Vec::new();
            for k in 0..=n {
                for a in partitions(n - k) {
                    for b in partitions(k) {
                        labels.push((a.clone(), b));
                    }
                }
            }
            let vals: Vec<Vec<i64>> = labels
                .iter()
                .map(|(a, b)| types.iter().map(|(p, q)| hyperoctahedral_character(a, b, p, q)).collect())
                .collect();
            for i in 0..labels.len() {
                for j in 0..labels.len() {
                    let ip: i64 = vals[i].iter().zip(&vals[j]).map(|(x, y)| x * y).sum();
                    assert_eq!(ip, if i == j { elems.len() as i64 } else { 0 });
                }
            }
            // restriction to D_n for α ≠ β
            for (i, (a, b)) in labels.iter().enumerate() {
                if a == b {
                    continue;
                }
                let d = Bipartition::new(a.clone(), b.clone(), None);
                for (w, v) in elems.iter().zip(&vals[i]) {
                    if w.is_type_d() {
                        assert_eq!(character_value(&d, &class_of(w)), *v);
                    }
                }
            }
        }
    }

    #[test]
    fn symbols_and_a_values() {
        assert_eq!(a_value(&Bipartition::trivial(5)), 0);
        for n in 2..=6 {
            let sign = bp(&vec![1; n], &[]);
            assert_eq!(a_value(&sign), n * (n - 1));
        }
        let s = Symbol::of_pair(&[2, 1], &[1]);
        assert_eq!(s.to_pair(), (vec![2, 1], vec![1]));
    }

    #[test]
    fn two_shapes_per_rep() {
        for n in 2..=5 {
            let mut count: BTreeMap<Bipartition, usize> = BTreeMap::new();
            for s in Shape::tileable_of_total(2 * n) {
                *count.entry(shape_to_rep(&s).unwrap()).or_default() += 1;
            }
            for (b, c) in count {
                assert_eq!(c, if b.is_degenerate() { 1 } else { 2 }, "{b}");
            }
        }
        assert!(is_very_even(&Shape::new(vec![2, 2]).unwrap()).unwrap());
        assert_eq!(shape_to_rep(&Shape::new(vec![2, 2]).unwrap()).unwrap(), bp(&[1], &[1]));
        assert!(is_special_shape(&Shape::new(vec![8]).unwrap()).unwrap());
    }

    #[test]
    fn induction_basics() {
        for (k, n) in [(2, 3), (3, 4), (3, 5), (4, 5)] {
            for b in irreducibles(k) {
                let ind = parabolic_induction(k, n, &b).unwrap();
                let dim: u128 = ind.iter().map(|(c, m)| dimension(c) * *m as u128).sum();
                assert_eq!(dim, dimension(&b) * group_order(n) / group_order(k));
            }
            let triv = parabolic_induction(k, n, &Bipartition::trivial(k)).unwrap();
            assert_eq!(triv.get(&Bipartition::trivial(n)), Some(&1));
            assert_eq!(truncated_induction(k, n, &Bipartition::trivial(k)).unwrap(), vec![Bipartition::trivial(n)]);
        }
        assert!(parabolic_induction(5, 5, &Bipartition::trivial(5)).is_err());
    }

    #[test]
    fn induction_with_symmetric_factor() {
        for (k, n) in [(2, 4), (3, 5), (4, 6)] {
            let m = n - k;
            for lambda in partitions(m) {
                for b in irreducibles(k) {
                    let ind = parabolic_induction_with(k, n, &b, &lambda).unwrap();
                    let dim: u128 = ind.iter().map(|(c, x)| dimension(c) * *x as u128).sum();
                    let index = group_order(n) / (group_order(k) * factorial(m));
                    assert_eq!(dim, index * dimension(&b) * syt_count(&lambda));
                    assert!(ind.values().all(|&x| x > 0));
                }
            }
        }
        // a single extra coordinate is the coordinate parabolic
        for b in irreducibles(4) {
            assert_eq!(parabolic_induction_with(4, 5, &b, &[1]).unwrap(), parabolic_induction(4, 5, &b).unwrap());
        }
        assert_eq!(symmetric_a_value(&[1, 1, 1, 1]), 6);
        assert_eq!(symmetric_a_value(&[4]), 0);
    }

    #[test]
    fn frobenius_reciprocity_brute_force() {
        for (k, n) in [(2, 3), (3, 4), (4, 5)] {
            let big = CharacterTable::new(n);
            let small = CharacterTable::new(k);
            let sub: Vec<SignedElement> = enumerate_group(k).unwrap().collect();
            for b in &small.irreducibles {
                let ind = parabolic_induction(k, n, b).unwrap();
                for (pi_idx, pi) in big.irreducibles.iter().enumerate() {
                    // ⟨Res π, b⟩_H by summing over H
                    let mut s: i128 = 0;
                    for h in &sub {
                        let mut e: Vec<i64> = h.entries().iter().map(|&x| x as i64).collect();
                        e.extend((k + 1..=n).map(|x| x as i64));
                        let g = SignedElement::new(&e).unwrap();
                        let pv = big.values[pi_idx][big.class_index(&class_of(&g)).unwrap()];
                        s += pv as i128 * character_value(b, &class_of(h)) as i128;
                    }
                    let m = s / group_order(k) as i128;
                    assert_eq!(m as i64, ind.get(pi).copied().unwrap_or(0), "{b} -> {pi}");
                }
            }
        }
    }
}
