//! The Weyl group `W(D_n)` as even-signed permutations in one-line notation.
//!
//! Simple roots are indexed `1, 1', 3, 4, ..., n` with `α₁ = e₂ − e₁`,
//! `α₁' = e₂ + e₁` and `α_i = e_i − e_{i−1}` for `i ≥ 3`. There is no root
//! with index 2; `α₁` and `α₁'` are the two leaves of the fork at `α₃`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest rank for which [`enumerate_group`] will stream the whole group.
pub const ENUMERATION_CAP: usize = 8;

/// A simple root of `D_n`.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SimpleRoot {
    /// `α₁ = e₂ − e₁`.
    Alpha1,
    /// `α₁' = e₂ + e₁`.
    Alpha1Prime,
    /// `α_i = e_i − e_{i−1}`, `i ≥ 3`.
    Alpha(u8),
}

impl SimpleRoot {
    /// All simple roots of `D_n`, in the order `1, 1', 3, ..., n`.
    pub fn all(n: usize) -> Vec<SimpleRoot> {
        let mut v = vec![SimpleRoot::Alpha1, SimpleRoot::Alpha1Prime];
        v.extend((3..=n).map(|i| SimpleRoot::Alpha(i as u8)));
        v
    }

    /// Whether the root exists in rank `n`.
    pub fn valid_for(self, n: usize) -> bool {
        match self {
            SimpleRoot::Alpha1 | SimpleRoot::Alpha1Prime => n >= 2,
            SimpleRoot::Alpha(i) => i >= 3 && (i as usize) <= n,
        }
    }

    /// Whether two simple roots are joined in the Dynkin diagram.
    pub fn adjacent(self, other: SimpleRoot) -> bool {
        use SimpleRoot::*;
        match (self, other) {
            (Alpha1, Alpha(3)) | (Alpha(3), Alpha1) => true,
            (Alpha1Prime, Alpha(3)) | (Alpha(3), Alpha1Prime) => true,
            (Alpha(i), Alpha(j)) => i.abs_diff(j) == 1,
            _ => false,
        }
    }

    /// Ordered pairs of adjacent roots in rank `n`.
    pub fn adjacent_pairs(n: usize) -> Vec<(SimpleRoot, SimpleRoot)> {
        let roots = Self::all(n);
        let mut out = Vec::new();
        for &a in &roots {
            for &b in &roots {
                if a.adjacent(b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Position of the root in [`SimpleRoot::all`].
    pub fn index(self) -> usize {
        match self {
            SimpleRoot::Alpha1 => 0,
            SimpleRoot::Alpha1Prime => 1,
            SimpleRoot::Alpha(i) => i as usize - 1,
        }
    }

    pub fn from_index(i: usize) -> SimpleRoot {
        match i {
            0 => SimpleRoot::Alpha1,
            1 => SimpleRoot::Alpha1Prime,
            _ => SimpleRoot::Alpha(i as u8 + 1),
        }
    }
}

impl fmt::Display for SimpleRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimpleRoot::Alpha1 => write!(f, "1"),
            SimpleRoot::Alpha1Prime => write!(f, "1'"),
            SimpleRoot::Alpha(i) => write!(f, "{i}"),
        }
    }
}

impl FromStr for SimpleRoot {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "1" => Ok(SimpleRoot::Alpha1),
            "1'" => Ok(SimpleRoot::Alpha1Prime),
            t => match t.parse::<u8>() {
                Ok(i) if i >= 3 => Ok(SimpleRoot::Alpha(i)),
                _ => Err(Error::Parse(format!("not a simple root id: {s:?}"))),
            },
        }
    }
}

impl Serialize for SimpleRoot {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SimpleRoot {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Bitmask of simple roots, bit `SimpleRoot::index`.
#[derive(Debug, Copy, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSet(pub u32);

impl RootSet {
    pub fn contains(self, r: SimpleRoot) -> bool {
        self.0 >> r.index() & 1 == 1
    }

    pub fn insert(&mut self, r: SimpleRoot) {
        self.0 |= 1 << r.index();
    }

    pub fn is_subset(self, other: RootSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = SimpleRoot> {
        (0..32).filter(move |i| self.0 >> i & 1 == 1).map(SimpleRoot::from_index)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }
}

/// An element of `W(D_n)` in one-line notation `w(1), ..., w(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedElement {
    entries: Vec<i8>,
}

impl Serialize for SignedElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SignedElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<i64>::deserialize(d)?;
        SignedElement::new(&v).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for SignedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

impl SignedElement {
    /// Validates a one-line signed permutation with an even number of
    /// negative entries.
    pub fn new(entries: &[i64]) -> Result<Self> {
        let w = Self::new_signed(entries)?;
        if w.negatives() % 2 != 0 {
            return Err(Error::OddSignCount(w.to_string()));
        }
        Ok(w)
    }

    /// Validates a signed permutation without the type D parity condition.
    /// Used internally for `B_n` elements.
    pub fn new_signed(entries: &[i64]) -> Result<Self> {
        let n = entries.len();
        if n == 0 || n > i8::MAX as usize {
            return Err(Error::MalformedPermutation(format!("{entries:?}")));
        }
        let mut seen = vec![false; n];
        for &e in entries {
            let a = e.unsigned_abs() as usize;
            if e == 0 || a > n || seen[a - 1] {
                return Err(Error::MalformedPermutation(format!("{entries:?}")));
            }
            seen[a - 1] = true;
        }
        Ok(SignedElement { entries: entries.iter().map(|&e| e as i8).collect() })
    }

    pub(crate) fn from_raw(entries: Vec<i8>) -> Self {
        SignedElement { entries }
    }

    pub fn identity(n: usize) -> Self {
        SignedElement { entries: (1..=n as i8).collect() }
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[i8] {
        &self.entries
    }

    /// `w(i)` for `i` in `1..=n`, extended by `w(−i) = −w(i)`.
    pub fn apply(&self, i: i8) -> i8 {
        let v = self.entries[i.unsigned_abs() as usize - 1];
        if i < 0 {
            -v
        } else {
            v
        }
    }

    pub fn negatives(&self) -> usize {
        self.entries.iter().filter(|&&e| e < 0).count()
    }

    pub fn is_type_d(&self) -> bool {
        self.negatives().is_multiple_of(2)
    }

    /// The simple reflection for `root` in rank `n`.
    pub fn simple_reflection(root: SimpleRoot, n: usize) -> Result<Self> {
        if !root.valid_for(n) {
            return Err(Error::InvalidRoot(root.to_string(), n));
        }
        let mut e = Self::identity(n).entries;
        match root {
            SimpleRoot::Alpha1 => e.swap(0, 1),
            SimpleRoot::Alpha1Prime => {
                e[0] = -2;
                e[1] = -1;
            }
            SimpleRoot::Alpha(i) => e.swap(i as usize - 2, i as usize - 1),
        }
        Ok(SignedElement { entries: e })
    }

    /// Group composition `(self ∘ other)(i) = self(other(i))`.
    pub fn multiply(&self, other: &SignedElement) -> Result<Self> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch(self.rank(), other.rank()));
        }
        Ok(SignedElement { entries: other.entries.iter().map(|&b| self.apply(b)).collect() })
    }

    pub fn inverse(&self) -> Self {
        let mut e = vec![0i8; self.rank()];
        for (i, &v) in self.entries.iter().enumerate() {
            let pos = v.unsigned_abs() as usize - 1;
            e[pos] = if v < 0 { -(i as i8 + 1) } else { i as i8 + 1 };
        }
        SignedElement { entries: e }
    }

    /// `w · s_root` (acts on positions).
    pub fn right_mul(&self, root: SimpleRoot) -> Self {
        let mut e = self.entries.clone();
        match root {
            SimpleRoot::Alpha1 => e.swap(0, 1),
            SimpleRoot::Alpha1Prime => {
                let (a, b) = (e[0], e[1]);
                e[0] = -b;
                e[1] = -a;
            }
            SimpleRoot::Alpha(i) => e.swap(i as usize - 2, i as usize - 1),
        }
        SignedElement { entries: e }
    }

    /// `s_root · w` (acts on values).
    pub fn left_mul(&self, root: SimpleRoot) -> Self {
        let e = self
            .entries
            .iter()
            .map(|&v| {
                let a = v.abs();
                let s = v.signum();
                let img = match root {
                    SimpleRoot::Alpha1 => match a {
                        1 => 2,
                        2 => 1,
                        _ => a,
                    },
                    SimpleRoot::Alpha1Prime => match a {
                        1 => -2,
                        2 => -1,
                        _ => a,
                    },
                    SimpleRoot::Alpha(i) => {
                        let i = i as i8;
                        if a == i {
                            i - 1
                        } else if a == i - 1 {
                            i
                        } else {
                            a
                        }
                    }
                };
                s * img
            })
            .collect();
        SignedElement { entries: e }
    }

    /// Coxeter length: `#{i<j : w(i)>w(j)} + #{i<j : w(i)+w(j)<0}`.
    pub fn length(&self) -> usize {
        let e = &self.entries;
        let mut l = 0;
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                if e[i] > e[j] {
                    l += 1;
                }
                if e[i] + e[j] < 0 {
                    l += 1;
                }
            }
        }
        l
    }

    /// Simple roots sent to negative roots by `w`.
    pub fn right_descents(&self) -> RootSet {
        let e = &self.entries;
        let mut s = RootSet::default();
        if e.len() >= 2 {
            if e[0] > e[1] {
                s.insert(SimpleRoot::Alpha1);
            }
            if e[0] + e[1] < 0 {
                s.insert(SimpleRoot::Alpha1Prime);
            }
        }
        for i in 3..=e.len() {
            if e[i - 2] > e[i - 1] {
                s.insert(SimpleRoot::Alpha(i as u8));
            }
        }
        s
    }

    pub fn left_descents(&self) -> RootSet {
        self.inverse().right_descents()
    }

    /// Length together with left and right descent sets.
    pub fn length_and_descents(&self) -> (usize, RootSet, RootSet) {
        (self.length(), self.left_descents(), self.right_descents())
    }

    pub fn is_involution(&self) -> bool {
        self.inverse() == *self
    }

    /// Signed cycle type: lengths of the positive and the negative cycles,
    /// each sorted decreasingly.
    pub fn signed_cycle_type(&self) -> (Vec<usize>, Vec<usize>) {
        let n = self.rank();
        let mut seen = vec![false; n];
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut len = 0;
            let mut sign = 1i8;
            let mut cur = start as i8;
            loop {
                seen[cur as usize - 1] = true;
                let img = self.apply(cur);
                len += 1;
                sign *= img.signum();
                cur = img.abs();
                if cur as usize == start {
                    break;
                }
            }
            if sign > 0 {
                pos.push(len);
            } else {
                neg.push(len);
            }
        }
        pos.sort_unstable_by(|a, b| b.cmp(a));
        neg.sort_unstable_by(|a, b| b.cmp(a));
        (pos, neg)
    }

    /// The longest element of `D_n`.
    pub fn longest(n: usize) -> Self {
        let mut e: Vec<i8> = (1..=n as i8).map(|i| -i).collect();
        if n % 2 == 1 {
            e[0] = 1;
        }
        SignedElement { entries: e }
    }
}

/// All of `W(D_n)`, ordered lexicographically by absolute-value
/// permutation and then by sign pattern.
pub fn enumerate_group(n: usize) -> Result<impl Iterator<Item = SignedElement>> {
    if !(2..=ENUMERATION_CAP).contains(&n) {
        return Err(Error::RankOutOfRange { rank: n, max: ENUMERATION_CAP });
    }
    Ok(enumerate_signed(n).filter(|w| w.is_type_d()))
}

/// All of `W(B_n)` (every signed permutation).
pub fn enumerate_signed(n: usize) -> impl Iterator<Item = SignedElement> {
    permutations(n).flat_map(move |p| {
        (0u32..1 << n).map(move |mask| {
            let e = p
                .iter()
                .enumerate()
                .map(|(i, &v)| if mask >> i & 1 == 1 { -v } else { v })
                .collect();
            SignedElement { entries: e }
        })
    })
}

fn permutations(n: usize) -> impl Iterator<Item = Vec<i8>> {
    // Heap-free lexicographic successor.
    let mut cur: Option<Vec<i8>> = Some((1..=n as i8).collect());
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let mut p = out.clone();
        let next = match (0..p.len().saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) {
            Some(i) => {
                let j = (i + 1..p.len()).rev().find(|&j| p[j] > p[i]).unwrap();
                p.swap(i, j);
                p[i + 1..].reverse();
                Some(p)
            }
            None => None,
        };
        cur = next;
        Some(out)
    })
}

/// `|W(D_n)| = 2^{n−1} n!`.
pub fn group_order(n: usize) -> u128 {
    (1..=n as u128).product::<u128>() << (n - 1)
}
