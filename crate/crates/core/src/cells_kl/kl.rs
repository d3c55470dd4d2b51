//! Kazhdan–Lusztig polynomials of `W(D_n)` by the standard recursion over
//! left descents.

use std::collections::HashMap;
use std::io::{Read, Write};

use crate::error::{Error, Result};
use crate::weyl_d::{enumerate_group, RootSet, SignedElement, SimpleRoot};

use super::poly::Poly;

/// Largest rank accepted by [`KLTable::compute`] without the long-run flag.
pub const KL_RANK_CAP: usize = 4;
/// Largest rank accepted with the long-run flag.
pub const KL_RANK_CAP_LONG: usize = 5;

const CACHE_MAGIC: &[u8; 8] = b"DKLTAB01";

/// All `P_{x,w}` of `W(D_n)`, elements indexed in length-then-lexicographic
/// order (index 0 is the identity).
#[derive(Debug, Clone)]
pub struct KLTable {
    n: usize,
    elements: Vec<SignedElement>,
    index: HashMap<SignedElement, u32>,
    lengths: Vec<u16>,
    left_desc: Vec<RootSet>,
    right_desc: Vec<RootSet>,
    inverse: Vec<u32>,
    /// `left_mul[s][w]` = index of `s·w`.
    left_mul: Vec<Vec<u32>>,
    /// `right_mul[s][w]` = index of `w·s`.
    right_mul: Vec<Vec<u32>>,
    pool: Vec<Poly>,
    /// `p[w][x]` = pool id of `P_{x,w}`; id 0 is the zero polynomial.
    p: Vec<Vec<u32>>,
    /// `mu[w]` = `(x, μ(x,w))` for `x < w` with `μ ≠ 0`.
    mu: Vec<Vec<(u32, i64)>>,
}

impl KLTable {
    /// Computes the table; ranks above [`KL_RANK_CAP`] need `allow_long`.
    pub fn compute(n: usize, allow_long: bool) -> Result<Self> {
        let cap = if allow_long { KL_RANK_CAP_LONG } else { KL_RANK_CAP };
        if !(2..=cap).contains(&n) {
            return Err(Error::RankOutOfRange { rank: n, max: cap });
        }
        let mut t = Self::skeleton(n)?;
        t.fill();
        Ok(t)
    }

    fn skeleton(n: usize) -> Result<Self> {
        let mut elements: Vec<SignedElement> = enumerate_group(n)?.collect();
        elements.sort_by_cached_key(|w| (w.length(), w.clone()));
        let index: HashMap<SignedElement, u32> =
            elements.iter().enumerate().map(|(i, w)| (w.clone(), i as u32)).collect();
        let roots = SimpleRoot::all(n);
        let lengths = elements.iter().map(|w| w.length() as u16).collect();
        let left_desc = elements.iter().map(SignedElement::left_descents).collect();
        let right_desc = elements.iter().map(SignedElement::right_descents).collect();
        let inverse = elements.iter().map(|w| index[&w.inverse()]).collect();
        let left_mul = roots
            .iter()
            .map(|&r| elements.iter().map(|w| index[&w.left_mul(r)]).collect())
            .collect();
        let right_mul = roots
            .iter()
            .map(|&r| elements.iter().map(|w| index[&w.right_mul(r)]).collect())
            .collect();
        Ok(KLTable {
            n,
            elements,
            index,
            lengths,
            left_desc,
            right_desc,
            inverse,
            left_mul,
            right_mul,
            pool: vec![Poly::zero(), Poly::one()],
            p: Vec::new(),
            mu: Vec::new(),
        })
    }

    fn fill(&mut self) {
        let size = self.elements.len();
        let mut intern: HashMap<Poly, u32> = HashMap::new();
        intern.insert(Poly::zero(), 0);
        intern.insert(Poly::one(), 1);
        let mut p: Vec<Vec<u32>> = Vec::with_capacity(size);
        let mut mu: Vec<Vec<(u32, i64)>> = Vec::with_capacity(size);
        // identity
        let mut row0 = vec![0u32; size];
        row0[0] = 1;
        p.push(row0);
        mu.push(Vec::new());
        for w in 1..size {
            let s = self.left_desc[w].iter().next().expect("non-identity has a descent");
            let si = s.index();
            let v = self.left_mul[si][w] as usize;
            let lw = self.lengths[w] as usize;
            let zs: Vec<(usize, i64)> = mu[v]
                .iter()
                .filter(|&&(z, _)| self.left_desc[z as usize].contains(s))
                .map(|&(z, m)| (z as usize, m))
                .collect();
            let mut row = vec![0u32; size];
            for x in 0..size {
                if self.lengths[x] as usize > lw {
                    break;
                }
                let sx = self.left_mul[si][x] as usize;
                let c = self.left_desc[x].contains(s);
                let mut acc = Poly::zero();
                let a = &self.pool_get(&p, v, sx);
                let b = &self.pool_get(&p, v, x);
                if c {
                    acc.add_scaled(a, 1, 0);
                    acc.add_scaled(b, 1, 1);
                } else {
                    acc.add_scaled(a, 1, 1);
                    acc.add_scaled(b, 1, 0);
                }
                for &(z, m) in &zs {
                    let pz = self.pool_get(&p, z, x);
                    if !pz.is_zero() {
                        let shift = (lw - self.lengths[z] as usize) / 2;
                        acc.add_scaled(&pz, -m, shift);
                    }
                }
                if acc.is_zero() {
                    continue;
                }
                let id = match intern.get(&acc) {
                    Some(&id) => id,
                    None => {
                        let id = self.pool.len() as u32;
                        self.pool.push(acc.clone());
                        intern.insert(acc, id);
                        id
                    }
                };
                row[x] = id;
            }
            let mut m = Vec::new();
            for (x, &id) in row.iter().enumerate() {
                if id == 0 || x == w {
                    continue;
                }
                let d = lw - self.lengths[x] as usize;
                if d % 2 == 1 {
                    let c = self.pool[id as usize].coeff((d - 1) / 2);
                    if c != 0 {
                        m.push((x as u32, c));
                    }
                }
            }
            p.push(row);
            mu.push(m);
        }
        self.p = p;
        self.mu = mu;
    }

    fn pool_get(&self, p: &[Vec<u32>], w: usize, x: usize) -> Poly {
        self.pool[p[w][x] as usize].clone()
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[SignedElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &SignedElement {
        &self.elements[i]
    }

    pub fn index_of(&self, w: &SignedElement) -> Option<usize> {
        self.index.get(w).map(|&i| i as usize)
    }

    pub fn length(&self, i: usize) -> usize {
        self.lengths[i] as usize
    }

    pub fn left_descents(&self, i: usize) -> RootSet {
        self.left_desc[i]
    }

    pub fn right_descents(&self, i: usize) -> RootSet {
        self.right_desc[i]
    }

    pub fn inverse_index(&self, i: usize) -> usize {
        self.inverse[i] as usize
    }

    pub fn left_mul_index(&self, s: SimpleRoot, i: usize) -> usize {
        self.left_mul[s.index()][i] as usize
    }

    pub fn right_mul_index(&self, s: SimpleRoot, i: usize) -> usize {
        self.right_mul[s.index()][i] as usize
    }

    /// `P_{x,w}` by element index.
    pub fn p(&self, x: usize, w: usize) -> &Poly {
        &self.pool[self.p[w][x] as usize]
    }

    /// Bruhat order `x ≤ w`.
    pub fn bruhat_le(&self, x: usize, w: usize) -> bool {
        self.p[w][x] != 0
    }

    /// `μ(x,w)` for `x < w`, 0 otherwise.
    pub fn mu(&self, x: usize, w: usize) -> i64 {
        self.mu[w].iter().find(|&&(z, _)| z as usize == x).map_or(0, |&(_, m)| m)
    }

    /// Symmetrised `μ̃(x,y)`.
    pub fn mu_sym(&self, x: usize, y: usize) -> i64 {
        if self.lengths[x] < self.lengths[y] {
            self.mu(x, y)
        } else {
            self.mu(y, x)
        }
    }

    /// Pairs `(x, μ(x,w))` with `x < w` and `μ ≠ 0`.
    pub fn mu_list(&self, w: usize) -> &[(u32, i64)] {
        &self.mu[w]
    }

    /// Writes the table in a versioned little-endian binary format.
    pub fn save(&self, out: &mut impl Write) -> std::io::Result<()> {
        out.write_all(CACHE_MAGIC)?;
        out.write_all(&(self.n as u32).to_le_bytes())?;
        out.write_all(&(self.pool.len() as u32).to_le_bytes())?;
        for poly in &self.pool {
            out.write_all(&(poly.0.len() as u32).to_le_bytes())?;
            for &c in &poly.0 {
                out.write_all(&c.to_le_bytes())?;
            }
        }
        for row in &self.p {
            let nz: Vec<(u32, u32)> =
                row.iter().enumerate().filter(|(_, &id)| id != 0).map(|(x, &id)| (x as u32, id)).collect();
            out.write_all(&(nz.len() as u32).to_le_bytes())?;
            for (x, id) in nz {
                out.write_all(&x.to_le_bytes())?;
                out.write_all(&id.to_le_bytes())?;
            }
        }
        Ok(())
    }

    /// Reads a table written by [`KLTable::save`].
    pub fn load(input: &mut impl Read) -> Result<Self> {
        let io = |e: std::io::Error| Error::Invalid(format!("cache read: {e}"));
        let mut magic = [0u8; 8];
        input.read_exact(&mut magic).map_err(io)?;
        if &magic != CACHE_MAGIC {
            return Err(Error::Invalid("cache: bad magic or version".into()));
        }
        let mut u32buf = [0u8; 4];
        let mut read_u32 = |input: &mut dyn Read| -> Result<u32> {
            input.read_exact(&mut u32buf).map_err(io)?;
            Ok(u32::from_le_bytes(u32buf))
        };
        let n = read_u32(input)? as usize;
        let mut t = Self::skeleton(n)?;
        let pools = read_u32(input)? as usize;
        let mut pool = Vec::with_capacity(pools);
        for _ in 0..pools {
            let len = read_u32(input)? as usize;
            let mut c = Vec::with_capacity(len);
            for _ in 0..len {
                let mut b = [0u8; 8];
                input.read_exact(&mut b).map_err(io)?;
                c.push(i64::from_le_bytes(b));
            }
            pool.push(Poly(c));
        }
        let size = t.elements.len();
        let mut p = Vec::with_capacity(size);
        let mut mu = Vec::with_capacity(size);
        for w in 0..size {
            let mut row = vec![0u32; size];
            let cnt = read_u32(input)? as usize;
            for _ in 0..cnt {
                let x = read_u32(input)? as usize;
                let id = read_u32(input)?;
                if x >= size || id as usize >= pool.len() {
                    return Err(Error::Invalid("cache: index out of range".into()));
                }
                row[x] = id;
            }
            let lw = t.lengths[w] as usize;
            let m = row
                .iter()
                .enumerate()
                .filter(|&(x, &id)| id != 0 && x != w && (lw - t.lengths[x] as usize) % 2 == 1)
                .filter_map(|(x, &id)| {
                    let d = lw - t.lengths[x] as usize;
                    let c = pool[id as usize].coeff((d - 1) / 2);
                    (c != 0).then_some((x as u32, c))
                })
                .collect();
            p.push(row);
            mu.push(m);
        }
        t.pool = pool;
        t.p = p;
        t.mu = mu;
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: KL polynomials from the R-polynomial formula
    /// `q^{ℓ(w)−ℓ(x)} \bar P_{x,w} − P_{x,w} = Σ_{x<y≤w} R_{x,y} P_{y,w}`
    /// solved degree-bounded, with `R` from its own recursion.
    fn r_polys(t: &KLTable) -> Vec<Vec<Poly>> {
        let size = t.len();
        let mut r = vec![vec![Poly::zero(); size]; size];
        for w in 0..size {
            for x in 0..size {
                if w == 0 {
                    r[x][w] = if x == 0 { Poly::one() } else { Poly::zero() };
                    continue;
                }
                let s = t.right_descents(w).iter().next().unwrap();
                let ws = t.right_mul_index(s, w);
                let xs = t.right_mul_index(s, x);
                let v = if t.right_descents(x).contains(s) {
                    r[xs][ws].clone()
                } else {
                    // (q−1) R_{x,ws} + q R_{xs,ws}
                    let mut acc = Poly::zero();
                    acc.add_scaled(&r[x][ws], 1, 1);
                    acc.add_scaled(&r[x][ws], -1, 0);
                    acc.add_scaled(&r[xs][ws], 1, 1);
                    acc
                };
                r[x][w] = v;
            }
        }
        r
    }

    fn oracle_check(n: usize) {
        let t = KLTable::compute(n, false).unwrap();
        let r = r_polys(&t);
        for w in 0..t.len() {
            for x in 0..t.len() {
                let lx = t.length(x);
                let lw = t.length(w);
                if x == w || lx >= lw {
                    continue;
                }
                // q^{lw−lx} P(q^{-1}) − P(q) = Σ_{x<y≤w} R_{x,y} P_{y,w}
                let pxw = t.p(x, w);
                let d = lw - lx;
                let mut lhs = Poly::zero();
                for (i, &c) in pxw.0.iter().enumerate() {
                    lhs.add_scaled(&Poly::one(), c, d - i);
                }
                lhs.add_scaled(pxw, -1, 0);
                let mut rhs = Poly::zero();
                for y in 0..t.len() {
                    if y == x || r[x][y].is_zero() {
                        continue;
                    }
                    let pyw = t.p(y, w);
                    for (i, &c) in r[x][y].0.iter().enumerate() {
                        rhs.add_scaled(pyw, c, i);
                    }
                }
                assert_eq!(lhs, rhs, "x={} w={}", t.element(x), t.element(w));
                if !pxw.is_zero() {
                    assert_eq!(pxw.coeff(0), 1);
                    assert!(2 * pxw.degree().unwrap() < d);
                    assert!(pxw.0.iter().all(|&c| c >= 0));
                }
            }
        }
    }

    #[test]
    fn d2_all_one() {
        let t = KLTable::compute(2, false).unwrap();
        for w in 0..4 {
            for x in 0..4 {
                if t.bruhat_le(x, w) {
                    assert_eq!(t.p(x, w), &Poly::one());
                }
            }
        }
    }

    #[test]
    fn d3_example() {
        let t = KLTable::compute(3, false).unwrap();
        let s = |r| SignedElement::simple_reflection(r, 3).unwrap();
        let x = s(SimpleRoot::Alpha(3));
        let w = s(SimpleRoot::Alpha(3))
            .multiply(&s(SimpleRoot::Alpha1))
            .unwrap()
            .multiply(&s(SimpleRoot::Alpha1Prime))
            .unwrap()
            .multiply(&s(SimpleRoot::Alpha(3)))
            .unwrap();
        let (xi, wi) = (t.index_of(&x).unwrap(), t.index_of(&w).unwrap());
        assert_eq!(t.p(xi, wi), &Poly(vec![1, 1]));
        assert_eq!(t.mu(xi, wi), 1);
        // Under D_3 ≅ A_3 (α₁ ↦ s1, α₃ ↦ s2, α₁' ↦ s3) this is the
        // classical P_{s2, s2 s1 s3 s2} = 1 + q in S_4.
        assert_eq!(t.length(wi), 4);
    }

    #[test]
    fn matches_r_polynomial_oracle() {
        oracle_check(3);
        oracle_check(4);
    }

    #[test]
    fn cache_roundtrip() {
        let t = KLTable::compute(3, false).unwrap();
        let mut buf = Vec::new();
        t.save(&mut buf).unwrap();
        let u = KLTable::load(&mut buf.as_slice()).unwrap();
        for w in 0..t.len() {
            for x in 0..t.len() {
                assert_eq!(t.p(x, w), u.p(x, w));
            }
            assert_eq!(t.mu_list(w), u.mu_list(w));
        }
        assert!(KLTable::load(&mut &b"garbage!"[..]).is_err());
    }

    #[test]
    fn rank_caps() {
        assert!(KLTable::compute(5, false).is_err());
        assert!(KLTable::compute(6, true).is_err());
        assert!(KLTable::compute(1, false).is_err());
    }
}
