//! Integer polynomials in `q` (and Laurent polynomials in `q^{1/2}`).

use std::collections::BTreeMap;
use std::fmt;

/// A polynomial in `q` with integer coefficients, lowest degree first and
/// no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Poly(pub Vec<i64>);

impl Poly {
    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn one() -> Self {
        Poly(vec![1])
    }

    pub fn from_coeffs(mut c: Vec<i64>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        Poly(c)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeff(&self, d: usize) -> i64 {
        self.0.get(d).copied().unwrap_or(0)
    }

    /// `self += k·q^shift·other`.
    pub fn add_scaled(&mut self, other: &Poly, k: i64, shift: usize) {
        if other.is_zero() || k == 0 {
            return;
        }
        if self.0.len() < other.0.len() + shift {
            self.0.resize(other.0.len() + shift, 0);
        }
        for (i, &c) in other.0.iter().enumerate() {
            self.0[i + shift] += k * c;
        }
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }

    pub fn eval(&self, q: i64) -> i64 {
        self.0.iter().rev().fold(0, |acc, &c| acc * q + c)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match d {
                0 => write!(f, "{c}")?,
                1 if c == 1 => write!(f, "q")?,
                1 => write!(f, "{c}q")?,
                _ if c == 1 => write!(f, "q^{d}")?,
                _ => write!(f, "{c}q^{d}")?,
            }
        }
        Ok(())
    }
}

/// A Laurent polynomial: exponent → nonzero integer coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPolynomial {
    coefficients: BTreeMap<i32, i64>,
}

impl LaurentPolynomial {
    pub fn monomial(exp: i32, c: i64) -> Self {
        let mut p = Self::default();
        p.add_term(exp, c);
        p
    }

    pub fn add_term(&mut self, exp: i32, c: i64) {
        let e = self.coefficients.entry(exp).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coefficients.remove(&exp);
        }
    }

    pub fn coefficients(&self) -> &BTreeMap<i32, i64> {
        &self.coefficients
    }

    /// `q^{1/2}`-graded view of a KL polynomial: `P(q) ↦ Σ c_d v^{2d}`.
    pub fn from_poly_in_q(p: &Poly) -> Self {
        let mut out = Self::default();
        for (d, &c) in p.0.iter().enumerate() {
            out.add_term(2 * d as i32, c);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let mut p = Poly::one();
        p.add_scaled(&Poly::one(), 1, 1);
        assert_eq!(p, Poly(vec![1, 1]));
        assert_eq!(p.to_string(), "1 + q");
        p.add_scaled(&Poly(vec![1, 1]), -1, 0);
        assert!(p.is_zero());
        assert_eq!(Poly(vec![1, 2, 1]).eval(1), 4);
        let l = LaurentPolynomial::from_poly_in_q(&Poly(vec![1, 0, 3]));
        assert_eq!(l.coefficients().get(&4), Some(&3));
        assert_eq!(l.coefficients().len(), 2);
        assert_eq!(LaurentPolynomial::monomial(-1, 0).coefficients().len(), 0);
    }
}
