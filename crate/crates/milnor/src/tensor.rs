//! The commutative coefficient ring, restricted to level-graded multilinear
//! polynomials.
//!
//! A tensor with `start_level` s and `degree` d stores the integer coefficient
//! map of `Σ_w coeff(w) · λ_s^{(w_1)} λ_{s+1}^{(w_2)} ⋯ λ_{s+d-1}^{(w_d)}`:
//! exactly one indeterminate per consecutive level, which is the shape of
//! every entry of the unipotent matrices. Central elements are the
//! `start_level = 1` case.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::word::{index_word, IndexWord};

/// Level-graded multilinear integer polynomial; see module docs.
///
/// Invariants: all keys have length `degree`, no zero coefficient is stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntervalTensor {
    start_level: u32,
    degree: u32,
    coeff: BTreeMap<IndexWord, BigInt>,
}

/// A tensor at `start_level` 1; houses the centers `Q_{d+1}` and everything
/// derived from them (defects, invariant values, lattice generators).
pub type CentralTensor = IntervalTensor;

impl IntervalTensor {
    pub fn zero(start_level: u32, degree: u32) -> Self {
        assert!(start_level >= 1, "levels start at 1");
        IntervalTensor { start_level, degree, coeff: BTreeMap::new() }
    }

    /// The degree-0 unit `1` at the given level.
    pub fn unit(start_level: u32) -> Self {
        let mut t = IntervalTensor::zero(start_level, 0);
        t.coeff.insert(IndexWord::new(), BigInt::one());
        t
    }

    /// The degree-1 monomial `λ_level^{(j)}`.
    pub fn generator(level: u32, j: u8) -> Self {
        assert!(j >= 1, "generator indices start at 1");
        let mut t = IntervalTensor::zero(level, 1);
        t.coeff.insert(index_word(&[j]), BigInt::one());
        t
    }

    pub fn from_terms<I>(start_level: u32, degree: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (IndexWord, BigInt)>,
    {
        let mut t = IntervalTensor::zero(start_level, degree);
        for (word, c) in terms {
            t.add_term(&word, &c);
        }
        t
    }

    pub fn start_level(&self) -> u32 {
        self.start_level
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.coeff.len()
    }

    /// Coefficient at a word (zero when absent).
    pub fn coefficient(&self, word: &[u8]) -> BigInt {
        self.coeff.get(&index_word(word)).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&IndexWord, &BigInt)> {
        self.coeff.iter()
    }

    pub fn add_term(&mut self, word: &[u8], c: &BigInt) {
        assert_eq!(word.len(), self.degree as usize, "term length must match degree");
        if c.is_zero() {
            return;
        }
        let entry = self.coeff.entry(index_word(word)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeff.remove(&index_word(word));
        }
    }

    pub fn scale(&self, c: &BigInt) -> IntervalTensor {
        if c.is_zero() {
            return IntervalTensor::zero(self.start_level, self.degree);
        }
        let coeff = self.coeff.iter().map(|(w, v)| (w.clone(), v * c)).collect();
        IntervalTensor { start_level: self.start_level, degree: self.degree, coeff }
    }

    /// Re-base the tensor `r` levels up (or down for negative `r`); the
    /// resulting start level must stay ≥ 1.
    pub fn shift(&self, r: i64) -> IntervalTensor {
        let start = self.start_level as i64 + r;
        assert!(start >= 1, "shift would move the tensor below level 1");
        IntervalTensor { start_level: start as u32, ..self.clone() }
    }

    /// Product of tensors occupying adjacent level intervals: the right
    /// factor must start exactly where this one ends.
    pub fn concat_mul(&self, other: &IntervalTensor) -> IntervalTensor {
        assert_eq!(
            other.start_level,
            self.start_level + self.degree,
            "factors must occupy adjacent level intervals"
        );
        let mut out = IntervalTensor::zero(self.start_level, self.degree + other.degree);
        for (u, cu) in &self.coeff {
            for (v, cv) in &other.coeff {
                let mut word = u.clone();
                word.extend_from_slice(v);
                let c = cu * cv;
                let entry = out.coeff.entry(word).or_insert_with(BigInt::zero);
                *entry += c;
            }
        }
        out.coeff.retain(|_, c| !c.is_zero());
        out
    }

    /// Render as a sum of monomials `λ_i^{(j)}`, keys in lexicographic order.
    pub fn to_monomial_string(&self) -> String {
        if self.coeff.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (word, c)) in self.coeff.iter().enumerate() {
            let negative = c.sign() == num_bigint::Sign::Minus;
            let abs = c.magnitude();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let is_unit_coeff = abs.is_one() && !word.is_empty();
            if !is_unit_coeff {
                out.push_str(&abs.to_string());
                if !word.is_empty() {
                    out.push('·');
                }
            }
            for (offset, j) in word.iter().enumerate() {
                out.push_str(&format!("λ{}^({})", self.start_level as usize + offset, j));
            }
        }
        out
    }

    /// Render as `{word: coeff, …}` pairs in lexicographic key order.
    pub fn to_pairs_string(&self) -> String {
        if self.coeff.is_empty() {
            return "{}".to_string();
        }
        let parts: Vec<String> = self
            .coeff
            .iter()
            .map(|(w, c)| {
                let digits: String = w.iter().map(|d| d.to_string()).collect();
                format!("{digits}: {c}")
            })
            .collect();
        format!("{{{}}}", parts.join(", "))
    }
}

impl fmt::Debug for IntervalTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "IntervalTensor(start={}, deg={}, {})",
            self.start_level,
            self.degree,
            self.to_pairs_string()
        )
    }
}

impl fmt::Display for IntervalTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_monomial_string())
    }
}

impl Add for &IntervalTensor {
    type Output = IntervalTensor;

    fn add(self, other: &IntervalTensor) -> IntervalTensor {
        assert_eq!(self.start_level, other.start_level, "start level mismatch");
        assert_eq!(self.degree, other.degree, "degree mismatch");
        let mut out = self.clone();
        for (w, c) in &other.coeff {
            let entry = out.coeff.entry(w.clone()).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                out.coeff.remove(w);
            }
        }
        out
    }
}

impl Sub for &IntervalTensor {
    type Output = IntervalTensor;

    fn sub(self, other: &IntervalTensor) -> IntervalTensor {
        self + &(-other)
    }
}

impl Neg for &IntervalTensor {
    type Output = IntervalTensor;

    fn neg(self) -> IntervalTensor {
        let coeff = self.coeff.iter().map(|(w, c)| (w.clone(), -c)).collect();
        IntervalTensor { start_level: self.start_level, degree: self.degree, coeff }
    }
}

impl Mul<&IntervalTensor> for &BigInt {
    type Output = IntervalTensor;

    fn mul(self, t: &IntervalTensor) -> IntervalTensor {
        t.scale(self)
    }
}

/// The graded bracket on central tensors:
/// `[a, b] = a·κ_{d_a}(b) − b·κ_{d_b}(a)`, so the coefficient at a word `w`
/// is `a(w[..d_a])·b(w[d_a..]) − b(w[..d_b])·a(w[d_b..])`.
pub fn bracket(a: &CentralTensor, b: &CentralTensor) -> CentralTensor {
    assert_eq!(a.start_level, 1, "bracket arguments are central tensors");
    assert_eq!(b.start_level, 1, "bracket arguments are central tensors");
    assert!(a.degree >= 1 && b.degree >= 1, "bracket needs positive degrees");
    let left = a.concat_mul(&b.shift(a.degree as i64));
    let right = b.concat_mul(&a.shift(b.degree as i64));
    &left - &right
}

/// The left-collecting commutator bracket
/// `[[…[[λ^{(j_1)}, λ^{(j_2)}], λ^{(j_3)}]…], λ^{(j_n)}]`. Requires `|J| ≥ 2`.
pub fn left_collecting_bracket(indices: &[u8]) -> CentralTensor {
    assert!(indices.len() >= 2, "left-collecting bracket needs at least 2 indices");
    let mut t = IntervalTensor::generator(1, indices[0]);
    for &j in &indices[1..] {
        t = bracket(&t, &IntervalTensor::generator(1, j));
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(j: u8) -> IntervalTensor {
        IntervalTensor::generator(1, j)
    }

    #[test]
    fn add_and_neg() {
        let a = left_collecting_bracket(&[1, 2]);
        let zero = IntervalTensor::zero(1, 2);
        assert_eq!(&a + &zero, a);
        assert!((&a + &(-&a)).is_zero());
        assert_eq!(&a + &a, a.scale(&BigInt::from(2)));
    }

    #[test]
    fn concat_mul_monomials() {
        let a = IntervalTensor::generator(1, 1);
        let b = IntervalTensor::generator(2, 2);
        let ab = a.concat_mul(&b);
        assert_eq!(ab.degree(), 2);
        assert_eq!(ab.start_level(), 1);
        assert_eq!(ab.coefficient(&[1, 2]), BigInt::one());
        assert_eq!(ab.num_terms(), 1);

        let unit = IntervalTensor::unit(1);
        assert_eq!(unit.concat_mul(&a.shift(0)), a);
    }

    #[test]
    fn shift_round_trip() {
        let a = IntervalTensor::generator(1, 2);
        let shifted = a.shift(2);
        assert_eq!(shifted.start_level(), 3);
        assert_eq!(shifted.coefficient(&[2]), BigInt::one());
        assert_eq!(shifted.shift(-2), a);
        assert_eq!(a.shift(0), a);
    }

    #[test]
    fn bracket_degree_one() {
        let b = bracket(&gen(1), &gen(2));
        assert_eq!(b.coefficient(&[1, 2]), BigInt::one());
        assert_eq!(b.coefficient(&[2, 1]), BigInt::from(-1));
        assert_eq!(b.num_terms(), 2);
    }

    #[test]
    fn bracket_is_alternating() {
        let a = left_collecting_bracket(&[1, 2]);
        assert!(bracket(&a, &a).is_zero());
        let g = gen(1);
        assert!(bracket(&g, &g).is_zero());
    }

    #[test]
    fn bracket_degree_three_expansion() {
        // [[λ^{(i)}, λ^{(j)}], λ^{(k)}] expands into four signed monomials:
        // λ1^i λ2^j λ3^k − λ2^i λ1^j λ3^k + λ3^i λ2^j λ1^k − λ2^i λ3^j λ1^k.
        let (i, j, k) = (1u8, 2u8, 3u8);
        let t = left_collecting_bracket(&[i, j, k]);
        assert_eq!(t.coefficient(&[i, j, k]), BigInt::from(1));
        assert_eq!(t.coefficient(&[j, i, k]), BigInt::from(-1));
        assert_eq!(t.coefficient(&[k, j, i]), BigInt::from(1));
        assert_eq!(t.coefficient(&[k, i, j]), BigInt::from(-1));
        assert_eq!(t.num_terms(), 4);
    }

    /// Sign-augmented block shuffles: fold each letter onto the accumulated
    /// word either appended (even) or prepended (odd, sign −1).
    fn sigma_sum(indices: &[u8]) -> IntervalTensor {
        let mut terms: Vec<(Vec<u8>, BigInt)> = vec![(vec![indices[0]], BigInt::one())];
        for &j in &indices[1..] {
            let mut next = Vec::new();
            for (word, sign) in &terms {
                let mut appended = word.clone();
                appended.push(j);
                next.push((appended, sign.clone()));
                let mut prepended = vec![j];
                prepended.extend_from_slice(word);
                next.push((prepended, -sign));
            }
            terms = next;
        }
        IntervalTensor::from_terms(
            1,
            indices.len() as u32,
            terms.into_iter().map(|(w, c)| (index_word(&w), c)),
        )
    }

    #[test]
    fn left_collecting_bracket_matches_sigma_sum() {
        // All index words of length ≤ 6 over two generators.
        for n in 2..=6usize {
            for code in 0..(1u32 << n) {
                let indices: Vec<u8> =
                    (0..n).map(|t| 1 + ((code >> t) & 1) as u8).collect();
                assert_eq!(
                    left_collecting_bracket(&indices),
                    sigma_sum(&indices),
                    "at {indices:?}"
                );
            }
        }
    }

    #[test]
    fn rendering() {
        let t = left_collecting_bracket(&[1, 2]);
        assert_eq!(t.to_pairs_string(), "{12: 1, 21: -1}");
        assert_eq!(t.to_monomial_string(), "λ1^(1)λ2^(2) - λ1^(2)λ2^(1)");
        assert_eq!(IntervalTensor::zero(1, 3).to_monomial_string(), "0");
    }
}
