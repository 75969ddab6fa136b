//! Truncated non-commutative Magnus expansion, used as an independent
//! cross-check of the Fox coefficients and the matrix representation.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::word::{GroupWord, IndexWord, Letter};

/// Element of `ℤ⟨X_1,…,X_q⟩ / (degree ≥ truncation)`, stored sparsely.
#[derive(Clone, PartialEq, Eq)]
pub struct NcSeries {
    truncation: usize,
    coeff: BTreeMap<IndexWord, BigInt>,
}

impl NcSeries {
    pub fn zero(truncation: usize) -> Self {
        assert!(truncation >= 1);
        NcSeries { truncation, coeff: BTreeMap::new() }
    }

    pub fn one(truncation: usize) -> Self {
        let mut s = NcSeries::zero(truncation);
        s.coeff.insert(IndexWord::new(), BigInt::one());
        s
    }

    /// The series of a single signed letter: `1 + X` or its geometric
    /// inverse `1 - X + X² - …` truncated.
    pub fn letter(letter: Letter, truncation: usize) -> Self {
        let mut s = NcSeries::one(truncation);
        if !letter.inverse {
            s.coeff.insert(IndexWord::from_slice(&[letter.gen]), BigInt::one());
        } else {
            for len in 1..truncation {
                let word = IndexWord::from_iter(std::iter::repeat(letter.gen).take(len));
                let sign = if len % 2 == 1 { -1 } else { 1 };
                s.coeff.insert(word, BigInt::from(sign));
            }
        }
        s
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn coefficient(&self, idx: &[u8]) -> BigInt {
        assert!(idx.len() < self.truncation, "index beyond the truncation degree");
        self.coeff.get(&IndexWord::from_slice(idx)).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&IndexWord, &BigInt)> {
        self.coeff.iter()
    }

    /// Concatenation product, truncated.
    pub fn mul(&self, other: &NcSeries) -> NcSeries {
        assert_eq!(self.truncation, other.truncation, "truncation mismatch");
        let mut out = NcSeries::zero(self.truncation);
        for (u, cu) in &self.coeff {
            for (v, cv) in &other.coeff {
                if u.len() + v.len() >= self.truncation {
                    continue;
                }
                let mut word = u.clone();
                word.extend_from_slice(v);
                let entry = out.coeff.entry(word).or_insert_with(BigInt::zero);
                *entry += cu * cv;
            }
        }
        out.coeff.retain(|_, c| !c.is_zero());
        out
    }
}

impl fmt::Debug for NcSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeff
            .iter()
            .map(|(w, c)| {
                if w.is_empty() {
                    format!("{c}")
                } else {
                    let word: String = w.iter().map(|d| format!("X{d}")).collect();
                    format!("{c}·{word}")
                }
            })
            .collect();
        write!(f, "NcSeries[{}]({})", self.truncation, parts.join(" + "))
    }
}

/// The Magnus expansion of a free-group word modulo degree `truncation`:
/// `x_i ↦ 1 + X_i`, `x_i^{-1} ↦ 1 - X_i + X_i² - …`.
pub fn magnus_expand(word: &GroupWord, truncation: usize) -> NcSeries {
    let mut out = NcSeries::one(truncation);
    for &letter in word.letters() {
        out = out.mul(&NcSeries::letter(letter, truncation));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{commutator, left_collecting_word};

    #[test]
    fn letter_series() {
        let s = magnus_expand(&GroupWord::generator(1), 4);
        assert_eq!(s.coefficient(&[]), BigInt::one());
        assert_eq!(s.coefficient(&[1]), BigInt::one());
        assert_eq!(s.coefficient(&[1, 1]), BigInt::zero());

        let inv = magnus_expand(&GroupWord::generator_inverse(1), 4);
        assert_eq!(inv.coefficient(&[1]), BigInt::from(-1));
        assert_eq!(inv.coefficient(&[1, 1]), BigInt::from(1));
        assert_eq!(inv.coefficient(&[1, 1, 1]), BigInt::from(-1));
    }

    #[test]
    fn inverse_pairs_cancel() {
        let w = GroupWord::generator(1);
        let product = magnus_expand(&w, 4).mul(&magnus_expand(&w.inverse(), 4));
        assert_eq!(product, NcSeries::one(4));
    }

    #[test]
    fn mul_is_associative() {
        let a = magnus_expand(&GroupWord::generator(1), 5);
        let b = magnus_expand(&GroupWord::generator_inverse(2), 5);
        let c = magnus_expand(&left_collecting_word(&[1, 2]), 5);
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        assert_eq!(a.mul(&NcSeries::one(5)), a);
    }

    #[test]
    fn commutator_expansion() {
        let c = commutator(&GroupWord::generator(1), &GroupWord::generator(2));
        let s = magnus_expand(&c, 3);
        assert_eq!(s.coefficient(&[1, 2]), BigInt::from(1));
        assert_eq!(s.coefficient(&[2, 1]), BigInt::from(-1));
        assert_eq!(s.coefficient(&[1]), BigInt::zero());
        assert_eq!(s.coefficient(&[2]), BigInt::zero());
    }

    #[test]
    fn coefficients_match_fox() {
        let w = GroupWord::reduce([
            Letter::new(1),
            Letter::new_inverse(2),
            Letter::new_inverse(2),
            Letter::new(1),
            Letter::new(2),
        ]);
        let s = magnus_expand(&w, 5);
        for (idx, c) in s.terms() {
            assert_eq!(*c, w.fox_coefficient(idx), "at {idx:?}");
        }
        // Also check a few zero coefficients that the sparse map omits.
        for idx in [&[1u8, 1, 1, 1][..], &[2, 1, 2, 1]] {
            assert_eq!(s.coefficient(idx), w.fox_coefficient(idx));
        }
    }

    #[test]
    fn depth_detection() {
        let deep = left_collecting_word(&[1, 2, 2]);
        let s = magnus_expand(&deep, 6);
        for (idx, _) in s.terms() {
            assert!(idx.is_empty() || idx.len() >= 3, "unexpected term at {idx:?}");
        }
    }
}
