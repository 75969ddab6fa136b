//! Free-group words, commutator builders, and Fox free differential calculus.
//!
//! Words are kept freely reduced at all times: the constructors run a single
//! stack pass, so no adjacent `x_j x_j^{-1}` pair survives. The Fox
//! coefficients `ε(D_I(y))` are computed by a letter-by-letter recursion that
//! carries only the augmentation vector of the prefixes of `I`, never full
//! group-ring elements.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use smallvec::SmallVec;

/// Multi-index `I = (i_1 … i_n)` over the generator alphabet `1..=q`.
/// The length of the word is its degree.
pub type IndexWord = SmallVec<[u8; 16]>;

/// Build an [`IndexWord`] from a slice.
pub fn index_word(indices: &[u8]) -> IndexWord {
    IndexWord::from_slice(indices)
}

/// A single signed letter `x_gen` or `x_gen^{-1}`. Generators are numbered
/// from 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Letter {
    pub gen: u8,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: u8) -> Self {
        assert!(gen >= 1, "generator indices start at 1");
        Letter { gen, inverse: false }
    }

    pub fn new_inverse(gen: u8) -> Self {
        assert!(gen >= 1, "generator indices start at 1");
        Letter { gen, inverse: true }
    }

    pub fn inv(self) -> Self {
        Letter { inverse: !self.inverse, ..self }
    }

    fn cancels(self, other: Letter) -> bool {
        self.gen == other.gen && self.inverse != other.inverse
    }
}

/// A freely reduced word in the free group on `x_1, x_2, …`.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct GroupWord {
    letters: Vec<Letter>,
}

impl GroupWord {
    /// The empty word (identity element).
    pub fn identity() -> Self {
        GroupWord::default()
    }

    /// The generator `x_j`.
    pub fn generator(j: u8) -> Self {
        GroupWord { letters: vec![Letter::new(j)] }
    }

    /// The inverse generator `x_j^{-1}`.
    pub fn generator_inverse(j: u8) -> Self {
        GroupWord { letters: vec![Letter::new_inverse(j)] }
    }

    /// Freely reduce a raw letter sequence (single stack pass).
    pub fn reduce<I: IntoIterator<Item = Letter>>(raw: I) -> Self {
        let mut stack: Vec<Letter> = Vec::new();
        for letter in raw {
            match stack.last() {
                Some(&top) if top.cancels(letter) => {
                    stack.pop();
                }
                _ => stack.push(letter),
            }
        }
        GroupWord { letters: stack }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest generator index occurring in the word (0 for the empty word).
    pub fn max_generator(&self) -> u8 {
        self.letters.iter().map(|l| l.gen).max().unwrap_or(0)
    }

    pub fn mul(&self, other: &GroupWord) -> GroupWord {
        GroupWord::reduce(self.letters.iter().chain(other.letters.iter()).copied())
    }

    pub fn inverse(&self) -> GroupWord {
        // Reversing a reduced word keeps it reduced.
        GroupWord { letters: self.letters.iter().rev().map(|l| l.inv()).collect() }
    }

    /// Conjugate `other^{-1} · self · other`.
    pub fn conjugate(&self, other: &GroupWord) -> GroupWord {
        other.inverse().mul(self).mul(other)
    }

    /// Raise to an integer power.
    pub fn pow(&self, exp: i32) -> GroupWord {
        let base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut out = GroupWord::identity();
        for _ in 0..exp.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// Apply `x_j ↦ images[j]` homomorphically and reduce.
    ///
    /// Panics if some generator of the word has no image.
    pub fn substitute(&self, images: &BTreeMap<u8, GroupWord>) -> GroupWord {
        let mut raw = Vec::new();
        for letter in &self.letters {
            let image = images
                .get(&letter.gen)
                .unwrap_or_else(|| panic!("no image for generator x{}", letter.gen));
            if letter.inverse {
                raw.extend(image.inverse().letters.iter().copied());
            } else {
                raw.extend(image.letters.iter().copied());
            }
        }
        GroupWord::reduce(raw)
    }

    /// The Fox coefficient `ε(D_{i_1⋯i_n}(y))` of this word at the
    /// multi-index `idx`; the empty index returns the augmentation 1.
    ///
    /// Equals the Magnus coefficient of the word at `idx`, so the recursion
    /// below multiplies the truncated letter series `1 + X` resp.
    /// `1 - X + X² - …` into a vector of prefix coefficients.
    pub fn fox_coefficient(&self, idx: &[u8]) -> BigInt {
        let n = idx.len();
        let mut c: Vec<BigInt> = vec![BigInt::zero(); n + 1];
        c[0] = BigInt::one();
        for &Letter { gen, inverse } in &self.letters {
            if !inverse {
                for p in (1..=n).rev() {
                    if idx[p - 1] == gen {
                        let prev = c[p - 1].clone();
                        c[p] += prev;
                    }
                }
            } else {
                for p in (1..=n).rev() {
                    let mut acc = BigInt::zero();
                    let mut negative = true; // sign of (-1)^{p-t}, starting at t = p-1
                    for t in (0..p).rev() {
                        if idx[t] != gen {
                            break;
                        }
                        if negative {
                            acc -= &c[t];
                        } else {
                            acc += &c[t];
                        }
                        negative = !negative;
                    }
                    c[p] += acc;
                }
            }
        }
        c.pop().expect("coefficient vector is non-empty")
    }
}

impl fmt::Debug for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupWord({self})")
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "x{}", l.gen)?;
            if l.inverse {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

/// The commutator `[g, h] = g h g^{-1} h^{-1}`, reduced.
pub fn commutator(g: &GroupWord, h: &GroupWord) -> GroupWord {
    g.mul(h).mul(&g.inverse()).mul(&h.inverse())
}

/// Left-collect a sequence of single generators into the iterated commutator
/// word `[[…[[x_{j_1}, x_{j_2}], x_{j_3}]…], x_{j_n}]`. Requires `|J| ≥ 2`.
pub fn left_collecting_word(indices: &[u8]) -> GroupWord {
    assert!(indices.len() >= 2, "left-collecting word needs at least 2 indices");
    let mut word = GroupWord::generator(indices[0]);
    for &j in &indices[1..] {
        word = commutator(&word, &GroupWord::generator(j));
    }
    word
}

/// All index words of the given length over `1..=q`, in lexicographic order.
pub fn all_index_words(q: u8, len: usize) -> Vec<IndexWord> {
    assert!(q >= 1);
    let mut words: Vec<IndexWord> = vec![IndexWord::new()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(words.len() * q as usize);
        for w in &words {
            for g in 1..=q {
                let mut extended = w.clone();
                extended.push(g);
                next.push(extended);
            }
        }
        words = next;
    }
    words
}

/// All resulting shuffles of two multi-indexes, with multiplicity: the words
/// obtainable by interleaving `i` and `j` monotonically, where a position may
/// be claimed by both words at once when their letters agree there. One
/// output entry per distinct pair of index maps, so repeated words count.
pub fn infiltration_shuffles(i: &[u8], j: &[u8]) -> Vec<IndexWord> {
    fn go(i: &[u8], j: &[u8], prefix: &mut IndexWord, out: &mut Vec<IndexWord>) {
        match (i.first(), j.first()) {
            (None, None) => out.push(prefix.clone()),
            (Some(&a), None) => {
                prefix.push(a);
                go(&i[1..], j, prefix, out);
                prefix.pop();
            }
            (None, Some(&b)) => {
                prefix.push(b);
                go(i, &j[1..], prefix, out);
                prefix.pop();
            }
            (Some(&a), Some(&b)) => {
                prefix.push(a);
                go(&i[1..], j, prefix, out);
                prefix.pop();
                prefix.push(b);
                go(i, &j[1..], prefix, out);
                prefix.pop();
                if a == b {
                    prefix.push(a);
                    go(&i[1..], &j[1..], prefix, out);
                    prefix.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    go(i, j, &mut IndexWord::new(), &mut out);
    out
}

/// Closed-form longitude words of the Milnor link of `m ≥ 3` components,
/// one per component `1 ≤ k ≤ m`, in the `(m+1)`-th nilpotent quotient.
pub fn milnor_link_longitude(m: u8, k: u8) -> GroupWord {
    assert!(m >= 3, "the Milnor link needs at least 3 components");
    assert!((1..=m).contains(&k), "component index out of range");
    if k == m {
        return left_collecting_word(&(1..m).collect::<Vec<_>>());
    }
    if k == m - 1 {
        let mut indices: Vec<u8> = (1..m - 1).collect();
        indices.push(m);
        return left_collecting_word(&indices);
    }
    // Twisted tail [[…[[x_m, x_{m-1}^{-1}], x_{m-2}^{-1}]…], x_{k+1}^{-1}].
    let mut tail = GroupWord::generator(m);
    for t in (k + 1..m).rev() {
        tail = commutator(&tail, &GroupWord::generator_inverse(t));
    }
    if k == 1 {
        return tail;
    }
    let mut head = GroupWord::generator(1);
    for t in 2..k {
        head = commutator(&head, &GroupWord::generator(t));
    }
    commutator(&head, &tail.inverse()).inverse()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(letters: &[(u8, bool)]) -> GroupWord {
        GroupWord::reduce(letters.iter().map(|&(g, inv)| Letter { gen: g, inverse: inv }))
    }

    #[test]
    fn reduce_cancels() {
        assert!(w(&[(1, false), (1, true)]).is_identity());
        let expected = w(&[(1, false), (1, false)]);
        assert_eq!(w(&[(1, false), (2, false), (2, true), (1, false)]), expected);
    }

    #[test]
    fn reduce_is_idempotent() {
        let word = w(&[(1, false), (2, true), (2, true), (1, false)]);
        assert_eq!(GroupWord::reduce(word.letters().iter().copied()), word);
    }

    #[test]
    fn inverse_round_trip() {
        let word = w(&[(1, false), (2, true), (3, false)]);
        assert!(word.mul(&word.inverse()).is_identity());
        assert_eq!(word.inverse().inverse(), word);
    }

    #[test]
    fn commutator_examples() {
        let x1 = GroupWord::generator(1);
        let x2 = GroupWord::generator(2);
        assert!(commutator(&x1, &x1).is_identity());
        let c = commutator(&x1, &x2);
        assert_eq!(c.len(), 4);
        assert_eq!(c, w(&[(1, false), (2, false), (1, true), (2, true)]));
    }

    #[test]
    fn left_collecting_matches_nested_commutator() {
        let x1 = GroupWord::generator(1);
        let x2 = GroupWord::generator(2);
        let x3 = GroupWord::generator(3);
        assert_eq!(left_collecting_word(&[1, 2]), commutator(&x1, &x2));
        assert_eq!(left_collecting_word(&[1, 2, 1]), commutator(&commutator(&x1, &x2), &x1));
        assert_eq!(
            left_collecting_word(&[1, 2, 3]),
            commutator(&commutator(&x1, &x2), &x3)
        );
    }

    #[test]
    fn fox_generator_is_kronecker() {
        for i in 1..=3u8 {
            for k in 1..=3u8 {
                let expected = BigInt::from((i == k) as i32);
                assert_eq!(GroupWord::generator(i).fox_coefficient(&[k]), expected);
            }
        }
    }

    #[test]
    fn fox_of_inverse_generator() {
        let y = GroupWord::generator_inverse(1);
        assert_eq!(y.fox_coefficient(&[1]), BigInt::from(-1));
        assert_eq!(y.fox_coefficient(&[1, 1]), BigInt::from(1));
        assert_eq!(y.fox_coefficient(&[1, 1, 1]), BigInt::from(-1));
    }

    #[test]
    fn fox_of_commutator() {
        let c = commutator(&GroupWord::generator(1), &GroupWord::generator(2));
        assert_eq!(c.fox_coefficient(&[1, 2]), BigInt::from(1));
        assert_eq!(c.fox_coefficient(&[2, 1]), BigInt::from(-1));
        assert_eq!(c.fox_coefficient(&[1]), BigInt::zero());
        assert_eq!(c.fox_coefficient(&[2]), BigInt::zero());
        assert_eq!(c.fox_coefficient(&[]), BigInt::one());
    }

    #[test]
    fn fox_vanishes_below_commutator_depth() {
        // Words in Γ_n have vanishing Fox coefficients in degrees 1..n-1.
        let deep = left_collecting_word(&[1, 2, 1, 2]);
        for idx in [&[1u8][..], &[2], &[1, 1], &[1, 2], &[2, 1], &[2, 2], &[1, 2, 1]] {
            assert_eq!(deep.fox_coefficient(idx), BigInt::zero(), "at {idx:?}");
        }
        assert_ne!(deep.fox_coefficient(&[1, 2, 1, 2]), BigInt::zero());
    }

    #[test]
    fn substitute_examples() {
        let word = w(&[(1, false), (1, false)]);
        let mut images = BTreeMap::new();
        images.insert(1u8, GroupWord::generator(2));
        assert_eq!(word.substitute(&images), w(&[(2, false), (2, false)]));

        let mut identity = BTreeMap::new();
        identity.insert(1u8, GroupWord::generator(1));
        assert_eq!(word.substitute(&identity), word);
    }

    #[test]
    fn shuffle_relation_on_a_power() {
        // For y = x1^k and I = J = (1): k² = 2·C(k,2) + k, since
        // Sh((1),(1)) = {(1,1), (1,1), (1)}.
        let shuffles = infiltration_shuffles(&[1], &[1]);
        assert_eq!(shuffles.len(), 3);
        for k in 0..6i64 {
            let y = GroupWord::generator(1).pow(k as i32);
            let lhs = y.fox_coefficient(&[1]) * y.fox_coefficient(&[1]);
            let rhs: BigInt = shuffles.iter().map(|s| y.fox_coefficient(s)).sum();
            assert_eq!(lhs, rhs, "k = {k}");
            assert_eq!(lhs, BigInt::from(k * k));
        }
    }

    #[test]
    fn plain_shuffles_of_distinct_letters() {
        let shuffles = infiltration_shuffles(&[1], &[2]);
        assert_eq!(shuffles.len(), 2);
        let shuffles = infiltration_shuffles(&[1, 2], &[3]);
        assert_eq!(shuffles.len(), 3);
    }

    #[test]
    fn milnor_longitudes_match_closed_forms() {
        assert_eq!(milnor_link_longitude(3, 3), left_collecting_word(&[1, 2]));
        assert_eq!(milnor_link_longitude(4, 3), left_collecting_word(&[1, 2, 4]));

        // (m=5, k=2) → [x1, ([[x5, x4^{-1}], x3^{-1}])^{-1}]^{-1}
        let tail = commutator(
            &commutator(&GroupWord::generator(5), &GroupWord::generator_inverse(4)),
            &GroupWord::generator_inverse(3),
        );
        let expected = commutator(&GroupWord::generator(1), &tail.inverse()).inverse();
        assert_eq!(milnor_link_longitude(5, 2), expected);
    }
}
