//! Lyndon-word bases of the free-abelian centers and exact integer
//! decomposition of central tensors into standard bracketings.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;

use crate::lattice::{tensor_coords, tensor_from_coords, SpanSolver};
use crate::tensor::{bracket, CentralTensor, IntervalTensor};
use crate::word::{index_word, IndexWord};

/// Is `word` strictly smaller than all of its proper rotations?
pub fn is_lyndon(word: &[u8]) -> bool {
    if word.is_empty() {
        return false;
    }
    for r in 1..word.len() {
        let rotation = word[r..].iter().chain(word[..r].iter());
        if !(word.iter().lt(rotation)) {
            return false;
        }
    }
    true
}

/// All Lyndon words of length exactly `n` over `1..=q`, in lexicographic
/// order (Duval's generation).
pub fn lyndon_words(q: u8, n: usize) -> Vec<IndexWord> {
    assert!(q >= 1 && n >= 1);
    let mut out = Vec::new();
    let mut w: Vec<u8> = vec![1];
    loop {
        if w.len() == n {
            out.push(index_word(&w));
        }
        let k = w.len();
        while w.len() < n {
            w.push(w[w.len() - k]);
        }
        while w.last() == Some(&q) {
            w.pop();
        }
        match w.last_mut() {
            None => break,
            Some(last) => *last += 1,
        }
    }
    out
}

/// Standard (right) factorization of a Lyndon word of length ≥ 2: the right
/// factor is the lexicographically least proper suffix.
fn standard_factorization(word: &[u8]) -> (Vec<u8>, Vec<u8>) {
    debug_assert!(word.len() >= 2);
    let mut split = 1;
    for r in 2..word.len() {
        if word[r..] < word[split..] {
            split = r;
        }
    }
    (word[..split].to_vec(), word[split..].to_vec())
}

/// The standard-bracketing tensor of a Lyndon word: fold its standard
/// factorization through the graded bracket.
pub fn standard_bracketing(word: &[u8]) -> CentralTensor {
    assert!(is_lyndon(word), "standard bracketing is defined on Lyndon words");
    if word.len() == 1 {
        return IntervalTensor::generator(1, word[0]);
    }
    let (left, right) = standard_factorization(word);
    bracket(&standard_bracketing(&left), &standard_bracketing(&right))
}

/// The memoized basis of the degree-`n` center over `q` generators: the
/// Lyndon words with their standard-bracketing tensors, in lexicographic
/// order.
pub fn basis(q: u8, n: usize) -> Arc<Vec<(IndexWord, CentralTensor)>> {
    static CACHE: OnceLock<Mutex<HashMap<(u8, usize), Arc<Vec<(IndexWord, CentralTensor)>>>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(found) = cache.lock().unwrap().get(&(q, n)) {
        return Arc::clone(found);
    }
    let built: Arc<Vec<(IndexWord, CentralTensor)>> = Arc::new(
        lyndon_words(q, n).into_iter().map(|w| (w.clone(), standard_bracketing(&w))).collect(),
    );
    cache.lock().unwrap().insert((q, n), Arc::clone(&built));
    built
}

/// The group word whose represented image realizes the standard bracketing
/// of a Lyndon word: fold the standard factorization through the group
/// commutator.
pub fn witness_word(word: &[u8]) -> crate::word::GroupWord {
    assert!(is_lyndon(word));
    if word.len() == 1 {
        return crate::word::GroupWord::generator(word[0]);
    }
    let (left, right) = standard_factorization(word);
    crate::word::commutator(&witness_word(&left), &witness_word(&right))
}

/// A group word in `Γ_d` whose size-`d+1` image is `I + tE`, for a Lie
/// tensor `t` of degree `d`: the product of standard-bracketing witness
/// words with the decomposition's multiplicities. `None` when `t` is not in
/// the integer span of the Lyndon basis.
pub fn witness_for_tensor(t: &CentralTensor, q: u8) -> Option<crate::word::GroupWord> {
    let d = decompose(t, q);
    if !d.is_exact() {
        return None;
    }
    let mut out = crate::word::GroupWord::identity();
    for (w, c) in &d.coeffs {
        let exp = i32::try_from(c).expect("witness multiplicities stay small");
        out = out.mul(&witness_word(w).pow(exp));
    }
    Some(out)
}

/// Result of decomposing a central tensor over the Lyndon basis:
/// `t = Σ coeffs[w] · standard_bracketing(w) + remainder`, with zero
/// remainder exactly when `t` lies in the integer span of the basis.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub coeffs: BTreeMap<IndexWord, BigInt>,
    pub remainder: CentralTensor,
}

impl Decomposition {
    pub fn is_exact(&self) -> bool {
        self.remainder.is_zero()
    }
}

/// Decompose a degree-`d` central tensor into Lyndon standard bracketings
/// over the alphabet `1..=q`, exactly over ℤ.
pub fn decompose(t: &CentralTensor, q: u8) -> Decomposition {
    assert_eq!(t.start_level(), 1, "decomposition applies to central tensors");
    let d = t.degree() as usize;
    if d == 0 || t.is_zero() {
        return Decomposition { coeffs: BTreeMap::new(), remainder: t.clone() };
    }
    let basis = basis(q, d);
    let dim = (q as usize).pow(d as u32);
    let gen_vectors: Vec<Vec<BigInt>> = basis.iter().map(|(_, b)| tensor_coords(b, q)).collect();
    let solver = SpanSolver::new(dim, &gen_vectors);
    let (raw_coeffs, rem) = solver.reduce(&tensor_coords(t, q));
    let coeffs = basis
        .iter()
        .zip(raw_coeffs)
        .filter(|(_, c)| !num_traits::Zero::is_zero(c))
        .map(|((w, _), c)| (w.clone(), c))
        .collect();
    Decomposition { coeffs, remainder: tensor_from_coords(1, d as u32, q, &rem) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::IntLattice;
    use crate::matrix::UniMatrix;
    use crate::word::left_collecting_word;

    /// Necklace count (1/n) Σ_{d|n} μ(d) q^{n/d}; the Möbius values are
    /// hard-coded for the small divisors that occur with n ≤ 8.
    fn necklace(q: u64, n: u64) -> u64 {
        fn moebius(d: u64) -> i64 {
            match d {
                1 => 1,
                2 | 3 | 5 | 7 => -1,
                4 | 8 | 9 => 0,
                6 => 1,
                _ => unimplemented!("divisor {d} not needed"),
            }
        }
        let mut sum = 0i64;
        for d in 1..=n {
            if n % d == 0 {
                sum += moebius(d) * (q as i64).pow((n / d) as u32);
            }
        }
        (sum / n as i64) as u64
    }

    #[test]
    fn lyndon_word_examples() {
        assert_eq!(lyndon_words(2, 2), vec![index_word(&[1, 2])]);
        assert_eq!(lyndon_words(2, 3), vec![index_word(&[1, 1, 2]), index_word(&[1, 2, 2])]);
        assert_eq!(lyndon_words(3, 2).len(), 3);
    }

    #[test]
    fn lyndon_counts_match_necklace_formula() {
        for q in 1..=3u8 {
            for n in 1..=6usize {
                assert_eq!(
                    lyndon_words(q, n).len() as u64,
                    necklace(q as u64, n as u64),
                    "q={q} n={n}"
                );
            }
        }
    }

    #[test]
    fn standard_bracketing_examples() {
        assert_eq!(standard_bracketing(&[1, 2]), bracket(
            &IntervalTensor::generator(1, 1),
            &IntervalTensor::generator(1, 2),
        ));
        // (1,1,2) factors as 1 · (1,2).
        let expected = bracket(
            &IntervalTensor::generator(1, 1),
            &bracket(&IntervalTensor::generator(1, 1), &IntervalTensor::generator(1, 2)),
        );
        assert_eq!(standard_bracketing(&[1, 1, 2]), expected);
        for w in lyndon_words(2, 6) {
            assert_eq!(standard_bracketing(&w).degree() as usize, w.len());
        }
    }

    #[test]
    fn basis_tensors_are_independent() {
        for q in 2..=3u8 {
            for n in 1..=5usize {
                let basis = basis(q, n);
                let vectors: Vec<Vec<BigInt>> =
                    basis.iter().map(|(_, b)| tensor_coords(b, q)).collect();
                let lattice = IntLattice::from_generators((q as usize).pow(n as u32), &vectors);
                assert_eq!(lattice.rank(), basis.len(), "dependent basis at q={q} n={n}");
            }
        }
    }

    #[test]
    fn decompose_round_trip() {
        for w in lyndon_words(2, 4) {
            let d = decompose(&standard_bracketing(&w), 2);
            assert!(d.is_exact());
            assert_eq!(d.coeffs.len(), 1);
            assert_eq!(d.coeffs.get(&w), Some(&BigInt::from(1)));
        }
        let zero = decompose(&IntervalTensor::zero(1, 3), 2);
        assert!(zero.is_exact());
        assert!(zero.coeffs.is_empty());
    }

    #[test]
    fn commutator_images_decompose_exactly() {
        for indices in [&[1u8, 2, 1][..], &[2, 1, 1, 2], &[1, 2, 2, 1, 1]] {
            let m = UniMatrix::represent_word(&left_collecting_word(indices), indices.len() + 1);
            let top = m.central_part().unwrap();
            let d = decompose(&top, 2);
            assert!(d.is_exact(), "non-Lie remainder at {indices:?}");
            // Recombine and compare.
            let mut acc = IntervalTensor::zero(1, indices.len() as u32);
            for (w, c) in &d.coeffs {
                acc = &acc + &standard_bracketing(w).scale(c);
            }
            assert_eq!(acc, top);
        }
    }

    #[test]
    fn non_lie_input_leaves_remainder() {
        // λλ is symmetric, not a Lie element.
        let mut t = IntervalTensor::zero(1, 2);
        t.add_term(&[1, 2], &BigInt::from(1));
        t.add_term(&[2, 1], &BigInt::from(1));
        let d = decompose(&t, 2);
        assert!(!d.is_exact());
    }
}
