//! The unipotent Magnus embedding: upper unitriangular matrices whose
//! `(i, j)` entry is an interval tensor at start level `i` of degree `j - i`.
//!
//! Only the strict upper triangle is stored; the diagonal is implicitly 1.
//! The `(i, i+d)` coefficient of a represented word at an index word equals
//! its Fox coefficient there, independent of the row `i`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::tensor::{CentralTensor, IntervalTensor};
use crate::word::{infiltration_shuffles, GroupWord, IndexWord, Letter};

/// Upper unitriangular matrix over interval tensors.
#[derive(Clone, PartialEq, Eq)]
pub struct UniMatrix {
    size: usize,
    entries: Vec<IntervalTensor>,
}

impl UniMatrix {
    fn index(&self, i: usize, j: usize) -> usize {
        debug_assert!(1 <= i && i < j && j <= self.size);
        (i - 1) * self.size - i * (i - 1) / 2 + (j - i - 1)
    }

    pub fn identity(size: usize) -> Self {
        assert!(size >= 1);
        let mut entries = Vec::with_capacity(size * (size - 1) / 2);
        for i in 1..=size {
            for j in i + 1..=size {
                entries.push(IntervalTensor::zero(i as u32, (j - i) as u32));
            }
        }
        UniMatrix { size, entries }
    }

    /// The generator image: `λ_i^{(j)}` on the superdiagonal, zeros elsewhere.
    pub fn generator(j: u8, size: usize) -> Self {
        let mut out = UniMatrix::identity(size);
        for i in 1..size {
            out.set_entry(i, i + 1, IntervalTensor::generator(i as u32, j));
        }
        out
    }

    /// The image of a single signed letter.
    pub fn letter(letter: Letter, size: usize) -> Self {
        if !letter.inverse {
            return UniMatrix::generator(letter.gen, size);
        }
        // (I + N)^{-1} has (i, k) entry (-1)^{k-i} λ_i … λ_{k-1}, all with
        // the same generator label.
        let mut out = UniMatrix::identity(size);
        for i in 1..size {
            for k in i + 1..=size {
                let word: Vec<u8> = vec![letter.gen; k - i];
                let sign = if (k - i) % 2 == 1 { -1 } else { 1 };
                let mut t = IntervalTensor::zero(i as u32, (k - i) as u32);
                t.add_term(&word, &BigInt::from(sign));
                out.set_entry(i, k, t);
            }
        }
        out
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn entry(&self, i: usize, j: usize) -> &IntervalTensor {
        &self.entries[self.index(i, j)]
    }

    pub fn set_entry(&mut self, i: usize, j: usize, t: IntervalTensor) {
        assert_eq!(t.start_level(), i as u32, "entry start level must equal its row");
        assert_eq!(t.degree(), (j - i) as u32, "entry degree must equal j - i");
        let idx = self.index(i, j);
        self.entries[idx] = t;
    }

    /// The `(1, size)` entry.
    pub fn top_right(&self) -> &IntervalTensor {
        assert!(self.size >= 2, "no top-right entry in a 1×1 matrix");
        self.entry(1, self.size)
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().all(|t| t.is_zero())
    }

    pub fn mul(&self, other: &UniMatrix) -> UniMatrix {
        assert_eq!(self.size, other.size, "size mismatch");
        let mut out = UniMatrix::identity(self.size);
        for i in 1..=self.size {
            for j in i + 1..=self.size {
                let mut acc = self.entry(i, j) + other.entry(i, j);
                for k in i + 1..j {
                    let a = self.entry(i, k);
                    let b = other.entry(k, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &a.concat_mul(b);
                    }
                }
                out.set_entry(i, j, acc);
            }
        }
        out
    }

    /// Product of the strict parts only (no unit terms); used for the
    /// nilpotent Neumann sum.
    fn strict_mul(&self, other: &UniMatrix) -> UniMatrix {
        let mut out = UniMatrix::identity(self.size);
        for i in 1..=self.size {
            for j in i + 2..=self.size {
                let mut acc = IntervalTensor::zero(i as u32, (j - i) as u32);
                for k in i + 1..j {
                    let a = self.entry(i, k);
                    let b = other.entry(k, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &a.concat_mul(b);
                    }
                }
                out.set_entry(i, j, acc);
            }
        }
        out
    }

    /// Inverse via the finite alternating Neumann sum over the nilpotent
    /// part: `(I + N)^{-1} = I - N + N² - …` with at most `size - 1` terms.
    pub fn inv(&self) -> UniMatrix {
        let mut out = UniMatrix::identity(self.size);
        let mut power = self.clone();
        let mut negative = true;
        for _ in 1..self.size {
            for i in 1..=self.size {
                for j in i + 1..=self.size {
                    let term = power.entry(i, j);
                    if term.is_zero() {
                        continue;
                    }
                    let acc = if negative {
                        out.entry(i, j) - term
                    } else {
                        out.entry(i, j) + term
                    };
                    out.set_entry(i, j, acc);
                }
            }
            power = self.strict_mul(&power);
            negative = !negative;
        }
        out
    }

    /// Conjugate `other^{-ε} · self · other^{ε}`.
    pub fn conjugate_by(&self, other: &UniMatrix, epsilon: i8) -> UniMatrix {
        assert_eq!(self.size, other.size, "size mismatch");
        match epsilon {
            1 => other.inv().mul(self).mul(other),
            -1 => other.mul(self).mul(&other.inv()),
            _ => panic!("crossing sign must be ±1"),
        }
    }

    /// The image of a reduced word: the product of its letter matrices.
    pub fn represent_word(word: &GroupWord, size: usize) -> UniMatrix {
        let mut out = UniMatrix::identity(size);
        for &letter in word.letters() {
            out = out.mul(&UniMatrix::letter(letter, size));
        }
        out
    }

    /// Drop the last row and column.
    pub fn project(&self) -> UniMatrix {
        assert!(self.size >= 2, "cannot project a 1×1 matrix");
        let mut out = UniMatrix::identity(self.size - 1);
        for i in 1..self.size {
            for j in i + 1..self.size {
                out.set_entry(i, j, self.entry(i, j).clone());
            }
        }
        out
    }

    /// The canonical zero-padded section: copy this matrix into the top-left
    /// corner, fill the new last column with the level-shifted copies of the
    /// previous column (forced by the row-independence of the entry
    /// coefficients), and put 0 in the free `(1, size+1)` slot.
    pub fn section_lift(&self) -> UniMatrix {
        let m = self.size;
        let mut out = UniMatrix::identity(m + 1);
        for i in 1..=m {
            for j in i + 1..=m {
                out.set_entry(i, j, self.entry(i, j).clone());
            }
        }
        for i in 2..=m {
            out.set_entry(i, m + 1, self.entry(i - 1, m).shift(1));
        }
        out
    }

    /// Lift with the `(1, size+1)` corner solved from the shuffle relations,
    /// so that the image of an honest group-element matrix stays an honest
    /// group-element matrix. The solution is the canonical representative of
    /// the integer solution set of the linear shuffle system over the given
    /// alphabet; `None` when the system has no integer solution.
    pub fn shuffle_lift(&self, q: u8) -> Option<UniMatrix> {
        use crate::lattice::SpanSolver;
        use crate::word::all_index_words;

        let h = self.size;
        let mut lifted = self.section_lift();
        let unknowns = all_index_words(q, h);
        let coefficient = |idx: &[u8]| -> BigInt {
            if idx.is_empty() {
                BigInt::one()
            } else {
                self.entry(1, 1 + idx.len()).coefficient(idx)
            }
        };
        // One equation per pair (J, K) with |J| + |K| = h: the plain
        // shuffles carry the unknown corner coefficients.
        let mut columns = vec![Vec::new(); unknowns.len()];
        let mut rhs = Vec::new();
        let index_of = |w: &[u8]| -> usize {
            w.iter().fold(0usize, |acc, &c| acc * q as usize + (c as usize - 1))
        };
        for lj in 1..h {
            let lk = h - lj;
            if lk < 1 {
                continue;
            }
            for j in all_index_words(q, lj) {
                for k in all_index_words(q, lk) {
                    let mut known = coefficient(&j) * coefficient(&k);
                    let row = rhs.len();
                    for col in columns.iter_mut() {
                        col.push(BigInt::from(0));
                    }
                    for l in infiltration_shuffles(&j, &k) {
                        if l.len() == h {
                            columns[index_of(&l)][row] += 1;
                        } else {
                            known -= coefficient(&l);
                        }
                    }
                    rhs.push(known);
                }
            }
        }
        let solver = SpanSolver::new(rhs.len(), &columns);
        let corner = solver.solve(&rhs)?;
        let mut top = IntervalTensor::zero(1, h as u32);
        for (w, c) in unknowns.iter().zip(&corner) {
            top.add_term(w, c);
        }
        lifted.set_entry(1, h + 1, top);
        Some(lifted)
    }

    /// If the matrix is `I + ω E_{1,size}`, return `ω`; otherwise report the
    /// first other non-zero entry.
    pub fn central_part(&self) -> Result<CentralTensor, (usize, usize)> {
        for i in 1..=self.size {
            for j in i + 1..=self.size {
                if (i, j) == (1, self.size) {
                    continue;
                }
                if !self.entry(i, j).is_zero() {
                    return Err((i, j));
                }
            }
        }
        if self.size < 2 {
            return Ok(IntervalTensor::zero(1, 0));
        }
        Ok(self.top_right().clone())
    }

    /// Check the shuffle characterization of the Magnus image on the first
    /// row: `a_J · a_K = Σ_{L ∈ Sh(J,K)} a_L` for all `|J| + |K| ≤ size - 1`.
    /// On failure the offending pair `(J, K)` is returned.
    pub fn magnus_image_check(&self) -> Result<(), (IndexWord, IndexWord)> {
        let mut alphabet: Vec<u8> = Vec::new();
        for j in 2..=self.size {
            for (word, _) in self.entry(1, j).terms() {
                for &g in word.iter() {
                    if !alphabet.contains(&g) {
                        alphabet.push(g);
                    }
                }
            }
        }
        alphabet.sort_unstable();
        if alphabet.is_empty() {
            return Ok(());
        }
        let coefficient = |idx: &[u8]| -> BigInt {
            if idx.is_empty() {
                return BigInt::one();
            }
            self.entry(1, 1 + idx.len()).coefficient(idx)
        };
        let words_of = |len: usize| -> Vec<Vec<u8>> {
            let mut words: Vec<Vec<u8>> = vec![Vec::new()];
            for _ in 0..len {
                words = words
                    .into_iter()
                    .flat_map(|w| {
                        alphabet.iter().map(move |&g| {
                            let mut next = w.clone();
                            next.push(g);
                            next
                        })
                    })
                    .collect();
            }
            words
        };
        for lj in 1..self.size {
            for lk in 1..self.size - lj {
                for j in words_of(lj) {
                    for k in words_of(lk) {
                        let lhs = coefficient(&j) * coefficient(&k);
                        let rhs: BigInt =
                            infiltration_shuffles(&j, &k).iter().map(|l| coefficient(l)).sum();
                        if lhs != rhs {
                            return Err((IndexWord::from_slice(&j), IndexWord::from_slice(&k)));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for UniMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut cells: Vec<Vec<String>> = Vec::new();
        for i in 1..=self.size {
            let mut row = Vec::new();
            for j in 1..=self.size {
                row.push(match j.cmp(&i) {
                    std::cmp::Ordering::Less => "0".to_string(),
                    std::cmp::Ordering::Equal => "1".to_string(),
                    std::cmp::Ordering::Greater => self.entry(i, j).to_monomial_string(),
                });
            }
            cells.push(row);
        }
        let widths: Vec<usize> = (0..self.size)
            .map(|c| cells.iter().map(|row| row[c].chars().count()).max().unwrap_or(1))
            .collect();
        for row in &cells {
            write!(f, "[ ")?;
            for (c, cell) in row.iter().enumerate() {
                write!(f, "{:width$}", cell, width = widths[c])?;
                if c + 1 < row.len() {
                    write!(f, "  ")?;
                }
            }
            writeln!(f, " ]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for UniMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "UniMatrix(size={})", self.size)?;
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::{bracket, left_collecting_bracket};
    use crate::word::{commutator, left_collecting_word};

    #[test]
    fn identity_is_neutral() {
        let a = UniMatrix::generator(1, 4);
        let id = UniMatrix::identity(4);
        assert_eq!(id.mul(&a), a);
        assert_eq!(a.mul(&id), a);
        assert_eq!(id.project(), UniMatrix::identity(3));
        assert!(UniMatrix::identity(3).central_part().unwrap().is_zero());
    }

    #[test]
    fn generator_matrix_shape() {
        let g = UniMatrix::generator(1, 2);
        assert_eq!(g.entry(1, 2), &IntervalTensor::generator(1, 1));
        assert_eq!(UniMatrix::generator(2, 1), UniMatrix::identity(1));
        assert!(UniMatrix::generator(1, 3).entry(1, 3).is_zero());
    }

    #[test]
    fn inverse_of_generator() {
        let g = UniMatrix::generator(1, 3);
        let inv = g.inv();
        assert!(g.mul(&inv).is_identity());
        assert!(inv.mul(&g).is_identity());
        assert_eq!(inv.entry(1, 3).coefficient(&[1, 1]), BigInt::from(1));
        assert_eq!(inv.inv(), g);
        assert_eq!(UniMatrix::identity(4).inv(), UniMatrix::identity(4));
    }

    #[test]
    fn letter_matrix_is_word_image() {
        let inv_gen = UniMatrix::letter(Letter::new_inverse(2), 4);
        assert_eq!(inv_gen, UniMatrix::generator(2, 4).inv());
    }

    #[test]
    fn represent_is_homomorphic() {
        let u = GroupWord::reduce([Letter::new(1), Letter::new_inverse(2), Letter::new(1)]);
        let v = GroupWord::reduce([Letter::new(2), Letter::new(2), Letter::new_inverse(1)]);
        let lhs = UniMatrix::represent_word(&u.mul(&v), 5);
        let rhs = UniMatrix::represent_word(&u, 5).mul(&UniMatrix::represent_word(&v, 5));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn represent_commutator() {
        let c = commutator(&GroupWord::generator(1), &GroupWord::generator(2));
        let m = UniMatrix::represent_word(&c, 3);
        let expected = left_collecting_bracket(&[1, 2]);
        assert_eq!(m.central_part().unwrap(), expected);
        // Depth-2 commutators die at size 2.
        assert!(UniMatrix::represent_word(&c, 2).is_identity());
    }

    #[test]
    fn entries_are_fox_coefficients() {
        let w = GroupWord::reduce([
            Letter::new(1),
            Letter::new(2),
            Letter::new_inverse(1),
            Letter::new(2),
            Letter::new_inverse(2),
            Letter::new_inverse(2),
        ]);
        let m = UniMatrix::represent_word(&w, 5);
        for i in 1..=5usize {
            for j in i + 1..=5usize {
                let entry = m.entry(i, j);
                // Check over all words of the right length on letters {1,2}.
                let d = j - i;
                for code in 0..(1u32 << d) {
                    let idx: Vec<u8> = (0..d).map(|t| 1 + ((code >> t) & 1) as u8).collect();
                    assert_eq!(
                        entry.coefficient(&idx),
                        w.fox_coefficient(&idx),
                        "entry ({i},{j}) at {idx:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn project_commutes_with_mul() {
        let a = UniMatrix::represent_word(&left_collecting_word(&[1, 2]), 5);
        let b = UniMatrix::represent_word(&GroupWord::generator_inverse(2), 5);
        assert_eq!(a.mul(&b).project(), a.project().mul(&b.project()));
        assert_eq!(UniMatrix::generator(1, 4).project(), UniMatrix::generator(1, 3));
    }

    #[test]
    fn section_lift_shape() {
        for m in 2..5usize {
            let g = UniMatrix::generator(2, m);
            assert_eq!(g.section_lift(), UniMatrix::generator(2, m + 1));
        }
        assert_eq!(UniMatrix::identity(3).section_lift(), UniMatrix::identity(4));

        // A lift differs from the honest representation only at (1, m+1).
        let w = GroupWord::reduce([Letter::new(1), Letter::new(2), Letter::new_inverse(1)]);
        let lifted = UniMatrix::represent_word(&w, 4).section_lift();
        let honest = UniMatrix::represent_word(&w, 5);
        assert!(lifted.project() == honest.project());
        for i in 2..=4usize {
            assert_eq!(lifted.entry(i, 5), honest.entry(i, 5), "row {i}");
        }
    }

    #[test]
    fn conjugation_ignores_top_right_of_conjugator() {
        let a = UniMatrix::represent_word(&left_collecting_word(&[1, 2]), 4);
        let b = UniMatrix::represent_word(
            &GroupWord::reduce([Letter::new(2), Letter::new_inverse(1)]),
            4,
        );
        let mut b_altered = b.clone();
        let mut patched = b.entry(1, 4).clone();
        patched.add_term(&[1, 2, 2], &BigInt::from(17));
        patched.add_term(&[2, 2, 2], &BigInt::from(-5));
        b_altered.set_entry(1, 4, patched);

        for eps in [1i8, -1] {
            assert_eq!(a.conjugate_by(&b, eps), a.conjugate_by(&b_altered, eps));
        }
        assert_eq!(a.conjugate_by(&UniMatrix::identity(4), 1), a);
        let round = a.conjugate_by(&b, 1).conjugate_by(&b, -1);
        assert_eq!(round, a);
    }

    #[test]
    fn commutator_maps_to_bracket() {
        // Top entry of a represented commutator equals the bracket of the
        // factors' top entries, for nested commutators of any depth split.
        let g = left_collecting_word(&[1, 2]);
        let h = left_collecting_word(&[2, 1, 1]);
        let gm = UniMatrix::represent_word(&g, 3);
        let hm = UniMatrix::represent_word(&h, 4);
        let c = UniMatrix::represent_word(&commutator(&g, &h), 6);
        let expected = bracket(gm.top_right(), hm.top_right());
        assert_eq!(c.central_part().unwrap(), expected);
    }

    #[test]
    fn left_collecting_words_map_to_brackets() {
        for indices in [&[1u8, 2][..], &[1, 2, 1], &[2, 1, 1, 2], &[1, 2, 2, 1, 2]] {
            let word = left_collecting_word(indices);
            let m = UniMatrix::represent_word(&word, indices.len() + 1);
            assert_eq!(
                m.central_part().unwrap(),
                left_collecting_bracket(indices),
                "at {indices:?}"
            );
        }
    }

    #[test]
    fn central_part_rejects_non_central() {
        assert_eq!(UniMatrix::generator(1, 3).central_part(), Err((1, 2)));
    }

    #[test]
    fn shuffle_check_accepts_group_images() {
        assert!(UniMatrix::generator(1, 4).magnus_image_check().is_ok());
        let w = GroupWord::reduce([
            Letter::new(1),
            Letter::new_inverse(2),
            Letter::new(3),
            Letter::new(1),
        ]);
        assert!(UniMatrix::represent_word(&w, 5).magnus_image_check().is_ok());
    }

    #[test]
    fn shuffle_check_rejects_bad_coefficients() {
        // 1 + λ E_{12} passes at size 3 (the (1,1)-condition reads 1 = 2·0 + 1),
        // but patching (1,3) to 5·λλ breaks it: 1 ≠ 2·5 + 1.
        let mut ok = UniMatrix::identity(3);
        let mut t = IntervalTensor::zero(1, 1);
        t.add_term(&[1], &BigInt::one());
        ok.set_entry(1, 2, t.clone());
        assert!(ok.magnus_image_check().is_ok());

        let mut bad = ok.clone();
        let mut top = IntervalTensor::zero(1, 2);
        top.add_term(&[1, 1], &BigInt::from(5));
        bad.set_entry(1, 3, top);
        let witness = bad.magnus_image_check().unwrap_err();
        assert_eq!(witness, (IndexWord::from_slice(&[1]), IndexWord::from_slice(&[1])));
    }

    #[test]
    fn display_is_aligned() {
        let g = UniMatrix::generator(1, 3);
        let text = format!("{g}");
        assert!(text.contains("λ1^(1)"));
        assert!(text.lines().count() == 3);
    }
}
