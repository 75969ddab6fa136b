//! Exact integer lattices in Hermite normal form, plus a span solver that
//! recovers integer coefficients over the original generators.
//!
//! Everything here is plain integer row reduction over `BigInt`; no modular
//! arithmetic, no floating point. Matrices stay small (rows are tensor
//! coefficient vectors of length `q^d`), so the classical algorithms are fine.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::tensor::IntervalTensor;
use crate::word::all_index_words;

/// Coordinates of a tensor with respect to the lexicographic list of all
/// index words of its degree over `1..=q`.
pub fn tensor_coords(t: &IntervalTensor, q: u8) -> Vec<BigInt> {
    let d = t.degree() as usize;
    let mut coords = vec![BigInt::zero(); (q as usize).pow(d as u32)];
    for (word, c) in t.terms() {
        let mut idx = 0usize;
        for &letter in word.iter() {
            assert!(letter >= 1 && letter <= q, "letter {letter} outside alphabet 1..={q}");
            idx = idx * q as usize + (letter - 1) as usize;
        }
        coords[idx] = c.clone();
    }
    coords
}

/// Inverse of [`tensor_coords`].
pub fn tensor_from_coords(start_level: u32, degree: u32, q: u8, coords: &[BigInt]) -> IntervalTensor {
    let words = all_index_words(q, degree as usize);
    assert_eq!(words.len(), coords.len());
    IntervalTensor::from_terms(
        start_level,
        degree,
        words.into_iter().zip(coords.iter().cloned()),
    )
}

/// Row-style Hermite normal form with the unimodular transform recorded:
/// returns `(rows, pivots, expr)` where `rows` is the canonical basis of the
/// row span (pivots positive, entries above each pivot reduced into
/// `[0, pivot)`), and `rows[r] = Σ_g expr[r][g] · gens[g]`.
fn hnf_with_transform(
    dim: usize,
    gens: &[Vec<BigInt>],
) -> (Vec<Vec<BigInt>>, Vec<usize>, Vec<Vec<BigInt>>) {
    let n = gens.len();
    let mut rows: Vec<Vec<BigInt>> = gens.to_vec();
    for row in &rows {
        assert_eq!(row.len(), dim, "generator has wrong dimension");
    }
    let mut expr: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let mut e = vec![BigInt::zero(); n];
            e[i] = BigInt::one();
            e
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0usize;

    for col in 0..dim {
        if r == rows.len() {
            break;
        }
        loop {
            // Pick the row (at or below r) with the smallest non-zero |entry|.
            let mut best: Option<usize> = None;
            for (k, row) in rows.iter().enumerate().skip(r) {
                if row[col].is_zero() {
                    continue;
                }
                match best {
                    None => best = Some(k),
                    Some(b) => {
                        if row[col].abs() < rows[b][col].abs() {
                            best = Some(k);
                        }
                    }
                }
            }
            let Some(b) = best else { break };
            rows.swap(r, b);
            expr.swap(r, b);
            let mut any_other = false;
            for k in r + 1..rows.len() {
                if rows[k][col].is_zero() {
                    continue;
                }
                any_other = true;
                let quot = rows[k][col].div_floor(&rows[r][col]);
                row_sub_mul(&mut rows, k, r, &quot);
                row_sub_mul(&mut expr, k, r, &quot);
            }
            if !any_other {
                break;
            }
        }
        if rows.get(r).map_or(false, |row| !row[col].is_zero()) {
            if rows[r][col].is_negative() {
                for v in rows[r].iter_mut() {
                    *v = -std::mem::take(v);
                }
                for v in expr[r].iter_mut() {
                    *v = -std::mem::take(v);
                }
            }
            for t in 0..r {
                let quot = rows[t][col].div_floor(&rows[r][col]);
                if !quot.is_zero() {
                    row_sub_mul(&mut rows, t, r, &quot);
                    row_sub_mul(&mut expr, t, r, &quot);
                }
            }
            pivots.push(col);
            r += 1;
        }
    }
    rows.truncate(r);
    expr.truncate(r);
    (rows, pivots, expr)
}

fn row_sub_mul(rows: &mut [Vec<BigInt>], target: usize, source: usize, quot: &BigInt) {
    if quot.is_zero() {
        return;
    }
    let source_row = rows[source].clone();
    for (t, s) in rows[target].iter_mut().zip(source_row.iter()) {
        *t -= quot * s;
    }
}

/// An integer lattice in canonical Hermite normal form. Two lattices are
/// equal as subgroups of `ℤ^dim` iff their `rows` coincide.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntLattice {
    dim: usize,
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl IntLattice {
    pub fn empty(dim: usize) -> Self {
        IntLattice { dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_generators(dim: usize, gens: &[Vec<BigInt>]) -> Self {
        let (rows, pivots, _) = hnf_with_transform(dim, gens);
        IntLattice { dim, rows, pivots }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// Canonical representative of `v + L`: pivot coordinates reduced into
    /// `[0, pivot)`. Idempotent, and `v - reduce(v) ∈ L`.
    pub fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.dim, "vector has wrong dimension");
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let quot = out[p].div_floor(&row[p]);
            if !quot.is_zero() {
                for (t, s) in out.iter_mut().zip(row.iter()) {
                    *t -= &quot * s;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.reduce(v).iter().all(|c| c.is_zero())
    }

    /// Invariant factors `d_1 | d_2 | …` of the basis matrix (Smith form
    /// diagonal), all positive.
    pub fn elementary_divisors(&self) -> Vec<BigInt> {
        smith_diagonal(self.rows.clone())
    }
}

fn smith_diagonal(mut m: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut out = Vec::new();
    let mut t = 0usize;
    while t < rows && t < cols {
        // Find the smallest non-zero entry in the remaining block.
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if m[i][j].is_zero() {
                    continue;
                }
                match best {
                    None => best = Some((i, j)),
                    Some((bi, bj)) => {
                        if m[i][j].abs() < m[bi][bj].abs() {
                            best = Some((i, j));
                        }
                    }
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        m.swap(t, bi);
        for row in m.iter_mut() {
            row.swap(t, bj);
        }
        // Clear the rest of column t and row t.
        let mut clean = true;
        for i in t + 1..rows {
            let quot = m[i][t].div_floor(&m[t][t]);
            row_sub_mul(&mut m, i, t, &quot);
            if !m[i][t].is_zero() {
                clean = false;
            }
        }
        for j in t + 1..cols {
            let quot = m[t][j].div_floor(&m[t][t]);
            if !quot.is_zero() {
                for i in 0..rows {
                    let s = m[i][t].clone();
                    m[i][j] -= &quot * s;
                }
            }
            if !m[t][j].is_zero() {
                clean = false;
            }
        }
        if !clean {
            continue;
        }
        // Enforce divisibility of the remaining block by the pivot.
        let pivot = m[t][t].clone();
        let mut divisible = true;
        'scan: for i in t + 1..rows {
            for j in t + 1..cols {
                if !(&m[i][j] % &pivot).is_zero() {
                    for jj in 0..cols {
                        let add = m[i][jj].clone();
                        m[t][jj] += add;
                    }
                    divisible = false;
                    break 'scan;
                }
            }
        }
        if divisible {
            out.push(pivot.abs());
            t += 1;
        }
    }
    out
}

/// Solves membership in the integer span of a fixed generator list, with
/// coefficient recovery: `solve(v) = Some(c)` iff `v = Σ c_g · gens[g]`.
pub struct SpanSolver {
    dim: usize,
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    expr: Vec<Vec<BigInt>>,
    n_gens: usize,
}

/// A basis of the integer kernel of the generator list: all coefficient
/// vectors `n` with `Σ n_g · gens[g] = 0`.
pub fn integer_kernel(dim: usize, gens: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    // Row-reduce the generators while tracking the transform; transform rows
    // of zero rows are kernel vectors. Reuse the HNF machinery on the
    // augmented matrix [gens | I] with the identity part weighted to the
    // right of all real columns, which keeps real columns pivoted first.
    let n = gens.len();
    let mut augmented: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for (i, g) in gens.iter().enumerate() {
        assert_eq!(g.len(), dim);
        let mut row = g.clone();
        row.extend((0..n).map(|k| if k == i { BigInt::one() } else { BigInt::zero() }));
        augmented.push(row);
    }
    let (rows, pivots, _) = hnf_with_transform(dim + n, &augmented);
    rows.iter()
        .zip(&pivots)
        .filter(|(_, &p)| p >= dim)
        .map(|(row, _)| row[dim..].to_vec())
        .collect()
}

impl SpanSolver {
    pub fn new(dim: usize, gens: &[Vec<BigInt>]) -> Self {
        let (rows, pivots, expr) = hnf_with_transform(dim, gens);
        SpanSolver { dim, rows, pivots, expr, n_gens: gens.len() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the span; returns the coefficient combination used
    /// and the canonical remainder.
    pub fn reduce(&self, v: &[BigInt]) -> (Vec<BigInt>, Vec<BigInt>) {
        assert_eq!(v.len(), self.dim, "vector has wrong dimension");
        let mut rem = v.to_vec();
        let mut coeffs = vec![BigInt::zero(); self.n_gens];
        for ((row, &p), e) in self.rows.iter().zip(&self.pivots).zip(&self.expr) {
            let quot = rem[p].div_floor(&row[p]);
            if quot.is_zero() {
                continue;
            }
            for (t, s) in rem.iter_mut().zip(row.iter()) {
                *t -= &quot * s;
            }
            for (c, s) in coeffs.iter_mut().zip(e.iter()) {
                *c += &quot * s;
            }
        }
        (coeffs, rem)
    }

    pub fn solve(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let (coeffs, rem) = self.reduce(v);
        rem.iter().all(|c| c.is_zero()).then_some(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vecs(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn hnf_canonical_form() {
        let l = IntLattice::from_generators(3, &vecs(&[&[2, 4, 4], &[6, 6, 12], &[10, 4, 16]]));
        // Same lattice from a different generating set.
        let l2 = IntLattice::from_generators(
            3,
            &vecs(&[&[2, 4, 4], &[6, 6, 12], &[10, 4, 16], &[8, 10, 16], &[-6, -6, -12]]),
        );
        assert_eq!(l, l2);
        assert_eq!(l.rank(), 3);
    }

    #[test]
    fn scaled_generators_give_different_lattices() {
        let a = IntLattice::from_generators(2, &vecs(&[&[1, 0]]));
        let b = IntLattice::from_generators(2, &vecs(&[&[2, 0]]));
        assert_ne!(a, b);
        assert!(a.contains(&vecs(&[&[2, 0]])[0]));
        assert!(!b.contains(&vecs(&[&[1, 0]])[0]));
    }

    #[test]
    fn reduce_is_idempotent_and_congruent() {
        let l = IntLattice::from_generators(3, &vecs(&[&[3, 1, 2], &[0, 5, 1]]));
        let v = &vecs(&[&[7, 9, 4]])[0];
        let r = l.reduce(v);
        assert_eq!(l.reduce(&r), r);
        let mut diff: Vec<BigInt> = v.iter().zip(&r).map(|(a, b)| a - b).collect();
        assert!(l.contains(&diff));
        diff[0] += 1;
        assert!(!l.contains(&diff));
    }

    #[test]
    fn empty_lattice_reduces_nothing() {
        let l = IntLattice::empty(2);
        let v = &vecs(&[&[4, -7]])[0];
        assert_eq!(l.reduce(v), *v);
        assert!(l.contains(&[BigInt::zero(), BigInt::zero()]));
    }

    #[test]
    fn elementary_divisors_examples() {
        let l = IntLattice::from_generators(2, &vecs(&[&[2, 0], &[0, 6]]));
        assert_eq!(l.elementary_divisors(), vec![BigInt::from(2), BigInt::from(6)]);

        // ⟨(3,0),(0,3),(1,1)⟩ has quotient ℤ/3: divisors 1, 3.
        let l = IntLattice::from_generators(2, &vecs(&[&[3, 0], &[0, 3], &[1, 1]]));
        assert_eq!(l.elementary_divisors(), vec![BigInt::from(1), BigInt::from(3)]);
    }

    #[test]
    fn span_solver_recovers_coefficients() {
        let gens = vecs(&[&[2, 1, 0], &[0, 3, 1], &[1, 0, 0]]);
        let solver = SpanSolver::new(3, &gens);
        let target: Vec<BigInt> = vecs(&[&[2 * 4 - 2, 4 - 9, -3]]).remove(0);
        let coeffs = solver.solve(&target).expect("target lies in the span");
        let mut recombined = vec![BigInt::zero(); 3];
        for (c, g) in coeffs.iter().zip(&gens) {
            for (t, s) in recombined.iter_mut().zip(g.iter()) {
                *t += c * s;
            }
        }
        assert_eq!(recombined, target);
    }

    #[test]
    fn span_solver_rejects_outsiders() {
        let solver = SpanSolver::new(2, &vecs(&[&[2, 0], &[0, 2]]));
        assert!(solver.solve(&vecs(&[&[1, 1]])[0]).is_none());
        assert!(solver.solve(&vecs(&[&[2, -4]])[0]).is_some());
    }
}
