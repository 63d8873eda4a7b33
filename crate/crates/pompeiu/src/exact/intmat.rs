//! Dense integer matrices and Smith normal form.
//!
//! The matrices here are small (relation lattices, well under 64x64), so the
//! SNF runs plain elementary row/column reduction with smallest-nonzero-pivot
//! selection and no modular tricks. The transforms U, V are carried along so
//! S = U*M*V can be re-checked exactly, and row-lattice membership questions
//! are answered through the same decomposition.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::bareiss_determinant;

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        IntMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let add = &self[(i, k)] * &rhs[(k, j)];
                    out[(i, j)] += add;
                }
            }
        }
        out
    }

    /// Row-vector times matrix.
    pub fn row_mul(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.rows);
        let mut out = vec![BigInt::zero(); self.cols];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                out[j] += xi * &self[(i, j)];
            }
        }
        out
    }

    /// Determinant via fraction-free elimination; square matrices only.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let m: Vec<Vec<BigInt>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        bareiss_determinant(m)
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.determinant().abs().is_one()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += q * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let add = q * &self[(src, j)];
            self[(dst, j)] += add;
        }
    }

    /// col[dst] += q * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let add = q * &self[(i, src)];
            self[(i, dst)] += add;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self[(i, j)].clone();
            self[(i, j)] = v;
        }
    }

    /// Smith normal form `S = U * self * V` with unimodular `U`, `V`,
    /// diagonal `S` with nonnegative entries and d1 | d2 | ... .
    pub fn smith_normal_form(&self) -> SmithNormalForm {
        let mut s = self.clone();
        let mut u = IntMatrix::identity(self.rows);
        let mut v = IntMatrix::identity(self.cols);
        let n = self.rows.min(self.cols);

        for k in 0..n {
            loop {
                // smallest-nonzero pivot in the trailing submatrix
                let mut pivot: Option<(usize, usize)> = None;
                for i in k..s.rows {
                    for j in k..s.cols {
                        if s[(i, j)].is_zero() {
                            continue;
                        }
                        let better = match pivot {
                            None => true,
                            Some((pi, pj)) => s[(i, j)].abs() < s[(pi, pj)].abs(),
                        };
                        if better {
                            pivot = Some((i, j));
                        }
                    }
                }
                let Some((pi, pj)) = pivot else {
                    // trailing block is zero; done
                    break;
                };
                s.swap_rows(k, pi);
                u.swap_rows(k, pi);
                s.swap_cols(k, pj);
                v.swap_cols(k, pj);

                // clear column k below and row k to the right
                let mut dirty = false;
                for i in k + 1..s.rows {
                    if !s[(i, k)].is_zero() {
                        let q = -s[(i, k)].div_floor(&s[(k, k)]);
                        s.add_row_multiple(i, k, &q);
                        u.add_row_multiple(i, k, &q);
                        if !s[(i, k)].is_zero() {
                            dirty = true;
                        }
                    }
                }
                for j in k + 1..s.cols {
                    if !s[(k, j)].is_zero() {
                        let q = -s[(k, j)].div_floor(&s[(k, k)]);
                        s.add_col_multiple(j, k, &q);
                        v.add_col_multiple(j, k, &q);
                        if !s[(k, j)].is_zero() {
                            dirty = true;
                        }
                    }
                }
                if dirty {
                    continue; // remainders became new, smaller pivot candidates
                }
                if (k + 1..s.rows).any(|i| !s[(i, k)].is_zero())
                    || (k + 1..s.cols).any(|j| !s[(k, j)].is_zero())
                {
                    continue;
                }
                // divisibility fix-up: every trailing entry must be divisible
                // by the pivot; otherwise fold the offending column in and redo
                let pivot_val = s[(k, k)].clone();
                let mut offender: Option<(usize, usize)> = None;
                'search: for i in k + 1..s.rows {
                    for j in k + 1..s.cols {
                        if !s[(i, j)].is_multiple_of(&pivot_val) {
                            offender = Some((i, j));
                            break 'search;
                        }
                    }
                }
                match offender {
                    Some((_, j)) => {
                        let one = BigInt::one();
                        s.add_col_multiple(k, j, &one);
                        v.add_col_multiple(k, j, &one);
                    }
                    None => break,
                }
            }
            if s[(k, k)].is_negative() {
                s.negate_row(k);
                u.negate_row(k);
            }
        }
        SmithNormalForm { s, u, v }
    }

    /// Is `target` an integer combination of the rows? Returns coefficients
    /// `x` with `x * self = target` when it is.
    pub fn row_lattice_membership(&self, target: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(target.len(), self.cols);
        if self.rows == 0 {
            return if target.iter().all(Zero::is_zero) {
                Some(Vec::new())
            } else {
                None
            };
        }
        let snf = self.smith_normal_form();
        // x*M = t  <=>  z*S = t*V with z = x*U^{-1}; solve diagonally.
        let w = snf.v.row_mul(target);
        let n = self.rows.min(self.cols);
        let mut z = vec![BigInt::zero(); self.rows];
        for j in 0..self.cols {
            let d = if j < n { snf.s[(j, j)].clone() } else { BigInt::zero() };
            if d.is_zero() {
                if !w[j].is_zero() {
                    return None;
                }
            } else {
                if !w[j].is_multiple_of(&d) {
                    return None;
                }
                z[j] = &w[j] / &d;
            }
        }
        let x = snf.u.row_mul(&z);
        debug_assert_eq!(self.row_mul(&x), target);
        Some(x)
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(
                f,
                "  {:?}",
                self.row(i).iter().map(BigInt::to_string).collect::<Vec<_>>()
            )?;
        }
        write!(f, "]")
    }
}

/// Decomposition `s = u * m * v` with unimodular transforms.
#[derive(Clone, Debug)]
pub struct SmithNormalForm {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithNormalForm {
    /// Exact re-check of the defining identity and chain invariants.
    pub fn verify(&self, m: &IntMatrix) -> bool {
        if self.u.mul(m).mul(&self.v) != self.s {
            return false;
        }
        if !self.u.is_unimodular() || !self.v.is_unimodular() {
            return false;
        }
        let d = self.s.diagonal();
        for i in 0..self.s.rows() {
            for j in 0..self.s.cols() {
                if i != j && !self.s[(i, j)].is_zero() {
                    return false;
                }
            }
        }
        for w in d.windows(2) {
            if w[0].is_zero() && !w[1].is_zero() {
                return false;
            }
            if !w[0].is_zero() && !w[1].is_multiple_of(&w[0]) {
                return false;
            }
        }
        d.iter().all(|x| !x.is_negative())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Invariant-factor oracle: d_k = gcd of all k x k minors divided by the
    /// previous one. Exponential, fine for tiny matrices.
    fn invariant_factors_oracle(m: &IntMatrix) -> Vec<BigInt> {
        fn minors_gcd(m: &IntMatrix, k: usize) -> BigInt {
            fn combos(n: usize, k: usize) -> Vec<Vec<usize>> {
                if k == 0 {
                    return vec![vec![]];
                }
                let mut out = Vec::new();
                for first in 0..n {
                    for mut rest in combos(n, k - 1) {
                        if rest.iter().all(|&x| x > first) {
                            let mut c = vec![first];
                            c.append(&mut rest);
                            out.push(c);
                        }
                    }
                }
                out
            }
            let mut g = BigInt::zero();
            for rsel in combos(m.rows(), k) {
                for csel in combos(m.cols(), k) {
                    let sub: Vec<Vec<BigInt>> = rsel
                        .iter()
                        .map(|&i| csel.iter().map(|&j| m[(i, j)].clone()).collect())
                        .collect();
                    g = g.gcd(&bareiss_determinant(sub));
                }
            }
            g
        }
        let n = m.rows().min(m.cols());
        let mut out = Vec::new();
        let mut prev = BigInt::one();
        for k in 1..=n {
            let g = minors_gcd(m, k);
            if g.is_zero() {
                out.push(BigInt::zero());
            } else {
                out.push(&g / &prev);
                prev = g;
            }
        }
        out
    }

    #[test]
    fn snf_frozen_examples() {
        let m = IntMatrix::from_i64_rows(&[&[2, 0], &[0, 3]]);
        let snf = m.smith_normal_form();
        assert!(snf.verify(&m));
        assert_eq!(
            snf.s.diagonal(),
            vec![BigInt::from(1), BigInt::from(6)],
            "diag(2,3) has invariant factors (1,6)"
        );

        let id = IntMatrix::identity(3);
        let snf = id.smith_normal_form();
        assert!(snf.verify(&id));
        assert_eq!(snf.s, IntMatrix::identity(3));

        let m1 = IntMatrix::from_i64_rows(&[&[12]]);
        let snf = m1.smith_normal_form();
        assert!(snf.verify(&m1));
        assert_eq!(snf.s.diagonal(), vec![BigInt::from(12)]);
    }

    #[test]
    fn snf_matches_minors_oracle_on_small_matrices() {
        let cases: Vec<IntMatrix> = vec![
            IntMatrix::from_i64_rows(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]),
            IntMatrix::from_i64_rows(&[&[0, 0], &[0, 0]]),
            IntMatrix::from_i64_rows(&[&[1, 2, 3], &[4, 5, 6]]),
            IntMatrix::from_i64_rows(&[&[6, 10], &[15, 4], &[2, -2]]),
            IntMatrix::from_i64_rows(&[&[-3]]),
            IntMatrix::from_i64_rows(&[&[8, 4], &[4, 8]]),
        ];
        for m in cases {
            let snf = m.smith_normal_form();
            assert!(snf.verify(&m), "verify failed for {m:?}");
            let expect = invariant_factors_oracle(&m);
            assert_eq!(snf.s.diagonal(), expect, "oracle mismatch for {m:?}");
        }
    }

    #[test]
    fn row_lattice_membership_solves_and_rejects() {
        // rows span {(a, b) : a + 2b == 0 mod ...}: rows (2,4) and (0,6)
        let m = IntMatrix::from_i64_rows(&[&[2, 4], &[0, 6]]);
        let t = [BigInt::from(2), BigInt::from(10)]; // (2,4) + (0,6)
        let x = m.row_lattice_membership(&t).expect("member");
        assert_eq!(m.row_mul(&x), t);
        assert!(m
            .row_lattice_membership(&[BigInt::from(1), BigInt::from(0)])
            .is_none());
        // saturation is not membership: (1,2) is half of (2,4)
        assert!(m
            .row_lattice_membership(&[BigInt::from(1), BigInt::from(2)])
            .is_none());
    }
}
