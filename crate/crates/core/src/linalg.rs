//! Dense exact linear algebra: vectors, matrices, fraction-free rank,
//! and rational linear solving.
//!
//! Ranks are computed by fraction-free (Bareiss) elimination over the
//! integers after clearing denominators row by row; solving uses plain
//! rational Gauss-Jordan and returns the pivot solution (free variables set
//! to zero) or an infeasibility certificate given by the rank jump of the
//! augmented matrix.

use crate::scalar::Rat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

// ---------------------------------------------------------------------------
// vectors

pub fn vzero(n: usize) -> Vec<Rat> {
    vec![Rat::zero(); n]
}

pub fn vis_zero(v: &[Rat]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn vadd_assign(dst: &mut [Rat], src: &[Rat]) {
    debug_assert_eq!(dst.len(), src.len());
    for (d, s) in dst.iter_mut().zip(src) {
        *d += s;
    }
}

pub fn vsub_assign(dst: &mut [Rat], src: &[Rat]) {
    debug_assert_eq!(dst.len(), src.len());
    for (d, s) in dst.iter_mut().zip(src) {
        *d -= s;
    }
}

/// dst += k * src, skipping zero work.
pub fn vaxpy(dst: &mut [Rat], k: &Rat, src: &[Rat]) {
    if k.is_zero() {
        return;
    }
    debug_assert_eq!(dst.len(), src.len());
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d += k * s;
        }
    }
}

pub fn vsub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vadd(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vscale(k: &Rat, v: &[Rat]) -> Vec<Rat> {
    v.iter().map(|x| k * x).collect()
}

pub fn vneg(v: &[Rat]) -> Vec<Rat> {
    v.iter().map(|x| -x).collect()
}

// ---------------------------------------------------------------------------
// matrices

/// Dense row-major rational matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rat>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    /// Builds from a row-major list of rows; all rows must share one length.
    pub fn from_rows(rows: &[Vec<Rat>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.concat(),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = Mat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j) + a * b;
                        out.set(i, j, cur);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        let mut out = vzero(self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if !a.is_zero() && !v[j].is_zero() {
                    out[i] += a * &v[j];
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, k: &Rat) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| k * a).collect(),
        }
    }

    /// AB − BA.
    pub fn commutator(&self, other: &Mat) -> Mat {
        self.mul(other).sub(&other.mul(self))
    }
}

// ---------------------------------------------------------------------------
// rank via fraction-free elimination

/// Rank by Bareiss fraction-free Gaussian elimination.
///
/// Rows are first cleared of denominators (rank is invariant under row
/// scaling); the elimination then stays in BigInt with exact divisions by the
/// previous pivot.
pub fn rank(m: &Mat) -> usize {
    let rows = m.rows;
    let cols = m.cols;
    if rows == 0 || cols == 0 {
        return 0;
    }
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(rows);
    for i in 0..rows {
        let mut l = BigInt::one();
        for j in 0..cols {
            l = l.lcm(m.get(i, j).denom());
        }
        a.push(
            (0..cols)
                .map(|j| {
                    let r = m.get(i, j);
                    r.numer() * (&l / r.denom())
                })
                .collect(),
        );
    }

    let mut prev = BigInt::one();
    let mut r = 0usize;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let num = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                a[i][j] = num / &prev; // exact by the Sylvester identity
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

// ---------------------------------------------------------------------------
// solving

#[derive(Debug, Clone, PartialEq)]
pub enum SolveOutcome {
    /// The pivot solution: free variables are zero.
    Solution(Vec<Rat>),
    /// No solution; the augmented rank certifies it exceeds the matrix rank.
    Infeasible { rank: usize, rank_augmented: usize },
}

/// Solves `a x = b` by rational Gauss-Jordan elimination.
pub fn solve(a: &Mat, b: &[Rat]) -> SolveOutcome {
    assert_eq!(a.rows, b.len(), "rhs length");
    let rows = a.rows;
    let cols = a.cols;
    let mut m: Vec<Vec<Rat>> = (0..rows)
        .map(|i| {
            let mut row = a.row(i).to_vec();
            row.push(b[i].clone());
            row
        })
        .collect();

    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut r = 0usize;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].clone();
        for j in c..=cols {
            let v = &m[r][j] / &inv;
            m[r][j] = v;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=cols {
                    let v = &m[i][j] - &f * &m[r][j];
                    m[i][j] = v;
                }
            }
        }
        pivots.push((r, c));
        r += 1;
    }

    // Inconsistent row: all-zero coefficients with nonzero rhs.
    for row in m.iter().skip(r) {
        if !row[cols].is_zero() {
            return SolveOutcome::Infeasible {
                rank: r,
                rank_augmented: r + 1,
            };
        }
    }

    let mut x = vzero(cols);
    for &(pr, pc) in &pivots {
        x[pc] = m[pr][cols].clone();
    }
    SolveOutcome::Solution(x)
}
