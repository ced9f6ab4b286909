//! Associative algebras and the Lie-Yamaguti structures they induce,
//! including the truncated polynomial construction with its integral-style
//! Rota-Baxter operator.

use crate::algebra::LyAlgebra;
use crate::error::LyError;
use crate::linalg::{vaxpy, vzero, Mat};
use crate::scalar::{rat, Rat};
use num_traits::Zero;

/// An associative algebra by structure constants: `mult[i][j]` holds the
/// coordinates of `e_i · e_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct AssocAlgebra {
    pub dim: usize,
    mult: Vec<Rat>, // [i][j][out]
}

impl AssocAlgebra {
    pub fn from_tensor(dim: usize, mult: Vec<Rat>) -> Result<Self, LyError> {
        if mult.len() != dim * dim * dim {
            return Err(LyError::DimensionMismatch(
                "multiplication tensor length must be dim^3".into(),
            ));
        }
        Ok(AssocAlgebra { dim, mult })
    }

    /// The full `k × k` matrix algebra in the basis of matrix units
    /// `E_{ab}` (row-major), with `E_{ab} E_{cd} = δ_{bc} E_{ad}`.
    pub fn matrix_algebra(k: usize) -> Self {
        let dim = k * k;
        let mut mult = vzero(dim * dim * dim);
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    for d in 0..k {
                        if b == c {
                            let i = a * k + b;
                            let j = c * k + d;
                            let out = a * k + d;
                            mult[(i * dim + j) * dim + out] = num_traits::One::one();
                        }
                    }
                }
            }
        }
        AssocAlgebra { dim, mult }
    }

    /// The ground field as a 1-dimensional algebra.
    pub fn scalar_field() -> Self {
        AssocAlgebra {
            dim: 1,
            mult: vec![num_traits::One::one()],
        }
    }

    pub fn product_at(&self, i: usize, j: usize) -> &[Rat] {
        let n = self.dim;
        &self.mult[(i * n + j) * n..(i * n + j) * n + n]
    }

    pub fn product(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let mut out = vzero(self.dim);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if !b.is_zero() {
                    vaxpy(&mut out, &(a * b), self.product_at(i, j));
                }
            }
        }
        out
    }

    /// Exact associativity check on all basis triples.
    pub fn is_associative(&self) -> bool {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let ij = self.product_at(i, j).to_vec();
                for k in 0..n {
                    let mut lhs = vzero(n);
                    for (p, c) in ij.iter().enumerate() {
                        if !c.is_zero() {
                            vaxpy(&mut lhs, c, self.product_at(p, k));
                        }
                    }
                    let jk = self.product_at(j, k).to_vec();
                    let mut rhs = vzero(n);
                    for (p, c) in jk.iter().enumerate() {
                        if !c.is_zero() {
                            vaxpy(&mut rhs, c, self.product_at(i, p));
                        }
                    }
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// The Lie-Yamaguti algebra with `[x,y] = xy − yx` and `⟦x,y,z⟧ = [[x,y],z]`.
pub fn lya_from_associative(a: &AssocAlgebra) -> Result<LyAlgebra, LyError> {
    if !a.is_associative() {
        return Err(LyError::NotAssociative);
    }
    let n = a.dim;
    let mut binary = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut v = a.product_at(i, j).to_vec();
            for (out, c) in a.product_at(j, i).iter().enumerate() {
                v[out] -= c;
            }
            binary.push(v);
        }
    }
    let mut bin_flat = vzero(n * n * n);
    let mut ter_flat = vzero(n * n * n * n);
    for i in 0..n {
        for j in 0..n {
            for (out, c) in binary[i * n + j].iter().enumerate() {
                bin_flat[(i * n + j) * n + out] = c.clone();
            }
            for k in 0..n {
                // [[e_i, e_j], e_k]
                let mut v = vzero(n);
                for (p, c) in binary[i * n + j].iter().enumerate() {
                    if !c.is_zero() {
                        vaxpy(&mut v, c, &binary[p * n + k]);
                    }
                }
                for (out, c) in v.iter().enumerate() {
                    ter_flat[((i * n + j) * n + k) * n + out] = c.clone();
                }
            }
        }
    }
    LyAlgebra::from_tensors(n, bin_flat, ter_flat)
}

/// The Lie-Yamaguti algebra on `A[ν]/(ν^{N+1})` with degree-graded
/// commutator brackets, together with the truncated integral operator
/// `Ω(a ν^i) = a ν^{i+1} / (i+1)` (and zero on the top degree).
///
/// Basis ordering: degree-major, so index `i * dim(A) + a` is `e_a ν^i`.
/// The operator is a Rota-Baxter operator with respect to the adjoint
/// representation; truncation is a quotient preserved by the operator.
pub fn truncated_series_rb(a: &AssocAlgebra, degree: usize) -> Result<(LyAlgebra, Mat), LyError> {
    if !a.is_associative() {
        return Err(LyError::NotAssociative);
    }
    let d = a.dim;
    let n = (degree + 1) * d;
    let mut mult = vzero(n * n * n);
    for di in 0..=degree {
        for dj in 0..=degree {
            if di + dj > degree {
                continue;
            }
            for x in 0..d {
                for y in 0..d {
                    let i = di * d + x;
                    let j = dj * d + y;
                    for (out, c) in a.product_at(x, y).iter().enumerate() {
                        if !c.is_zero() {
                            mult[(i * n + j) * n + ((di + dj) * d + out)] = c.clone();
                        }
                    }
                }
            }
        }
    }
    let series = AssocAlgebra::from_tensor(n, mult)?;
    let lya = lya_from_associative(&series)?;

    let mut omega = Mat::zero(n, n);
    for di in 0..degree {
        for x in 0..d {
            omega.set((di + 1) * d + x, di * d + x, rat(1, (di + 1) as i64));
        }
    }
    Ok((lya, omega))
}
