//! Wedge-square bases and shuffle enumeration.

use crate::scalar::Rat;
use num_traits::Zero;

/// Basis of `∧²K^n`: index pairs `(i, j)` with `i < j` in lexicographic
/// order. Arbitrary wedges decompose through `e_j ∧ e_i = −e_i ∧ e_j` and
/// `e_i ∧ e_i = 0`.
#[derive(Debug, Clone)]
pub struct WedgeBasis {
    pub dim: usize,
    pub pairs: Vec<(usize, usize)>,
}

pub fn wedge_dim(n: usize) -> usize {
    n * (n.max(1) - 1) / 2
}

impl WedgeBasis {
    pub fn new(dim: usize) -> Self {
        let mut pairs = Vec::with_capacity(wedge_dim(dim));
        for i in 0..dim {
            for j in i + 1..dim {
                pairs.push((i, j));
            }
        }
        WedgeBasis { dim, pairs }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pair(&self, k: usize) -> (usize, usize) {
        self.pairs[k]
    }

    /// Index of `e_i ∧ e_j` for `i < j`.
    pub fn index_of(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < self.dim);
        // Offset of block i, then j within it.
        i * self.dim - i * (i + 1) / 2 + (j - i - 1)
    }

    /// Coordinates of `x ∧ y` over the wedge basis.
    pub fn decompose(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.len()];
        for (k, &(i, j)) in self.pairs.iter().enumerate() {
            let v = &x[i] * &y[j] - &x[j] * &y[i];
            if !v.is_zero() {
                out[k] = v;
            }
        }
        out
    }

    /// Sparse coordinates of `e_i ∧ v`.
    pub fn decompose_basis_vec(&self, i: usize, v: &[Rat]) -> Vec<(usize, Rat)> {
        let mut out = Vec::new();
        for (j, c) in v.iter().enumerate() {
            if c.is_zero() || j == i {
                continue;
            }
            if i < j {
                out.push((self.index_of(i, j), c.clone()));
            } else {
                out.push((self.index_of(j, i), -c.clone()));
            }
        }
        out
    }

    /// Sparse coordinates of `v ∧ e_j`.
    pub fn decompose_vec_basis(&self, v: &[Rat], j: usize) -> Vec<(usize, Rat)> {
        let mut out = self.decompose_basis_vec(j, v);
        for (_, c) in &mut out {
            *c = -c.clone();
        }
        out
    }
}

/// An `(i, n−i)`-shuffle: `first` and `second` are the two sorted blocks of
/// `0..n` and `sign` is the parity of the inversion count of the assembled
/// permutation `(first, second)`.
#[derive(Debug, Clone)]
pub struct Shuffle {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
    pub sign: i32,
}

/// All `(i, n−i)`-shuffles of `0..n`, in lexicographic order of the first
/// block. For `i = 0` or `i = n` this is just the identity.
pub fn shuffles(i: usize, n: usize) -> Vec<Shuffle> {
    debug_assert!(i <= n);
    let mut out = Vec::new();
    let mut pick: Vec<usize> = (0..i).collect();
    loop {
        let first = pick.clone();
        let second: Vec<usize> = (0..n).filter(|k| !first.contains(k)).collect();
        // Inversions: pairs (a, b) with a in the first block placed before a
        // smaller b in the second block.
        let mut inv = 0usize;
        for &a in &first {
            inv += second.iter().filter(|&&b| b < a).count();
        }
        out.push(Shuffle {
            first,
            second,
            sign: if inv % 2 == 0 { 1 } else { -1 },
        });

        // Next i-subset of 0..n in lexicographic order.
        if i == 0 {
            break;
        }
        let mut k = i;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if pick[k] != n - i + k {
                break;
            }
        }
        if pick[k] == n - i + k {
            return out;
        }
        pick[k] += 1;
        for l in k + 1..i {
            pick[l] = pick[l - 1] + 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat_int, zero};

    #[test]
    fn wedge_index_round_trip() {
        for n in 0..7 {
            let w = WedgeBasis::new(n);
            assert_eq!(w.len(), wedge_dim(n));
            for (k, &(i, j)) in w.pairs.iter().enumerate() {
                assert_eq!(w.index_of(i, j), k);
            }
        }
    }

    #[test]
    fn decompose_is_antisymmetric() {
        let w = WedgeBasis::new(4);
        let x = vec![rat_int(1), rat_int(2), zero(), rat_int(-1)];
        let y = vec![rat_int(3), zero(), rat_int(1), rat_int(5)];
        let xy = w.decompose(&x, &y);
        let yx = w.decompose(&y, &x);
        for (a, b) in xy.iter().zip(&yx) {
            assert_eq!(a, &(-b));
        }
        assert!(w.decompose(&x, &x).iter().all(|c| c.is_zero()));
    }

    /// Oracle: enumerate all n! permutations, filter the shuffles, compare
    /// count and signs against the subset enumeration.
    #[test]
    fn shuffles_match_factorial_enumeration() {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        fn parity(p: &[usize]) -> i32 {
            let mut inv = 0;
            for a in 0..p.len() {
                for b in a + 1..p.len() {
                    if p[a] > p[b] {
                        inv += 1;
                    }
                }
            }
            if inv % 2 == 0 {
                1
            } else {
                -1
            }
        }
        for n in 0..=6 {
            for i in 0..=n {
                let enumerated = shuffles(i, n);
                let brute: Vec<Vec<usize>> = perms(n)
                    .into_iter()
                    .filter(|p| p[..i].windows(2).all(|w| w[0] < w[1]))
                    .filter(|p| p[i..].windows(2).all(|w| w[0] < w[1]))
                    .collect();
                assert_eq!(enumerated.len(), brute.len());
                for s in &enumerated {
                    let assembled: Vec<usize> =
                        s.first.iter().chain(s.second.iter()).copied().collect();
                    assert!(brute.contains(&assembled));
                    assert_eq!(
                        s.sign,
                        parity(&assembled),
                        "sign mismatch for {assembled:?}"
                    );
                }
            }
        }
    }
}
