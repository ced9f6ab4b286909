//! Lie-Yamaguti algebras and their representations, given by exact
//! structure-constant tensors, with exhaustive axiom verification over basis
//! tuples (multilinearity makes basis tuples sufficient).

use crate::error::LyError;
use crate::linalg::{vadd_assign, vaxpy, vsub_assign, vzero, Mat};
use crate::report::{CheckBuilder, Report};
use crate::scalar::Rat;
use num_traits::Zero;

/// A Lie-Yamaguti algebra on `K^dim`.
///
/// `binary[i][j]` holds the coordinates of the bracket of `e_i` and `e_j`;
/// `ternary[i][j][k]` those of the trilinear bracket of `(e_i, e_j, e_k)`.
/// Both tensors are skew in `(i, j)`; constructors normalize input given for
/// `i < j` and [`LyAlgebra::verify`] rejects tensors violating skewness.
#[derive(Debug, Clone, PartialEq)]
pub struct LyAlgebra {
    pub dim: usize,
    binary: Vec<Rat>,  // [i][j][out], n^3
    ternary: Vec<Rat>, // [i][j][k][out], n^4
}

impl LyAlgebra {
    /// The abelian algebra: both brackets vanish.
    pub fn abelian(dim: usize) -> Self {
        LyAlgebra {
            dim,
            binary: vzero(dim * dim * dim),
            ternary: vzero(dim * dim * dim * dim),
        }
    }

    /// Builds from sparse bracket entries. Binary entries require `i < j`,
    /// ternary entries `i < j` (the third slot is free); the skew mirror
    /// images are filled in automatically.
    pub fn from_brackets(
        dim: usize,
        binary: &[(usize, usize, Vec<Rat>)],
        ternary: &[(usize, usize, usize, Vec<Rat>)],
    ) -> Result<Self, LyError> {
        let mut alg = LyAlgebra::abelian(dim);
        for (i, j, v) in binary {
            if *i >= *j || *j >= dim {
                return Err(LyError::Structure(format!(
                    "binary entry ({i},{j}) must satisfy i < j < dim"
                )));
            }
            if v.len() != dim {
                return Err(LyError::DimensionMismatch(format!(
                    "binary value for ({i},{j}) has length {}, want {dim}",
                    v.len()
                )));
            }
            for (out, c) in v.iter().enumerate() {
                alg.binary[Self::b_idx(dim, *i, *j, out)] = c.clone();
                alg.binary[Self::b_idx(dim, *j, *i, out)] = -c.clone();
            }
        }
        for (i, j, k, v) in ternary {
            if *i >= *j || *j >= dim || *k >= dim {
                return Err(LyError::Structure(format!(
                    "ternary entry ({i},{j},{k}) must satisfy i < j < dim, k < dim"
                )));
            }
            if v.len() != dim {
                return Err(LyError::DimensionMismatch(format!(
                    "ternary value for ({i},{j},{k}) has length {}, want {dim}",
                    v.len()
                )));
            }
            for (out, c) in v.iter().enumerate() {
                alg.ternary[Self::t_idx(dim, *i, *j, *k, out)] = c.clone();
                alg.ternary[Self::t_idx(dim, *j, *i, *k, out)] = -c.clone();
            }
        }
        Ok(alg)
    }

    /// Builds from dense tensors without normalization; skewness is checked
    /// by [`LyAlgebra::verify`].
    pub fn from_tensors(dim: usize, binary: Vec<Rat>, ternary: Vec<Rat>) -> Result<Self, LyError> {
        if binary.len() != dim * dim * dim || ternary.len() != dim * dim * dim * dim {
            return Err(LyError::DimensionMismatch(
                "tensor lengths do not match the dimension".into(),
            ));
        }
        Ok(LyAlgebra {
            dim,
            binary,
            ternary,
        })
    }

    fn b_idx(n: usize, i: usize, j: usize, out: usize) -> usize {
        (i * n + j) * n + out
    }

    fn t_idx(n: usize, i: usize, j: usize, k: usize, out: usize) -> usize {
        ((i * n + j) * n + k) * n + out
    }

    /// Coordinates of the bracket of `(e_i, e_j)`.
    pub fn binary_at(&self, i: usize, j: usize) -> &[Rat] {
        let n = self.dim;
        &self.binary[Self::b_idx(n, i, j, 0)..Self::b_idx(n, i, j, 0) + n]
    }

    /// Coordinates of the trilinear bracket of `(e_i, e_j, e_k)`.
    pub fn ternary_at(&self, i: usize, j: usize, k: usize) -> &[Rat] {
        let n = self.dim;
        &self.ternary[Self::t_idx(n, i, j, k, 0)..Self::t_idx(n, i, j, k, 0) + n]
    }

    /// Bilinear extension of the binary bracket.
    pub fn eval_binary(&self, x: &[Rat], y: &[Rat]) -> Result<Vec<Rat>, LyError> {
        self.check_vec(x)?;
        self.check_vec(y)?;
        let mut out = vzero(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let k = xi * yj;
                vaxpy(&mut out, &k, self.binary_at(i, j));
            }
        }
        Ok(out)
    }

    /// Trilinear extension of the ternary bracket.
    pub fn eval_ternary(&self, x: &[Rat], y: &[Rat], z: &[Rat]) -> Result<Vec<Rat>, LyError> {
        self.check_vec(x)?;
        self.check_vec(y)?;
        self.check_vec(z)?;
        let mut out = vzero(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let xy = xi * yj;
                for (k, zk) in z.iter().enumerate() {
                    if zk.is_zero() {
                        continue;
                    }
                    let c = &xy * zk;
                    vaxpy(&mut out, &c, self.ternary_at(i, j, k));
                }
            }
        }
        Ok(out)
    }

    fn check_vec(&self, v: &[Rat]) -> Result<(), LyError> {
        if v.len() != self.dim {
            return Err(LyError::DimensionMismatch(format!(
                "vector length {} in algebra of dimension {}",
                v.len(),
                self.dim
            )));
        }
        Ok(())
    }

    fn stored_skew_ok(&self) -> Result<(), LyError> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for out in 0..n {
                    let b = &self.binary[Self::b_idx(n, i, j, out)]
                        + &self.binary[Self::b_idx(n, j, i, out)];
                    if !b.is_zero() {
                        return Err(LyError::Structure(format!(
                            "binary tensor not skew at ({i},{j})"
                        )));
                    }
                    for k in 0..n {
                        let t = &self.ternary[Self::t_idx(n, i, j, k, out)]
                            + &self.ternary[Self::t_idx(n, j, i, k, out)];
                        if !t.is_zero() {
                            return Err(LyError::Structure(format!(
                                "ternary tensor not skew at ({i},{j},{k})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Checks the four defining axioms on every basis tuple and reports the
    /// first counterexample per axiom. Fails with [`LyError::Structure`] if
    /// the stored tensors are not skew.
    pub fn verify(&self) -> Result<Report, LyError> {
        self.stored_skew_ok()?;
        let n = self.dim;
        let mut a1 = CheckBuilder::new("axiom1_cyclic_sum");
        let mut a2 = CheckBuilder::new("axiom2_ternary_cyclic");
        let mut a3 = CheckBuilder::new("axiom3_binary_derivation");
        let mut a4 = CheckBuilder::new("axiom4_ternary_derivation");

        let b = |i: usize, j: usize| self.binary_at(i, j);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    // Axiom 1: cyclic sum of double binary brackets plus the
                    // cyclic sum of the ternary bracket vanishes.
                    let mut r = vzero(n);
                    for &(p, q, s) in &[(x, y, z), (y, z, x), (z, x, y)] {
                        let inner = b(p, q).to_vec();
                        let mut ev = vzero(n);
                        for (k, c) in inner.iter().enumerate() {
                            vaxpy(&mut ev, c, b(k, s));
                        }
                        vadd_assign(&mut r, &ev);
                        vadd_assign(&mut r, self.ternary_at(p, q, s));
                    }
                    a1.observe(&[x, y, z], &r);

                    for w in 0..n {
                        // Axiom 2: cyclic sum of the ternary bracket applied
                        // to a binary bracket in the first slot vanishes.
                        let mut r = vzero(n);
                        for &(p, q, s) in &[(x, y, z), (y, z, x), (z, x, y)] {
                            let inner = b(p, q).to_vec();
                            for (k, c) in inner.iter().enumerate() {
                                if !c.is_zero() {
                                    vaxpy(&mut r, c, self.ternary_at(k, s, w));
                                }
                            }
                        }
                        a2.observe(&[x, y, z, w], &r);

                        // Axiom 3: the ternary action of (x, y) is a
                        // derivation of the binary bracket.
                        let mut lhs = vzero(n);
                        for (k, c) in b(z, w).iter().enumerate() {
                            if !c.is_zero() {
                                vaxpy(&mut lhs, c, self.ternary_at(x, y, k));
                            }
                        }
                        let mut rhs = vzero(n);
                        for (k, c) in self.ternary_at(x, y, z).iter().enumerate() {
                            if !c.is_zero() {
                                vaxpy(&mut rhs, c, b(k, w));
                            }
                        }
                        for (k, c) in self.ternary_at(x, y, w).iter().enumerate() {
                            if !c.is_zero() {
                                vaxpy(&mut rhs, c, b(z, k));
                            }
                        }
                        vsub_assign(&mut lhs, &rhs);
                        a3.observe(&[x, y, z, w], &lhs);

                        // Axiom 4: the ternary action of (x, y) is a
                        // derivation of the ternary bracket.
                        for t in 0..n {
                            let mut lhs = vzero(n);
                            for (k, c) in self.ternary_at(z, w, t).iter().enumerate() {
                                if !c.is_zero() {
                                    vaxpy(&mut lhs, c, self.ternary_at(x, y, k));
                                }
                            }
                            let mut rhs = vzero(n);
                            for (k, c) in self.ternary_at(x, y, z).iter().enumerate() {
                                if !c.is_zero() {
                                    vaxpy(&mut rhs, c, self.ternary_at(k, w, t));
                                }
                            }
                            for (k, c) in self.ternary_at(x, y, w).iter().enumerate() {
                                if !c.is_zero() {
                                    vaxpy(&mut rhs, c, self.ternary_at(z, k, t));
                                }
                            }
                            for (k, c) in self.ternary_at(x, y, t).iter().enumerate() {
                                if !c.is_zero() {
                                    vaxpy(&mut rhs, c, self.ternary_at(z, w, k));
                                }
                            }
                            vsub_assign(&mut lhs, &rhs);
                            a4.observe(&[x, y, z, w, t], &lhs);
                        }
                    }
                }
            }
        }

        let mut report = Report::new();
        report.push(a1.finish());
        report.push(a2.finish());
        report.push(a3.finish());
        report.push(a4.finish());
        Ok(report)
    }

    pub fn is_verified(&self) -> bool {
        matches!(self.verify(), Ok(r) if r.passed())
    }

    /// The matrix of `z ↦ [e_i, z]`.
    pub fn ad_matrix(&self, i: usize) -> Mat {
        Mat::from_fn(self.dim, self.dim, |out, k| {
            self.binary_at(i, k)[out].clone()
        })
    }

    /// The matrix of `z ↦ ⟦X, z⟧` for a wedge element `X` given by
    /// coordinates over the wedge basis of this algebra.
    pub fn wedge_action(&self, wedge: &crate::wedge::WedgeBasis, x: &[Rat]) -> Mat {
        let mut m = Mat::zero(self.dim, self.dim);
        for (idx, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (i, j) = wedge.pair(idx);
            for k in 0..self.dim {
                let col = self.ternary_at(i, j, k);
                for out in 0..self.dim {
                    if !col[out].is_zero() {
                        let v = m.get(out, k) + c * &col[out];
                        m.set(out, k, v);
                    }
                }
            }
        }
        m
    }
}

/// A representation `(V; rho, mu)` of a Lie-Yamaguti algebra.
///
/// `rho[i]` is the action of `e_i` on `V`; `mu[i*n + j]` the action of
/// `(e_i, e_j)`. The derived skew action `D` is computed once at
/// construction from its defining formula.
#[derive(Debug, Clone, PartialEq)]
pub struct Representation {
    pub base_dim: usize,
    pub module_dim: usize,
    rho: Vec<Mat>,
    mu: Vec<Mat>,
    d: Vec<Mat>,
}

impl Representation {
    pub fn new(
        alg: &LyAlgebra,
        module_dim: usize,
        rho: Vec<Mat>,
        mu: Vec<Mat>,
    ) -> Result<Self, LyError> {
        let n = alg.dim;
        if rho.len() != n || mu.len() != n * n {
            return Err(LyError::DimensionMismatch(
                "need one rho matrix per basis vector and one mu matrix per basis pair".into(),
            ));
        }
        for m in rho.iter().chain(mu.iter()) {
            if m.rows != module_dim || m.cols != module_dim {
                return Err(LyError::DimensionMismatch(
                    "action matrices must be module_dim x module_dim".into(),
                ));
            }
        }
        // D(x, y) = mu(y, x) − mu(x, y) + [rho(x), rho(y)] − rho([x, y]).
        let mut d = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut m = mu[j * n + i].sub(&mu[i * n + j]);
                m = m.add(&rho[i].commutator(&rho[j]));
                for (k, c) in alg.binary_at(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        m = m.sub(&rho[k].scale(c));
                    }
                }
                d.push(m);
            }
        }
        Ok(Representation {
            base_dim: n,
            module_dim,
            rho,
            mu,
            d,
        })
    }

    /// The zero representation on a module of the given dimension.
    pub fn zero(alg: &LyAlgebra, module_dim: usize) -> Self {
        let n = alg.dim;
        let z = Mat::zero(module_dim, module_dim);
        Representation::new(alg, module_dim, vec![z.clone(); n], vec![z; n * n])
            .expect("zero representation is well-formed")
    }

    pub fn rho_at(&self, i: usize) -> &Mat {
        &self.rho[i]
    }

    pub fn mu_at(&self, i: usize, j: usize) -> &Mat {
        &self.mu[i * self.base_dim + j]
    }

    pub fn d_at(&self, i: usize, j: usize) -> &Mat {
        &self.d[i * self.base_dim + j]
    }

    /// Bilinear extension of `rho` to an arbitrary algebra element.
    pub fn rho_of(&self, x: &[Rat]) -> Mat {
        let mut m = Mat::zero(self.module_dim, self.module_dim);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                m = m.add(&self.rho[i].scale(c));
            }
        }
        m
    }

    /// Bilinear extension of `mu`.
    pub fn mu_of(&self, x: &[Rat], y: &[Rat]) -> Mat {
        let mut m = Mat::zero(self.module_dim, self.module_dim);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if !b.is_zero() {
                    m = m.add(&self.mu_at(i, j).scale(&(a * b)));
                }
            }
        }
        m
    }

    /// Bilinear extension of the derived action `D`.
    pub fn d_of(&self, x: &[Rat], y: &[Rat]) -> Mat {
        let mut m = Mat::zero(self.module_dim, self.module_dim);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if !b.is_zero() {
                    m = m.add(&self.d_at(i, j).scale(&(a * b)));
                }
            }
        }
        m
    }

    /// `D` of a wedge element given by coordinates over the wedge basis.
    pub fn d_of_wedge(&self, wedge: &crate::wedge::WedgeBasis, x: &[Rat]) -> Mat {
        let mut m = Mat::zero(self.module_dim, self.module_dim);
        for (idx, c) in x.iter().enumerate() {
            if !c.is_zero() {
                let (i, j) = wedge.pair(idx);
                m = m.add(&self.d_at(i, j).scale(c));
            }
        }
        m
    }

    /// Checks the five defining equations plus the three derived identities
    /// (reported as internal-consistency faults: they are implied by the
    /// defining ones) and skewness of `D`.
    pub fn verify(&self, alg: &LyAlgebra) -> Result<Report, LyError> {
        if alg.dim != self.base_dim {
            return Err(LyError::DimensionMismatch(
                "representation belongs to an algebra of different dimension".into(),
            ));
        }
        let n = self.base_dim;
        let mut e1 = CheckBuilder::new("rep1_mu_of_bracket_first");
        let mut e2 = CheckBuilder::new("rep2_mu_of_bracket_second");
        let mut e3 = CheckBuilder::new("rep3_rho_of_ternary");
        let mut e4 = CheckBuilder::new("rep4_mu_mu_coherence");
        let mut e5 = CheckBuilder::new("rep5_d_derivation_of_mu");
        let mut dskew = CheckBuilder::new("d_skew_symmetry");

        let flat = |m: &Mat| -> Vec<Rat> {
            let mut v = Vec::with_capacity(m.rows * m.cols);
            for i in 0..m.rows {
                v.extend(m.row(i).iter().cloned());
            }
            v
        };

        for x in 0..n {
            for y in 0..n {
                let d_xy = self.d_at(x, y).add(self.d_at(y, x));
                dskew.observe(&[x, y], &flat(&d_xy));
                for z in 0..n {
                    // mu([x,y], z) − mu(x,z) rho(y) + mu(y,z) rho(x) = 0
                    let mut m = self.mu_of(alg.binary_at(x, y), &unit(n, z));
                    m = m.sub(&self.mu_at(x, z).mul(self.rho_at(y)));
                    m = m.add(&self.mu_at(y, z).mul(self.rho_at(x)));
                    e1.observe(&[x, y, z], &flat(&m));

                    // mu(x, [y,z]) − rho(y) mu(x,z) + rho(z) mu(x,y) = 0
                    let mut m = self.mu_of(&unit(n, x), alg.binary_at(y, z));
                    m = m.sub(&self.rho_at(y).mul(self.mu_at(x, z)));
                    m = m.add(&self.rho_at(z).mul(self.mu_at(x, y)));
                    e2.observe(&[x, y, z], &flat(&m));

                    // rho(⟦x,y,z⟧) = [D(x,y), rho(z)]
                    let mut m = self.rho_of(alg.ternary_at(x, y, z));
                    m = m.sub(&self.d_at(x, y).commutator(self.rho_at(z)));
                    e3.observe(&[x, y, z], &flat(&m));

                    for w in 0..n {
                        // mu(z,w) mu(x,y) − mu(y,w) mu(x,z) − mu(x, ⟦y,z,w⟧)
                        //   + D(y,z) mu(x,w) = 0
                        let mut m = self.mu_at(z, w).mul(self.mu_at(x, y));
                        m = m.sub(&self.mu_at(y, w).mul(self.mu_at(x, z)));
                        m = m.sub(&self.mu_of(&unit(n, x), alg.ternary_at(y, z, w)));
                        m = m.add(&self.d_at(y, z).mul(self.mu_at(x, w)));
                        e4.observe(&[x, y, z, w], &flat(&m));

                        // mu(⟦x,y,z⟧, w) + mu(z, ⟦x,y,w⟧) = [D(x,y), mu(z,w)]
                        let mut m = self.mu_of(alg.ternary_at(x, y, z), &unit(n, w));
                        m = m.add(&self.mu_of(&unit(n, z), alg.ternary_at(x, y, w)));
                        m = m.sub(&self.d_at(x, y).commutator(self.mu_at(z, w)));
                        e5.observe(&[x, y, z, w], &flat(&m));
                    }
                }
            }
        }

        // Derived identities; failures here with passing defining equations
        // would indicate an internal inconsistency.
        let mut g1 = CheckBuilder::new("derived_d_of_bracket_cyclic");
        let mut g2 = CheckBuilder::new("derived_d_of_ternary");
        let mut g3 = CheckBuilder::new("derived_mu_of_ternary");
        g1.note("implied identity; failure is an internal-consistency fault");
        g2.note("implied identity; failure is an internal-consistency fault");
        g3.note("implied identity; failure is an internal-consistency fault");
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    // D([x,y], z) + D([y,z], x) + D([z,x], y) = 0
                    let mut m = self.d_of(alg.binary_at(x, y), &unit(n, z));
                    m = m.add(&self.d_of(alg.binary_at(y, z), &unit(n, x)));
                    m = m.add(&self.d_of(alg.binary_at(z, x), &unit(n, y)));
                    g1.observe(&[x, y, z], &flat(&m));
                    for w in 0..n {
                        // D(⟦x,y,z⟧, w) + D(z, ⟦x,y,w⟧) = [D(x,y), D(z,w)]
                        let mut m = self.d_of(alg.ternary_at(x, y, z), &unit(n, w));
                        m = m.add(&self.d_of(&unit(n, z), alg.ternary_at(x, y, w)));
                        m = m.sub(&self.d_at(x, y).commutator(self.d_at(z, w)));
                        g2.observe(&[x, y, z, w], &flat(&m));

                        // mu(⟦x,y,z⟧, w) = mu(x,w) mu(z,y) − mu(y,w) mu(z,x)
                        //   − mu(z,w) D(x,y)
                        let mut m = self.mu_of(alg.ternary_at(x, y, z), &unit(n, w));
                        m = m.sub(&self.mu_at(x, w).mul(self.mu_at(z, y)));
                        m = m.add(&self.mu_at(y, w).mul(self.mu_at(z, x)));
                        m = m.add(&self.mu_at(z, w).mul(self.d_at(x, y)));
                        g3.observe(&[x, y, z, w], &flat(&m));
                    }
                }
            }
        }

        let mut report = Report::new();
        for c in [e1, e2, e3, e4, e5, dskew, g1, g2, g3] {
            report.push(c.finish());
        }
        Ok(report)
    }

    pub fn is_verified(&self, alg: &LyAlgebra) -> bool {
        matches!(self.verify(alg), Ok(r) if r.passed())
    }
}

fn unit(n: usize, i: usize) -> Vec<Rat> {
    let mut v = vzero(n);
    v[i] = num_traits::One::one();
    v
}

/// Basis vector `e_i` of `K^n`.
pub fn basis_vec(n: usize, i: usize) -> Vec<Rat> {
    unit(n, i)
}

/// The adjoint representation: `rho = ad` and `mu(x, y) z = ⟦z, x, y⟧`.
/// Its derived action satisfies `D(x, y) z = ⟦x, y, z⟧`.
pub fn adjoint_representation(alg: &LyAlgebra) -> Representation {
    let n = alg.dim;
    let rho: Vec<Mat> = (0..n).map(|i| alg.ad_matrix(i)).collect();
    let mut mu = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            mu.push(Mat::from_fn(n, n, |out, k| {
                alg.ternary_at(k, i, j)[out].clone()
            }));
        }
    }
    Representation::new(alg, n, rho, mu).expect("adjoint shapes are consistent")
}

/// The semidirect product algebra on `g ⊕ V` encoding the representation.
pub fn semidirect_product(alg: &LyAlgebra, rep: &Representation) -> LyAlgebra {
    let n = alg.dim;
    let m = rep.module_dim;
    let total = n + m;
    let mut binary = vzero(total * total * total);
    let mut ternary = vzero(total * total * total * total);
    let bi = |i: usize, j: usize, out: usize| (i * total + j) * total + out;
    let ti = |i: usize, j: usize, k: usize, out: usize| ((i * total + j) * total + k) * total + out;

    for i in 0..total {
        for j in 0..total {
            // [x+u, y+v] = [x,y] + rho(x)v − rho(y)u
            if i < n && j < n {
                for (out, c) in alg.binary_at(i, j).iter().enumerate() {
                    binary[bi(i, j, out)] = c.clone();
                }
            } else if i < n {
                let v = j - n;
                for out in 0..m {
                    binary[bi(i, j, n + out)] = rep.rho_at(i).get(out, v).clone();
                }
            } else if j < n {
                let u = i - n;
                for out in 0..m {
                    binary[bi(i, j, n + out)] = -rep.rho_at(j).get(out, u).clone();
                }
            }

            for k in 0..total {
                // ⟦x+u, y+v, z+w⟧ = ⟦x,y,z⟧ + D(x,y)w + mu(y,z)u − mu(x,z)v
                match (i < n, j < n, k < n) {
                    (true, true, true) => {
                        for (out, c) in alg.ternary_at(i, j, k).iter().enumerate() {
                            ternary[ti(i, j, k, out)] = c.clone();
                        }
                    }
                    (true, true, false) => {
                        let w = k - n;
                        for out in 0..m {
                            ternary[ti(i, j, k, n + out)] = rep.d_at(i, j).get(out, w).clone();
                        }
                    }
                    (false, true, true) => {
                        let u = i - n;
                        for out in 0..m {
                            ternary[ti(i, j, k, n + out)] = rep.mu_at(j, k).get(out, u).clone();
                        }
                    }
                    (true, false, true) => {
                        let v = j - n;
                        for out in 0..m {
                            ternary[ti(i, j, k, n + out)] = -rep.mu_at(i, k).get(out, v).clone();
                        }
                    }
                    _ => {}
                }
            }
        }
    }
    LyAlgebra {
        dim: total,
        binary,
        ternary,
    }
}

/// Checks the two Nijenhuis operator identities on all basis tuples.
pub fn nijenhuis_operator_report(alg: &LyAlgebra, n_op: &Mat) -> Result<Report, LyError> {
    let n = alg.dim;
    if n_op.rows != n || n_op.cols != n {
        return Err(LyError::DimensionMismatch(
            "Nijenhuis operator must be square of the algebra dimension".into(),
        ));
    }
    let nx: Vec<Vec<Rat>> = (0..n).map(|i| n_op.col(i)).collect();
    let mut c1 = CheckBuilder::new("nijenhuis_binary");
    let mut c2 = CheckBuilder::new("nijenhuis_ternary");
    for x in 0..n {
        let ex = unit(n, x);
        for y in 0..n {
            let ey = unit(n, y);
            // [Nx, Ny] − N([Nx, y] + [x, Ny] − N[x, y])
            let mut lhs = alg.eval_binary(&nx[x], &nx[y])?;
            let mut inner = alg.eval_binary(&nx[x], &ey)?;
            vadd_assign(&mut inner, &alg.eval_binary(&ex, &nx[y])?);
            vsub_assign(&mut inner, &n_op.mul_vec(alg.binary_at(x, y)));
            vsub_assign(&mut lhs, &n_op.mul_vec(&inner));
            c1.observe(&[x, y], &lhs);

            for z in 0..n {
                let ez = unit(n, z);
                // ⟦Nx,Ny,Nz⟧ − N(⟦Nx,Ny,z⟧ + ⟦Nx,y,Nz⟧ + ⟦x,Ny,Nz⟧
                //   − N⟦Nx,y,z⟧ − N⟦x,Ny,z⟧ − N⟦x,y,Nz⟧ + N²⟦x,y,z⟧)
                let mut lhs = alg.eval_ternary(&nx[x], &nx[y], &nx[z])?;
                let mut inner = alg.eval_ternary(&nx[x], &nx[y], &ez)?;
                vadd_assign(&mut inner, &alg.eval_ternary(&nx[x], &ey, &nx[z])?);
                vadd_assign(&mut inner, &alg.eval_ternary(&ex, &nx[y], &nx[z])?);
                vsub_assign(
                    &mut inner,
                    &n_op.mul_vec(&alg.eval_ternary(&nx[x], &ey, &ez)?),
                );
                vsub_assign(
                    &mut inner,
                    &n_op.mul_vec(&alg.eval_ternary(&ex, &nx[y], &ez)?),
                );
                vsub_assign(
                    &mut inner,
                    &n_op.mul_vec(&alg.eval_ternary(&ex, &ey, &nx[z])?),
                );
                vadd_assign(
                    &mut inner,
                    &n_op.mul_vec(&n_op.mul_vec(alg.ternary_at(x, y, z))),
                );
                vsub_assign(&mut lhs, &n_op.mul_vec(&inner));
                c2.observe(&[x, y, z], &lhs);
            }
        }
    }
    let mut report = Report::new();
    report.push(c1.finish());
    report.push(c2.finish());
    Ok(report)
}

/// The deformed brackets induced by a Nijenhuis operator. Fails with
/// [`LyError::NotNijenhuis`] when the operator does not pass the check.
pub fn deformed_brackets(alg: &LyAlgebra, n_op: &Mat) -> Result<LyAlgebra, LyError> {
    let rep_ok = nijenhuis_operator_report(alg, n_op)?;
    if !rep_ok.passed() {
        return Err(LyError::NotNijenhuis);
    }
    let n = alg.dim;
    let nx: Vec<Vec<Rat>> = (0..n).map(|i| n_op.col(i)).collect();
    let mut binary = vzero(n * n * n);
    let mut ternary = vzero(n * n * n * n);
    for x in 0..n {
        let ex = unit(n, x);
        for y in 0..n {
            let ey = unit(n, y);
            // [x, y]_N = [Nx, y] + [x, Ny] − N[x, y]
            let mut v = alg.eval_binary(&nx[x], &ey)?;
            vadd_assign(&mut v, &alg.eval_binary(&ex, &nx[y])?);
            vsub_assign(&mut v, &n_op.mul_vec(alg.binary_at(x, y)));
            for (out, c) in v.iter().enumerate() {
                binary[LyAlgebra::b_idx(n, x, y, out)] = c.clone();
            }
            for z in 0..n {
                let ez = unit(n, z);
                // ⟦x,y,z⟧_N = ⟦Nx,Ny,z⟧ + ⟦Nx,y,Nz⟧ + ⟦x,Ny,Nz⟧
                //   − N⟦Nx,y,z⟧ − N⟦x,Ny,z⟧ − N⟦x,y,Nz⟧ + N²⟦x,y,z⟧
                let mut v = alg.eval_ternary(&nx[x], &nx[y], &ez)?;
                vadd_assign(&mut v, &alg.eval_ternary(&nx[x], &ey, &nx[z])?);
                vadd_assign(&mut v, &alg.eval_ternary(&ex, &nx[y], &nx[z])?);
                vsub_assign(&mut v, &n_op.mul_vec(&alg.eval_ternary(&nx[x], &ey, &ez)?));
                vsub_assign(&mut v, &n_op.mul_vec(&alg.eval_ternary(&ex, &nx[y], &ez)?));
                vsub_assign(&mut v, &n_op.mul_vec(&alg.eval_ternary(&ex, &ey, &nx[z])?));
                vadd_assign(
                    &mut v,
                    &n_op.mul_vec(&n_op.mul_vec(alg.ternary_at(x, y, z))),
                );
                for (out, c) in v.iter().enumerate() {
                    ternary[LyAlgebra::t_idx(n, x, y, z, out)] = c.clone();
                }
            }
        }
    }
    LyAlgebra::from_tensors(n, binary, ternary)
}

/// Checks that `phi` is an algebra homomorphism from `src` to `dst`
/// (both brackets preserved on all basis tuples).
pub fn homomorphism_report(src: &LyAlgebra, dst: &LyAlgebra, phi: &Mat) -> Result<Report, LyError> {
    if phi.rows != dst.dim || phi.cols != src.dim {
        return Err(LyError::DimensionMismatch(
            "homomorphism matrix must map src coordinates to dst coordinates".into(),
        ));
    }
    let n = src.dim;
    let img: Vec<Vec<Rat>> = (0..n).map(|i| phi.col(i)).collect();
    let mut c1 = CheckBuilder::new("hom_binary");
    let mut c2 = CheckBuilder::new("hom_ternary");
    for x in 0..n {
        for y in 0..n {
            let mut r = dst.eval_binary(&img[x], &img[y])?;
            vsub_assign(&mut r, &phi.mul_vec(src.binary_at(x, y)));
            c1.observe(&[x, y], &r);
            for z in 0..n {
                let mut r = dst.eval_ternary(&img[x], &img[y], &img[z])?;
                vsub_assign(&mut r, &phi.mul_vec(src.ternary_at(x, y, z)));
                c2.observe(&[x, y, z], &r);
            }
        }
    }
    let mut report = Report::new();
    report.push(c1.finish());
    report.push(c2.finish());
    Ok(report)
}

/// The derived action of the adjoint representation evaluated on vectors:
/// the matrix of `z ↦ ⟦x, y, z⟧`.
pub fn ternary_action(alg: &LyAlgebra, x: &[Rat], y: &[Rat]) -> Result<Mat, LyError> {
    let n = alg.dim;
    let mut m = Mat::zero(n, n);
    for k in 0..n {
        let col = alg.eval_ternary(x, y, &unit(n, k))?;
        for out in 0..n {
            if !col[out].is_zero() {
                m.set(out, k, col[out].clone());
            }
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::sampling;
    use crate::scalar::{rat, rat_int};

    #[test]
    fn verify_accepts_fixtures_and_abelian() {
        for alg in [
            fixtures::two_dim(),
            fixtures::four_dim(),
            LyAlgebra::abelian(0),
            LyAlgebra::abelian(1),
            LyAlgebra::abelian(5),
        ] {
            let r = alg.verify().unwrap();
            assert!(r.passed(), "{}", r.render_text());
        }
    }

    #[test]
    fn verify_names_the_broken_axiom() {
        // Ternary bracket of the 2-dim fixture with the binary bracket
        // replaced by [e1,e2] = e2: the derivation axiom for the binary
        // bracket fails while the two cyclic axioms survive.
        let alg = LyAlgebra::from_brackets(
            2,
            &[(0, 1, vec![rat_int(0), rat_int(1)])],
            &[(0, 1, 1, vec![rat_int(1), rat_int(0)])],
        )
        .unwrap();
        let r = alg.verify().unwrap();
        assert!(r.check("axiom1_cyclic_sum").unwrap().passed);
        assert!(r.check("axiom2_ternary_cyclic").unwrap().passed);
        let a3 = r.check("axiom3_binary_derivation").unwrap();
        assert!(!a3.passed);
        assert!(a3.violations > 0);
        assert!(a3.counterexample.is_some());
    }

    #[test]
    fn non_skew_tensors_are_a_structure_error() {
        let idx = |i: usize, j: usize, out: usize| (i * 2 + j) * 2 + out;
        let mut binary = crate::linalg::vzero(8);
        binary[idx(0, 1, 0)] = rat_int(1); // [e1,e2] = e1 but no mirror entry
        let alg = LyAlgebra::from_tensors(2, binary, crate::linalg::vzero(16)).unwrap();
        assert!(matches!(alg.verify(), Err(LyError::Structure(_))));
    }

    #[test]
    fn eval_is_bilinear_and_skew_on_random_vectors() {
        let alg = fixtures::two_dim();
        let mut r = sampling::rng(5);
        for _ in 0..20 {
            let x = sampling::rat_vec(&mut r, 2);
            let y = sampling::rat_vec(&mut r, 2);
            let xy = alg.eval_binary(&x, &y).unwrap();
            let yx = alg.eval_binary(&y, &x).unwrap();
            assert_eq!(xy, crate::linalg::vneg(&yx));
            assert!(crate::linalg::vis_zero(&alg.eval_binary(&x, &x).unwrap()));
            let z = sampling::rat_vec(&mut r, 2);
            assert!(crate::linalg::vis_zero(
                &alg.eval_ternary(&x, &x, &z).unwrap()
            ));
        }
        assert!(matches!(
            alg.eval_binary(&[rat_int(1)], &[rat_int(1), rat_int(0)]),
            Err(LyError::DimensionMismatch(_))
        ));
    }

    #[test]
    fn adjoint_derived_action_is_the_ternary_bracket() {
        for alg in [fixtures::two_dim(), fixtures::four_dim()] {
            let adj = adjoint_representation(&alg);
            let n = alg.dim;
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        assert_eq!(
                            adj.d_at(i, j).col(k),
                            alg.ternary_at(i, j, k).to_vec(),
                            "D(e{i},e{j})e{k}"
                        );
                    }
                }
            }
        }
        // 2-dim: D(e1,e2) sends e2 to e1 and kills e1; mu(e2,e2)e1 = e1.
        let g2 = fixtures::two_dim();
        let adj = adjoint_representation(&g2);
        let d = adj.d_at(0, 1);
        assert_eq!(d.col(0), vec![rat_int(0), rat_int(0)]);
        assert_eq!(d.col(1), vec![rat_int(1), rat_int(0)]);
        assert_eq!(adj.mu_at(1, 1).col(0), vec![rat_int(1), rat_int(0)]);
    }

    #[test]
    fn adjoint_of_abelian_is_zero_and_verifies() {
        let alg = LyAlgebra::abelian(3);
        let adj = adjoint_representation(&alg);
        assert_eq!(adj, Representation::zero(&alg, 3));
        assert!(adj.verify(&alg).unwrap().passed());
    }

    #[test]
    fn zero_representation_verifies() {
        for alg in [fixtures::two_dim(), fixtures::four_dim()] {
            let rep = Representation::zero(&alg, 3);
            assert!(rep.verify(&alg).unwrap().passed());
            // Semidirect product with the zero action only keeps the g part.
            let semi = semidirect_product(&alg, &rep);
            assert!(semi.verify().unwrap().passed());
            for i in 0..semi.dim {
                for j in 0..semi.dim {
                    if i >= alg.dim || j >= alg.dim {
                        assert!(semi.binary_at(i, j).iter().all(|c| c.is_zero()));
                    }
                }
            }
        }
    }

    #[test]
    fn semidirect_pairs_with_representation_check() {
        // Both directions: a verified representation gives a verified
        // semidirect algebra, and a corrupted action breaks both checks.
        let alg = fixtures::two_dim();
        let adj = adjoint_representation(&alg);
        assert!(adj.verify(&alg).unwrap().passed());
        assert!(semidirect_product(&alg, &adj).verify().unwrap().passed());

        let mut r = sampling::rng(17);
        let mut agree = 0;
        for _ in 0..25 {
            let rho: Vec<Mat> = (0..2).map(|_| sampling::matrix(&mut r, 2, 2)).collect();
            let mu: Vec<Mat> = (0..4).map(|_| sampling::matrix(&mut r, 2, 2)).collect();
            let rep = Representation::new(&alg, 2, rho, mu).unwrap();
            let rep_ok = rep.verify(&alg).unwrap().passed();
            let semi_ok = semidirect_product(&alg, &rep).verify().unwrap().passed();
            assert_eq!(rep_ok, semi_ok);
            agree += 1;
        }
        assert_eq!(agree, 25);
    }

    #[test]
    fn corrupted_adjoint_fails_representation_check() {
        let alg = fixtures::two_dim();
        let adj = adjoint_representation(&alg);
        let rho: Vec<Mat> = (0..2).map(|i| adj.rho_at(i).clone()).collect();
        let mut mu: Vec<Mat> = (0..2)
            .flat_map(|i| (0..2).map(move |j| (i, j)))
            .map(|(i, j)| adj.mu_at(i, j).clone())
            .collect();
        mu[3] = mu[3].add(&Mat::identity(2)); // tamper mu(e2,e2)
        let bad = Representation::new(&alg, 2, rho, mu).unwrap();
        let r = bad.verify(&alg).unwrap();
        assert!(!r.passed());
        assert!(!semidirect_product(&alg, &bad).verify().unwrap().passed());
    }

    #[test]
    fn identity_and_zero_are_nijenhuis() {
        for alg in [fixtures::two_dim(), fixtures::four_dim()] {
            let id = Mat::identity(alg.dim);
            assert!(nijenhuis_operator_report(&alg, &id).unwrap().passed());
            let z = Mat::zero(alg.dim, alg.dim);
            assert!(nijenhuis_operator_report(&alg, &z).unwrap().passed());

            // Deformation along the identity reproduces the algebra; along
            // zero it kills both brackets.
            assert_eq!(deformed_brackets(&alg, &id).unwrap(), alg);
            assert_eq!(
                deformed_brackets(&alg, &z).unwrap(),
                LyAlgebra::abelian(alg.dim)
            );
        }
    }

    #[test]
    fn deformed_brackets_verify_and_n_is_a_homomorphism() {
        // Scaling is always Nijenhuis; so is the operator built from a
        // Rota-Baxter operator on the semidirect product (exercised in the
        // rb tests). Use 3·Id ⊕ 0 on the 4-dim fixture.
        let alg = fixtures::four_dim();
        let mut n_op = Mat::zero(4, 4);
        for i in 0..2 {
            n_op.set(i, i, rat(3, 1));
        }
        let rep = nijenhuis_operator_report(&alg, &n_op).unwrap();
        if rep.passed() {
            let def = deformed_brackets(&alg, &n_op).unwrap();
            assert!(def.verify().unwrap().passed());
            let hom = homomorphism_report(&def, &alg, &n_op).unwrap();
            assert!(hom.passed(), "{}", hom.render_text());
        } else {
            // A non-Nijenhuis operator must be rejected by the constructor.
            assert!(matches!(
                deformed_brackets(&alg, &n_op),
                Err(LyError::NotNijenhuis)
            ));
        }
    }
}
