//! The cochain complex of a relative Rota-Baxter operator.
//!
//! Level 0 is `∧²g`; level `n ≥ 1` is the space of level-`n` cochains on the
//! sub-adjacent algebra of `V` with values in `g`. The level-0 coboundary
//! sends a wedge `X` to `v ↦ T D(X) v − ⟦X, T v⟧`; higher coboundaries are
//! the classical coboundary of the sub-adjacent algebra with coefficients in
//! the induced representation. Every coboundary is computed along two
//! independent routes — the inlined closed-form expansion and the generic
//! coboundary of the materialized induced representation — and exact
//! agreement is enforced.

use crate::algebra::{LyAlgebra, Representation};
use crate::cochain::{multi_indices, Cochain, VSlot, WSlot};
use crate::error::LyError;
use crate::limits::Limits;
use crate::linalg::{rank, solve, vadd_assign, vaxpy, vsub_assign, vzero, Mat, SolveOutcome};
use crate::rb::{
    induced_representation, is_rota_baxter, observe_cochain, sub_adjacent_algebra, RbContext,
    TwistedOps,
};
use crate::report::{CheckBuilder, Report};
use crate::scalar::Rat;
use crate::wedge::WedgeBasis;
use crate::yamaguti;
use num_traits::Zero;

/// Materialized cochain complex of a verified operator.
#[derive(Debug, Clone)]
pub struct RbComplex {
    pub ctx: RbContext,
    pub t: Mat,
    pub sub: LyAlgebra,
    pub induced: Representation,
    g_wedge: WedgeBasis,
    v_wedge: WedgeBasis,
    /// `mats[l]` is the matrix of the coboundary from level `l` to `l + 1`;
    /// materialized for `l = 0..=levels`.
    mats: Vec<Mat>,
}

impl RbComplex {
    /// Builds the complex and materializes coboundary matrices for levels
    /// `0..=levels`. Fails if the operator is not Rota-Baxter or a matrix
    /// would exceed the caps.
    pub fn new(
        alg: &LyAlgebra,
        rep: &Representation,
        t: &Mat,
        limits: Limits,
        levels: usize,
    ) -> Result<Self, LyError> {
        limits.check_level(levels)?;
        if !is_rota_baxter(alg, rep, t) {
            return Err(LyError::NotRotaBaxter);
        }
        let ctx = RbContext::new(alg, rep, limits)?;
        let sub = sub_adjacent_algebra(alg, rep, t)?;
        let induced = induced_representation(alg, rep, t)?;
        let g_wedge = WedgeBasis::new(alg.dim);
        let v_wedge = WedgeBasis::new(rep.module_dim);
        let mut complex = RbComplex {
            ctx,
            t: t.clone(),
            sub,
            induced,
            g_wedge,
            v_wedge,
            mats: Vec::new(),
        };
        for l in 0..=levels {
            let m = complex.build_matrix(l)?;
            complex.mats.push(m);
        }
        Ok(complex)
    }

    pub fn alg(&self) -> &LyAlgebra {
        &self.ctx.alg
    }

    pub fn rep(&self) -> &Representation {
        &self.ctx.rep
    }

    fn limits(&self) -> &Limits {
        &self.ctx.limits
    }

    /// Dimension of the level-`l` space.
    pub fn space_dim(&self, level: usize) -> usize {
        if level == 0 {
            self.g_wedge.len()
        } else {
            yamaguti::cochain_space_dim(self.rep().module_dim, self.alg().dim, level)
        }
    }

    /// The level-0 coboundary of a wedge element: the operator
    /// `v ↦ T D(X) v − ⟦X, T v⟧`.
    pub fn coboundary0(&self, x: &[Rat]) -> Mat {
        coboundary0_operator(self.alg(), self.rep(), &self.t, x)
    }

    /// The coboundary of a level-`degree + 1` cochain, computed along both
    /// routes with exact agreement enforced.
    pub fn coboundary(&self, f: &Cochain) -> Result<Cochain, LyError> {
        let explicit = self.coboundary_explicit(f)?;
        let via_induced = yamaguti::coboundary(&self.sub, &self.induced, f)?;
        if explicit != via_induced {
            return Err(LyError::Internal(
                "closed-form and induced-representation coboundary routes disagree".into(),
            ));
        }
        Ok(explicit)
    }

    /// Closed-form route: all operations expanded through `T`, `ρ`, `μ` and
    /// the brackets of `g`, without touching the materialized induced
    /// representation.
    pub fn coboundary_explicit(&self, f: &Cochain) -> Result<Cochain, LyError> {
        let (n, m) = (self.alg().dim, self.rep().module_dim);
        if f.domain_dim != m || f.codomain_dim != n {
            return Err(LyError::SpaceMismatch(
                "operator cochains have V wedge slots and g values".into(),
            ));
        }
        let p = f.degree;
        self.limits()
            .check_entries(Cochain::entry_count(p + 1, m, n), "coboundary output")?;
        let alg = self.alg();
        let rep = self.rep();
        let t = &self.t;
        let t_cols: Vec<Vec<Rat>> = (0..m).map(|v| t.col(v)).collect();

        // Closed forms of the sub-adjacent structure and induced actions.
        let sub_binary = |u: usize, v: usize| -> Vec<Rat> {
            let mut out = rep.rho_of(&t_cols[u]).col(v);
            vsub_assign(&mut out, &rep.rho_of(&t_cols[v]).col(u));
            out
        };
        let sub_ternary = |u: usize, v: usize, w: usize| -> Vec<Rat> {
            let mut out = rep.d_of(&t_cols[u], &t_cols[v]).col(w);
            vadd_assign(&mut out, &rep.mu_of(&t_cols[v], &t_cols[w]).col(u));
            vsub_assign(&mut out, &rep.mu_of(&t_cols[u], &t_cols[w]).col(v));
            out
        };
        // ϱ(u) x = [Tu, x] + T(ρ(x) u)
        let rho_t = |u: usize, x: &[Rat]| -> Vec<Rat> {
            let mut out = alg.eval_binary(&t_cols[u], x).expect("dims");
            let mut ru = vzero(m);
            for (k, c) in x.iter().enumerate() {
                if !c.is_zero() {
                    vaxpy(&mut ru, c, &rep.rho_at(k).col(u));
                }
            }
            vadd_assign(&mut out, &t.mul_vec(&ru));
            out
        };
        // ϖ(u, v) x = ⟦x, Tu, Tv⟧ − T(D(x, Tu)v − μ(x, Tv)u)
        let pi_t = |u: usize, v: usize, x: &[Rat]| -> Vec<Rat> {
            let mut out = alg.eval_ternary(x, &t_cols[u], &t_cols[v]).expect("dims");
            let mut inner = rep.d_of(x, &t_cols[u]).col(v);
            vsub_assign(&mut inner, &rep.mu_of(x, &t_cols[v]).col(u));
            vsub_assign(&mut out, &t.mul_vec(&inner));
            out
        };
        // D_T(u, v) x = ⟦Tu, Tv, x⟧ − T(μ(Tv, x)u − μ(Tu, x)v)
        let d_t = |u: usize, v: usize, x: &[Rat]| -> Vec<Rat> {
            let mut out = alg.eval_ternary(&t_cols[u], &t_cols[v], x).expect("dims");
            let mut inner = rep.mu_of(&t_cols[v], x).col(u);
            vsub_assign(&mut inner, &rep.mu_of(&t_cols[u], x).col(v));
            vsub_assign(&mut out, &t.mul_vec(&inner));
            out
        };

        let mut out = Cochain::zero(p + 1, m, n);

        if p == 0 {
            for (idx, &(u, v)) in self.v_wedge.pairs.iter().enumerate() {
                // ϱ(u) f(v) − ϱ(v) f(u) − f([u, v]_T)
                let mut fe = rho_t(u, f.map0(v));
                vsub_assign(&mut fe, &rho_t(v, f.map0(u)));
                vsub_assign(&mut fe, &f.apply0(&sub_binary(u, v)));
                out.set_f(&[idx], &fe);
                for w in 0..m {
                    // D_T(u,v) f(w) + ϖ(v,w) f(u) − ϖ(u,w) f(v) − f(⟦u,v,w⟧_T)
                    let mut ge = d_t(u, v, f.map0(w));
                    vadd_assign(&mut ge, &pi_t(v, w, f.map0(u)));
                    vsub_assign(&mut ge, &pi_t(u, w, f.map0(v)));
                    vsub_assign(&mut ge, &f.apply0(&sub_ternary(u, v, w)));
                    out.set_g(&[idx], w, &ge);
                }
            }
            return Ok(out);
        }

        // Wedge product of two wedge slots under the sub-adjacent ternary
        // action: 𝒱_k ∘ 𝒱_l = ⟦u_k,v_k,u_l⟧_T ∧ v_l + u_l ∧ ⟦u_k,v_k,v_l⟧_T.
        let wedge_circ = |kp: (usize, usize), lp: (usize, usize)| -> Vec<(usize, Rat)> {
            let mut sparse = self
                .v_wedge
                .decompose_vec_basis(&sub_ternary(kp.0, kp.1, lp.0), lp.1);
            sparse.extend(
                self.v_wedge
                    .decompose_basis_vec(lp.0, &sub_ternary(kp.0, kp.1, lp.1)),
            );
            sparse
        };

        let negate_if_odd = |v: Vec<Rat>| -> Vec<Rat> {
            if p % 2 == 0 {
                v
            } else {
                v.into_iter().map(|c| -c).collect()
            }
        };

        for multi in multi_indices(self.v_wedge.len(), p + 1) {
            let head = &multi[..p];
            let (u_last, v_last) = self.v_wedge.pair(multi[p]);

            // I-component.
            let mut fe = {
                let mut v = rho_t(u_last, f.g_at(head, v_last));
                vsub_assign(&mut v, &rho_t(v_last, f.g_at(head, u_last)));
                let br = sub_binary(u_last, v_last);
                let slots: Vec<WSlot> = head.iter().map(|&s| WSlot::B(s)).collect();
                vsub_assign(&mut v, &f.eval_g(&slots, &VSlot::D(&br)));
                negate_if_odd(v)
            };
            for k in 0..p {
                let mut rest: Vec<usize> = Vec::with_capacity(p);
                rest.extend_from_slice(&multi[..k]);
                rest.extend_from_slice(&multi[k + 1..]);
                let (a, b) = self.v_wedge.pair(multi[k]);
                let val = d_t(a, b, f.f_at(&rest));
                if k % 2 == 0 {
                    vadd_assign(&mut fe, &val);
                } else {
                    vsub_assign(&mut fe, &val);
                }
            }
            for k in 0..p + 1 {
                for l in k + 1..p + 1 {
                    let circ = wedge_circ(self.v_wedge.pair(multi[k]), self.v_wedge.pair(multi[l]));
                    let mut slots: Vec<WSlot> = Vec::with_capacity(p);
                    for (s, &mi) in multi.iter().enumerate() {
                        if s == k {
                            continue;
                        }
                        if s == l {
                            slots.push(WSlot::D(&circ));
                        } else {
                            slots.push(WSlot::B(mi));
                        }
                    }
                    let val = f.eval_f(&slots);
                    if k % 2 == 0 {
                        vsub_assign(&mut fe, &val);
                    } else {
                        vadd_assign(&mut fe, &val);
                    }
                }
            }
            out.set_f(&multi, &fe);

            // II-component.
            for z in 0..m {
                let mut ge = {
                    let mut v = pi_t(v_last, z, f.g_at(head, u_last));
                    vsub_assign(&mut v, &pi_t(u_last, z, f.g_at(head, v_last)));
                    negate_if_odd(v)
                };
                for k in 0..p + 1 {
                    let mut rest: Vec<usize> = Vec::with_capacity(p);
                    rest.extend_from_slice(&multi[..k]);
                    rest.extend_from_slice(&multi[k + 1..]);
                    let (a, b) = self.v_wedge.pair(multi[k]);
                    let val = d_t(a, b, f.g_at(&rest, z));
                    if k % 2 == 0 {
                        vadd_assign(&mut ge, &val);
                    } else {
                        vsub_assign(&mut ge, &val);
                    }
                }
                for k in 0..p + 1 {
                    for l in k + 1..p + 1 {
                        let circ =
                            wedge_circ(self.v_wedge.pair(multi[k]), self.v_wedge.pair(multi[l]));
                        let mut slots: Vec<WSlot> = Vec::with_capacity(p);
                        for (s, &mi) in multi.iter().enumerate() {
                            if s == k {
                                continue;
                            }
                            if s == l {
                                slots.push(WSlot::D(&circ));
                            } else {
                                slots.push(WSlot::B(mi));
                            }
                        }
                        let val = f.eval_g(&slots, &VSlot::B(z));
                        if k % 2 == 0 {
                            vsub_assign(&mut ge, &val);
                        } else {
                            vadd_assign(&mut ge, &val);
                        }
                    }
                }
                for k in 0..p + 1 {
                    let mut rest: Vec<usize> = Vec::with_capacity(p);
                    rest.extend_from_slice(&multi[..k]);
                    rest.extend_from_slice(&multi[k + 1..]);
                    let (a, b) = self.v_wedge.pair(multi[k]);
                    let slots: Vec<WSlot> = rest.iter().map(|&s| WSlot::B(s)).collect();
                    let val = f.eval_g(&slots, &VSlot::D(&sub_ternary(a, b, z)));
                    if k % 2 == 0 {
                        vsub_assign(&mut ge, &val);
                    } else {
                        vadd_assign(&mut ge, &val);
                    }
                }
                out.set_g(&multi, z, &ge);
            }
        }
        Ok(out)
    }

    fn build_matrix(&self, level: usize) -> Result<Mat, LyError> {
        let (n, m) = (self.alg().dim, self.rep().module_dim);
        if level == 0 {
            let rows = n * m;
            let cols = self.g_wedge.len();
            self.limits()
                .check_entries(rows.max(1) * cols.max(1), "level-0 matrix")?;
            let mut out = Mat::zero(rows, cols);
            for j in 0..cols {
                let mut x = vzero(cols);
                x[j] = num_traits::One::one();
                let op = self.coboundary0(&x);
                // Flatten in cochain layout: row (v * n + out).
                for v in 0..m {
                    for o in 0..n {
                        out.set(v * n + o, j, op.get(o, v).clone());
                    }
                }
            }
            return Ok(out);
        }
        let dom = self.space_dim(level);
        let cod = self.space_dim(level + 1);
        self.limits()
            .check_entries(dom.max(1) * cod.max(1), "coboundary matrix")?;
        let mut out = Mat::zero(cod, dom);
        for j in 0..dom {
            let b = yamaguti::basis_cochain(m, n, level, j);
            let db = self.coboundary(&b)?;
            for (i, v) in yamaguti::flatten_cochain(&db).into_iter().enumerate() {
                if !v.is_zero() {
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    fn matrix(&self, level: usize) -> Result<&Mat, LyError> {
        self.mats.get(level).ok_or_else(|| LyError::Level {
            level,
            reason: format!(
                "materialized up to level {}",
                self.mats.len().saturating_sub(1)
            ),
        })
    }

    /// `(dim Z, dim B, dim H)` at level `n ≥ 1`. The level-1 coboundary
    /// space is the image of the level-0 map on `∧²g`.
    pub fn dims(&self, level: usize) -> Result<(usize, usize, usize), LyError> {
        if level == 0 {
            return Err(LyError::Level {
                level,
                reason: "cohomology groups start at level 1; level 0 only carries its kernel"
                    .into(),
            });
        }
        let z = self.space_dim(level) - rank(self.matrix(level)?);
        let b = rank(self.matrix(level - 1)?);
        Ok((z, b, z - b))
    }

    /// Kernel dimension of the level-0 map (not named a cohomology group:
    /// the complex's groups start at level 1).
    pub fn level0_kernel_dim(&self) -> Result<usize, LyError> {
        Ok(self.space_dim(0) - rank(self.matrix(0)?))
    }

    /// Exact cocycle test at the cochain's level.
    pub fn is_cocycle(&self, f: &Cochain) -> Result<bool, LyError> {
        Ok(self.coboundary(f)?.is_zero())
    }

    /// Solves `∂ x = g` one level down. For a level-1 target the preimage is
    /// a wedge element of `∧²g`; otherwise a cochain of the previous level.
    pub fn solve_preimage(&self, g: &Cochain) -> Result<Preimage, LyError> {
        let level = g.degree + 1;
        let mat = self.matrix(level - 1)?;
        let rhs = yamaguti::flatten_cochain(g);
        match solve(mat, &rhs) {
            SolveOutcome::Infeasible {
                rank,
                rank_augmented,
            } => Ok(Preimage::Infeasible {
                rank,
                rank_augmented,
            }),
            SolveOutcome::Solution(x) => {
                if level == 1 {
                    Ok(Preimage::Wedge(x))
                } else {
                    let (n, m) = (self.alg().dim, self.rep().module_dim);
                    let mut c = Cochain::zero(level - 2, m, n);
                    let flen = c.f.len();
                    c.f.clone_from_slice(&x[..flen]);
                    c.g.clone_from_slice(&x[flen..]);
                    Ok(Preimage::Cochain(c))
                }
            }
        }
    }

    /// Membership report: cocycle / coboundary status of a cochain.
    pub fn classify(&self, f: &Cochain) -> Result<CohomologyClass, LyError> {
        let level = f.degree + 1;
        let cocycle = self.is_cocycle(f)?;
        let preimage = self.solve_preimage(f)?;
        Ok(CohomologyClass {
            level,
            representative: f.clone(),
            is_cocycle: cocycle,
            trivial: !matches!(preimage, Preimage::Infeasible { .. }),
        })
    }

    /// Compares the complex coboundary against the twisted differential:
    /// `∂ = (−1)^{level − 1} l₁ᵀ`, i.e. the sign is `(−1)^degree`. (In level
    /// 1 / degree 0 the two maps agree on the nose.)
    pub fn differential_comparison(&self, f: &Cochain) -> Result<Report, LyError> {
        let ops = TwistedOps::new(&self.ctx, &self.t)?;
        let lhs = self.coboundary(f)?;
        let rhs = ops.l1(f)?;
        let expected = if f.degree % 2 == 0 {
            rhs
        } else {
            rhs.scale(&crate::scalar::rat(-1, 1))
        };
        let diff = lhs.sub(&expected);
        let mut check = CheckBuilder::new("coboundary_vs_twisted_differential");
        observe_cochain(&mut check, &diff);
        let mut report = Report::new();
        report.push(check.finish());
        Ok(report)
    }
}

/// Outcome of a coboundary solve.
#[derive(Debug, Clone, PartialEq)]
pub enum Preimage {
    /// Preimage of a level-1 cochain: a wedge element of `∧²g`.
    Wedge(Vec<Rat>),
    Cochain(Cochain),
    /// Certificate: augmenting the system raises the rank.
    Infeasible {
        rank: usize,
        rank_augmented: usize,
    },
}

/// A classified cochain: its level, cocycle status, and whether its class is
/// trivial (a coboundary).
#[derive(Debug, Clone)]
pub struct CohomologyClass {
    pub level: usize,
    pub representative: Cochain,
    pub is_cocycle: bool,
    pub trivial: bool,
}

/// The operator `v ↦ T D(X) v − ⟦X, T v⟧` attached to a wedge element `X`
/// of `∧²g`, as a matrix `g ← V`.
pub fn coboundary0_operator(alg: &LyAlgebra, rep: &Representation, t: &Mat, x: &[Rat]) -> Mat {
    let g_wedge = WedgeBasis::new(alg.dim);
    assert_eq!(x.len(), g_wedge.len(), "wedge coordinates");
    let d_x = rep.d_of_wedge(&g_wedge, x);
    let act = alg.wedge_action(&g_wedge, x);
    let (n, m) = (alg.dim, rep.module_dim);
    Mat::from_fn(n, m, |out, v| {
        let td = t.mul_vec(&d_x.col(v));
        let xw = act.mul_vec(&t.col(v));
        &td[out] - &xw[out]
    })
}

/// Convenience: level-0 coboundary as a report-producing cocycle check
/// (`∂(∂X) = 0` at the 0 → 1 → 2 junction).
pub fn level0_gluing_report(complex: &RbComplex, x: &[Rat]) -> Result<Report, LyError> {
    let op = complex.coboundary0(x);
    let (n, m) = (complex.alg().dim, complex.rep().module_dim);
    let mut c = Cochain::zero(0, m, n);
    for v in 0..m {
        c.set_g(&[], v, &op.col(v));
    }
    let d = complex.coboundary(&c)?;
    let mut check = CheckBuilder::new("level0_image_is_level1_cocycle");
    observe_cochain(&mut check, &d);
    let mut report = Report::new();
    report.push(check.finish());
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{adjoint_representation, basis_vec};
    use crate::fixtures;
    use crate::sampling;
    use crate::scalar::{rat, rat_int};

    fn two_dim_complex(a: i64, b: i64, levels: usize) -> RbComplex {
        let alg = fixtures::two_dim();
        let adj = adjoint_representation(&alg);
        let t = fixtures::two_dim_rb(&rat_int(a), &rat_int(b));
        RbComplex::new(&alg, &adj, &t, Limits::default(), levels).unwrap()
    }

    #[test]
    fn level0_coboundary_fixture_values() {
        let complex = two_dim_complex(0, 1, 0);
        // X = e1 ∧ e2 with T = [[0,0],[0,1]]: f1 maps to 0 and f2 to −e1.
        let op = complex.coboundary0(&[rat_int(1)]);
        assert_eq!(op.col(0), vec![rat_int(0), rat_int(0)]);
        assert_eq!(op.col(1), vec![rat_int(-1), rat_int(0)]);
        // The zero wedge gives the zero operator; an abelian algebra with
        // the zero action kills everything.
        assert!(complex.coboundary0(&[rat_int(0)]).is_zero());
        let ab = crate::algebra::LyAlgebra::abelian(3);
        let zrep = crate::algebra::Representation::zero(&ab, 2);
        let op = coboundary0_operator(
            &ab,
            &zrep,
            &Mat::zero(3, 2),
            &[rat_int(1), rat_int(2), rat(1, 2)],
        );
        assert!(op.is_zero());
    }

    #[test]
    fn level0_images_are_cocycles() {
        let complex = two_dim_complex(0, 1, 1);
        let mut r = sampling::rng(15);
        for _ in 0..10 {
            let x = sampling::rat_vec(&mut r, 1);
            let rep = level0_gluing_report(&complex, &x).unwrap();
            assert!(rep.passed(), "{}", rep.render_text());
        }
    }

    #[test]
    fn coboundary_squares_to_zero_across_levels() {
        let complex = two_dim_complex(1, -2, 2);
        let mut r = sampling::rng(16);
        for p in 0..=1usize {
            let f = sampling::cochain(&mut r, p, 2, 2);
            let df = complex.coboundary(&f).unwrap();
            let ddf = complex.coboundary(&df).unwrap();
            assert!(ddf.is_zero(), "degree {p}");
        }
    }

    #[test]
    fn zero_operator_on_abelian_has_identity_cohomology() {
        let ab = crate::algebra::LyAlgebra::abelian(2);
        let zrep = crate::algebra::Representation::zero(&ab, 3);
        let complex = RbComplex::new(&ab, &zrep, &Mat::zero(2, 3), Limits::default(), 2).unwrap();
        // All coboundaries vanish, so every level has full kernel and no
        // image: dim H^1 = n·m.
        let (z, b, h) = complex.dims(1).unwrap();
        assert_eq!((z, b, h), (6, 0, 6));
        let (z2, b2, h2) = complex.dims(2).unwrap();
        assert_eq!(b2, 0);
        assert_eq!(z2, h2);
    }

    #[test]
    fn rank_nullity_and_determinism() {
        let dims1: Vec<_> = (1..=2)
            .map(|l| two_dim_complex(0, 1, 2).dims(l).unwrap())
            .collect();
        let dims2: Vec<_> = (1..=2)
            .map(|l| two_dim_complex(0, 1, 2).dims(l).unwrap())
            .collect();
        assert_eq!(dims1, dims2);
        let complex = two_dim_complex(0, 1, 2);
        for level in 1..=2 {
            let (z, b, h) = complex.dims(level).unwrap();
            assert!(h == z - b);
            assert!(z <= complex.space_dim(level));
        }
        assert!(matches!(complex.dims(0), Err(LyError::Level { .. })));
        assert!(matches!(complex.dims(3), Err(LyError::Level { .. })));
    }

    #[test]
    fn membership_and_solving() {
        let complex = two_dim_complex(0, 1, 1);
        // The level-0 image is both a cocycle and a coboundary.
        let x = vec![rat(3, 2)];
        let op = complex.coboundary0(&x);
        let mut c = Cochain::zero(0, 2, 2);
        for v in 0..2 {
            c.set_g(&[], v, &op.col(v));
        }
        assert!(complex.is_cocycle(&c).unwrap());
        match complex.solve_preimage(&c).unwrap() {
            Preimage::Wedge(w) => {
                // Any preimage must map onto the same operator.
                assert_eq!(complex.coboundary0(&w), op);
            }
            other => panic!("expected wedge preimage, got {other:?}"),
        }
        let class = complex.classify(&c).unwrap();
        assert!(class.is_cocycle && class.trivial && class.level == 1);

        // The zero cochain has the zero pivot preimage.
        let z = Cochain::zero(0, 2, 2);
        match complex.solve_preimage(&z).unwrap() {
            Preimage::Wedge(w) => assert!(w.iter().all(num_traits::Zero::is_zero)),
            other => panic!("expected wedge preimage, got {other:?}"),
        }

        // A non-cocycle is detected.
        let mut r = sampling::rng(17);
        let mut found = false;
        for _ in 0..20 {
            let f = sampling::cochain(&mut r, 0, 2, 2);
            if !complex.is_cocycle(&f).unwrap() {
                found = true;
                break;
            }
        }
        assert!(found, "random level-1 cochains should not all be cocycles");
    }

    #[test]
    fn infeasible_solve_is_certified() {
        // T = 0: the level-0 coboundary vanishes, so any nonzero level-1
        // cochain has no preimage.
        let complex = two_dim_complex(0, 0, 1);
        let mut c = Cochain::zero(0, 2, 2);
        c.set_g(&[], 0, &basis_vec(2, 0));
        match complex.solve_preimage(&c).unwrap() {
            Preimage::Infeasible {
                rank,
                rank_augmented,
            } => {
                assert_eq!(rank, 0);
                assert_eq!(rank_augmented, 1);
            }
            other => panic!("expected infeasibility, got {other:?}"),
        }
    }
}
