//! Relative Rota-Baxter operators and the derived-bracket pipeline.
//!
//! A linear operator `T: V → g` is a relative Rota-Baxter operator when it
//! intertwines both brackets through the representation. Equivalently, `T`
//! is a strict Maurer-Cartan element of the L∞ structure obtained by nesting
//! the graded bracket with the degree-1 structure element `Δ` of the
//! semidirect product on `g ⊕ V` and projecting back onto the abelian
//! subalgebra of cochains with wedge slots in `V` and values in `g`. The
//! pipeline here materializes intermediate big-space cochains under a size
//! cap and evaluates the final bracket only at projected entries.

use crate::algebra::{adjoint_representation, semidirect_product, LyAlgebra, Representation};
use crate::cochain::{
    circle_f_entry, circle_g_entry, graded_bracket, multi_indices, structure_cochain, Cochain,
};
use crate::error::LyError;
use crate::limits::Limits;
use crate::linalg::{vadd_assign, vsub_assign, vzero, Mat};
use crate::report::{CheckBuilder, Report};
use crate::scalar::{rat, Rat};
use crate::wedge::WedgeBasis;

/// Shared data for all derived-bracket computations over one algebra and
/// representation.
#[derive(Debug, Clone)]
pub struct RbContext {
    pub alg: LyAlgebra,
    pub rep: Representation,
    /// The semidirect product algebra on `g ⊕ V`.
    pub big: LyAlgebra,
    /// Its degree-1 structure cochain.
    pub delta: Cochain,
    big_wedge: WedgeBasis,
    v_wedge: WedgeBasis,
    /// Pure-V wedge index → big-space wedge index.
    vv_to_big: Vec<usize>,
    pub limits: Limits,
}

impl RbContext {
    pub fn new(alg: &LyAlgebra, rep: &Representation, limits: Limits) -> Result<Self, LyError> {
        if rep.base_dim != alg.dim {
            return Err(LyError::DimensionMismatch(
                "representation does not match the algebra dimension".into(),
            ));
        }
        let big = semidirect_product(alg, rep);
        let delta = structure_cochain(&big);
        let big_wedge = WedgeBasis::new(big.dim);
        let v_wedge = WedgeBasis::new(rep.module_dim);
        let n = alg.dim;
        let vv_to_big = v_wedge
            .pairs
            .iter()
            .map(|&(a, b)| big_wedge.index_of(n + a, n + b))
            .collect();
        Ok(RbContext {
            alg: alg.clone(),
            rep: rep.clone(),
            big,
            delta,
            big_wedge,
            v_wedge,
            vv_to_big,
            limits,
        })
    }

    /// Context for an algebra acting on itself by the adjoint representation.
    pub fn adjoint(alg: &LyAlgebra, limits: Limits) -> Result<Self, LyError> {
        RbContext::new(alg, &adjoint_representation(alg), limits)
    }

    pub fn base_dim(&self) -> usize {
        self.alg.dim
    }

    pub fn module_dim(&self) -> usize {
        self.rep.module_dim
    }

    /// The degree-0 cochain (wedge slots over V, values in g) of an operator
    /// matrix.
    pub fn operator_cochain(&self, t: &Mat) -> Cochain {
        let (n, m) = (self.base_dim(), self.module_dim());
        assert_eq!((t.rows, t.cols), (n, m), "operator must be n x m");
        let mut c = Cochain::zero(0, m, n);
        for v in 0..m {
            c.set_g(&[], v, &t.col(v));
        }
        c
    }

    pub fn cochain_operator(&self, c: &Cochain) -> Mat {
        let (n, m) = (self.base_dim(), self.module_dim());
        assert_eq!(c.shape(), (0, m, n));
        Mat::from_fn(n, m, |i, j| c.map0(j)[i].clone())
    }

    fn embed_g(&self, x: &[Rat]) -> Vec<Rat> {
        let mut out = vzero(self.big.dim);
        out[..x.len()].clone_from_slice(x);
        out
    }

    /// Embeds a V-valued cochain into the big space: wedge slots restrict to
    /// the V block, the vector slot to V, and values land in the g block.
    pub fn lift(&self, p: &Cochain) -> Cochain {
        let (n, m) = (self.base_dim(), self.module_dim());
        assert_eq!(
            (p.domain_dim, p.codomain_dim),
            (m, n),
            "lift takes cochains with V slots and g values"
        );
        let big_n = self.big.dim;
        let mut out = Cochain::zero(p.degree, big_n, big_n);
        if p.degree == 0 {
            for v in 0..m {
                out.set_g(&[], n + v, &self.embed_g(p.map0(v)));
            }
            return out;
        }
        for vmulti in multi_indices(self.v_wedge.len(), p.degree) {
            let big_multi: Vec<usize> = vmulti.iter().map(|&t| self.vv_to_big[t]).collect();
            out.set_f(&big_multi, &self.embed_g(p.f_at(&vmulti)));
            for v in 0..m {
                out.set_g(&big_multi, n + v, &self.embed_g(p.g_at(&vmulti, v)));
            }
        }
        out
    }

    /// Restricts a big-space cochain to V slots and projects values to g.
    pub fn project(&self, q: &Cochain) -> Cochain {
        let (n, m) = (self.base_dim(), self.module_dim());
        assert_eq!(
            (q.domain_dim, q.codomain_dim),
            (self.big.dim, self.big.dim),
            "project takes big-space cochains"
        );
        let mut out = Cochain::zero(q.degree, m, n);
        if q.degree == 0 {
            for v in 0..m {
                out.set_g(&[], v, &q.map0(n + v)[..n]);
            }
            return out;
        }
        for vmulti in multi_indices(self.v_wedge.len(), q.degree) {
            let big_multi: Vec<usize> = vmulti.iter().map(|&t| self.vv_to_big[t]).collect();
            out.set_f(&vmulti, &q.f_at(&big_multi)[..n]);
            for v in 0..m {
                out.set_g(&vmulti, v, &q.g_at(&big_multi, n + v)[..n]);
            }
        }
        out
    }

    /// `project(graded_bracket(a, b))` without materializing the big-space
    /// result: only projected entries are evaluated.
    pub fn bracket_projected(&self, a: &Cochain, b: &Cochain) -> Result<Cochain, LyError> {
        let (n, m) = (self.base_dim(), self.module_dim());
        let deg = a.degree + b.degree;
        if deg == 0 {
            return Ok(self.project(&graded_bracket(a, b)?));
        }
        let neg = (a.degree * b.degree) % 2 == 1;
        let mut out = Cochain::zero(deg, m, n);
        for vmulti in multi_indices(self.v_wedge.len(), deg) {
            let big_multi: Vec<usize> = vmulti.iter().map(|&t| self.vv_to_big[t]).collect();
            let mut fe = circle_f_entry(a, b, &self.big_wedge, &big_multi);
            let rev = circle_f_entry(b, a, &self.big_wedge, &big_multi);
            if neg {
                vadd_assign(&mut fe, &rev);
            } else {
                vsub_assign(&mut fe, &rev);
            }
            out.set_f(&vmulti, &fe[..n]);
            for v in 0..m {
                let mut ge = circle_g_entry(a, b, &self.big_wedge, &big_multi, n + v);
                let rev = circle_g_entry(b, a, &self.big_wedge, &big_multi, n + v);
                if neg {
                    vadd_assign(&mut ge, &rev);
                } else {
                    vsub_assign(&mut ge, &rev);
                }
                out.set_g(&vmulti, v, &ge[..n]);
            }
        }
        Ok(out)
    }

    /// Nested derived bracket: lifts the arguments, brackets them into the
    /// structure element left to right, projects the final result. The
    /// intermediate big-space cochains are materialized under the size cap.
    pub fn derived_bracket(&self, args: &[&Cochain]) -> Result<Cochain, LyError> {
        assert!(!args.is_empty());
        let big_n = self.big.dim;
        let mut acc = self.delta.clone();
        for (i, p) in args.iter().enumerate() {
            let lifted = self.lift(p);
            if i + 1 == args.len() {
                return self.bracket_projected(&acc, &lifted);
            }
            let deg = acc.degree + lifted.degree;
            self.limits.check_entries(
                Cochain::entry_count(deg, big_n, big_n),
                "derived bracket intermediate",
            )?;
            acc = graded_bracket(&acc, &lifted)?;
        }
        unreachable!()
    }

    /// Binary derived operation `l₂`.
    pub fn l2(&self, p: &Cochain, q: &Cochain) -> Result<Cochain, LyError> {
        self.derived_bracket(&[p, q])
    }

    /// Ternary derived operation `l₃`.
    pub fn l3(&self, p: &Cochain, q: &Cochain, r: &Cochain) -> Result<Cochain, LyError> {
        self.derived_bracket(&[p, q, r])
    }

    /// Closed form of `l₂(T, T)`: the I-component is twice the binary
    /// Rota-Baxter defect, the II-component vanishes.
    pub fn closed_l2_tt(&self, t: &Mat) -> Cochain {
        let (n, m) = (self.base_dim(), self.module_dim());
        let mut out = Cochain::zero(1, m, n);
        let t_cols: Vec<Vec<Rat>> = (0..m).map(|v| t.col(v)).collect();
        for (idx, &(a, b)) in self.v_wedge.pairs.iter().enumerate() {
            let mut val = self
                .alg
                .eval_binary(&t_cols[a], &t_cols[b])
                .expect("dims fixed");
            let rho_ta = self.rep.rho_of(&t_cols[a]);
            let rho_tb = self.rep.rho_of(&t_cols[b]);
            let mut inner = rho_ta.col(b);
            vsub_assign(&mut inner, &rho_tb.col(a));
            vsub_assign(&mut val, &t.mul_vec(&inner));
            let two = rat(2, 1);
            out.set_f(&[idx], &val.iter().map(|c| c * &two).collect::<Vec<_>>());
        }
        out
    }

    /// Closed form of `l₃(T, T, T)`: the II-component is six times the
    /// ternary Rota-Baxter defect, the I-component vanishes.
    pub fn closed_l3_ttt(&self, t: &Mat) -> Cochain {
        let (n, m) = (self.base_dim(), self.module_dim());
        let mut out = Cochain::zero(1, m, n);
        let t_cols: Vec<Vec<Rat>> = (0..m).map(|v| t.col(v)).collect();
        for (idx, &(a, b)) in self.v_wedge.pairs.iter().enumerate() {
            for wv in 0..m {
                let mut val = self
                    .alg
                    .eval_ternary(&t_cols[a], &t_cols[b], &t_cols[wv])
                    .expect("dims fixed");
                let mut inner = self.rep.d_of(&t_cols[a], &t_cols[b]).col(wv);
                vadd_assign(&mut inner, &self.rep.mu_of(&t_cols[b], &t_cols[wv]).col(a));
                vsub_assign(&mut inner, &self.rep.mu_of(&t_cols[a], &t_cols[wv]).col(b));
                vsub_assign(&mut val, &t.mul_vec(&inner));
                let six = rat(6, 1);
                out.set_g(
                    &[idx],
                    wv,
                    &val.iter().map(|c| c * &six).collect::<Vec<_>>(),
                );
            }
        }
        out
    }
}

/// Direct check of the two Rota-Baxter identities on all basis tuples.
pub fn rota_baxter_report(
    alg: &LyAlgebra,
    rep: &Representation,
    t: &Mat,
) -> Result<Report, LyError> {
    let n = alg.dim;
    let m = rep.module_dim;
    if t.rows != n || t.cols != m {
        return Err(LyError::DimensionMismatch(format!(
            "operator is {}x{}, expected {}x{}",
            t.rows, t.cols, n, m
        )));
    }
    let t_cols: Vec<Vec<Rat>> = (0..m).map(|v| t.col(v)).collect();
    let mut c1 = CheckBuilder::new("rb_binary");
    let mut c2 = CheckBuilder::new("rb_ternary");
    for u in 0..m {
        for v in 0..m {
            // [Tu, Tv] − T(ρ(Tu)v − ρ(Tv)u)
            let mut r = alg.eval_binary(&t_cols[u], &t_cols[v])?;
            let mut inner = rep.rho_of(&t_cols[u]).col(v);
            vsub_assign(&mut inner, &rep.rho_of(&t_cols[v]).col(u));
            vsub_assign(&mut r, &t.mul_vec(&inner));
            c1.observe(&[u, v], &r);
            for w in 0..m {
                // ⟦Tu,Tv,Tw⟧ − T(D(Tu,Tv)w + μ(Tv,Tw)u − μ(Tu,Tw)v)
                let mut r = alg.eval_ternary(&t_cols[u], &t_cols[v], &t_cols[w])?;
                let mut inner = rep.d_of(&t_cols[u], &t_cols[v]).col(w);
                vadd_assign(&mut inner, &rep.mu_of(&t_cols[v], &t_cols[w]).col(u));
                vsub_assign(&mut inner, &rep.mu_of(&t_cols[u], &t_cols[w]).col(v));
                vsub_assign(&mut r, &t.mul_vec(&inner));
                c2.observe(&[u, v, w], &r);
            }
        }
    }
    let mut report = Report::new();
    report.push(c1.finish());
    report.push(c2.finish());
    Ok(report)
}

pub fn is_rota_baxter(alg: &LyAlgebra, rep: &Representation, t: &Mat) -> bool {
    matches!(rota_baxter_report(alg, rep, t), Ok(r) if r.passed())
}

/// Strict Maurer-Cartan check through the derived brackets: `l₂(T,T) = 0`
/// and `l₃(T,T,T) = 0`.
pub fn strict_mc_report(ctx: &RbContext, t: &Mat) -> Result<Report, LyError> {
    let tc = ctx.operator_cochain(t);
    let l2 = ctx.l2(&tc, &tc)?;
    let l3 = ctx.l3(&tc, &tc, &tc)?;
    let mut report = Report::new();
    let mut c2 = CheckBuilder::new("strict_mc_l2");
    observe_cochain(&mut c2, &l2);
    let mut c3 = CheckBuilder::new("strict_mc_l3");
    observe_cochain(&mut c3, &l3);
    report.push(c2.finish());
    report.push(c3.finish());
    Ok(report)
}

/// Records every nonzero entry of a cochain as a violation.
pub(crate) fn observe_cochain(check: &mut CheckBuilder, c: &Cochain) {
    let w = crate::wedge::wedge_dim(c.domain_dim);
    if c.degree == 0 {
        for v in 0..c.domain_dim {
            check.observe(&[v], c.map0(v));
        }
        return;
    }
    for multi in multi_indices(w, c.degree) {
        check.observe(&multi, c.f_at(&multi));
        for v in 0..c.domain_dim {
            let mut tuple = multi.clone();
            tuple.push(v);
            check.observe(&tuple, c.g_at(&multi, v));
        }
    }
}

/// The twisted L∞ operations attached to a verified operator: the
/// differential `l₁ᵀ`, the twisted binary and ternary operations. The two
/// degree-1 big-space kernels are materialized once.
pub struct TwistedOps<'a> {
    pub ctx: &'a RbContext,
    pub t: Mat,
    inner1: Cochain, // [Δ, T̂]
    inner2: Cochain, // [[Δ, T̂], T̂]
}

impl<'a> TwistedOps<'a> {
    pub fn new(ctx: &'a RbContext, t: &Mat) -> Result<Self, LyError> {
        if !is_rota_baxter(&ctx.alg, &ctx.rep, t) {
            return Err(LyError::NotRotaBaxter);
        }
        let lifted = ctx.lift(&ctx.operator_cochain(t));
        let inner1 = graded_bracket(&ctx.delta, &lifted)?;
        let inner2 = graded_bracket(&inner1, &lifted)?;
        Ok(TwistedOps {
            ctx,
            t: t.clone(),
            inner1,
            inner2,
        })
    }

    /// `l₁ᵀ(P) = l₂(T, P) + ½ l₃(T, T, P)`.
    pub fn l1(&self, p: &Cochain) -> Result<Cochain, LyError> {
        let lifted = self.ctx.lift(p);
        let a = self.ctx.bracket_projected(&self.inner1, &lifted)?;
        let b = self.ctx.bracket_projected(&self.inner2, &lifted)?;
        Ok(a.add(&b.scale(&rat(1, 2))))
    }

    /// `l₂ᵀ(P, Q) = l₂(P, Q) + l₃(T, P, Q)`.
    pub fn l2t(&self, p: &Cochain, q: &Cochain) -> Result<Cochain, LyError> {
        let a = self.ctx.l2(p, q)?;
        let lp = self.ctx.lift(p);
        let mid = graded_bracket(&self.inner1, &lp)?;
        let b = self.ctx.bracket_projected(&mid, &self.ctx.lift(q))?;
        Ok(a.add(&b))
    }

    /// `l₃ᵀ = l₃`; all higher twisted operations vanish.
    pub fn l3t(&self, p: &Cochain, q: &Cochain, r: &Cochain) -> Result<Cochain, LyError> {
        self.ctx.l3(p, q, r)
    }
}

/// Evaluates the twisted Maurer-Cartan equation
/// `l₁ᵀ(T′) + ½ l₂ᵀ(T′,T′) + (1/3!) l₃ᵀ(T′,T′,T′)` and reports whether it
/// vanishes, together with the two coefficient groups of its expansion as a
/// diagnostic breakdown.
pub fn twisted_mc_report(ctx: &RbContext, t: &Mat, t_prime: &Mat) -> Result<Report, LyError> {
    let ops = TwistedOps::new(ctx, t)?;
    let tp = ctx.operator_cochain(t_prime);
    let mc = {
        let a = ops.l1(&tp)?;
        let b = ops.l2t(&tp, &tp)?.scale(&rat(1, 2));
        let c = ops.l3t(&tp, &tp, &tp)?.scale(&rat(1, 6));
        a.add(&b).add(&c)
    };
    let mut report = Report::new();
    let mut main = CheckBuilder::new("twisted_mc_equation");
    observe_cochain(&mut main, &mc);
    report.push(main.finish());

    // Coefficient expansion of the strict equations for T + T′.
    let tc = ctx.operator_cochain(t);
    let two = rat(2, 1);
    let three = rat(3, 1);
    let l2_part = ctx.l2(&tc, &tp)?.scale(&two).add(&ctx.l2(&tp, &tp)?);
    let l3_part = ctx
        .l3(&tc, &tc, &tp)?
        .scale(&three)
        .add(&ctx.l3(&tc, &tp, &tp)?.scale(&three))
        .add(&ctx.l3(&tp, &tp, &tp)?);
    let mut d2 = CheckBuilder::new("mc_coefficient_l2_group");
    d2.note("diagnostic: 2·l2(T,T') + l2(T',T')");
    observe_cochain(&mut d2, &l2_part);
    report.push(d2.finish());
    let mut d3 = CheckBuilder::new("mc_coefficient_l3_group");
    d3.note("diagnostic: 3·l3(T,T,T') + 3·l3(T,T',T') + l3(T',T',T')");
    observe_cochain(&mut d3, &l3_part);
    report.push(d3.finish());
    Ok(report)
}

/// The algebra structure induced on `V` by a verified operator.
pub fn sub_adjacent_algebra(
    alg: &LyAlgebra,
    rep: &Representation,
    t: &Mat,
) -> Result<LyAlgebra, LyError> {
    if !is_rota_baxter(alg, rep, t) {
        return Err(LyError::NotRotaBaxter);
    }
    let m = rep.module_dim;
    let t_cols: Vec<Vec<Rat>> = (0..m).map(|v| t.col(v)).collect();
    let mut binary = vzero(m * m * m);
    let mut ternary = vzero(m * m * m * m);
    for a in 0..m {
        for b in 0..m {
            // [u, v]_T = ρ(Tu)v − ρ(Tv)u
            let mut v = rep.rho_of(&t_cols[a]).col(b);
            vsub_assign(&mut v, &rep.rho_of(&t_cols[b]).col(a));
            for (out, c) in v.iter().enumerate() {
                binary[(a * m + b) * m + out] = c.clone();
            }
            for cidx in 0..m {
                // ⟦u,v,w⟧_T = D(Tu,Tv)w + μ(Tv,Tw)u − μ(Tu,Tw)v
                let mut v = rep.d_of(&t_cols[a], &t_cols[b]).col(cidx);
                vadd_assign(&mut v, &rep.mu_of(&t_cols[b], &t_cols[cidx]).col(a));
                vsub_assign(&mut v, &rep.mu_of(&t_cols[a], &t_cols[cidx]).col(b));
                for (out, c) in v.iter().enumerate() {
                    ternary[((a * m + b) * m + cidx) * m + out] = c.clone();
                }
            }
        }
    }
    LyAlgebra::from_tensors(m, binary, ternary)
}

/// The representation of the sub-adjacent algebra on `g` induced by a
/// verified operator. The derived action is computed from its definition;
/// [`induced_d_closed_form`] provides the closed form for cross-checking.
pub fn induced_representation(
    alg: &LyAlgebra,
    rep: &Representation,
    t: &Mat,
) -> Result<Representation, LyError> {
    let sub = sub_adjacent_algebra(alg, rep, t)?;
    let n = alg.dim;
    let m = rep.module_dim;
    let t_cols: Vec<Vec<Rat>> = (0..m).map(|v| t.col(v)).collect();
    let e = |k: usize| crate::algebra::basis_vec(n, k);

    // ϱ(u) x = [Tu, x] + T(ρ(x)u)
    let mut rho = Vec::with_capacity(m);
    for u in 0..m {
        let mut mat = Mat::zero(n, n);
        for k in 0..n {
            let mut col = alg.eval_binary(&t_cols[u], &e(k))?;
            vadd_assign(&mut col, &t.mul_vec(&rep.rho_at(k).col(u)));
            for (out, c) in col.iter().enumerate() {
                mat.set(out, k, c.clone());
            }
        }
        rho.push(mat);
    }

    // ϖ(u, v) x = ⟦x, Tu, Tv⟧ − T(D(x, Tu)v − μ(x, Tv)u)
    let mut mu = Vec::with_capacity(m * m);
    for u in 0..m {
        for v in 0..m {
            let mut mat = Mat::zero(n, n);
            for k in 0..n {
                let mut col = alg.eval_ternary(&e(k), &t_cols[u], &t_cols[v])?;
                let mut inner = rep.d_of(&e(k), &t_cols[u]).col(v);
                vsub_assign(&mut inner, &rep.mu_of(&e(k), &t_cols[v]).col(u));
                vsub_assign(&mut col, &t.mul_vec(&inner));
                for (out, c) in col.iter().enumerate() {
                    mat.set(out, k, c.clone());
                }
            }
            mu.push(mat);
        }
    }
    Representation::new(&sub, n, rho, mu)
}

/// Closed form for the derived action of the induced representation:
/// `D(u, v) x = ⟦Tu, Tv, x⟧ − T(μ(Tv, x)u − μ(Tu, x)v)`.
pub fn induced_d_closed_form(
    alg: &LyAlgebra,
    rep: &Representation,
    t: &Mat,
    u: usize,
    v: usize,
) -> Result<Mat, LyError> {
    let n = alg.dim;
    let tu = t.col(u);
    let tv = t.col(v);
    let e = |k: usize| crate::algebra::basis_vec(n, k);
    let mut mat = Mat::zero(n, n);
    for k in 0..n {
        let mut col = alg.eval_ternary(&tu, &tv, &e(k))?;
        let mut inner = rep.mu_of(&tv, &e(k)).col(u);
        vsub_assign(&mut inner, &rep.mu_of(&tu, &e(k)).col(v));
        vsub_assign(&mut col, &t.mul_vec(&inner));
        for (out, c) in col.iter().enumerate() {
            mat.set(out, k, c.clone());
        }
    }
    Ok(mat)
}

/// The block operator `[[0, T], [0, 0]]` on `g ⊕ V`; it is a Nijenhuis
/// operator on the semidirect product exactly when `T` is Rota-Baxter.
pub fn nijenhuis_from_operator(ctx: &RbContext, t: &Mat) -> Mat {
    let n = ctx.base_dim();
    let m = ctx.module_dim();
    let mut out = Mat::zero(n + m, n + m);
    for i in 0..n {
        for j in 0..m {
            out.set(i, n + j, t.get(i, j).clone());
        }
    }
    out
}
