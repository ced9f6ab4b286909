//! Deterministic property battery: the library's structural identities
//! exercised on seeded random data. Used by the command-line self test and re-used by the
//! test suite with larger sample counts.

use crate::algebra::{adjoint_representation, Representation};
use crate::cochain::{graded_bracket, structure_cochain, Cochain};
use crate::error::LyError;
use crate::fixtures;
use crate::limits::Limits;
use crate::linalg::Mat;
use crate::rb::{is_rota_baxter, strict_mc_report, twisted_mc_report, RbContext};
use crate::rb_cohomology::RbComplex;
use crate::report::{Check, Report};
use crate::sampling;
use crate::scalar::rat;
use crate::yamaguti;
use rand_chacha::ChaCha12Rng;

#[derive(Debug, Clone, Copy)]
pub struct SelfTestConfig {
    pub seed: u64,
    /// `(algebra dimension, module dimension)` for the generic batteries.
    pub dims: (usize, usize),
    /// Highest cochain degree sampled.
    pub max_degree: usize,
    /// Samples per property.
    pub samples: usize,
    pub limits: Limits,
}

impl Default for SelfTestConfig {
    fn default() -> Self {
        SelfTestConfig {
            seed: 42,
            dims: (2, 2),
            max_degree: 2,
            samples: 25,
            limits: Limits::default(),
        }
    }
}

fn summarize(name: &str, passed: usize, total: usize) -> Check {
    Check {
        name: name.into(),
        passed: passed == total,
        violations: (total - passed) as u64,
        counterexample: None,
        note: Some(format!("{passed}/{total} samples")),
    }
}

/// Graded skew-symmetry of the bracket on random cochains.
pub fn battery_graded_skew(
    r: &mut ChaCha12Rng,
    dim: usize,
    max_degree: usize,
    samples: usize,
) -> Result<Check, LyError> {
    use rand::Rng;
    let mut ok = 0;
    for _ in 0..samples {
        let p = r.gen_range(0..=max_degree);
        let q = r.gen_range(0..=max_degree);
        let a = sampling::cochain(r, p, dim, dim);
        let b = sampling::cochain(r, q, dim, dim);
        let ab = graded_bracket(&a, &b)?;
        let ba = graded_bracket(&b, &a)?;
        let expect = if (p * q) % 2 == 0 {
            ba.scale(&rat(-1, 1))
        } else {
            ba
        };
        if ab == expect {
            ok += 1;
        }
    }
    Ok(summarize("graded_bracket_skew_symmetry", ok, samples))
}

/// Graded Jacobi identity on random cochain triples.
pub fn battery_graded_jacobi(
    r: &mut ChaCha12Rng,
    dim: usize,
    max_degree: usize,
    samples: usize,
) -> Result<Check, LyError> {
    use rand::Rng;
    let mut ok = 0;
    for _ in 0..samples {
        let p = r.gen_range(0..=max_degree);
        let q = r.gen_range(0..=max_degree);
        let s = r.gen_range(0..=max_degree);
        let a = sampling::cochain(r, p, dim, dim);
        let b = sampling::cochain(r, q, dim, dim);
        let c = sampling::cochain(r, s, dim, dim);
        if jacobi_residual(&a, &b, &c, p, q, s)?.is_zero() {
            ok += 1;
        }
    }
    Ok(summarize("graded_bracket_jacobi", ok, samples))
}

/// `(−1)^{pr}[[a,b],c] + (−1)^{qp}[[b,c],a] + (−1)^{rq}[[c,a],b]`.
pub fn jacobi_residual(
    a: &Cochain,
    b: &Cochain,
    c: &Cochain,
    p: usize,
    q: usize,
    s: usize,
) -> Result<Cochain, LyError> {
    let sgn = |e: usize| if e % 2 == 0 { rat(1, 1) } else { rat(-1, 1) };
    let t1 = graded_bracket(&graded_bracket(a, b)?, c)?.scale(&sgn(p * s));
    let t2 = graded_bracket(&graded_bracket(b, c)?, a)?.scale(&sgn(q * p));
    let t3 = graded_bracket(&graded_bracket(c, a)?, b)?.scale(&sgn(s * q));
    Ok(t1.add(&t2).add(&t3))
}

/// The coboundary squares to zero, over a chosen verified pair.
pub fn battery_coboundary_squared(
    r: &mut ChaCha12Rng,
    alg: &crate::algebra::LyAlgebra,
    rep: &Representation,
    max_degree: usize,
    samples: usize,
    name: &str,
) -> Result<Check, LyError> {
    use rand::Rng;
    let mut ok = 0;
    for _ in 0..samples {
        let p = r.gen_range(0..=max_degree);
        let f = sampling::cochain(r, p, alg.dim, rep.module_dim);
        let df = yamaguti::coboundary(alg, rep, &f)?;
        let ddf = yamaguti::coboundary(alg, rep, &df)?;
        if ddf.is_zero() {
            ok += 1;
        }
    }
    Ok(summarize(name, ok, samples))
}

/// The coboundary of the adjoint representation against the bracket with
/// the structure cochain: `δ(F) = (−1)^degree [Π, F]` (no sign in degree 0).
pub fn battery_adjoint_differential(
    r: &mut ChaCha12Rng,
    alg: &crate::algebra::LyAlgebra,
    max_degree: usize,
    samples: usize,
    name: &str,
) -> Result<Check, LyError> {
    use rand::Rng;
    let adj = adjoint_representation(alg);
    let pi = structure_cochain(alg);
    let mut ok = 0;
    for _ in 0..samples {
        let p = r.gen_range(0..=max_degree);
        let f = sampling::cochain(r, p, alg.dim, alg.dim);
        let lhs = yamaguti::coboundary(alg, &adj, &f)?;
        let rhs = graded_bracket(&pi, &f)?;
        let expect = if p % 2 == 0 {
            rhs
        } else {
            rhs.scale(&rat(-1, 1))
        };
        if lhs == expect {
            ok += 1;
        }
    }
    Ok(summarize(name, ok, samples))
}

/// Equivalence of the direct Rota-Baxter identities with the strict
/// Maurer-Cartan condition of the derived brackets, plus exact agreement of
/// the closed forms for `l₂(T,T)` and `l₃(T,T,T)`.
pub fn battery_strict_mc_equivalence(
    r: &mut ChaCha12Rng,
    ctx: &RbContext,
    samples: usize,
    name: &str,
) -> Result<Check, LyError> {
    let (n, m) = (ctx.base_dim(), ctx.module_dim());
    let mut ok = 0;
    for i in 0..samples {
        // Mix known Rota-Baxter operators in among arbitrary ones so both
        // sides of the equivalence are exercised.
        let t = if n == 2 && m == 2 && i % 3 == 0 {
            fixtures::two_dim_rb(&sampling::small_rat(r), &sampling::small_rat(r))
        } else {
            sampling::matrix(r, n, m)
        };
        let direct = is_rota_baxter(&ctx.alg, &ctx.rep, &t);
        let strict = strict_mc_report(ctx, &t)?.passed();
        let tc = ctx.operator_cochain(&t);
        let closed2 = ctx.closed_l2_tt(&t) == ctx.l2(&tc, &tc)?;
        let closed3 = ctx.closed_l3_ttt(&t) == ctx.l3(&tc, &tc, &tc)?;
        if direct == strict && closed2 && closed3 {
            ok += 1;
        }
    }
    Ok(summarize(name, ok, samples))
}

/// Equivalence of the twisted Maurer-Cartan equation for `T'` with the
/// Rota-Baxter property of `T + T'`.
pub fn battery_twisted_mc_equivalence(
    r: &mut ChaCha12Rng,
    ctx: &RbContext,
    t: &Mat,
    samples: usize,
    name: &str,
) -> Result<Check, LyError> {
    let (n, m) = (ctx.base_dim(), ctx.module_dim());
    let mut ok = 0;
    for _ in 0..samples {
        let tp = sampling::matrix(r, n, m);
        let mc = twisted_mc_report(ctx, t, &tp)?
            .check("twisted_mc_equation")
            .map(|c| c.passed)
            .unwrap_or(false);
        let rb = is_rota_baxter(&ctx.alg, &ctx.rep, &t.add(&tp));
        if mc == rb {
            ok += 1;
        }
    }
    Ok(summarize(name, ok, samples))
}

/// Agreement of the complex coboundary with the twisted differential, with
/// the degree sign.
pub fn battery_complex_vs_differential(
    r: &mut ChaCha12Rng,
    complex: &RbComplex,
    max_degree: usize,
    samples: usize,
    name: &str,
) -> Result<Check, LyError> {
    use rand::Rng;
    let (n, m) = (complex.alg().dim, complex.rep().module_dim);
    let mut ok = 0;
    for _ in 0..samples {
        let p = r.gen_range(0..=max_degree);
        let f = sampling::cochain(r, p, m, n);
        if complex.differential_comparison(&f)?.passed() {
            ok += 1;
        }
    }
    Ok(summarize(name, ok, samples))
}

/// Runs the full battery.
pub fn run(cfg: &SelfTestConfig) -> Result<Report, LyError> {
    let mut r = sampling::rng(cfg.seed);
    let mut report = Report::new();
    let (n, m) = cfg.dims;

    report.push(battery_graded_skew(&mut r, n, cfg.max_degree, cfg.samples)?);
    report.push(battery_graded_jacobi(
        &mut r,
        n,
        cfg.max_degree,
        cfg.samples,
    )?);

    // Fixture-based structural identities.
    let g2 = fixtures::two_dim();
    let adj2 = adjoint_representation(&g2);
    report.push(battery_coboundary_squared(
        &mut r,
        &g2,
        &adj2,
        cfg.max_degree,
        cfg.samples,
        "coboundary_squares_to_zero_adjoint",
    )?);
    let abelian = crate::algebra::LyAlgebra::abelian(n);
    let zero_rep = Representation::zero(&abelian, m);
    report.push(battery_coboundary_squared(
        &mut r,
        &abelian,
        &zero_rep,
        cfg.max_degree,
        cfg.samples,
        "coboundary_squares_to_zero_zero_rep",
    )?);
    report.push(battery_adjoint_differential(
        &mut r,
        &g2,
        cfg.max_degree,
        cfg.samples,
        "adjoint_coboundary_is_bracket_differential",
    )?);

    let ctx2 = RbContext::new(&g2, &adj2, cfg.limits)?;
    report.push(battery_strict_mc_equivalence(
        &mut r,
        &ctx2,
        cfg.samples,
        "strict_mc_matches_rota_baxter",
    )?);
    let t = fixtures::two_dim_rb(&rat(0, 1), &rat(1, 1));
    report.push(battery_twisted_mc_equivalence(
        &mut r,
        &ctx2,
        &t,
        cfg.samples,
        "twisted_mc_matches_deformed_rota_baxter",
    )?);
    let complex = RbComplex::new(&g2, &adj2, &t, cfg.limits, 1)?;
    report.push(battery_complex_vs_differential(
        &mut r,
        &complex,
        cfg.max_degree,
        cfg.samples,
        "complex_coboundary_matches_twisted_differential",
    )?);

    // Generic dims: the abelian algebra with the zero representation keeps
    // every battery legal at arbitrary (n, m).
    let ctx_ab = RbContext::new(&abelian, &zero_rep, cfg.limits)?;
    report.push(battery_strict_mc_equivalence(
        &mut r,
        &ctx_ab,
        cfg.samples.min(10),
        "strict_mc_matches_rota_baxter_abelian",
    )?);
    Ok(report)
}
