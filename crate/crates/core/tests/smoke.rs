//! Cross-module smoke checks of the main structural identities on small
//! fixtures. The heavyweight batteries live in the acceptance suite.

use lie_yamaguti::algebra::{adjoint_representation, semidirect_product};
use lie_yamaguti::cochain::{graded_bracket, structure_cochain};
use lie_yamaguti::fixtures;
use lie_yamaguti::rb::{is_rota_baxter, strict_mc_report, RbContext};
use lie_yamaguti::rb_cohomology::RbComplex;
use lie_yamaguti::sampling;
use lie_yamaguti::scalar::rat;
use lie_yamaguti::selftest;
use lie_yamaguti::yamaguti;
use lie_yamaguti::Limits;

#[test]
fn fixtures_and_adjoint_verify() {
    for alg in [fixtures::two_dim(), fixtures::four_dim()] {
        let rep = alg.verify().unwrap();
        assert!(rep.passed(), "{}", rep.render_text());
        let adj = adjoint_representation(&alg);
        let rep = adj.verify(&alg).unwrap();
        assert!(rep.passed(), "{}", rep.render_text());
        let semi = semidirect_product(&alg, &adj);
        let rep = semi.verify().unwrap();
        assert!(rep.passed(), "{}", rep.render_text());

        // The structure element of the big space squares to zero and equals
        // the structure cochain of the semidirect product componentwise.
        let ctx = RbContext::new(&alg, &adj, Limits::default()).unwrap();
        assert_eq!(ctx.delta, structure_cochain(&semi));
        assert!(graded_bracket(&ctx.delta, &ctx.delta).unwrap().is_zero());
    }
}

#[test]
fn adjoint_coboundary_matches_bracket_differential() {
    let mut r = sampling::rng(7);
    for alg in [fixtures::two_dim(), fixtures::four_dim()] {
        let adj = adjoint_representation(&alg);
        let pi = structure_cochain(&alg);
        for p in 0..=2usize {
            if alg.dim == 4 && p == 2 {
                continue; // covered in the acceptance battery
            }
            let f = sampling::cochain(&mut r, p, alg.dim, alg.dim);
            let lhs = yamaguti::coboundary(&alg, &adj, &f).unwrap();
            let rhs = graded_bracket(&pi, &f).unwrap();
            let expect = if p % 2 == 0 {
                rhs
            } else {
                rhs.scale(&rat(-1, 1))
            };
            assert_eq!(lhs, expect, "degree {p} dim {}", alg.dim);
        }
    }
}

#[test]
fn strict_mc_and_closed_forms_on_two_dim() {
    let g2 = fixtures::two_dim();
    let adj = adjoint_representation(&g2);
    let ctx = RbContext::new(&g2, &adj, Limits::default()).unwrap();
    let t = fixtures::two_dim_rb(&rat(1, 2), &rat(-3, 1));
    assert!(is_rota_baxter(&g2, &adj, &t));
    let rep = strict_mc_report(&ctx, &t).unwrap();
    assert!(rep.passed(), "{}", rep.render_text());

    let mut r = sampling::rng(11);
    for _ in 0..5 {
        let t = sampling::matrix(&mut r, 2, 2);
        let tc = ctx.operator_cochain(&t);
        assert_eq!(ctx.closed_l2_tt(&t), ctx.l2(&tc, &tc).unwrap());
        assert_eq!(ctx.closed_l3_ttt(&t), ctx.l3(&tc, &tc, &tc).unwrap());
    }
}

#[test]
fn complex_routes_and_twisted_differential_on_four_dim() {
    let g4 = fixtures::four_dim();
    let adj = adjoint_representation(&g4);
    let mut r = sampling::rng(13);
    let entries: [lie_yamaguti::Rat; 9] = std::array::from_fn(|_| sampling::small_rat(&mut r));
    let t = fixtures::four_dim_rb(&entries);
    assert!(
        is_rota_baxter(&g4, &adj, &t),
        "pattern operator should be Rota-Baxter"
    );
    let complex = RbComplex::new(&g4, &adj, &t, Limits::default(), 0).unwrap();
    for p in 0..=1usize {
        let f = sampling::cochain(&mut r, p, 4, 4);
        // coboundary() internally enforces agreement of both routes.
        let _ = complex.coboundary(&f).unwrap();
        let cmp = complex.differential_comparison(&f).unwrap();
        assert!(cmp.passed(), "degree {p}: {}", cmp.render_text());
    }
}

#[test]
fn selftest_battery_default_passes() {
    let report = selftest::run(&selftest::SelfTestConfig::default()).unwrap();
    assert!(report.passed(), "{}", report.render_text());
}

/// Full pipeline on a structurally different algebra: the commutator
/// structure of 2×2 matrices with one truncation step and its integral
/// operator.
#[test]
fn truncated_series_pipeline() {
    use lie_yamaguti::assoc;
    use lie_yamaguti::rb_cohomology::level0_gluing_report;

    let a = assoc::AssocAlgebra::matrix_algebra(2);
    let (lya, omega) = assoc::truncated_series_rb(&a, 1).unwrap();
    assert_eq!(lya.dim, 8);
    let adj = adjoint_representation(&lya);
    let complex = RbComplex::new(&lya, &adj, &omega, Limits::default(), 0).unwrap();

    let mut r = sampling::rng(23);
    // Dual-route coboundary and the twisted-differential sign law at
    // degree 0 (level 1).
    let f = sampling::cochain(&mut r, 0, 8, 8);
    let cmp = complex.differential_comparison(&f).unwrap();
    assert!(cmp.passed(), "{}", cmp.render_text());

    // Level-0 gluing for a couple of wedge elements.
    for k in [0usize, 7, 19] {
        let mut x = vec![rat(0, 1); 28];
        x[k] = rat(1, 1);
        let rep = level0_gluing_report(&complex, &x).unwrap();
        assert!(rep.passed(), "wedge {k}: {}", rep.render_text());
    }
}

/// If the sum of the structure cochain with a degree-1 perturbation again
/// defines a verified algebra, the perturbation solves the Maurer-Cartan
/// equation of the induced differential: `d_Π(Π') + ½[Π',Π'] = 0`.
#[test]
fn perturbation_of_structure_is_maurer_cartan_in_the_differential() {
    use lie_yamaguti::cochain::differential;
    use lie_yamaguti::LyAlgebra;
    let base = fixtures::two_dim();
    let pi = structure_cochain(&base);
    // A second verified algebra on the same space: the 2-dim Lie algebra
    // [e1,e2] = e2 with zero ternary bracket.
    let other = LyAlgebra::from_brackets(2, &[(0, 1, vec![rat(0, 1), rat(1, 1)])], &[]).unwrap();
    assert!(other.verify().unwrap().passed());
    let pi_prime = structure_cochain(&other).sub(&pi);
    let mc = differential(&pi, &pi_prime).unwrap().add(
        &graded_bracket(&pi_prime, &pi_prime)
            .unwrap()
            .scale(&rat(1, 2)),
    );
    assert!(mc.is_zero());
}
