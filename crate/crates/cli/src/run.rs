//! Command implementations. Each returns a report document or a
//! classified failure; exit codes are 0 pass, 1 check failure, 2 input
//! error, 3 resource cap.

use crate::problem::{InputError, ProblemFile};
use crate::report_doc::{CohomologyRow, ReportDocument};
use lie_yamaguti::deformation::{
    linear_deformation_report, nijenhuis_element_report, obstruction, order_n_report,
    OrderNDeformation,
};
use lie_yamaguti::rb::{rota_baxter_report, strict_mc_report, RbContext};
use lie_yamaguti::report::{Check, Report};
use lie_yamaguti::scalar::fmt_rat;
use lie_yamaguti::selftest::{self, SelfTestConfig};
use lie_yamaguti::yamaguti;
use lie_yamaguti::{Limits, LyError, RbComplex};

/// A failure outside the report itself.
#[derive(Debug)]
pub struct Failure {
    pub message: String,
    pub exit_code: i32,
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure {
            message: e.0,
            exit_code: 2,
        }
    }
}

impl From<LyError> for Failure {
    fn from(e: LyError) -> Self {
        let exit_code = match e {
            LyError::ResourceCap(_) | LyError::Level { .. } => 3,
            LyError::Internal(_) => 1,
            _ => 2,
        };
        Failure {
            message: e.to_string(),
            exit_code,
        }
    }
}

pub fn exit_code_for(doc: &ReportDocument) -> i32 {
    if doc.passed() {
        0
    } else {
        1
    }
}

/// `verify`: algebra axioms, plus the representation equations when the
/// section is present.
pub fn cmd_verify(pf: &ProblemFile) -> Result<ReportDocument, Failure> {
    let alg = pf.algebra()?;
    let mut report = alg.verify()?;
    if pf.representation.is_some() {
        let rep = pf.representation(&alg, false)?;
        report.merge(rep.verify(&alg)?);
    }
    Ok(ReportDocument::from_report("verify", &report))
}

/// `rb-check`: the direct Rota-Baxter identities and the strict
/// Maurer-Cartan condition, with their agreement reported as a separate
/// oracle check.
pub fn cmd_rb_check(
    pf: &ProblemFile,
    adjoint: bool,
    limits: Limits,
) -> Result<ReportDocument, Failure> {
    let alg = pf.algebra()?;
    let rep = pf.representation(&alg, adjoint)?;
    let t = pf.operator(alg.dim, rep.module_dim)?;
    let direct = rota_baxter_report(&alg, &rep, &t)?;
    let ctx = RbContext::new(&alg, &rep, limits)?;
    let strict = strict_mc_report(&ctx, &t)?;
    let mut report = Report::new();
    let agree = direct.passed() == strict.passed();
    report.merge(direct);
    report.merge(strict);
    report.push(Check {
        name: "oracle_agreement_direct_vs_strict_mc".into(),
        passed: agree,
        violations: u64::from(!agree),
        counterexample: None,
        note: (!agree).then(|| "internal error: the two checkers disagree".into()),
    });
    Ok(ReportDocument::from_report("rb-check", &report))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComplexKind {
    Yamaguti,
    Rb,
}

/// `cohomology`: dimension table for the requested complex up to the
/// requested level.
pub fn cmd_cohomology(
    pf: &ProblemFile,
    level: usize,
    kind: ComplexKind,
    adjoint: bool,
    limits: Limits,
) -> Result<ReportDocument, Failure> {
    let alg = pf.algebra()?;
    let rep = pf.representation(&alg, adjoint)?;
    let mut report = Report::new();
    let alg_ok = alg.verify()?.passed();
    let rep_ok = rep.verify(&alg)?.passed();
    report.push(Check {
        name: "inputs_verified".into(),
        passed: alg_ok && rep_ok,
        violations: u64::from(!alg_ok) + u64::from(!rep_ok),
        counterexample: None,
        note: Some("algebra axioms and representation equations".into()),
    });
    let mut rows = Vec::new();
    match kind {
        ComplexKind::Yamaguti => {
            if level < 2 {
                return Err(Failure {
                    message: "the classical cohomology groups start at level 2".into(),
                    exit_code: 2,
                });
            }
            for l in 2..=level {
                let (z, b, h) = yamaguti::cohomology_dims(&alg, &rep, l, &limits)?;
                rows.push(CohomologyRow {
                    level: l,
                    dim_cochains: yamaguti::cochain_space_dim(alg.dim, rep.module_dim, l),
                    dim_cocycles: z,
                    dim_coboundaries: b,
                    dim_cohomology: h,
                });
            }
        }
        ComplexKind::Rb => {
            if level < 1 {
                return Err(Failure {
                    message: "the operator cohomology groups start at level 1".into(),
                    exit_code: 2,
                });
            }
            let t = pf.operator(alg.dim, rep.module_dim)?;
            let complex = RbComplex::new(&alg, &rep, &t, limits, level)?;
            for l in 1..=level {
                let (z, b, h) = complex.dims(l)?;
                rows.push(CohomologyRow {
                    level: l,
                    dim_cochains: complex.space_dim(l),
                    dim_cocycles: z,
                    dim_coboundaries: b,
                    dim_cohomology: h,
                });
            }
        }
    }
    let mut doc = ReportDocument::from_report("cohomology", &report);
    doc.tables = rows;
    Ok(doc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeformAction {
    CheckLinear,
    Nijenhuis,
    OrderN,
    Obstruction,
}

/// `deform`: linear-deformation check, Nijenhuis element check, order-n
/// verification, or obstruction analysis with the extension solve.
pub fn cmd_deform(
    pf: &ProblemFile,
    action: DeformAction,
    adjoint: bool,
    limits: Limits,
) -> Result<ReportDocument, Failure> {
    let alg = pf.algebra()?;
    let rep = pf.representation(&alg, adjoint)?;
    let t = pf.operator(alg.dim, rep.module_dim)?;
    match action {
        DeformAction::CheckLinear => {
            let coeffs = pf.deformation(alg.dim, rep.module_dim)?;
            let Some(generator) = coeffs.first() else {
                return Err(Failure {
                    message: "deformation section must contain the generator".into(),
                    exit_code: 2,
                });
            };
            let report = linear_deformation_report(&alg, &rep, &t, generator, limits)?;
            Ok(ReportDocument::from_report("deform check-linear", &report))
        }
        DeformAction::Nijenhuis => {
            let x = pf.wedge_element(alg.dim)?;
            let report = nijenhuis_element_report(&alg, &rep, &t, &x)?;
            Ok(ReportDocument::from_report("deform nijenhuis", &report))
        }
        DeformAction::OrderN => {
            let mut coeffs = vec![t];
            coeffs.extend(pf.deformation(alg.dim, rep.module_dim)?);
            let defm = OrderNDeformation::new(coeffs);
            let report = order_n_report(&alg, &rep, &defm);
            Ok(ReportDocument::from_report("deform order-n", &report))
        }
        DeformAction::Obstruction => {
            let mut coeffs = vec![t];
            coeffs.extend(pf.deformation(alg.dim, rep.module_dim)?);
            let defm = OrderNDeformation::new(coeffs);
            let ob = obstruction(&alg, &rep, &defm, limits)?;
            let mut doc = ReportDocument::from_report("deform obstruction", &ob.report);
            doc.extension = ob.extension.map(|m| {
                (0..m.rows)
                    .map(|i| m.row(i).iter().map(fmt_rat).collect())
                    .collect()
            });
            Ok(doc)
        }
    }
}

/// `selftest`: the seeded property battery.
pub fn cmd_selftest(
    seed: u64,
    dims: (usize, usize),
    degree: usize,
    limits: Limits,
) -> Result<ReportDocument, Failure> {
    let cfg = SelfTestConfig {
        seed,
        dims,
        max_degree: degree,
        samples: 25,
        limits,
    };
    let report = selftest::run(&cfg)?;
    Ok(ReportDocument::from_report("selftest", &report))
}
