//! The numeric verification suite run by `symrep verify`.

use nalgebra::{DMatrix, DVector};
use symrep::budget::Budget;
use symrep::numeric::{
    build_rep, build_section, checked_svd, coisotropy_test, inv_moment_eval, jacobian_rank_and_orbit, moment_eval,
    poisson_bracket, reduction_chain, RANK_TOL, verify_commute, ChevalleyPullback, MatrixRep, NumericError, Observable,
    Sampler,
};
use symrep::reduce::AnalysisReport;
use symrep::reps::SympRepSpec;
use symrep::rootdata::Letter;

use crate::error::CliError;
use crate::report::{CheckResult, NumericBlock};

pub const MOMENT_TOL: f64 = 1e-10;
pub const CLOSED_FORM_TOL: f64 = 1e-12;
pub const NILPOTENCY_TOL: f64 = 1e-8;
pub const LOCAL_TOL: f64 = 1e-9;
pub const SECTION_TOL: f64 = 1e-8;
pub const POISSON_TOL: f64 = 1e-8;

/// Builds the matrix model, mapping model errors to exit codes: missing
/// models are NotSupported (4), an oversized model is a budget exit (3).
pub fn model(spec: &SympRepSpec, budget: &Budget) -> Result<MatrixRep<f64>, CliError> {
    build_rep::<f64>(spec, budget.matrix_dim_cap).map_err(|e| match e {
        NumericError::CapExceeded { .. } => CliError::Budget(e.to_string()),
        NumericError::NotSupported(m) => CliError::NotSupported(m),
        NumericError::NoSymplecticForm(_) => CliError::NotSupported(e.to_string()),
        other => CliError::Defect(other.to_string()),
    })
}

fn measured(name: &str, residual: f64, tol: f64) -> CheckResult {
    CheckResult {
        name: name.to_string(),
        max_residual: Some(residual),
        tolerance: Some(tol),
        passed: residual <= tol,
        detail: None,
    }
}

fn exact(name: &str, passed: bool, detail: String) -> CheckResult {
    CheckResult { name: name.to_string(), max_residual: None, tolerance: None, passed, detail: Some(detail) }
}

fn errored(name: &str, e: &NumericError) -> CheckResult {
    exact(name, false, e.to_string())
}

/// Runs every applicable check. Sampling is seeded, so equal seeds give
/// equal residuals.
pub fn run_checks(
    spec: &SympRepSpec,
    analysis: &AnalysisReport,
    budget: &Budget,
    seed: u64,
    samples: usize,
) -> Result<NumericBlock, CliError> {
    let rep = model(spec, budget)?;
    let samples = samples.max(1);
    let mut checks = Vec::new();

    checks.push(measured("model_invariants", rep.check_invariants().max(), MOMENT_TOL));

    let checks_weights = match spec.weights(budget.irrep_dim_cap) {
        Ok(w) => exact("weight_multiset", w == rep.weight_multiset(), format!("dim V = {}", rep.dim)),
        Err(e) => exact("weight_multiset", false, e.to_string()),
    };
    checks.push(checks_weights);

    let mut sampler = Sampler::new(seed);
    let points: Vec<DVector<f64>> = (0..samples).map(|_| sampler.unit_vector::<f64>(rep.dim)).collect();
    checks.push(measured("moment_identity", moment_identity(&rep, &points), MOMENT_TOL));
    if is_sp_standard(spec) {
        checks.push(measured("sp_closed_form", sp_closed_form(&rep, &points), CLOSED_FORM_TOL));
    }
    if analysis.rk_s == 0 {
        let inv = points
            .iter()
            .flat_map(|v| inv_moment_eval(&rep, v).expect("dimension matches the model"))
            .fold(0.0, |m: f64, c| m.max(c.abs()));
        checks.push(measured("invariant_moment_zero", inv, MOMENT_TOL));
        checks.push(measured("nilpotency", nilpotency(&rep, &points), NILPOTENCY_TOL));
    }

    checks.push(match jacobian_rank_and_orbit(&rep, samples.min(10), seed) {
        Ok(est) => {
            let cois = coisotropy_test(&rep, samples.min(10), seed);
            let ok = est.est_rk == analysis.rk_s && est.est_c == analysis.c_s && cois == analysis.mf;
            exact(
                "rank_complexity",
                ok,
                format!(
                    "numeric (rk, c, coisotropic) = ({}, {}, {}), combinatorial ({}, {}, {})",
                    est.est_rk, est.est_c, cois, analysis.rk_s, analysis.c_s, analysis.mf
                ),
            )
        }
        Err(e) => errored("rank_complexity", &e),
    });

    checks.push(local_structure(&rep, budget, &mut sampler, samples));

    match build_section(&rep, budget, samples, seed) {
        Ok((_, sc)) => {
            checks.push(measured("section", sc.max_residual, SECTION_TOL));
            checks.push(measured("section_zero_fiber", sc.zero_fiber_residual, SECTION_TOL));
        }
        Err(e) => checks.push(errored("section", &e)),
    }

    checks.push(measured("poisson_commute", poisson_commute(&rep, &points), POISSON_TOL));

    let passed = checks.iter().all(|c| c.passed);
    Ok(NumericBlock { seed, samples, checks, passed })
}

/// `|½ω(ξv, v) − tr(m(v)ξ)|` over the Lie basis.
fn moment_identity(rep: &MatrixRep<f64>, points: &[DVector<f64>]) -> f64 {
    let mut worst: f64 = 0.0;
    for v in points {
        let m = moment_eval(rep, v).expect("dimension matches the model");
        for (g, c) in rep.lie_basis.iter().zip(&m.coords) {
            let direct = 0.5 * (&g.on_v * v).dot(&(&rep.form * v));
            worst = worst.max((direct - c).abs()).max(((&m.matrix_form * &g.defining).trace() - c).abs());
        }
    }
    worst
}

fn is_sp_standard(spec: &SympRepSpec) -> bool {
    let d = spec.datum();
    let [f] = d.factors() else { return false };
    let sp = f.letter == Letter::C || (f.letter == Letter::A && f.rank == 1);
    let s = spec.summands();
    sp && d.central_rank() == 0
        && s.len() == 1
        && s[0].mult == 1
        && s[0].highest_weight.coords().iter().enumerate().all(|(i, &x)| x == i64::from(i == 0))
}

/// `‖m(v) + ½vvᵀJ‖` and the second singular value of `m(v)`.
fn sp_closed_form(rep: &MatrixRep<f64>, points: &[DVector<f64>]) -> f64 {
    let mut worst: f64 = 0.0;
    for v in points {
        let m = moment_eval(rep, v).expect("dimension matches the model").matrix_form;
        let closed = v * v.transpose() * &rep.form * 0.5;
        let sv = checked_svd(&m).singular_values;
        let mut s: Vec<f64> = sv.iter().copied().collect();
        s.sort_by(|a, b| b.total_cmp(a));
        worst = worst.max((&m + closed).norm()).max(s.get(1).copied().unwrap_or(0.0));
    }
    worst
}

/// Largest eigenvalue modulus of `m(v)` in the defining module. Eigenvalues
/// of a nilpotent matrix move by `√ε` under rounding, so they are read from
/// the compression `Σ_r V_rᵀ U_r` of the rank-`r` truncated SVD `U Σ Vᵀ`,
/// which has the same nonzero eigenvalues as the truncation.
fn nilpotency(rep: &MatrixRep<f64>, points: &[DVector<f64>]) -> f64 {
    points
        .iter()
        .map(|v| {
            let m = moment_eval(rep, v).expect("dimension matches the model").matrix_form;
            compressed_spectral_radius(&m)
        })
        .fold(0.0, f64::max)
}

pub fn compressed_spectral_radius(m: &DMatrix<f64>) -> f64 {
    let svd = checked_svd(m);
    let (u, vt) = (&svd.u, &svd.v_t);
    let smax = svd.singular_values.iter().copied().fold(0.0, f64::max);
    let keep: Vec<usize> =
        (0..svd.singular_values.len()).filter(|&i| svd.singular_values[i] > RANK_TOL * smax.max(1.0)).collect();
    if keep.is_empty() {
        return 0.0;
    }
    let r = keep.len();
    let c = DMatrix::from_fn(r, r, |a, b| svd.singular_values[keep[a]] * vt.row(keep[a]).dot(&u.column(keep[b]).transpose()));
    c.complex_eigenvalues().iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn local_structure(rep: &MatrixRep<f64>, budget: &Budget, sampler: &mut Sampler, samples: usize) -> CheckResult {
    const NAME: &str = "local_structure";
    let chain = match reduction_chain(rep, budget) {
        Ok(c) => c,
        Err(e) => return errored(NAME, &e),
    };
    let mut worst: f64 = 0.0;
    for stage in &chain.stages {
        for _ in 0..samples {
            let s = stage.next_basis() * sampler.vector::<f64>(stage.next_dim());
            match verify_commute(rep, stage, &s) {
                Ok((emb, r)) => {
                    worst = worst
                        .max(emb.sigma_residual)
                        .max(emb.perp_residual)
                        .max(emb.triangularity)
                        .max(emb.diagonal)
                        .max(r.max());
                }
                Err(e) => return errored(NAME, &e),
            }
        }
    }
    let mut c = measured(NAME, worst, LOCAL_TOL);
    c.detail = Some(format!("{} stages", chain.stages.len()));
    c
}

/// `{m*pᵢ, m*pⱼ}` for all pairs of Chevalley coordinates, relative to the
/// gradient norms.
fn poisson_commute(rep: &MatrixRep<f64>, points: &[DVector<f64>]) -> f64 {
    let Some(v) = points.first() else { return 0.0 };
    let k = inv_moment_eval(rep, v).expect("dimension matches the model").len();
    let mut worst: f64 = 0.0;
    for v in points.iter().take(5) {
        for i in 0..k {
            for j in i + 1..k {
                let (a, b) = (ChevalleyPullback { rep, coord: i }, ChevalleyPullback { rep, coord: j });
                let scale = 1.0 + a.gradient(v).norm() * b.gradient(v).norm();
                worst = worst.max(poisson_bracket(rep, &a, &b, v).abs() / scale);
            }
        }
    }
    worst
}
