use serde_json::{json, Value};

use opkernel::certify::{
    assemble_probe_report, classify_and_report, demo_counterexample_radial_bump, demo_counterexample_shifted_gaussian,
    probe_trial, ClassifyOptions, ProbeOptions, ProbeVerdict,
};
use opkernel::kernel::{deriv_gram, gram};
use opkernel::measures::RadialVerdict;
use opkernel::profiles::{completely_monotone_check, ell_cm_check, williamson_construct, DEFAULT_STEP};
use opkernel::rkhs::{hermite_interpolate, quadratic_form_routes, rkhs_deriv_eval, rkhs_eval, sup_error};
use opkernel::{HermitianMatrix, MatrixKernel, MultiIndex, OperatorKernel, OperatorMeasure, RadialProfile, C64};

use crate::descriptor::{
    multi_index, EvalInput, GramInput, InterpInput, MonotoneFunction, MonotoneInput, ProbeInput, QuadraticFormInput,
};
use crate::error::{CliError, CliResult, Exit};
use crate::report::{self, envelope, layout, Metadata, Tolerances};

#[derive(Debug, Clone)]
pub struct Ctx {
    pub seed: u64,
    pub tol: Tolerances,
    pub timestamp: bool,
    pub jobs: usize,
}

impl Ctx {
    fn meta(&self) -> Metadata {
        Metadata::new(self.seed, self.tol, self.timestamp)
    }
}

pub enum Output {
    Json(Value),
    Csv { csv: String, sidecar: Value },
}

pub struct Outcome {
    pub output: Output,
    pub exit: Exit,
}

impl Outcome {
    fn json(v: Value, exit: Exit) -> Self {
        Self {
            output: Output::Json(v),
            exit,
        }
    }
}

fn input_value<T: serde::Serialize>(input: &T) -> Value {
    serde_json::to_value(input).expect("descriptors always serialize")
}

pub fn eval(ctx: &Ctx, input: &EvalInput) -> CliResult<Outcome> {
    let k = input.kernel.build()?;
    let m = k.ambient_dim();
    let result = match (input.t, &input.x, &input.y) {
        (Some(t), None, None) => {
            if input.alpha.is_some() || input.beta.is_some() {
                return Err(CliError::input("alpha/beta are not supported with t"));
            }
            json!({ "t": t, "value": report::matrix(&k.radial_function_eval(t)?) })
        }
        (None, Some(x), Some(y)) => {
            let z = vec![0; m];
            let alpha = multi_index(input.alpha.as_deref().unwrap_or(&z), m, "alpha")?;
            let beta = multi_index(input.beta.as_deref().unwrap_or(&z), m, "beta")?;
            let v = k.deriv_eval(&alpha, &beta, x, y)?;
            json!({ "alpha": alpha.components(), "beta": beta.components(), "value": report::matrix(&v) })
        }
        _ => return Err(CliError::input("eval needs either `t` or both `x` and `y`")),
    };
    Ok(Outcome::json(envelope("eval", &ctx.meta(), input_value(input), result), Exit::Ok))
}

pub fn gram_cmd(ctx: &Ctx, input: &GramInput, derivative: bool, csv: bool) -> CliResult<Outcome> {
    let k = input.kernel.build()?;
    let (matrix, indices, min_eig, trace) = if derivative {
        let q = input.q.ok_or_else(|| CliError::input("deriv-gram: missing field `q`"))?;
        let g = deriv_gram(&k, &input.points, q)?;
        let (e, t) = (g.min_eigenvalue()?, g.trace());
        (g.matrix.into_cmatrix(), g.indices, e, t)
    } else {
        if input.q.is_some() {
            return Err(CliError::input("gram: field `q` is only valid for deriv-gram"));
        }
        let g = gram(&k, &input.points)?;
        let (e, t) = (g.min_eigenvalue()?, g.trace());
        (g.matrix.into_cmatrix(), vec![MultiIndex::zero(k.ambient_dim())], e, t)
    };
    let lay = layout(input.points.len(), k.value_dim(), &indices);
    let command = if derivative { "deriv-gram" } else { "gram" };
    let mut result = json!({
        "layout": lay,
        "indices": indices.iter().map(|a| a.components().to_vec()).collect::<Vec<_>>(),
        "value_dim": k.value_dim(),
        "size": matrix.rows(),
        "min_eigenvalue": min_eig,
        "trace": trace,
    });
    if csv {
        let sidecar = envelope(command, &ctx.meta(), input_value(input), result);
        return Ok(Outcome {
            output: Output::Csv {
                csv: report::gram_csv(&matrix, &lay),
                sidecar,
            },
            exit: Exit::Ok,
        });
    }
    result["matrix"] = report::matrix(&matrix);
    Ok(Outcome::json(envelope(command, &ctx.meta(), input_value(input), result), Exit::Ok))
}

pub fn classify(ctx: &Ctx, input: &ProbeInput) -> CliResult<Outcome> {
    let (profile, measure) = input.kernel.radial_parts()?;
    let opts = ClassifyOptions {
        ambient_dim: input.kernel.ambient_dim,
        tol: ctx.tol.psd,
        probe: probe_options(ctx, input),
    };
    let r = classify_and_report(&measure, profile, &opts)?;
    if !r.consistent {
        return Err(CliError::Numerical(
            "exact criterion and probes disagree; this indicates a bug or a tolerance problem".into(),
        ));
    }
    let c = &r.classification;
    let strict = c.verdict == RadialVerdict::StrictlyPdAndUniversal;
    let result = json!({
        "verdict": if strict { "strictly-pd-and-universal" } else { "not-strictly-pd" },
        "restricted_min_eigenvalue": c.restricted_min_eigenvalue,
        "threshold": c.threshold,
        "witness": c.witness.as_deref().map(report::vector),
        "witness_design": r.witness_design.as_ref().map(|w| json!({
            "points": w.points,
            "witness_form": w.witness_form,
            "min_eigenvalue": w.min_eigenvalue,
            "scale": w.scale,
            "null_found": w.null_found,
        })),
        "c0_member": r.c0_member,
        "jet_order": r.jet_order,
        "consistent": r.consistent,
        "probe": report::probe_report(&r.probe),
    });
    let exit = if strict { Exit::Ok } else { Exit::Negative };
    Ok(Outcome::json(envelope("classify", &ctx.meta(), input_value(input), result), exit))
}

fn probe_options(ctx: &Ctx, input: &ProbeInput) -> ProbeOptions {
    ProbeOptions {
        n: input.probe.n,
        trials: input.probe.trials,
        seed: ctx.seed,
        box_half_width: input.probe.box_half_width,
        tol: ctx.tol.probe,
    }
}

/// Runs trials on `jobs` threads; the report does not depend on `jobs`.
fn run_probe(k: &OperatorKernel, opts: &ProbeOptions, jobs: usize) -> CliResult<opkernel::certify::ProbeReport> {
    let jobs = jobs.clamp(1, opts.trials.max(1));
    let outcomes = std::thread::scope(|s| {
        let handles: Vec<_> = (0..jobs)
            .map(|j| {
                s.spawn(move || {
                    (j..opts.trials)
                        .step_by(jobs)
                        .map(|t| probe_trial(k, opts, t))
                        .collect::<Result<Vec<_>, _>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("probe worker panicked"))
            .collect::<Result<Vec<_>, _>>()
    })?;
    Ok(assemble_probe_report(opts, outcomes.into_iter().flatten().collect()))
}

pub fn probe(ctx: &Ctx, input: &ProbeInput) -> CliResult<Outcome> {
    let k = input.kernel.build()?;
    let opts = probe_options(ctx, input);
    if opts.n < 2 {
        return Err(CliError::input("probe.n must be >= 2"));
    }
    let r = run_probe(&k, &opts, ctx.jobs)?;
    let exit = match r.verdict {
        ProbeVerdict::NoViolationFound => Exit::Ok,
        ProbeVerdict::ViolationFound { .. } => Exit::Negative,
    };
    Ok(Outcome::json(
        envelope("probe", &ctx.meta(), input_value(input), report::probe_report(&r)),
        exit,
    ))
}

pub fn quadratic_form(ctx: &Ctx, input: &QuadraticFormInput) -> CliResult<Outcome> {
    let k = input.kernel.build()?;
    let eta = input.eta.build(k.ambient_dim(), k.value_dim())?;
    let r = quadratic_form_routes(&k, &eta)?;
    let consistent = r.discrepancy() <= 1e-12 * r.scale;
    if !consistent {
        return Err(CliError::Numerical(format!(
            "block-Gram route {} and pairing route {} disagree",
            r.block_gram, r.pairing
        )));
    }
    let result = json!({
        "value": r.block_gram,
        "pairing": { "re": r.pairing.re, "im": r.pairing.im },
        "scale": r.scale,
        "discrepancy": r.discrepancy(),
    });
    Ok(Outcome::json(envelope("form", &ctx.meta(), input_value(input), result), Exit::Ok))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Demo {
    ShiftedGaussian,
    RadialBump,
}

pub fn demo(ctx: &Ctx, which: Demo, w: &[f64], grid_n: usize, box_half_width: f64) -> CliResult<Outcome> {
    let (r, params, form_ok) = match which {
        Demo::ShiftedGaussian => {
            let r = demo_counterexample_shifted_gaussian(w)?;
            let ok = r.mixed_form.abs() <= ctx.tol.form;
            (r, json!({ "demo": "shifted-gaussian", "w": w }), ok)
        }
        Demo::RadialBump => {
            let r = demo_counterexample_radial_bump(grid_n, box_half_width)?;
            let ok = r.relative_form.abs() <= ctx.tol.relative_form;
            (r, json!({ "demo": "radial-bump", "grid_n": grid_n, "box": box_half_width }), ok)
        }
    };
    let reproduced = form_ok && r.reference_form > 0.0 && r.min_projection_eigenvalue > ctx.tol.projection;
    let exit = if reproduced { Exit::Ok } else { Exit::Negative };
    Ok(Outcome::json(
        envelope("demo", &ctx.meta(), params, report::counterexample(&r, reproduced)),
        exit,
    ))
}

/// Centers of the built-in interpolation experiment.
pub const EXPERIMENT_SIZES: [usize; 3] = [5, 10, 20];
/// Evaluation grid size of the built-in experiment.
pub const EXPERIMENT_GRID: usize = 201;

fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect()
}

/// Interpolates `(sin x, cos x)` on `[-1, 1]` with the Gaussian kernel `{(1, I₂)}`
/// from 5, 10 and 20 equispaced centers and reports the sup error on a fine grid.
pub fn interp_experiment(ridge: Option<f64>) -> CliResult<Value> {
    let k = OperatorKernel::radial(
        RadialProfile::Gaussian,
        OperatorMeasure::new(2, vec![(1.0, HermitianMatrix::identity(2))])?,
        1,
    )?;
    let target = |x: &[f64]| vec![C64::new(x[0].sin(), 0.0), C64::new(x[0].cos(), 0.0)];
    let grid: Vec<Vec<f64>> = linspace(-1.0, 1.0, EXPERIMENT_GRID).into_iter().map(|x| vec![x]).collect();
    let mut runs = Vec::new();
    let mut errors = Vec::new();
    for n in EXPERIMENT_SIZES {
        let data: Vec<_> = linspace(-1.0, 1.0, n)
            .into_iter()
            .map(|x| (vec![x], MultiIndex::zero(1), target(&[x])))
            .collect();
        let it = hermite_interpolate(&k, &data, ridge)?;
        let err = sup_error(&it.element, &grid, target)?;
        errors.push(err);
        runs.push(json!({ "n": n, "ridge": it.ridge, "residual": it.residual, "sup_error": err }));
    }
    Ok(json!({
        "experiment": "gaussian {(1, I2)} on [-1, 1], target (sin x, cos x)",
        "grid_points": EXPERIMENT_GRID,
        "runs": runs,
        "ratio_5_over_20": errors[0] / errors[2],
    }))
}

pub fn interp(ctx: &Ctx, input: Option<&InterpInput>) -> CliResult<Outcome> {
    let Some(input) = input else {
        let result = interp_experiment(ctx.tol.ridge)?;
        return Ok(Outcome::json(
            envelope("interp", &ctx.meta(), json!({ "experiment": "sin-cos" }), result),
            Exit::Ok,
        ));
    };
    let k = input.kernel.build()?;
    let m = k.ambient_dim();
    let mut data = Vec::with_capacity(input.data.len());
    for (i, d) in input.data.iter().enumerate() {
        let z = vec![0; m];
        let alpha = multi_index(d.alpha.as_deref().unwrap_or(&z), m, &format!("data[{i}].alpha"))?;
        data.push((d.x.clone(), alpha, d.target.to_vec(&format!("data[{i}].target"))?));
    }
    let ridge = input.ridge.or(ctx.tol.ridge);
    let it = hermite_interpolate(&k, &data, ridge)?;
    let coefficients: Vec<Value> = it
        .element
        .atoms()
        .iter()
        .map(|a| json!({ "x": a.x, "alpha": a.alpha.components(), "v": report::vector(&a.v) }))
        .collect();
    let mut fitted = Vec::with_capacity(data.len());
    for (x, alpha, _) in &data {
        fitted.push(report::vector(&rkhs_deriv_eval(&it.element, alpha, x)?));
    }
    let mut evaluations = Vec::with_capacity(input.eval_points.len());
    for y in &input.eval_points {
        evaluations.push(json!({ "y": y, "value": report::vector(&rkhs_eval(&it.element, y)?) }));
    }
    let result = json!({
        "ridge": it.ridge,
        "residual": it.residual,
        "coefficients": coefficients,
        "fitted": fitted,
        "evaluations": evaluations,
    });
    Ok(Outcome::json(envelope("interp", &ctx.meta(), input_value(input), result), Exit::Ok))
}

pub fn monotone(ctx: &Ctx, input: &MonotoneInput) -> CliResult<Outcome> {
    let grid = input.grid.points()?;
    let h = input.h.unwrap_or(DEFAULT_STEP);
    let williamson = match &input.function {
        MonotoneFunction::Williamson { atoms, ell } => Some(williamson_construct(atoms, *ell)?),
        _ => None,
    };
    let f = |t: f64| -> f64 {
        match &input.function {
            MonotoneFunction::ExpNeg => (-t).exp(),
            MonotoneFunction::Reciprocal => 1.0 / (1.0 + t),
            MonotoneFunction::TwoPlusSin => 2.0 + t.sin(),
            MonotoneFunction::Williamson { .. } => williamson.as_ref().map_or(f64::NAN, |w| w.eval(t)),
        }
    };
    let (passed, result) = match (input.nmax, input.ell) {
        (Some(nmax), None) => {
            let r = completely_monotone_check(&f, &grid, nmax, h)?;
            let violation = r.violation.as_ref().map(|v| json!({ "order": v.order, "t": v.t, "value": v.value }));
            (r.passed, json!({ "check": "completely-monotone", "nmax": nmax, "h": h, "passed": r.passed, "violation": violation }))
        }
        (None, Some(ell)) => {
            let r = ell_cm_check(&f, ell, &grid, h)?;
            let failure = r.first_failure.map(|(c, t)| json!({ "condition": format!("{c:?}"), "t": t }));
            (
                r.passed,
                json!({
                    "check": "ell-completely-monotone",
                    "ell": ell,
                    "h": h,
                    "passed": r.passed,
                    "nonnegative": r.nonnegative,
                    "tail_bounded": r.tail_bounded,
                    "convex": r.convex,
                    "limit_check_is_heuristic": r.limit_check_is_heuristic,
                    "first_failure": failure,
                }),
            )
        }
        _ => return Err(CliError::input("monotone: set exactly one of `nmax` and `ell`")),
    };
    let exit = if passed { Exit::Ok } else { Exit::Negative };
    Ok(Outcome::json(envelope("monotone", &ctx.meta(), input_value(input), result), exit))
}
