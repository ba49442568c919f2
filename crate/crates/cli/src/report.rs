use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use opkernel::certify::{DEFAULT_PROBE_TOL, CounterexampleResult, ProbeReport, ProbeVerdict};
use opkernel::hermitian::CMatrix;
use opkernel::{MultiIndex, C64, DEFAULT_PSD_TOL};

use crate::descriptor::{ComplexMatrixDesc, ComplexVectorDesc};
use crate::error::{CliError, CliResult};

/// Bound on the shifted-gaussian mixed form.
pub const DEFAULT_FORM_TOL: f64 = 1e-12;
/// Bound on the radial-bump mixed form relative to its reference form.
pub const DEFAULT_RELATIVE_FORM_TOL: f64 = 1e-6;
/// Floor the projection Gram eigenvalues of both demos must exceed.
pub const DEFAULT_PROJECTION_FLOOR: f64 = 1e-8;

/// Every tolerance a command may use, echoed into each report.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances {
    pub psd: f64,
    pub probe: f64,
    pub form: f64,
    pub relative_form: f64,
    pub projection: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ridge: Option<f64>,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            psd: DEFAULT_PSD_TOL,
            probe: DEFAULT_PROBE_TOL,
            form: DEFAULT_FORM_TOL,
            relative_form: DEFAULT_RELATIVE_FORM_TOL,
            projection: DEFAULT_PROJECTION_FLOOR,
            ridge: None,
        }
    }
}

impl Tolerances {
    pub fn with_overrides(overrides: &[String]) -> CliResult<Self> {
        let mut t = Self::default();
        for o in overrides {
            let (name, value) = o
                .split_once('=')
                .ok_or_else(|| CliError::input(format!("--tol expects NAME=VALUE, got `{o}`")))?;
            let v: f64 = value
                .trim()
                .parse()
                .map_err(|_| CliError::input(format!("--tol {name}: `{value}` is not a number")))?;
            if !(v >= 0.0) || !v.is_finite() {
                return Err(CliError::input(format!("--tol {name}: must be finite and >= 0")));
            }
            match name.trim() {
                "psd" => t.psd = v,
                "probe" => t.probe = v,
                "form" => t.form = v,
                "relative_form" => t.relative_form = v,
                "projection" => t.projection = v,
                "ridge" => t.ridge = Some(v),
                other => {
                    return Err(CliError::input(format!(
                        "--tol: unknown tolerance `{other}` (known: psd, probe, form, relative_form, projection, ridge)"
                    )))
                }
            }
        }
        Ok(t)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Metadata {
    pub version: &'static str,
    pub seed: u64,
    pub tolerances: Tolerances,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
}

impl Metadata {
    pub fn new(seed: u64, tolerances: Tolerances, with_timestamp: bool) -> Self {
        let timestamp = with_timestamp
            .then(|| std::time::SystemTime::now().duration_since(std::time::UNIX_EPOCH).ok())
            .flatten()
            .map(|d| d.as_secs());
        Self {
            version: env!("CARGO_PKG_VERSION"),
            seed,
            tolerances,
            timestamp,
        }
    }
}

pub fn envelope(command: &str, meta: &Metadata, input: Value, result: Value) -> Value {
    json!({
        "command": command,
        "metadata": meta,
        "input": input,
        "result": result,
    })
}

pub fn matrix(m: &CMatrix) -> Value {
    json!(ComplexMatrixDesc::from_cmatrix(m))
}

pub fn vector(v: &[C64]) -> Value {
    json!(ComplexVectorDesc::from_slice(v))
}

pub fn probe_report(r: &ProbeReport) -> Value {
    let verdict = match &r.verdict {
        ProbeVerdict::NoViolationFound => json!({ "kind": "no-violation-found" }),
        ProbeVerdict::ViolationFound {
            trial,
            points,
            witness,
            value,
        } => json!({
            "kind": "violation-found",
            "trial": trial,
            "points": points,
            "witness": vector(witness),
            "value": value,
        }),
    };
    json!({
        "designs": r.designs,
        "per_design_min": r.per_design_min,
        "global_min": r.global_min,
        "seed": r.seed,
        "n": r.n,
        "box": r.box_half_width,
        "tol": r.tol,
        "verdict": verdict,
        "label": match r.verdict {
            ProbeVerdict::NoViolationFound => "non-refutation",
            ProbeVerdict::ViolationFound { .. } => "refutation",
        },
    })
}

pub fn counterexample(r: &CounterexampleResult, reproduced: bool) -> Value {
    let projections: Vec<Value> = r
        .projections
        .iter()
        .map(|p| {
            json!({
                "label": p.label,
                "vector": vector(&p.vector),
                "min_eigenvalue": p.min_eigenvalue,
                "trace": p.trace,
            })
        })
        .collect();
    json!({
        "name": r.name,
        "mixed_form": r.mixed_form,
        "reference_form": r.reference_form,
        "relative_form": r.relative_form,
        "reference_scale": r.reference_scale,
        "reference_over_scale": r.reference_form / r.reference_scale,
        "projections": projections,
        "min_projection_eigenvalue": r.min_projection_eigenvalue,
        "projection_points": r.projection_points,
        "discretization": r.discretization.map(|d| json!({
            "grid_n": d.grid_n,
            "box": d.box_half_width,
            "dx": d.dx,
            "dxi": d.dxi,
        })),
        "null_direction": r.null_direction.as_ref().map(|n| json!({
            "eigenvalue": n.eigenvalue,
            "vector": vector(&n.vector),
        })),
        "sign_pattern_reproduced": reproduced,
        "status": if reproduced { "consistent with the expected counterexample" } else { "not reproduced" },
    })
}

/// Block layout description used by CSV headers and JSON sidecars.
pub fn layout(points: usize, value_dim: usize, indices: &[MultiIndex]) -> String {
    let idx: Vec<String> = indices.iter().map(ToString::to_string).collect();
    format!(
        "points={points} value_dim={value_dim} indices={} order=point-major,index,component",
        idx.join(";")
    )
}

/// Row-major CSV with one `re,im` cell pair per entry, preceded by a `#` header.
pub fn gram_csv(m: &CMatrix, layout: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# {layout}; cells are re,im pairs");
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|j| format!("{:e},{:e}", m[(i, j)].re, m[(i, j)].im)).collect();
        let _ = writeln!(out, "{}", row.join(","));
    }
    out
}

pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}
