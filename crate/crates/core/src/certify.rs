//! Finite-design probes for strict positive definiteness, null-direction search,
//! the two counterexample reproductions and combined classification reports.
//!
//! Nothing here proves universality. A probe either refutes strict positive
//! definiteness with an explicit near-null design or reports that none of its
//! designs did.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

#[cfg(not(feature = "std"))]
use num_traits::Float;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::hermitian::{eigen_hermitian, CMatrix, HermitianMatrix};
use crate::kernel::{gram, scalar_projection_kernel, MatrixKernel, OperatorKernel, MAX_DERIVATIVE_ORDER};
use crate::measures::{c0_membership, classify_radial, OperatorMeasure, PlaneWaveMeasure, RadialClassification, RadialVerdict};
use crate::profiles::{sjet_derivatives, MultiIndex, RadialJet, RadialProfile};
use crate::rkhs::{quadratic_form, DerivVectorMeasure, VectorAtomMeasure};
use crate::{Error, Result, C64};

/// Relative tolerance for calling a Gram eigenvalue null.
pub const DEFAULT_PROBE_TOL: f64 = 1e-9;
/// Default half-width of the probe box `[-b, b]^m`.
pub const DEFAULT_BOX: f64 = 2.0;
/// Points closer than this multiple of the box half-width are redrawn.
pub const MIN_SEPARATION_REL: f64 = 1e-6;

const MAX_REDRAWS: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbeOptions {
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub box_half_width: f64,
    pub tol: f64,
}

impl Default for ProbeOptions {
    fn default() -> Self {
        Self {
            n: 3,
            trials: 50,
            seed: 0,
            box_half_width: DEFAULT_BOX,
            tol: DEFAULT_PROBE_TOL,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ProbeVerdict {
    NoViolationFound,
    /// First design (by trial index) whose Gram minimum eigenvalue fell to
    /// `tol·trace` or below.
    ViolationFound {
        trial: usize,
        points: Vec<Vec<f64>>,
        witness: Vec<C64>,
        value: f64,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProbeReport {
    pub designs: usize,
    pub per_design_min: Vec<f64>,
    pub global_min: f64,
    pub seed: u64,
    pub n: usize,
    pub box_half_width: f64,
    pub tol: f64,
    pub verdict: ProbeVerdict,
}

/// Result of one probe design.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialOutcome {
    pub trial: usize,
    pub points: Vec<Vec<f64>>,
    pub min_eigenvalue: f64,
    pub trace: f64,
    pub witness: Vec<C64>,
}

impl TrialOutcome {
    pub fn is_violation(&self, tol: f64) -> bool {
        self.min_eigenvalue <= tol * self.trace
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of trial `trial` under master seed `seed`.
pub fn trial_seed(seed: u64, trial: usize) -> u64 {
    splitmix64(splitmix64(seed) ^ trial as u64)
}

/// `n` uniform points in `[-b, b]^m`, redrawing any point within `min_sep` of an
/// earlier one.
pub fn seeded_points(seed: u64, n: usize, m: usize, b: f64, min_sep: f64) -> Result<Vec<Vec<f64>>> {
    if !(b > 0.0) || !b.is_finite() {
        return Err(Error::InvalidPoint(format!("box half-width must be positive, got {b}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pts: Vec<Vec<f64>> = Vec::with_capacity(n);
    let mut redraws = 0;
    while pts.len() < n {
        let p: Vec<f64> = (0..m).map(|_| rng.random_range(-b..=b)).collect();
        let far = pts
            .iter()
            .all(|q| q.iter().zip(&p).map(|(a, c)| (a - c) * (a - c)).sum::<f64>().sqrt() >= min_sep);
        if far {
            pts.push(p);
        } else {
            redraws += 1;
            if redraws > MAX_REDRAWS {
                return Err(Error::InvalidPoint(format!(
                    "cannot place {n} points {min_sep} apart in [-{b}, {b}]^{m}"
                )));
            }
        }
    }
    Ok(pts)
}

/// One design of [`probe_strict_pd`]; trials are independent, so callers may run
/// them concurrently and pass the outcomes to [`assemble_probe_report`].
pub fn probe_trial<K: MatrixKernel + ?Sized>(k: &K, opts: &ProbeOptions, trial: usize) -> Result<TrialOutcome> {
    if opts.n < 2 {
        return Err(Error::InvalidPoint(format!("probe designs need n >= 2, got {}", opts.n)));
    }
    let b = opts.box_half_width;
    let points = seeded_points(trial_seed(opts.seed, trial), opts.n, k.ambient_dim(), b, MIN_SEPARATION_REL * b)?;
    let g = gram(k, &points)?;
    let eig = eigen_hermitian(&g.matrix)?;
    Ok(TrialOutcome {
        trial,
        points,
        min_eigenvalue: eig.eigenvalues[0],
        trace: g.trace(),
        witness: eig.eigenvectors.column(0),
    })
}

/// Sorts by trial index and builds the report.
pub fn assemble_probe_report(opts: &ProbeOptions, mut outcomes: Vec<TrialOutcome>) -> ProbeReport {
    outcomes.sort_by_key(|o| o.trial);
    let per_design_min: Vec<f64> = outcomes.iter().map(|o| o.min_eigenvalue).collect();
    let global_min = per_design_min.iter().copied().fold(f64::INFINITY, f64::min);
    let verdict = match outcomes.iter().find(|o| o.is_violation(opts.tol)) {
        Some(o) => ProbeVerdict::ViolationFound {
            trial: o.trial,
            points: o.points.clone(),
            witness: o.witness.clone(),
            value: o.min_eigenvalue,
        },
        None => ProbeVerdict::NoViolationFound,
    };
    ProbeReport {
        designs: outcomes.len(),
        per_design_min,
        global_min,
        seed: opts.seed,
        n: opts.n,
        box_half_width: opts.box_half_width,
        tol: opts.tol,
        verdict,
    }
}

pub fn probe_with<K: MatrixKernel + ?Sized>(k: &K, opts: &ProbeOptions) -> Result<ProbeReport> {
    let outcomes = (0..opts.trials)
        .map(|t| probe_trial(k, opts, t))
        .collect::<Result<Vec<_>>>()?;
    Ok(assemble_probe_report(opts, outcomes))
}

/// Random-design search for a Gram matrix with a (near-)null direction.
pub fn probe_strict_pd<K: MatrixKernel + ?Sized>(
    k: &K,
    n: usize,
    trials: usize,
    seed: u64,
    box_half_width: f64,
) -> Result<ProbeReport> {
    probe_with(
        k,
        &ProbeOptions {
            n,
            trials,
            seed,
            box_half_width,
            tol: DEFAULT_PROBE_TOL,
        },
    )
}

#[derive(Debug, Clone, PartialEq)]
pub struct NullDirection {
    pub eigenvalue: f64,
    /// Unit vector stacked over the points.
    pub vector: Vec<C64>,
    pub measure: VectorAtomMeasure,
}

/// Smallest eigenpair of the Gram matrix on `points`, read as a vector measure.
pub fn find_null_direction<K: MatrixKernel + ?Sized>(k: &K, points: &[Vec<f64>]) -> Result<NullDirection> {
    let g = gram(k, points)?;
    let eig = eigen_hermitian(&g.matrix)?;
    let vector = eig.eigenvectors.column(0);
    let l = k.value_dim();
    let atoms = points
        .iter()
        .zip(vector.chunks(l))
        .map(|(p, v)| (p.clone(), v.to_vec()))
        .collect();
    Ok(NullDirection {
        eigenvalue: eig.eigenvalues[0],
        measure: VectorAtomMeasure::new(k.ambient_dim(), l, atoms)?,
        vector,
    })
}

/// The 2x2 kernel
/// `[[e^{-‖x-y‖²}, e^{-‖x+2w-y‖²}], [e^{-‖x-y-2w‖²}, e^{-‖x-y‖²}]]`.
/// Every scalar projection is strictly positive definite, yet the measure
/// `e₁δ_0 - e₂δ_{2w}` is annihilated.
#[derive(Debug, Clone, PartialEq)]
pub struct ShiftedGaussianKernel {
    shift: Vec<f64>,
}

impl ShiftedGaussianKernel {
    pub fn new(w: &[f64]) -> Result<Self> {
        if w.is_empty() || w.iter().any(|v| !v.is_finite()) || w.iter().all(|&v| v == 0.0) {
            return Err(Error::InvalidPoint("shift w must be a nonzero finite vector".into()));
        }
        Ok(Self {
            shift: w.iter().map(|v| 2.0 * v).collect(),
        })
    }

    fn offsets(&self, x: &[f64], y: &[f64]) -> Result<[[Vec<f64>; 2]; 2]> {
        let m = self.shift.len();
        if x.len() != m || y.len() != m || x.iter().chain(y).any(|v| !v.is_finite()) {
            return Err(Error::InvalidPoint(format!("expected finite points in R^{m}")));
        }
        let d: Vec<f64> = x.iter().zip(y).map(|(a, b)| a - b).collect();
        let plus = d.iter().zip(&self.shift).map(|(a, s)| a + s).collect();
        let minus = d.iter().zip(&self.shift).map(|(a, s)| a - s).collect();
        Ok([[d.clone(), plus], [minus, d]])
    }
}

impl MatrixKernel for ShiftedGaussianKernel {
    fn ambient_dim(&self) -> usize {
        self.shift.len()
    }

    fn value_dim(&self) -> usize {
        2
    }

    fn eval(&self, x: &[f64], y: &[f64]) -> Result<CMatrix> {
        let off = self.offsets(x, y)?;
        Ok(CMatrix::from_fn(2, 2, |i, j| {
            let s: f64 = off[i][j].iter().map(|v| v * v).sum();
            C64::new((-s).exp(), 0.0)
        }))
    }

    fn deriv_eval(&self, alpha: &MultiIndex, beta: &MultiIndex, x: &[f64], y: &[f64]) -> Result<CMatrix> {
        let m = self.shift.len();
        if alpha.dim() != m || beta.dim() != m {
            return Err(Error::InvalidPoint(format!("multi-indices must have dimension {m}")));
        }
        let order = alpha.order() + beta.order();
        if order > MAX_DERIVATIVE_ORDER {
            return Err(Error::DerivativeOrderTooHigh {
                order,
                cap: MAX_DERIVATIVE_ORDER,
            });
        }
        let off = self.offsets(x, y)?;
        let jet = RadialJet::for_multi_index(&alpha.checked_add(beta)?);
        let kmax = jet.max_order().unwrap_or(0);
        let sign = if beta.order().is_multiple_of(2) { 1.0 } else { -1.0 };
        let mut out = CMatrix::zeros(2, 2);
        for i in 0..2 {
            for j in 0..2 {
                let d = &off[i][j];
                let s: f64 = d.iter().map(|v| v * v).sum();
                let sj = sjet_derivatives(RadialProfile::Gaussian, 1.0, s, kmax)?;
                out[(i, j)] = C64::new(sign * jet.eval(d, &sj), 0.0);
            }
        }
        Ok(out)
    }
}

/// Positivity check of one scalar projection `v† K v` on a design.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectionCheck {
    pub label: String,
    pub vector: Vec<C64>,
    pub min_eigenvalue: f64,
    pub trace: f64,
}

/// Grid parameters of a quadrature-based demo.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Discretization {
    pub grid_n: usize,
    pub box_half_width: f64,
    pub dx: f64,
    pub dxi: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CounterexampleResult {
    pub name: String,
    /// `⟨K_η, K_η⟩` for the annihilating measure `η`.
    pub mixed_form: f64,
    /// `⟨K_{η₁}, K_{η₁}⟩` for the first component of `η` alone.
    pub reference_form: f64,
    pub relative_form: f64,
    /// `(Σ‖v_i‖)² · max|K(0,0)|` over the atoms of `η₁`.
    pub reference_scale: f64,
    pub projections: Vec<ProjectionCheck>,
    pub min_projection_eigenvalue: f64,
    pub projection_points: Vec<Vec<f64>>,
    pub discretization: Option<Discretization>,
    /// Smallest Gram eigenpair on the support of `η`, when `η` is finitely supported
    /// on few points.
    pub null_direction: Option<NullDirection>,
}

impl CounterexampleResult {
    /// Null mixed form (relative to the reference) and strictly positive projections.
    pub fn sign_pattern_holds(&self, form_tol: f64, projection_floor: f64) -> bool {
        self.relative_form.abs() <= form_tol
            && self.reference_form > 0.0
            && self.min_projection_eigenvalue > projection_floor
    }
}

/// Seed of the projection designs used by both demos.
pub const DEMO_SEED: u64 = 0x6f70_6b65_726e;
/// Number of points in the projection designs.
pub const DEMO_POINTS: usize = 6;
/// Minimum separation of projection design points.
pub const DEMO_MIN_SEPARATION: f64 = 0.5;

fn projection_checks<K: MatrixKernel + ?Sized>(
    k: &K,
    vectors: &[(&str, Vec<C64>)],
    points: &[Vec<f64>],
) -> Result<Vec<ProjectionCheck>> {
    vectors
        .iter()
        .map(|(label, v)| {
            let p = scalar_projection_kernel(k, v)?;
            let g = gram(&p, points)?;
            Ok(ProjectionCheck {
                label: String::from(*label),
                vector: v.clone(),
                min_eigenvalue: g.min_eigenvalue()?,
                trace: g.trace(),
            })
        })
        .collect()
}

fn atoms_scale<K: MatrixKernel + ?Sized>(k: &K, eta: &VectorAtomMeasure) -> Result<f64> {
    let mass: f64 = eta
        .atoms()
        .iter()
        .map(|(_, v)| v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt())
        .sum();
    let origin = vec![0.0; k.ambient_dim()];
    Ok(mass * mass * k.eval(&origin, &origin)?.max_abs())
}

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn demo_counterexample_shifted_gaussian(w: &[f64]) -> Result<CounterexampleResult> {
    let k = ShiftedGaussianKernel::new(w)?;
    let m = w.len();
    let origin = vec![0.0; m];
    let target: Vec<f64> = w.iter().map(|v| 2.0 * v).collect();
    let eta = VectorAtomMeasure::new(
        m,
        2,
        vec![
            (origin.clone(), vec![c(1.0, 0.0), c(0.0, 0.0)]),
            (target.clone(), vec![c(0.0, 0.0), c(-1.0, 0.0)]),
        ],
    )?;
    let eta1 = VectorAtomMeasure::new(m, 2, vec![(origin.clone(), vec![c(1.0, 0.0), c(0.0, 0.0)])])?;
    let mixed_form = quadratic_form(&k, &DerivVectorMeasure::from_atoms(eta))?;
    let reference_form = quadratic_form(&k, &DerivVectorMeasure::from_atoms(eta1.clone()))?;

    let points = seeded_points(DEMO_SEED, DEMO_POINTS, m, DEFAULT_BOX, DEMO_MIN_SEPARATION)?;
    let vectors = [
        ("e1", vec![c(1.0, 0.0), c(0.0, 0.0)]),
        ("e2", vec![c(0.0, 0.0), c(1.0, 0.0)]),
        ("e1+e2", vec![c(1.0, 0.0), c(1.0, 0.0)]),
        ("e1+ie2", vec![c(1.0, 0.0), c(0.0, 1.0)]),
    ];
    let projections = projection_checks(&k, &vectors, &points)?;
    let min_projection_eigenvalue = projections.iter().map(|p| p.min_eigenvalue).fold(f64::INFINITY, f64::min);
    Ok(CounterexampleResult {
        name: String::from("shifted-gaussian"),
        mixed_form,
        reference_form,
        relative_form: mixed_form / reference_form,
        reference_scale: atoms_scale(&k, &eta1)?,
        projections,
        min_projection_eigenvalue,
        projection_points: points,
        discretization: None,
        null_direction: Some(find_null_direction(&k, &[origin, target])?),
    })
}

/// `exp(-1/(1-x²))` on `|x| < 1`, zero elsewhere.
pub fn bump(x: f64) -> f64 {
    if x.abs() < 1.0 {
        (-1.0 / (1.0 - x * x)).exp()
    } else {
        0.0
    }
}

/// Radial-bump counterexample on `ℝ`, with `φ₁ = bump` and `φ₂(x) = bump(2x)`.
///
/// The `x`-grid has `grid_n` equispaced nodes on `[-box, box]`; the same nodes
/// carry both the Fourier quadrature of `φ̂₁, φ̂₂` and the atoms of `η`, which
/// makes the cancellation exact up to rounding. The frequency grid has `grid_n`
/// trapezoid nodes on `[-π/Δx, π/Δx]`.
pub fn demo_counterexample_radial_bump(grid_n: usize, box_half_width: f64) -> Result<CounterexampleResult> {
    if grid_n < 128 {
        return Err(Error::InvalidGrid(format!("grid_n must be >= 128, got {grid_n}")));
    }
    if !(box_half_width > 1.0) || !box_half_width.is_finite() {
        return Err(Error::InvalidGrid(format!(
            "box half-width must exceed the bump support 1, got {box_half_width}"
        )));
    }
    let n = grid_n;
    let dx = 2.0 * box_half_width / (n - 1) as f64;
    let xs: Vec<f64> = (0..n).map(|i| -box_half_width + i as f64 * dx).collect();
    let phi1: Vec<f64> = xs.iter().map(|&x| bump(x)).collect();
    let phi2: Vec<f64> = xs.iter().map(|&x| bump(2.0 * x)).collect();

    let xi_max = core::f64::consts::PI / dx;
    let dxi = 2.0 * xi_max / (n - 1) as f64;
    let mut atoms = Vec::with_capacity(n);
    for j in 0..n {
        let xi = -xi_max + j as f64 * dxi;
        let (mut a, mut b) = (c(0.0, 0.0), c(0.0, 0.0));
        for i in 0..n {
            let e = c(0.0, -xs[i] * xi).exp() * dx;
            a += e * phi1[i];
            b += e * phi2[i];
        }
        let weight = if j == 0 || j == n - 1 { 0.5 * dxi } else { dxi };
        let g = HermitianMatrix::outer(&[b, -a]).scaled(weight);
        atoms.push((vec![xi], g));
    }
    let k = OperatorKernel::plane_wave(PlaneWaveMeasure::new(2, 1, atoms)?);

    let mut eta_atoms = Vec::new();
    let mut eta1_atoms = Vec::new();
    for i in 0..n {
        if phi1[i] == 0.0 && phi2[i] == 0.0 {
            continue;
        }
        eta_atoms.push((vec![xs[i]], vec![c(phi1[i] * dx, 0.0), c(phi2[i] * dx, 0.0)]));
        if phi1[i] != 0.0 {
            eta1_atoms.push((vec![xs[i]], vec![c(phi1[i] * dx, 0.0), c(0.0, 0.0)]));
        }
    }
    let eta = VectorAtomMeasure::new(1, 2, eta_atoms)?;
    let eta1 = VectorAtomMeasure::new(1, 2, eta1_atoms)?;
    let mixed_form = quadratic_form(&k, &DerivVectorMeasure::from_atoms(eta))?;
    let reference_form = quadratic_form(&k, &DerivVectorMeasure::from_atoms(eta1.clone()))?;

    let points = seeded_points(DEMO_SEED, DEMO_POINTS, 1, DEFAULT_BOX, DEMO_MIN_SEPARATION)?;
    let vectors = [
        ("e1", vec![c(1.0, 0.0), c(0.0, 0.0)]),
        ("e2", vec![c(0.0, 0.0), c(1.0, 0.0)]),
    ];
    let projections = projection_checks(&k, &vectors, &points)?;
    let min_projection_eigenvalue = projections.iter().map(|p| p.min_eigenvalue).fold(f64::INFINITY, f64::min);
    Ok(CounterexampleResult {
        name: String::from("radial-bump"),
        mixed_form,
        reference_form,
        relative_form: mixed_form / reference_form,
        reference_scale: atoms_scale(&k, &eta1)?,
        projections,
        min_projection_eigenvalue,
        projection_points: points,
        discretization: Some(Discretization {
            grid_n,
            box_half_width,
            dx,
            dxi,
        }),
        null_direction: None,
    })
}

/// Gram check on the deterministic design `{0, e₁}` built from a classification
/// witness `w`: the stacked vector `(w, -w)/√2` and the Gram minimum eigenvalue.
#[derive(Debug, Clone, PartialEq)]
pub struct WitnessDesignCheck {
    pub points: Vec<Vec<f64>>,
    pub witness_form: f64,
    pub min_eigenvalue: f64,
    pub scale: f64,
    pub null_found: bool,
}

pub fn witness_design_check<K: MatrixKernel + ?Sized>(k: &K, witness: &[C64], tol: f64) -> Result<WitnessDesignCheck> {
    let m = k.ambient_dim();
    let mut e1 = vec![0.0; m];
    e1[0] = 1.0;
    let points = vec![vec![0.0; m], e1];
    let g = gram(k, &points)?;
    let s = core::f64::consts::FRAC_1_SQRT_2;
    let stacked: Vec<C64> = witness
        .iter()
        .map(|z| z * s)
        .chain(witness.iter().map(|z| -z * s))
        .collect();
    let witness_form = g.matrix.quadratic_form(&stacked);
    let min_eigenvalue = g.min_eigenvalue()?;
    let scale = g.trace();
    Ok(WitnessDesignCheck {
        points,
        witness_form,
        min_eigenvalue,
        scale,
        null_found: min_eigenvalue <= tol * scale,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassifyOptions {
    pub ambient_dim: usize,
    /// Relative tolerance of the exact criterion, see [`classify_radial`].
    pub tol: f64,
    pub probe: ProbeOptions,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassificationReport {
    pub classification: RadialClassification,
    pub probe: ProbeReport,
    pub witness_design: Option<WitnessDesignCheck>,
    /// RKHS contained in `C_0`.
    pub c0_member: bool,
    /// Largest `q` with analytic `q`-jets on both arguments, `0` when only values
    /// are available.
    pub jet_order: usize,
    /// Exact criterion and probes agree.
    pub consistent: bool,
}

/// Exact radial criterion plus probe corroboration.
///
/// Askey profiles of smoothness `ℓ` need `m ≤ 2ℓ - 3` and `Ω_k` profiles need
/// `m ≤ k - 1` for the criterion to apply; outside those ranges this returns
/// `DimensionBound`.
pub fn classify_and_report(l: &OperatorMeasure, family: RadialProfile, opts: &ClassifyOptions) -> Result<ClassificationReport> {
    let m = opts.ambient_dim;
    match family {
        RadialProfile::Askey { smoothness } if m + 3 > 2 * smoothness as usize => {
            return Err(Error::DimensionBound(format!(
                "askey smoothness {smoothness} is positive definite only for m <= {}, got m = {m}",
                (2 * smoothness as i64 - 3).max(0)
            )))
        }
        RadialProfile::Omega { source_dim } if m >= source_dim as usize => {
            return Err(Error::DimensionBound(format!(
                "omega({source_dim}) profiles are classified on R^k with k <= {}, got m = {m}",
                source_dim as i64 - 1
            )))
        }
        _ => {}
    }
    let classification = classify_radial(l, family, opts.tol)?;
    let k = OperatorKernel::radial(family, l.clone(), m)?;
    let probe = probe_with(&k, &opts.probe)?;
    let probe_violation = matches!(probe.verdict, ProbeVerdict::ViolationFound { .. });
    let (witness_design, consistent) = match (&classification.verdict, &classification.witness) {
        (RadialVerdict::NotStrictlyPd, Some(w)) => {
            let chk = witness_design_check(&k, w, opts.probe.tol)?;
            let ok = chk.null_found;
            (Some(chk), ok)
        }
        (RadialVerdict::NotStrictlyPd, None) => (None, false),
        (RadialVerdict::StrictlyPdAndUniversal, _) => (None, !probe_violation),
    };
    let jet_order = if family.has_jets() { MAX_DERIVATIVE_ORDER / 2 } else { 0 };
    Ok(ClassificationReport {
        c0_member: c0_membership(l),
        classification,
        probe,
        witness_design,
        jet_order,
        consistent,
    })
}
