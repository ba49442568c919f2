//! Finite atomic measures with positive semidefinite matrix weights.
//!
//! An [`OperatorMeasure`] `Λ = Σ_j G_j δ_{ω_j}` lives on `[0, ∞)` and drives the
//! radial families; a [`PlaneWaveMeasure`] lives on `ℝ^m` and drives plane-wave
//! mixtures. Quadrature-discretized continuous measures are represented the same
//! way, with quadrature weights folded into the `G_j`.
//!
//! Radial classification uses a single eigenvalue computation: for a discrete
//! measure, `min eig(Σ_{ω_j>0} G_j) > 0` holds exactly when for every `v ≠ 0` some
//! atom off the origin has `⟨G_j v, v⟩ > 0`, i.e. every scalar projection
//! `t ↦ ⟨F(t)v, v⟩` is non-constant.

use alloc::format;
use alloc::vec::Vec;


use crate::hermitian::{eigen_hermitian, is_psd, trace, HermitianMatrix};
use crate::profiles::RadialProfile;
use crate::{Error, Result, C64, DEFAULT_PSD_TOL};

/// One atom `G δ_ω`.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorAtom {
    pub omega: f64,
    pub weight: HermitianMatrix,
}

/// `Λ = Σ_j G_j δ_{ω_j}` on `[0, ∞)`.
///
/// Atoms are sorted by support point; atoms sharing a support point are merged
/// and zero atoms are pruned (their support points are kept in
/// [`OperatorMeasure::null_support`]).
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorMeasure {
    dim: usize,
    atoms: Vec<OperatorAtom>,
    null_support: Vec<f64>,
}

impl OperatorMeasure {
    pub fn new(dim: usize, atoms: Vec<(f64, HermitianMatrix)>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidMeasure("matrix dimension must be >= 1".into()));
        }
        let mut merged: Vec<OperatorAtom> = Vec::new();
        for (i, (omega, g)) in atoms.into_iter().enumerate() {
            if !(omega >= 0.0) || !omega.is_finite() {
                return Err(Error::InvalidMeasure(format!(
                    "atom {i}: support point must be finite and >= 0, got {omega}"
                )));
            }
            if g.dim() != dim {
                return Err(Error::InvalidMeasure(format!(
                    "atom {i}: weight is {}x{}, expected {dim}x{dim}",
                    g.dim(),
                    g.dim()
                )));
            }
            check_psd_atom(i, &g)?;
            match merged.iter_mut().find(|a| a.omega == omega) {
                Some(a) => a.weight = a.weight.add(&g),
                None => merged.push(OperatorAtom { omega, weight: g }),
            }
        }
        merged.sort_by(|a, b| a.omega.total_cmp(&b.omega));
        let (null, atoms): (Vec<_>, Vec<_>) = merged.into_iter().partition(|a| a.weight.is_zero());
        Ok(Self {
            dim,
            atoms,
            null_support: null.into_iter().map(|a| a.omega).collect(),
        })
    }

    pub fn empty(dim: usize) -> Self {
        Self {
            dim,
            atoms: Vec::new(),
            null_support: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn atoms(&self) -> &[OperatorAtom] {
        &self.atoms
    }

    pub fn null_support(&self) -> &[f64] {
        &self.null_support
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    /// `cΛ` for `c > 0`.
    pub fn scaled(&self, c: f64) -> Result<Self> {
        if !(c > 0.0) || !c.is_finite() {
            return Err(Error::InvalidMeasure(format!("scale must be positive, got {c}")));
        }
        Ok(Self {
            dim: self.dim,
            atoms: self
                .atoms
                .iter()
                .map(|a| OperatorAtom {
                    omega: a.omega,
                    weight: a.weight.scaled(c),
                })
                .collect(),
            null_support: self.null_support.clone(),
        })
    }
}

fn check_psd_atom(i: usize, g: &HermitianMatrix) -> Result<()> {
    let chk = is_psd(g, DEFAULT_PSD_TOL)?;
    if !chk.is_psd {
        return Err(Error::InvalidMeasure(format!(
            "atom {i}: weight is not positive semidefinite (min eigenvalue {:e})",
            chk.min_eigenvalue
        )));
    }
    Ok(())
}

/// `Σ_j G_j δ_{ξ_j}` with frequency vectors `ξ_j ∈ ℝ^m`.
#[derive(Debug, Clone, PartialEq)]
pub struct PlaneWaveMeasure {
    dim: usize,
    ambient_dim: usize,
    atoms: Vec<(Vec<f64>, HermitianMatrix)>,
}

impl PlaneWaveMeasure {
    pub fn new(dim: usize, ambient_dim: usize, atoms: Vec<(Vec<f64>, HermitianMatrix)>) -> Result<Self> {
        if dim == 0 || ambient_dim == 0 {
            return Err(Error::InvalidMeasure("dimensions must be >= 1".into()));
        }
        let mut merged: Vec<(Vec<f64>, HermitianMatrix)> = Vec::new();
        for (i, (xi, g)) in atoms.into_iter().enumerate() {
            if xi.len() != ambient_dim || xi.iter().any(|v| !v.is_finite()) {
                return Err(Error::InvalidMeasure(format!(
                    "atom {i}: frequency must be a finite {ambient_dim}-vector"
                )));
            }
            if g.dim() != dim {
                return Err(Error::InvalidMeasure(format!("atom {i}: weight has wrong size")));
            }
            check_psd_atom(i, &g)?;
            match merged.iter_mut().find(|(x, _)| *x == xi) {
                Some((_, w)) => *w = w.add(&g),
                None => merged.push((xi, g)),
            }
        }
        merged.retain(|(_, g)| !g.is_zero());
        Ok(Self {
            dim,
            ambient_dim,
            atoms: merged,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn atoms(&self) -> &[(Vec<f64>, HermitianMatrix)] {
        &self.atoms
    }
}

/// `Σ_j λ_j δ_{ω_j}` with `λ_j ≥ 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarMeasure {
    atoms: Vec<(f64, f64)>,
}

impl ScalarMeasure {
    pub fn new(atoms: Vec<(f64, f64)>) -> Result<Self> {
        let mut merged: Vec<(f64, f64)> = Vec::new();
        for (omega, w) in atoms {
            if !(omega >= 0.0) || !omega.is_finite() || !(w >= 0.0) || !w.is_finite() {
                return Err(Error::InvalidMeasure(format!(
                    "scalar atom ({omega}, {w}) must have nonnegative finite entries"
                )));
            }
            match merged.iter_mut().find(|a| a.0 == omega) {
                Some(a) => a.1 += w,
                None => merged.push((omega, w)),
            }
        }
        merged.sort_by(|a, b| a.0.total_cmp(&b.0));
        Ok(Self { atoms: merged })
    }

    pub fn atoms(&self) -> &[(f64, f64)] {
        &self.atoms
    }

    pub fn total_mass(&self) -> f64 {
        self.atoms.iter().map(|a| a.1).sum()
    }

    /// Mass on `(0, ∞)`.
    pub fn mass_off_origin(&self) -> f64 {
        self.atoms.iter().filter(|a| a.0 > 0.0).map(|a| a.1).sum()
    }
}

/// `Λ_v(A) = ⟨Λ(A)v, v⟩`.
pub fn scalar_projection_measure(l: &OperatorMeasure, v: &[C64]) -> Result<ScalarMeasure> {
    check_vector(v, l.dim())?;
    let atoms = l
        .atoms()
        .iter()
        .map(|a| (a.omega, a.weight.quadratic_form(v).max(0.0)))
        .collect();
    ScalarMeasure::new(atoms)
}

pub(crate) fn check_vector(v: &[C64], dim: usize) -> Result<()> {
    if v.len() != dim {
        return Err(Error::InvalidVector(format!("expected length {dim}, got {}", v.len())));
    }
    if v.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::InvalidVector("non-finite component".into()));
    }
    if v.iter().all(|z| z.norm_sqr() == 0.0) {
        return Err(Error::InvalidVector("vector must be nonzero".into()));
    }
    Ok(())
}

/// Discrete Radon–Nikodým decomposition `dΛ = g dΛ_T` with respect to the trace
/// measure `Λ_T`.
#[derive(Debug, Clone, PartialEq)]
pub struct RnDecomposition {
    /// Atoms `(ω_j, tr G_j)` of the trace measure.
    pub trace_measure: ScalarMeasure,
    /// `(ω_j, g_j)` with `g_j = G_j / tr G_j`, so `tr g_j = 1`.
    pub densities: Vec<(f64, HermitianMatrix)>,
    /// Support points whose weight had zero trace.
    pub null_atoms: Vec<f64>,
}

pub fn radon_nikodym(l: &OperatorMeasure) -> RnDecomposition {
    let mut trace_atoms = Vec::new();
    let mut densities = Vec::new();
    let mut null_atoms: Vec<f64> = l.null_support().to_vec();
    for a in l.atoms() {
        let tr = trace(&a.weight);
        if tr > 0.0 {
            trace_atoms.push((a.omega, tr));
            densities.push((a.omega, a.weight.scaled(1.0 / tr)));
        } else {
            null_atoms.push(a.omega);
        }
    }
    null_atoms.sort_by(f64::total_cmp);
    RnDecomposition {
        trace_measure: ScalarMeasure::new(trace_atoms).expect("traces of PSD atoms are nonnegative"),
        densities,
        null_atoms,
    }
}

/// `Λ((0, ∞))` when `restrict_positive_support`, else `Λ([0, ∞))`.
pub fn total_operator(l: &OperatorMeasure, restrict_positive_support: bool) -> HermitianMatrix {
    l.atoms()
        .iter()
        .filter(|a| !restrict_positive_support || a.omega > 0.0)
        .fold(HermitianMatrix::zeros(l.dim()), |acc, a| acc.add(&a.weight))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadialVerdict {
    StrictlyPdAndUniversal,
    NotStrictlyPd,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RadialClassification {
    pub family: RadialProfile,
    pub verdict: RadialVerdict,
    /// Smallest eigenvalue of `Λ((0, ∞))`.
    pub restricted_min_eigenvalue: f64,
    /// Threshold the eigenvalue was compared against: `tol · tr Λ([0,∞))`.
    pub threshold: f64,
    /// Unit vector spanning (part of) the kernel of `Λ((0, ∞))` when not strictly PD.
    pub witness: Option<Vec<C64>>,
}

/// Exact strict positive definiteness / universality criterion for radial
/// mixtures: the restricted total operator `Λ((0, ∞))` must be positive definite.
///
/// The comparison is relative to `tr Λ([0, ∞))`, so the verdict is invariant
/// under positive rescaling of the measure.
pub fn classify_radial(l: &OperatorMeasure, family: RadialProfile, tol: f64) -> Result<RadialClassification> {
    family.validate()?;
    let restricted = total_operator(l, true);
    let eig = eigen_hermitian(&restricted)?;
    let lmin = eig.eigenvalues[0];
    let threshold = tol * trace(&total_operator(l, false));
    let strict = lmin > threshold && lmin > 0.0;
    Ok(RadialClassification {
        family,
        verdict: if strict {
            RadialVerdict::StrictlyPdAndUniversal
        } else {
            RadialVerdict::NotStrictlyPd
        },
        restricted_min_eigenvalue: lmin,
        threshold,
        witness: (!strict).then(|| eig.eigenvectors.column(0)),
    })
}

/// Whether the RKHS of a decaying radial mixture lies in `C_0`: no mass at `ω = 0`.
///
/// Assumes a family whose atoms with `ω > 0` vanish at infinity (Gaussian,
/// Askey, `Ω_m` with `m ≥ 2`).
pub fn c0_membership(l: &OperatorMeasure) -> bool {
    l.atoms().iter().all(|a| a.omega > 0.0)
}
