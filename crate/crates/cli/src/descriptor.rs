//! JSON input descriptors. Every struct rejects unknown fields, and every
//! descriptor serializes back to the JSON it was read from (up to key order and
//! omitted defaults).

use serde::{Deserialize, Serialize};

use opkernel::hermitian::CMatrix;
use opkernel::rkhs::{DerivVectorMeasure, VectorAtomMeasure};
use opkernel::{HermitianMatrix, MultiIndex, OperatorKernel, OperatorMeasure, PlaneWaveMeasure, RadialProfile, C64};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexMatrixDesc {
    pub re: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub im: Option<Vec<Vec<f64>>>,
}

impl ComplexMatrixDesc {
    pub fn from_cmatrix(m: &CMatrix) -> Self {
        let re = (0..m.rows()).map(|i| (0..m.cols()).map(|j| m[(i, j)].re).collect()).collect();
        let im = (0..m.rows()).map(|i| (0..m.cols()).map(|j| m[(i, j)].im).collect()).collect();
        Self { re, im: Some(im) }
    }

    pub fn to_cmatrix(&self, what: &str) -> CliResult<CMatrix> {
        let rows = self.re.len();
        let cols = self.re.first().map_or(0, Vec::len);
        if self.re.iter().any(|r| r.len() != cols) {
            return Err(CliError::input(format!("{what}.re: rows have different lengths")));
        }
        if let Some(im) = &self.im {
            if im.len() != rows || im.iter().any(|r| r.len() != cols) {
                return Err(CliError::input(format!("{what}.im: shape does not match {what}.re")));
            }
        }
        Ok(CMatrix::from_fn(rows, cols, |i, j| {
            C64::new(self.re[i][j], self.im.as_ref().map_or(0.0, |im| im[i][j]))
        }))
    }

    pub fn to_hermitian(&self, what: &str) -> CliResult<HermitianMatrix> {
        HermitianMatrix::from_cmatrix(self.to_cmatrix(what)?).map_err(|e| CliError::input(format!("{what}: {e}")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexVectorDesc {
    pub re: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub im: Option<Vec<f64>>,
}

impl ComplexVectorDesc {
    pub fn from_slice(v: &[C64]) -> Self {
        Self {
            re: v.iter().map(|z| z.re).collect(),
            im: Some(v.iter().map(|z| z.im).collect()),
        }
    }

    pub fn to_vec(&self, what: &str) -> CliResult<Vec<C64>> {
        match &self.im {
            Some(im) if im.len() != self.re.len() => {
                Err(CliError::input(format!("{what}.im: length does not match {what}.re")))
            }
            Some(im) => Ok(self.re.iter().zip(im).map(|(&a, &b)| C64::new(a, b)).collect()),
            None => Ok(self.re.iter().map(|&a| C64::new(a, 0.0)).collect()),
        }
    }
}

/// One atom: `omega` for radial families, `xi` for plane waves.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AtomDesc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xi: Option<Vec<f64>>,
    #[serde(rename = "G")]
    pub g: ComplexMatrixDesc,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MeasureDesc {
    pub dim: usize,
    pub atoms: Vec<AtomDesc>,
}

impl MeasureDesc {
    pub fn to_operator_measure(&self) -> CliResult<OperatorMeasure> {
        let mut atoms = Vec::with_capacity(self.atoms.len());
        for (i, a) in self.atoms.iter().enumerate() {
            let Some(omega) = a.omega else {
                return Err(CliError::input(format!("measure.atoms[{i}]: missing field `omega`")));
            };
            if a.xi.is_some() {
                return Err(CliError::input(format!(
                    "measure.atoms[{i}]: field `xi` is only valid for plane-wave kernels"
                )));
            }
            atoms.push((omega, a.g.to_hermitian(&format!("measure.atoms[{i}].G"))?));
        }
        Ok(OperatorMeasure::new(self.dim, atoms)?)
    }

    pub fn to_plane_wave_measure(&self, ambient_dim: usize) -> CliResult<PlaneWaveMeasure> {
        let mut atoms = Vec::with_capacity(self.atoms.len());
        for (i, a) in self.atoms.iter().enumerate() {
            let Some(xi) = &a.xi else {
                return Err(CliError::input(format!("measure.atoms[{i}]: missing field `xi`")));
            };
            if a.omega.is_some() {
                return Err(CliError::input(format!(
                    "measure.atoms[{i}]: field `omega` is only valid for radial kernels"
                )));
            }
            atoms.push((xi.clone(), a.g.to_hermitian(&format!("measure.atoms[{i}].G"))?));
        }
        Ok(PlaneWaveMeasure::new(self.dim, ambient_dim, atoms)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum FamilyDesc {
    Gaussian,
    Askey { smoothness: u32 },
    Omega { source_dim: u32 },
    PlaneWave,
}

impl FamilyDesc {
    pub fn radial_profile(&self) -> Option<RadialProfile> {
        match *self {
            FamilyDesc::Gaussian => Some(RadialProfile::Gaussian),
            FamilyDesc::Askey { smoothness } => Some(RadialProfile::Askey { smoothness }),
            FamilyDesc::Omega { source_dim } => Some(RadialProfile::Omega { source_dim }),
            FamilyDesc::PlaneWave => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KernelDesc {
    pub family: FamilyDesc,
    pub ambient_dim: usize,
    pub measure: MeasureDesc,
}

impl KernelDesc {
    pub fn build(&self) -> CliResult<OperatorKernel> {
        match self.family.radial_profile() {
            Some(p) => Ok(OperatorKernel::radial(p, self.measure.to_operator_measure()?, self.ambient_dim)?),
            None => Ok(OperatorKernel::plane_wave(self.measure.to_plane_wave_measure(self.ambient_dim)?)),
        }
    }

    pub fn radial_parts(&self) -> CliResult<(RadialProfile, OperatorMeasure)> {
        let p = self
            .family
            .radial_profile()
            .ok_or_else(|| CliError::input("kernel.family: this command needs a radial family"))?;
        Ok((p, self.measure.to_operator_measure()?))
    }
}

pub fn multi_index(alpha: &[u32], m: usize, what: &str) -> CliResult<MultiIndex> {
    if alpha.len() != m {
        return Err(CliError::input(format!("{what}: expected {m} components, got {}", alpha.len())));
    }
    Ok(MultiIndex::new(alpha.to_vec()))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VectorAtomDesc {
    pub x: Vec<f64>,
    pub v: ComplexVectorDesc,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentDesc {
    pub alpha: Vec<u32>,
    pub atoms: Vec<VectorAtomDesc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VectorMeasureDesc {
    pub q: usize,
    pub components: Vec<ComponentDesc>,
}

impl VectorMeasureDesc {
    pub fn build(&self, m: usize, l: usize) -> CliResult<DerivVectorMeasure> {
        let mut comps = Vec::with_capacity(self.components.len());
        for (ci, c) in self.components.iter().enumerate() {
            let alpha = multi_index(&c.alpha, m, &format!("components[{ci}].alpha"))?;
            let mut atoms = Vec::with_capacity(c.atoms.len());
            for (ai, a) in c.atoms.iter().enumerate() {
                atoms.push((a.x.clone(), a.v.to_vec(&format!("components[{ci}].atoms[{ai}].v"))?));
            }
            comps.push((alpha, VectorAtomMeasure::new(m, l, atoms)?));
        }
        Ok(DerivVectorMeasure::new(self.q, comps)?)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EvalInput {
    pub kernel: KernelDesc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GramInput {
    pub kernel: KernelDesc,
    pub points: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProbeDesc {
    #[serde(default = "default_n")]
    pub n: usize,
    #[serde(default = "default_trials")]
    pub trials: usize,
    #[serde(default = "default_box", rename = "box")]
    pub box_half_width: f64,
}

impl Default for ProbeDesc {
    fn default() -> Self {
        Self {
            n: default_n(),
            trials: default_trials(),
            box_half_width: default_box(),
        }
    }
}

fn default_n() -> usize {
    3
}

fn default_trials() -> usize {
    50
}

fn default_box() -> f64 {
    opkernel::certify::DEFAULT_BOX
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProbeInput {
    pub kernel: KernelDesc,
    #[serde(default)]
    pub probe: ProbeDesc,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuadraticFormInput {
    pub kernel: KernelDesc,
    pub eta: VectorMeasureDesc,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InterpDatum {
    pub x: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<u32>>,
    pub target: ComplexVectorDesc,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InterpInput {
    pub kernel: KernelDesc,
    pub data: Vec<InterpDatum>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ridge: Option<f64>,
    /// Points at which the interpolant is evaluated in the report.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub eval_points: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum MonotoneFunction {
    /// `e^{-t}`
    ExpNeg,
    /// `1/(1+t)`
    Reciprocal,
    /// `2 + sin t`
    TwoPlusSin,
    /// `Σ λ_j (1 - r_j t)_+^{ℓ-1}` with atoms `[r_j, λ_j]`.
    Williamson { atoms: Vec<(f64, f64)>, ell: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridDesc {
    pub start: f64,
    pub end: f64,
    pub n: usize,
}

impl GridDesc {
    pub fn points(&self) -> CliResult<Vec<f64>> {
        if self.n < 2 || !(self.end > self.start) {
            return Err(CliError::input("grid: need n >= 2 and end > start"));
        }
        Ok((0..self.n)
            .map(|i| self.start + (self.end - self.start) * i as f64 / (self.n - 1) as f64)
            .collect())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonotoneInput {
    pub function: MonotoneFunction,
    /// Checks complete monotonicity up to difference order `nmax` when set;
    /// otherwise `ℓ`-times complete monotonicity with `ell`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nmax: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ell: Option<usize>,
    pub grid: GridDesc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<f64>,
}
