//! Operator-valued kernels `P(x, y) = Σ_j p_{ω_j}(x, y) G_j`, their mixed partial
//! derivatives and block Gram matrices.
//!
//! Quadratic-form convention: for a point design `x_1..x_n` and stacked vectors
//! `v = (v_1, …, v_n)`, `Q(v) = Σ_{μ,ν} ⟨K(x_μ, x_ν) v_ν, v_μ⟩ = v† G v` where block
//! `(μ, ν)` of `G` is `K(x_μ, x_ν)`. Derivative Gram matrices use the same layout
//! with rows indexed by `(point, multi-index)`, points outermost and
//! multi-indices in graded-lex order (see [`MultiIndex::graded_lex`]).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::hermitian::{min_eigenvalue, trace, CMatrix, HermitianMatrix};
use crate::measures::{check_vector, OperatorMeasure, PlaneWaveMeasure, ScalarMeasure};
use crate::profiles::{plane_wave_deriv, sjet_derivatives, MultiIndex, RadialJet, RadialProfile};
use crate::{Error, Result, C64};

/// Largest supported `|α| + |β|`.
pub const MAX_DERIVATIVE_ORDER: usize = 8;

/// Points closer than this are treated as duplicates by Gram assembly.
pub const DUPLICATE_POINT_TOL: f64 = 1e-12;

/// One row group of a derivative Gram matrix: a point and a derivative order.
#[derive(Debug, Clone, PartialEq)]
pub struct DerivRow {
    pub point: Vec<f64>,
    pub alpha: MultiIndex,
}

/// A matrix-valued kernel on `ℝ^m` with Hermitian symmetry `K(y, x) = K(x, y)†`.
pub trait MatrixKernel {
    fn ambient_dim(&self) -> usize;

    /// `ℓ`, the size of each kernel value.
    fn value_dim(&self) -> usize;

    fn eval(&self, x: &[f64], y: &[f64]) -> Result<CMatrix>;

    /// `∂_1^α ∂_2^β K(x, y)`.
    fn deriv_eval(&self, alpha: &MultiIndex, beta: &MultiIndex, x: &[f64], y: &[f64]) -> Result<CMatrix>;

    /// Matrix with block `(r, s)` equal to `∂_1^{α_r} ∂_2^{α_s} K(x_r, x_s)`.
    /// Only the upper block triangle is evaluated; the rest is filled by adjoints.
    fn deriv_block_matrix(&self, rows: &[DerivRow]) -> Result<CMatrix> {
        assemble_blocks(self.value_dim(), rows, |r, s| {
            self.deriv_eval(&r.alpha, &s.alpha, &r.point, &s.point)
        })
    }
}

pub(crate) fn assemble_blocks(
    l: usize,
    rows: &[DerivRow],
    mut block: impl FnMut(&DerivRow, &DerivRow) -> Result<CMatrix>,
) -> Result<CMatrix> {
    let n = rows.len();
    let mut out = CMatrix::zeros(n * l, n * l);
    for r in 0..n {
        for s in r..n {
            let b = block(&rows[r], &rows[s])?;
            for i in 0..l {
                for j in 0..l {
                    out[(r * l + i, s * l + j)] = b[(i, j)];
                    if r != s {
                        out[(s * l + j, r * l + i)] = b[(i, j)].conj();
                    }
                }
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
enum Mixture {
    Radial {
        profile: RadialProfile,
        measure: OperatorMeasure,
    },
    PlaneWave(PlaneWaveMeasure),
}

/// Family of an [`OperatorKernel`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelFamily {
    Radial(RadialProfile),
    PlaneWave,
}

/// Discrete mixture of a scalar base family against an operator measure.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorKernel {
    ambient_dim: usize,
    mixture: Mixture,
}

impl OperatorKernel {
    pub fn radial(profile: RadialProfile, measure: OperatorMeasure, ambient_dim: usize) -> Result<Self> {
        profile.validate()?;
        if ambient_dim == 0 {
            return Err(Error::InvalidPoint("ambient dimension must be >= 1".into()));
        }
        Ok(Self {
            ambient_dim,
            mixture: Mixture::Radial { profile, measure },
        })
    }

    pub fn plane_wave(measure: PlaneWaveMeasure) -> Self {
        Self {
            ambient_dim: measure.ambient_dim(),
            mixture: Mixture::PlaneWave(measure),
        }
    }

    /// Scalar (`ℓ = 1`) radial kernel `Σ_j λ_j p_{ω_j}`.
    pub fn from_scalar_measure(profile: RadialProfile, measure: &ScalarMeasure, ambient_dim: usize) -> Result<Self> {
        let atoms = measure
            .atoms()
            .iter()
            .map(|&(w, lambda)| (w, HermitianMatrix::diag(&[lambda])))
            .collect();
        Self::radial(profile, OperatorMeasure::new(1, atoms)?, ambient_dim)
    }

    pub fn family(&self) -> KernelFamily {
        match &self.mixture {
            Mixture::Radial { profile, .. } => KernelFamily::Radial(*profile),
            Mixture::PlaneWave(_) => KernelFamily::PlaneWave,
        }
    }

    pub fn radial_measure(&self) -> Option<&OperatorMeasure> {
        match &self.mixture {
            Mixture::Radial { measure, .. } => Some(measure),
            Mixture::PlaneWave(_) => None,
        }
    }

    pub fn plane_wave_measure(&self) -> Option<&PlaneWaveMeasure> {
        match &self.mixture {
            Mixture::PlaneWave(m) => Some(m),
            Mixture::Radial { .. } => None,
        }
    }

    fn check_point(&self, p: &[f64]) -> Result<()> {
        if p.len() != self.ambient_dim {
            return Err(Error::InvalidPoint(format!(
                "expected a point in R^{}, got length {}",
                self.ambient_dim,
                p.len()
            )));
        }
        if p.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidPoint("non-finite coordinate".into()));
        }
        Ok(())
    }

    fn check_orders(&self, alpha: &MultiIndex, beta: &MultiIndex) -> Result<()> {
        if alpha.dim() != self.ambient_dim || beta.dim() != self.ambient_dim {
            return Err(Error::InvalidPoint(format!(
                "multi-indices must have dimension {}",
                self.ambient_dim
            )));
        }
        let order = alpha.order() + beta.order();
        if order > MAX_DERIVATIVE_ORDER {
            return Err(Error::DerivativeOrderTooHigh {
                order,
                cap: MAX_DERIVATIVE_ORDER,
            });
        }
        Ok(())
    }

    /// `F(t)`, the value at any pair with `‖x - y‖ = t`.
    pub fn radial_function_eval(&self, t: f64) -> Result<CMatrix> {
        match &self.mixture {
            Mixture::Radial { profile, measure } => Ok(radial_sum(*profile, measure, t)),
            Mixture::PlaneWave(_) => Err(Error::NotRadial),
        }
    }

    fn radial_deriv_with_jet(
        profile: RadialProfile,
        measure: &OperatorMeasure,
        jet: &RadialJet,
        beta_order: usize,
        d: &[f64],
    ) -> Result<CMatrix> {
        let l = measure.dim();
        let s: f64 = d.iter().map(|v| v * v).sum();
        let kmax = jet.max_order().unwrap_or(0);
        let sign = if beta_order.is_multiple_of(2) { 1.0 } else { -1.0 };
        let mut out = CMatrix::zeros(l, l);
        if jet.is_zero() {
            return Ok(out);
        }
        for atom in measure.atoms() {
            let sj = sjet_derivatives(profile, atom.omega, s, kmax)?;
            let val = sign * jet.eval(d, &sj);
            out.add_scaled(atom.weight.as_cmatrix(), C64::new(val, 0.0));
        }
        Ok(out)
    }

    /// Central finite-difference fallback for `∂_1^α ∂_2^β K(x, y)` on radial
    /// families, including Askey profiles. The step is `h = 1e-4·max(1, ‖x-y‖)`;
    /// for Askey profiles, distances within `10h` of `0` or of a kink `1/ω_j` are
    /// rejected. Accuracy degrades like `ε/h^{|α|+|β|}`, so this is meant for low
    /// orders only.
    pub fn deriv_eval_fd(&self, alpha: &MultiIndex, beta: &MultiIndex, x: &[f64], y: &[f64]) -> Result<CMatrix> {
        self.check_point(x)?;
        self.check_point(y)?;
        self.check_orders(alpha, beta)?;
        let Mixture::Radial { profile, measure } = &self.mixture else {
            return Err(Error::NotRadial);
        };
        let d: Vec<f64> = x.iter().zip(y).map(|(a, b)| a - b).collect();
        let t = norm(&d);
        let h = 1e-4 * t.max(1.0);
        if let RadialProfile::Askey { .. } = profile {
            if t < 10.0 * h {
                return Err(Error::NearSingularLocus(format!("distance {t:e} too close to 0")));
            }
            for a in measure.atoms() {
                if a.omega > 0.0 && (t - 1.0 / a.omega).abs() < 10.0 * h {
                    return Err(Error::NearSingularLocus(format!(
                        "distance {t} too close to the kink at {}",
                        1.0 / a.omega
                    )));
                }
            }
        }
        let gamma = alpha.checked_add(beta)?;
        let mut counts: Vec<u32> = gamma.components().to_vec();
        let f = |p: &[f64]| radial_sum(*profile, measure, norm(p));
        let mut val = nested_central_difference(&f, &mut d.clone(), &mut counts, h);
        if beta.order() % 2 == 1 {
            val = val.scaled(C64::new(-1.0, 0.0));
        }
        Ok(val)
    }
}

fn nested_central_difference(
    f: &dyn Fn(&[f64]) -> CMatrix,
    at: &mut Vec<f64>,
    counts: &mut Vec<u32>,
    h: f64,
) -> CMatrix {
    let Some(i) = counts.iter().position(|&c| c > 0) else {
        return f(at);
    };
    counts[i] -= 1;
    let orig = at[i];
    at[i] = orig + h;
    let plus = nested_central_difference(f, at, counts, h);
    at[i] = orig - h;
    let minus = nested_central_difference(f, at, counts, h);
    at[i] = orig;
    counts[i] += 1;
    plus.sub(&minus).scaled(C64::new(1.0 / (2.0 * h), 0.0))
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|a| a * a).sum::<f64>().sqrt()
}

fn radial_sum(profile: RadialProfile, measure: &OperatorMeasure, t: f64) -> CMatrix {
    let l = measure.dim();
    let mut out = CMatrix::zeros(l, l);
    for atom in measure.atoms() {
        let p = profile.value(atom.omega, t);
        if p != 0.0 {
            out.add_scaled(atom.weight.as_cmatrix(), C64::new(p, 0.0));
        }
    }
    out
}

impl MatrixKernel for OperatorKernel {
    fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    fn value_dim(&self) -> usize {
        match &self.mixture {
            Mixture::Radial { measure, .. } => measure.dim(),
            Mixture::PlaneWave(m) => m.dim(),
        }
    }

    fn eval(&self, x: &[f64], y: &[f64]) -> Result<CMatrix> {
        self.check_point(x)?;
        self.check_point(y)?;
        match &self.mixture {
            Mixture::Radial { profile, measure } => {
                let d: Vec<f64> = x.iter().zip(y).map(|(a, b)| a - b).collect();
                Ok(radial_sum(*profile, measure, norm(&d)))
            }
            Mixture::PlaneWave(measure) => {
                let l = measure.dim();
                let mut out = CMatrix::zeros(l, l);
                for (xi, g) in measure.atoms() {
                    let phase: f64 = x.iter().zip(y).zip(xi).map(|((a, b), w)| (a - b) * w).sum();
                    out.add_scaled(g.as_cmatrix(), C64::new(0.0, -phase).exp());
                }
                Ok(out)
            }
        }
    }

    fn deriv_eval(&self, alpha: &MultiIndex, beta: &MultiIndex, x: &[f64], y: &[f64]) -> Result<CMatrix> {
        self.check_point(x)?;
        self.check_point(y)?;
        self.check_orders(alpha, beta)?;
        match &self.mixture {
            Mixture::Radial { .. } if alpha.is_zero() && beta.is_zero() => self.eval(x, y),
            Mixture::Radial { profile, measure } => {
                if !profile.has_jets() {
                    return Err(Error::UnsupportedJet(
                        "askey profiles have no analytic jets; use deriv_eval_fd".into(),
                    ));
                }
                let jet = RadialJet::for_multi_index(&alpha.checked_add(beta)?);
                let d: Vec<f64> = x.iter().zip(y).map(|(a, b)| a - b).collect();
                Self::radial_deriv_with_jet(*profile, measure, &jet, beta.order(), &d)
            }
            Mixture::PlaneWave(measure) => {
                let l = measure.dim();
                let mut out = CMatrix::zeros(l, l);
                for (xi, g) in measure.atoms() {
                    let c = plane_wave_deriv(xi, alpha, beta, x, y)?;
                    out.add_scaled(g.as_cmatrix(), c);
                }
                Ok(out)
            }
        }
    }

    fn deriv_block_matrix(&self, rows: &[DerivRow]) -> Result<CMatrix> {
        let Mixture::Radial { profile, measure } = &self.mixture else {
            return assemble_blocks(self.value_dim(), rows, |r, s| {
                self.deriv_eval(&r.alpha, &s.alpha, &r.point, &s.point)
            });
        };
        let mut jets: BTreeMap<MultiIndex, RadialJet> = BTreeMap::new();
        assemble_blocks(measure.dim(), rows, |r, s| {
            self.check_point(&r.point)?;
            self.check_point(&s.point)?;
            self.check_orders(&r.alpha, &s.alpha)?;
            if r.alpha.is_zero() && s.alpha.is_zero() {
                return self.eval(&r.point, &s.point);
            }
            if !profile.has_jets() {
                return Err(Error::UnsupportedJet(
                    "askey profiles have no analytic jets".into(),
                ));
            }
            let gamma = r.alpha.checked_add(&s.alpha)?;
            let jet = jets
                .entry(gamma)
                .or_insert_with_key(RadialJet::for_multi_index);
            let d: Vec<f64> = r.point.iter().zip(&s.point).map(|(a, b)| a - b).collect();
            Self::radial_deriv_with_jet(*profile, measure, jet, s.alpha.order(), &d)
        })
    }
}

/// Maximum entrywise gap between `∂_1^α ∂_2^β K(x, x)` from the jet engine and
/// the moment formula `(-1)^{|β|} f^{(α+β)}(0) · M`, where `M` is the matching
/// operator moment of the measure.
///
/// With `γ = α + β = 2κ` (all even, otherwise both sides vanish) and
/// `k = |κ|`, the Taylor expansion of `g̃(‖d‖²)` gives
/// `∂^γ f(0) = γ!/κ! · g̃^{(k)}(0)`. Gaussian atoms have `g̃^{(k)}(0) = (-ω)^k`,
/// so `M = Σ ω_j^k G_j`; `Ω_m` atoms have
/// `g̃^{(k)}(0) = (-1/4)^k ω^{2k} / Π_{i<k}(m/2 + i)`, so `M = Σ ω_j^{2k} G_j`.
pub fn deriv_diag_identity_check(k: &OperatorKernel, alpha: &MultiIndex, beta: &MultiIndex) -> Result<f64> {
    let Some(measure) = k.radial_measure() else {
        return Err(Error::NotRadial);
    };
    let KernelFamily::Radial(profile) = k.family() else {
        return Err(Error::NotRadial);
    };
    let x = alloc::vec![0.0; k.ambient_dim()];
    let lhs = k.deriv_eval(alpha, beta, &x, &x)?;

    let gamma = alpha.checked_add(beta)?;
    let l = measure.dim();
    let mut rhs = CMatrix::zeros(l, l);
    if gamma.components().iter().all(|&g| g % 2 == 0) {
        let kappa = MultiIndex::new(gamma.components().iter().map(|&g| g / 2).collect());
        let korder = kappa.order();
        let sign_beta = if beta.order().is_multiple_of(2) { 1.0 } else { -1.0 };
        let sign_k = if korder.is_multiple_of(2) { 1.0 } else { -1.0 };
        let combinatorial = gamma.factorial() / kappa.factorial();
        let (profile_coef, moment_power) = match profile {
            RadialProfile::Gaussian => (sign_k, korder),
            RadialProfile::Omega { source_dim } => {
                let half_m = f64::from(source_dim) / 2.0;
                let denom: f64 = (0..korder).map(|i| half_m + i as f64).product();
                (sign_k * 0.25f64.powi(korder as i32) / denom, 2 * korder)
            }
            RadialProfile::Askey { .. } => {
                return Err(Error::UnsupportedJet("askey profiles have no jets".into()))
            }
        };
        let mut moment = CMatrix::zeros(l, l);
        for a in measure.atoms() {
            moment.add_scaled(a.weight.as_cmatrix(), C64::new(a.omega.powi(moment_power as i32), 0.0));
        }
        rhs = moment.scaled(C64::new(sign_beta * combinatorial * profile_coef, 0.0));
    }
    Ok(lhs.sub(&rhs).max_abs())
}

fn check_distinct(points: &[Vec<f64>]) -> Result<()> {
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            let d: Vec<f64> = points[i].iter().zip(&points[j]).map(|(a, b)| a - b).collect();
            if norm(&d) <= DUPLICATE_POINT_TOL {
                return Err(Error::DuplicatePoints { first: i, second: j });
            }
        }
    }
    Ok(())
}

fn check_points<K: MatrixKernel + ?Sized>(k: &K, points: &[Vec<f64>]) -> Result<()> {
    let m = k.ambient_dim();
    for (i, p) in points.iter().enumerate() {
        if p.len() != m || p.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidPoint(format!("point {i} is not a finite vector in R^{m}")));
        }
    }
    check_distinct(points)
}

/// Block Gram matrix `[K(x_μ, x_ν)]`.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockGram {
    pub points: Vec<Vec<f64>>,
    pub value_dim: usize,
    pub matrix: HermitianMatrix,
}

impl BlockGram {
    pub fn min_eigenvalue(&self) -> Result<f64> {
        min_eigenvalue(&self.matrix)
    }

    pub fn trace(&self) -> f64 {
        trace(&self.matrix)
    }
}

pub fn gram<K: MatrixKernel + ?Sized>(k: &K, points: &[Vec<f64>]) -> Result<BlockGram> {
    check_points(k, points)?;
    let zero = MultiIndex::zero(k.ambient_dim());
    let rows: Vec<DerivRow> = points
        .iter()
        .map(|p| DerivRow {
            point: p.clone(),
            alpha: zero.clone(),
        })
        .collect();
    let l = k.value_dim();
    let m = assemble_blocks(l, &rows, |r, s| k.eval(&r.point, &s.point))?;
    Ok(BlockGram {
        points: points.to_vec(),
        value_dim: l,
        matrix: HermitianMatrix::from_cmatrix(m)?,
    })
}

/// Derivative block Gram matrix `[∂_1^α ∂_2^β K(x_μ, x_ν)]` over all `|α|, |β| ≤ q`.
#[derive(Debug, Clone, PartialEq)]
pub struct DerivBlockGram {
    pub points: Vec<Vec<f64>>,
    pub indices: Vec<MultiIndex>,
    pub value_dim: usize,
    pub matrix: HermitianMatrix,
}

impl DerivBlockGram {
    pub fn min_eigenvalue(&self) -> Result<f64> {
        min_eigenvalue(&self.matrix)
    }

    pub fn trace(&self) -> f64 {
        trace(&self.matrix)
    }
}

pub fn deriv_gram<K: MatrixKernel + ?Sized>(k: &K, points: &[Vec<f64>], q: usize) -> Result<DerivBlockGram> {
    check_points(k, points)?;
    if 2 * q > MAX_DERIVATIVE_ORDER {
        return Err(Error::DerivativeOrderTooHigh {
            order: 2 * q,
            cap: MAX_DERIVATIVE_ORDER,
        });
    }
    let indices = MultiIndex::graded_lex(k.ambient_dim(), q);
    let rows: Vec<DerivRow> = points
        .iter()
        .flat_map(|p| {
            indices.iter().map(move |a| DerivRow {
                point: p.clone(),
                alpha: a.clone(),
            })
        })
        .collect();
    let m = k.deriv_block_matrix(&rows)?;
    Ok(DerivBlockGram {
        points: points.to_vec(),
        indices,
        value_dim: k.value_dim(),
        matrix: HermitianMatrix::from_cmatrix(m)?,
    })
}

/// Scalar projection `K_v(x, y) = ⟨K(x, y)v, v⟩ = v† K(x, y) v`.
#[derive(Debug, Clone)]
pub struct ScalarProjection<'a, K: ?Sized> {
    kernel: &'a K,
    v: Vec<C64>,
}

pub fn scalar_projection_kernel<'a, K: MatrixKernel + ?Sized>(k: &'a K, v: &[C64]) -> Result<ScalarProjection<'a, K>> {
    check_vector(v, k.value_dim())?;
    Ok(ScalarProjection {
        kernel: k,
        v: v.to_vec(),
    })
}

impl<K: MatrixKernel + ?Sized> ScalarProjection<'_, K> {
    pub fn value(&self, x: &[f64], y: &[f64]) -> Result<C64> {
        Ok(self.kernel.eval(x, y)?.sesquilinear(&self.v, &self.v))
    }

    pub fn vector(&self) -> &[C64] {
        &self.v
    }
}

impl<K: MatrixKernel + ?Sized> MatrixKernel for ScalarProjection<'_, K> {
    fn ambient_dim(&self) -> usize {
        self.kernel.ambient_dim()
    }

    fn value_dim(&self) -> usize {
        1
    }

    fn eval(&self, x: &[f64], y: &[f64]) -> Result<CMatrix> {
        CMatrix::from_vec(1, 1, alloc::vec![self.value(x, y)?])
    }

    fn deriv_eval(&self, alpha: &MultiIndex, beta: &MultiIndex, x: &[f64], y: &[f64]) -> Result<CMatrix> {
        let d = self.kernel.deriv_eval(alpha, beta, x, y)?;
        CMatrix::from_vec(1, 1, alloc::vec![d.sesquilinear(&self.v, &self.v)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn gaussian(atoms: Vec<(f64, HermitianMatrix)>, l: usize, m: usize) -> OperatorKernel {
        OperatorKernel::radial(RadialProfile::Gaussian, OperatorMeasure::new(l, atoms).unwrap(), m).unwrap()
    }

    #[test]
    fn eval_examples() {
        let k = gaussian(vec![(1.0, HermitianMatrix::identity(2))], 2, 1);
        assert_eq!(k.eval(&[0.4], &[0.4]).unwrap(), CMatrix::identity(2));
        let empty = OperatorKernel::radial(RadialProfile::Gaussian, OperatorMeasure::empty(2), 1).unwrap();
        assert_eq!(empty.eval(&[0.0], &[1.0]).unwrap(), CMatrix::zeros(2, 2));
        let k = gaussian(vec![(1.0, HermitianMatrix::diag(&[1.0, 2.0]))], 2, 1);
        let v = k.eval(&[0.0], &[1.0]).unwrap();
        let e = (-1.0f64).exp();
        assert!(v.sub(&CMatrix::from_real_diag(&[e, 2.0 * e])).max_abs() < 1e-16);
        assert!(matches!(k.eval(&[0.0, 1.0], &[1.0]), Err(Error::InvalidPoint(_))));
    }

    #[test]
    fn radial_function_examples() {
        let k = gaussian(vec![(1.0, HermitianMatrix::identity(2)), (0.0, HermitianMatrix::diag(&[1.0, 0.0]))], 2, 2);
        assert_eq!(k.radial_function_eval(0.0).unwrap(), CMatrix::from_real_diag(&[2.0, 1.0]));
        let f = k.radial_function_eval(0.7).unwrap();
        let e = k.eval(&[0.0, 0.0], &[0.7, 0.0]).unwrap();
        assert_eq!(f, e);
        let pw = OperatorKernel::plane_wave(
            PlaneWaveMeasure::new(1, 1, vec![(vec![1.0], HermitianMatrix::identity(1))]).unwrap(),
        );
        assert_eq!(pw.radial_function_eval(1.0), Err(Error::NotRadial));
    }

    #[test]
    fn derivative_examples() {
        let omega = 1.7;
        let g = HermitianMatrix::from_real_rows(&[&[2.0, 1.0], &[1.0, 1.0]]).unwrap();
        let k = gaussian(vec![(omega, g.clone())], 2, 1);
        let z = MultiIndex::zero(1);
        let one = MultiIndex::unit(1, 0);
        assert_eq!(k.deriv_eval(&z, &z, &[0.2], &[0.5]).unwrap(), k.eval(&[0.2], &[0.5]).unwrap());
        assert!(k.deriv_eval(&one, &z, &[0.3], &[0.3]).unwrap().max_abs() == 0.0);
        let d11 = k.deriv_eval(&one, &one, &[0.3], &[0.3]).unwrap();
        assert!(d11.sub(&g.as_cmatrix().scaled(C64::new(2.0 * omega, 0.0))).max_abs() < 1e-14);

        let askey = OperatorKernel::radial(
            RadialProfile::Askey { smoothness: 4 },
            OperatorMeasure::new(1, vec![(1.0, HermitianMatrix::identity(1))]).unwrap(),
            1,
        )
        .unwrap();
        assert!(matches!(askey.deriv_eval(&one, &z, &[0.0], &[0.3]), Err(Error::UnsupportedJet(_))));
        let nine = MultiIndex::new(vec![9]);
        assert!(matches!(k.deriv_eval(&nine, &z, &[0.0], &[0.3]), Err(Error::DerivativeOrderTooHigh { .. })));
    }

    #[test]
    fn askey_finite_difference_fallback() {
        // (1 - t)_+^3 on R: f'(t) = -3(1-t)^2 for 0 < t < 1, and ∂_1 K(x,y) = f'(|x-y|)·sign(x-y).
        let askey = OperatorKernel::radial(
            RadialProfile::Askey { smoothness: 4 },
            OperatorMeasure::new(1, vec![(1.0, HermitianMatrix::identity(1))]).unwrap(),
            1,
        )
        .unwrap();
        let one = MultiIndex::unit(1, 0);
        let z = MultiIndex::zero(1);
        let v = askey.deriv_eval_fd(&one, &z, &[0.4], &[0.0]).unwrap();
        assert!((v[(0, 0)].re + 3.0 * 0.36).abs() < 1e-7);
        assert!(matches!(askey.deriv_eval_fd(&one, &z, &[1.0], &[0.0]), Err(Error::NearSingularLocus(_))));
        assert!(matches!(askey.deriv_eval_fd(&one, &z, &[0.0], &[0.0]), Err(Error::NearSingularLocus(_))));
    }

    #[test]
    fn diag_identity_examples() {
        let k = gaussian(vec![(0.8, HermitianMatrix::identity(2))], 2, 1);
        let z = MultiIndex::zero(1);
        let one = MultiIndex::unit(1, 0);
        assert!(deriv_diag_identity_check(&k, &z, &z).unwrap() == 0.0);
        assert!(deriv_diag_identity_check(&k, &one, &one).unwrap() <= 1e-12);
        assert!(deriv_diag_identity_check(&k, &one, &z).unwrap() == 0.0);
    }

    #[test]
    fn gram_examples() {
        let k = gaussian(vec![(1.0, HermitianMatrix::identity(2))], 2, 1);
        let g = gram(&k, &[vec![0.5]]).unwrap();
        assert_eq!(g.matrix.as_cmatrix(), &CMatrix::identity(2));

        let g = gram(&k, &[vec![0.0], vec![10.0]]).unwrap();
        assert!(g.matrix.get(0, 2).re < 1e-40);
        assert!((g.min_eigenvalue().unwrap() - 1.0).abs() < 1e-15);

        let constant = gaussian(vec![(0.0, HermitianMatrix::identity(2))], 2, 1);
        let g = gram(&constant, &[vec![0.0], vec![1.0]]).unwrap();
        assert!(g.min_eigenvalue().unwrap().abs() < 1e-15);
        let v = [1.0, 0.0, -1.0, 0.0].map(|x| C64::new(x, 0.0));
        assert_eq!(g.matrix.quadratic_form(&v), 0.0);

        assert_eq!(
            gram(&k, &[vec![0.0], vec![0.0]]),
            Err(Error::DuplicatePoints { first: 0, second: 1 })
        );
    }

    #[test]
    fn deriv_gram_examples() {
        let k = gaussian(vec![(1.0, HermitianMatrix::identity(1))], 1, 1);
        let d = deriv_gram(&k, &[vec![0.0]], 1).unwrap();
        assert_eq!(d.matrix, HermitianMatrix::diag(&[1.0, 2.0]));
        let pts = [vec![0.0], vec![0.6]];
        let d0 = deriv_gram(&k, &pts, 0).unwrap();
        assert_eq!(d0.matrix, gram(&k, &pts).unwrap().matrix);
    }

    #[test]
    fn projection_examples() {
        let k = gaussian(vec![(1.0, HermitianMatrix::diag(&[3.0, 5.0]))], 2, 2);
        let e1 = [C64::new(1.0, 0.0), C64::new(0.0, 0.0)];
        let p = scalar_projection_kernel(&k, &e1).unwrap();
        let x = [0.1, 0.2];
        let y = [-0.4, 0.9];
        assert_eq!(p.value(&x, &y).unwrap(), k.eval(&x, &y).unwrap()[(0, 0)]);
        assert!(matches!(scalar_projection_kernel(&k, &[C64::new(0.0, 0.0); 2]), Err(Error::InvalidVector(_))));
    }
}
