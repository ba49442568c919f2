//! Vector measures, the RKHS embedding `η ↦ K_η`, universality quadratic forms
//! and (Hermite) interpolation.
//!
//! For a derivative measure `η = (η_α)_{|α|≤q}` with atoms `v_i δ_{x_i}` in
//! component `α_i`, the embedding is
//! `∂^β K_η(y) = Σ_i (∂_1^{α_i} ∂_2^β K)(x_i, y)† v_i`,
//! the unique vector with `⟨u, ∂^β K_η(y)⟩ = Σ_i ⟨(∂_1^{α_i}∂_2^β K)(x_i, y) u, v_i⟩`.
//! For a single `α = 0` atom this is the reproducing element `K(·, x_i) v_i`.
//! The quadratic form `⟨K_η, K_η⟩` is computed both as `w† D w` over the stacked
//! atom vectors and as the pairing of `K_η` against `η`; the two must agree.

use alloc::format;
use alloc::vec::Vec;

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::hermitian::{cholesky_psd, trace, HermitianMatrix};
use crate::kernel::{DerivRow, MatrixKernel, DUPLICATE_POINT_TOL};
use crate::profiles::MultiIndex;
use crate::{Error, Result, C64};

const TWO_ROUTE_REL_TOL: f64 = 1e-12;
const DEFAULT_RIDGE_REL: f64 = 1e-10;

/// Finite atomic `ℂ^ℓ`-valued measure `Σ_i v_i δ_{x_i}` on `ℝ^m`.
/// Atoms at identical points are merged by summing their vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct VectorAtomMeasure {
    ambient_dim: usize,
    value_dim: usize,
    atoms: Vec<(Vec<f64>, Vec<C64>)>,
}

impl VectorAtomMeasure {
    pub fn new(ambient_dim: usize, value_dim: usize, atoms: Vec<(Vec<f64>, Vec<C64>)>) -> Result<Self> {
        let mut merged: Vec<(Vec<f64>, Vec<C64>)> = Vec::new();
        for (i, (x, v)) in atoms.into_iter().enumerate() {
            if x.len() != ambient_dim || x.iter().any(|c| !c.is_finite()) {
                return Err(Error::InvalidPoint(format!("atom {i}: expected a finite point in R^{ambient_dim}")));
            }
            if v.len() != value_dim || v.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
                return Err(Error::InvalidVector(format!("atom {i}: expected a finite vector in C^{value_dim}")));
            }
            match merged.iter_mut().find(|(p, _)| *p == x) {
                Some((_, acc)) => acc.iter_mut().zip(&v).for_each(|(a, b)| *a += b),
                None => merged.push((x, v)),
            }
        }
        Ok(Self {
            ambient_dim,
            value_dim,
            atoms: merged,
        })
    }

    pub fn atoms(&self) -> &[(Vec<f64>, Vec<C64>)] {
        &self.atoms
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn value_dim(&self) -> usize {
        self.value_dim
    }

    pub fn is_zero(&self) -> bool {
        self.atoms.iter().all(|(_, v)| v.iter().all(|z| z.norm_sqr() == 0.0))
    }
}

/// `η = (η_α)_{|α|≤q}`.
#[derive(Debug, Clone, PartialEq)]
pub struct DerivVectorMeasure {
    q: usize,
    ambient_dim: usize,
    value_dim: usize,
    components: Vec<(MultiIndex, VectorAtomMeasure)>,
}

impl DerivVectorMeasure {
    /// Components sharing a multi-index are merged.
    pub fn new(q: usize, components: Vec<(MultiIndex, VectorAtomMeasure)>) -> Result<Self> {
        let mut dims: Option<(usize, usize)> = None;
        let mut merged: Vec<(MultiIndex, VectorAtomMeasure)> = Vec::new();
        for (alpha, eta) in components {
            if alpha.order() > q {
                return Err(Error::InvalidMeasure(format!("component {alpha} exceeds order q = {q}")));
            }
            if alpha.dim() != eta.ambient_dim {
                return Err(Error::InvalidMeasure(format!("component {alpha} has the wrong dimension")));
            }
            let d = (eta.ambient_dim, eta.value_dim);
            if *dims.get_or_insert(d) != d {
                return Err(Error::InvalidMeasure("components disagree on dimensions".into()));
            }
            match merged.iter_mut().find(|(a, _)| *a == alpha) {
                Some((_, acc)) => {
                    let mut atoms = acc.atoms.clone();
                    atoms.extend(eta.atoms);
                    *acc = VectorAtomMeasure::new(d.0, d.1, atoms)?;
                }
                None => merged.push((alpha, eta)),
            }
        }
        let (ambient_dim, value_dim) = dims.unwrap_or((0, 0));
        Ok(Self {
            q,
            ambient_dim,
            value_dim,
            components: merged,
        })
    }

    /// Plain (`q = 0`) measure.
    pub fn from_atoms(eta: VectorAtomMeasure) -> Self {
        let alpha = MultiIndex::zero(eta.ambient_dim);
        Self {
            q: 0,
            ambient_dim: eta.ambient_dim,
            value_dim: eta.value_dim,
            components: alloc::vec![(alpha, eta)],
        }
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn components(&self) -> &[(MultiIndex, VectorAtomMeasure)] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|(_, e)| e.is_zero())
    }

    /// Flattened `(point, α, v)` atoms in component order.
    pub fn flat_atoms(&self) -> Vec<(DerivRow, Vec<C64>)> {
        self.components
            .iter()
            .flat_map(|(alpha, eta)| {
                eta.atoms.iter().map(move |(x, v)| {
                    (
                        DerivRow {
                            point: x.clone(),
                            alpha: alpha.clone(),
                        },
                        v.clone(),
                    )
                })
            })
            .collect()
    }

    /// `c·η`.
    pub fn scaled(&self, c: C64) -> Self {
        let mut out = self.clone();
        for (_, eta) in &mut out.components {
            for (_, v) in &mut eta.atoms {
                v.iter_mut().for_each(|z| *z *= c);
            }
        }
        out
    }
}

/// One term `(α, x, v)` of an RKHS expansion.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpansionAtom {
    pub alpha: MultiIndex,
    pub x: Vec<f64>,
    pub v: Vec<C64>,
}

/// `Σ_i ∂_1^{α_i} K(x_i, ·)† v_i`, an element of the RKHS of `kernel`.
#[derive(Debug, Clone)]
pub struct RkhsElement<'a, K: ?Sized> {
    kernel: &'a K,
    atoms: Vec<ExpansionAtom>,
}

impl<'a, K: MatrixKernel + ?Sized> RkhsElement<'a, K> {
    pub fn zero(kernel: &'a K) -> Self {
        Self {
            kernel,
            atoms: Vec::new(),
        }
    }

    pub fn atoms(&self) -> &[ExpansionAtom] {
        &self.atoms
    }

    pub fn kernel(&self) -> &'a K {
        self.kernel
    }
}

/// `K_η`. Fails with `UnsupportedJet` if the kernel cannot differentiate to the
/// orders `η` uses.
pub fn embed<'a, K: MatrixKernel + ?Sized>(k: &'a K, eta: &DerivVectorMeasure) -> Result<RkhsElement<'a, K>> {
    let mut atoms = Vec::new();
    let mut probed: Vec<MultiIndex> = Vec::new();
    for (row, v) in eta.flat_atoms() {
        if v.len() != k.value_dim() {
            return Err(Error::InvalidVector(format!("expected vectors in C^{}", k.value_dim())));
        }
        if !probed.contains(&row.alpha) {
            let zero = MultiIndex::zero(k.ambient_dim());
            k.deriv_eval(&row.alpha, &zero, &row.point, &row.point)?;
            probed.push(row.alpha.clone());
        }
        atoms.push(ExpansionAtom {
            alpha: row.alpha,
            x: row.point,
            v,
        });
    }
    Ok(RkhsElement { kernel: k, atoms })
}

pub fn rkhs_eval<K: MatrixKernel + ?Sized>(f: &RkhsElement<'_, K>, y: &[f64]) -> Result<Vec<C64>> {
    rkhs_deriv_eval(f, &MultiIndex::zero(f.kernel.ambient_dim()), y)
}

/// `∂^β F(y) = Σ_i (∂_1^{α_i} ∂_2^β K)(x_i, y)† v_i`.
pub fn rkhs_deriv_eval<K: MatrixKernel + ?Sized>(f: &RkhsElement<'_, K>, beta: &MultiIndex, y: &[f64]) -> Result<Vec<C64>> {
    let l = f.kernel.value_dim();
    let mut out = alloc::vec![C64::new(0.0, 0.0); l];
    for a in &f.atoms {
        let d = f.kernel.deriv_eval(&a.alpha, beta, &a.x, y)?;
        let dv = d.adjoint().mul_vec(&a.v);
        out.iter_mut().zip(&dv).for_each(|(o, z)| *o += z);
    }
    Ok(out)
}

/// Both computations of `⟨K_η, K_η⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadraticFormRoutes {
    /// `w† D w` with `D` the derivative block matrix over the atoms of `η`.
    pub block_gram: f64,
    /// `Σ_k ⟨∂^{β_k} K_η(y_k), v_k⟩` over the atoms `(β_k, y_k, v_k)` of `η`.
    pub pairing: C64,
    /// `(Σ_k ‖v_k‖)² · max|D|`, which bounds `|⟨K_η, K_η⟩|`.
    pub scale: f64,
}

impl QuadraticFormRoutes {
    pub fn discrepancy(&self) -> f64 {
        (C64::new(self.block_gram, 0.0) - self.pairing).norm()
    }
}

pub fn quadratic_form_routes<K: MatrixKernel + ?Sized>(k: &K, eta: &DerivVectorMeasure) -> Result<QuadraticFormRoutes> {
    let flat = eta.flat_atoms();
    if flat.is_empty() {
        return Ok(QuadraticFormRoutes {
            block_gram: 0.0,
            pairing: C64::new(0.0, 0.0),
            scale: 0.0,
        });
    }
    let rows: Vec<DerivRow> = flat.iter().map(|(r, _)| r.clone()).collect();
    let w: Vec<C64> = flat.iter().flat_map(|(_, v)| v.iter().copied()).collect();
    if w.len() != rows.len() * k.value_dim() {
        return Err(Error::InvalidVector(format!("expected vectors in C^{}", k.value_dim())));
    }
    let d = k.deriv_block_matrix(&rows)?;
    let block_gram = d.sesquilinear(&w, &w).re;

    let f = embed(k, eta)?;
    let mut pairing = C64::new(0.0, 0.0);
    for (row, v) in &flat {
        let val = rkhs_deriv_eval(&f, &row.alpha, &row.point)?;
        pairing += v.iter().zip(&val).map(|(a, b)| a.conj() * b).sum::<C64>();
    }
    let mass: f64 = flat
        .iter()
        .map(|(_, v)| v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt())
        .sum();
    Ok(QuadraticFormRoutes {
        block_gram,
        pairing,
        scale: mass * mass * d.max_abs(),
    })
}

/// `⟨K_η, K_η⟩_{H_K}`. Errors with `Inconsistent` if the two routes disagree by
/// more than `1e-12·scale`.
pub fn quadratic_form<K: MatrixKernel + ?Sized>(k: &K, eta: &DerivVectorMeasure) -> Result<f64> {
    let r = quadratic_form_routes(k, eta)?;
    if r.discrepancy() > TWO_ROUTE_REL_TOL * r.scale {
        return Err(Error::Inconsistent(format!(
            "block-Gram route {} and pairing route {} disagree",
            r.block_gram, r.pairing
        )));
    }
    Ok(r.block_gram)
}

/// Solution of a (Hermite) interpolation problem.
#[derive(Debug, Clone)]
pub struct Interpolant<'a, K: ?Sized> {
    pub element: RkhsElement<'a, K>,
    pub ridge: f64,
    /// `max_k ‖(D c)_k - target_k‖`, the data misfit without the ridge term.
    pub residual: f64,
}

/// Interpolates `(x_i, target_i)` with `(G + ridge·I) c = y`. `ridge = None` uses
/// `1e-10·tr(G)/dim(G)`.
pub fn interpolate<'a, K: MatrixKernel + ?Sized>(
    k: &'a K,
    data: &[(Vec<f64>, Vec<C64>)],
    ridge: Option<f64>,
) -> Result<Interpolant<'a, K>> {
    let zero = MultiIndex::zero(k.ambient_dim());
    let hermite: Vec<(Vec<f64>, MultiIndex, Vec<C64>)> = data
        .iter()
        .map(|(x, t)| (x.clone(), zero.clone(), t.clone()))
        .collect();
    hermite_interpolate(k, &hermite, ridge)
}

/// Hermite interpolation: finds `F` with `∂^{α_i} F(x_i) = target_i`. The system
/// matrix is the derivative block matrix over the requested `(x_i, α_i)`.
pub fn hermite_interpolate<'a, K: MatrixKernel + ?Sized>(
    k: &'a K,
    data: &[(Vec<f64>, MultiIndex, Vec<C64>)],
    ridge: Option<f64>,
) -> Result<Interpolant<'a, K>> {
    let l = k.value_dim();
    if data.is_empty() {
        return Ok(Interpolant {
            element: RkhsElement::zero(k),
            ridge: ridge.unwrap_or(0.0),
            residual: 0.0,
        });
    }
    for (i, (x, alpha, t)) in data.iter().enumerate() {
        if x.len() != k.ambient_dim() || alpha.dim() != k.ambient_dim() {
            return Err(Error::InvalidPoint(format!("datum {i} has the wrong dimension")));
        }
        if t.len() != l {
            return Err(Error::InvalidVector(format!("datum {i}: target must lie in C^{l}")));
        }
        for (j, (y, beta, _)) in data.iter().enumerate().take(i) {
            let dist = x.iter().zip(y).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt();
            if alpha == beta && dist <= DUPLICATE_POINT_TOL {
                return Err(Error::DuplicatePoints { first: j, second: i });
            }
        }
    }
    let rows: Vec<DerivRow> = data
        .iter()
        .map(|(x, a, _)| DerivRow {
            point: x.clone(),
            alpha: a.clone(),
        })
        .collect();
    let d = HermitianMatrix::from_cmatrix(k.deriv_block_matrix(&rows)?)?;
    let ridge = match ridge {
        Some(r) if r >= 0.0 && r.is_finite() => r,
        Some(r) => return Err(Error::InvalidMatrix(format!("ridge must be >= 0, got {r}"))),
        None => DEFAULT_RIDGE_REL * trace(&d) / d.dim() as f64,
    };
    let y: Vec<C64> = data.iter().flat_map(|(_, _, t)| t.iter().copied()).collect();
    let chol = cholesky_psd(&d, ridge).map_err(|e| match e {
        Error::NotPsd { index, .. } => Error::IllConditioned { pivot: index },
        other => other,
    })?;
    let c = chol.solve(&y)?;
    let fitted = d.as_cmatrix().mul_vec(&c);
    let residual = fitted
        .chunks(l)
        .zip(y.chunks(l))
        .map(|(a, b)| a.iter().zip(b).map(|(u, v)| (u - v).norm_sqr()).sum::<f64>().sqrt())
        .fold(0.0, f64::max);
    let atoms = data
        .iter()
        .zip(c.chunks(l))
        .map(|((x, a, _), ci)| ExpansionAtom {
            alpha: a.clone(),
            x: x.clone(),
            v: ci.to_vec(),
        })
        .collect();
    Ok(Interpolant {
        element: RkhsElement { kernel: k, atoms },
        ridge,
        residual,
    })
}

/// `max_i ‖F(y_i) - target(y_i)‖` over a grid.
pub fn sup_error<K: MatrixKernel + ?Sized>(
    f: &RkhsElement<'_, K>,
    grid: &[Vec<f64>],
    target: impl Fn(&[f64]) -> Vec<C64>,
) -> Result<f64> {
    let mut worst = 0.0f64;
    for y in grid {
        let v = rkhs_eval(f, y)?;
        let t = target(y);
        let e = v.iter().zip(&t).map(|(a, b)| (a - b).norm_sqr()).sum::<f64>().sqrt();
        worst = worst.max(e);
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::OperatorKernel;
    use crate::measures::OperatorMeasure;
    use crate::profiles::RadialProfile;
    use alloc::vec;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    fn gaussian(l: usize, m: usize, omega: f64) -> OperatorKernel {
        OperatorKernel::radial(
            RadialProfile::Gaussian,
            OperatorMeasure::new(l, vec![(omega, HermitianMatrix::identity(l))]).unwrap(),
            m,
        )
        .unwrap()
    }

    #[test]
    fn embed_examples() {
        let k = gaussian(2, 1, 1.0);
        let eta = DerivVectorMeasure::from_atoms(
            VectorAtomMeasure::new(1, 2, vec![(vec![0.0], vec![c(1.0), c(0.0)])]).unwrap(),
        );
        let f = embed(&k, &eta).unwrap();
        let v = rkhs_eval(&f, &[1.0]).unwrap();
        assert!((v[0] - c((-1.0f64).exp())).norm() < 1e-16 && v[1].norm() == 0.0);
        let at_center = rkhs_eval(&f, &[0.0]).unwrap();
        assert_eq!(at_center, vec![c(1.0), c(0.0)]);

        let empty = DerivVectorMeasure::new(0, vec![]).unwrap();
        let f = embed(&k, &empty).unwrap();
        assert!(f.atoms().is_empty());
        assert_eq!(rkhs_eval(&f, &[0.3]).unwrap(), vec![c(0.0), c(0.0)]);

        let doubled = VectorAtomMeasure::new(
            1,
            2,
            vec![(vec![0.5], vec![c(1.0), c(2.0)]), (vec![0.5], vec![c(1.0), c(2.0)])],
        )
        .unwrap();
        assert_eq!(doubled.atoms(), &[(vec![0.5], vec![c(2.0), c(4.0)])]);
    }

    #[test]
    fn deriv_eval_examples() {
        let k = gaussian(1, 1, 1.0);
        let eta = DerivVectorMeasure::from_atoms(VectorAtomMeasure::new(1, 1, vec![(vec![0.0], vec![c(1.0)])]).unwrap());
        let f = embed(&k, &eta).unwrap();
        let one = MultiIndex::unit(1, 0);
        assert!(rkhs_deriv_eval(&f, &one, &[0.0]).unwrap()[0].norm() < 1e-16);
        let v = rkhs_deriv_eval(&f, &one, &[1.0]).unwrap()[0];
        assert!((v - c(-2.0 * (-1.0f64).exp())).norm() < 1e-15);
    }

    #[test]
    fn quadratic_form_examples() {
        let k = gaussian(2, 1, 1.0);
        assert_eq!(quadratic_form(&k, &DerivVectorMeasure::new(0, vec![]).unwrap()).unwrap(), 0.0);
        let v = vec![c(1.0), C64::new(0.0, 2.0)];
        let eta = DerivVectorMeasure::from_atoms(VectorAtomMeasure::new(1, 2, vec![(vec![0.3], v)]).unwrap());
        assert!((quadratic_form(&k, &eta).unwrap() - 5.0).abs() < 1e-14);
    }

    #[test]
    fn interpolation_examples() {
        let k = OperatorKernel::radial(
            RadialProfile::Gaussian,
            OperatorMeasure::new(2, vec![(1.0, HermitianMatrix::diag(&[2.0, 3.0]))]).unwrap(),
            1,
        )
        .unwrap();
        let target = vec![c(0.4), C64::new(-1.0, 0.5)];
        let it = interpolate(&k, &[(vec![0.2], target.clone())], Some(0.0)).unwrap();
        let v = rkhs_eval(&it.element, &[0.2]).unwrap();
        for (a, b) in v.iter().zip(&target) {
            assert!((a - b).norm() < 1e-10);
        }
        let zeros = vec![c(0.0), c(0.0)];
        let it = interpolate(&k, &[(vec![0.0], zeros.clone()), (vec![1.0], zeros)], Some(1e-3)).unwrap();
        assert!(it.element.atoms().iter().all(|a| a.v.iter().all(|z| z.norm() == 0.0)));
        assert!(interpolate(&k, &[], None).unwrap().element.atoms().is_empty());
    }

    #[test]
    fn hermite_single_point() {
        let k = gaussian(1, 1, 1.0);
        let z = MultiIndex::zero(1);
        let one = MultiIndex::unit(1, 0);
        let data = vec![(vec![0.5], z.clone(), vec![c(0.0)]), (vec![0.5], one.clone(), vec![c(1.0)])];
        let it = hermite_interpolate(&k, &data, None).unwrap();
        assert!(rkhs_eval(&it.element, &[0.5]).unwrap()[0].norm() < 1e-8);
        assert!((rkhs_deriv_eval(&it.element, &one, &[0.5]).unwrap()[0] - c(1.0)).norm() < 1e-8);
        let dup = vec![(vec![0.5], z.clone(), vec![c(0.0)]), (vec![0.5], z, vec![c(1.0)])];
        assert!(matches!(hermite_interpolate(&k, &dup, None), Err(Error::DuplicatePoints { .. })));
    }
}
