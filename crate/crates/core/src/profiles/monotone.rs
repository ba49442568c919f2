//! Finite-difference certificates for complete monotonicity and `ℓ`-times
//! complete monotonicity, and the Williamson truncated-power construction.

use alloc::format;
use alloc::vec::Vec;

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::{Error, Result};

/// Default forward-difference step.
pub const DEFAULT_STEP: f64 = 1e-2;
const CM_REL_TOL: f64 = 1e-9;
const ELL_CM_REL_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub struct CmViolation {
    /// Difference order (for `ℓ`-CM checks, the failing condition's order).
    pub order: usize,
    pub t: f64,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CmReport {
    pub passed: bool,
    pub violation: Option<CmViolation>,
}

fn validate_grid(grid: &[f64], h: f64, room: usize) -> Result<()> {
    if !(h > 0.0) || !h.is_finite() {
        return Err(Error::InvalidGrid(format!("step must be positive, got {h}")));
    }
    let Some(&t_min) = grid.first() else {
        return Err(Error::InvalidGrid("empty grid".into()));
    };
    if grid.iter().any(|t| !t.is_finite()) {
        return Err(Error::InvalidGrid("non-finite grid point".into()));
    }
    if grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidGrid("grid must be strictly increasing".into()));
    }
    if t_min <= room as f64 * h {
        return Err(Error::InvalidGrid(format!(
            "smallest grid point {t_min} must exceed {room}·h = {}",
            room as f64 * h
        )));
    }
    Ok(())
}

/// `Δ_h^n g(t) = Σ_k (-1)^{n-k} C(n,k) g(t + k h)`.
pub fn forward_difference(g: &dyn Fn(f64) -> f64, t: f64, n: usize, h: f64) -> f64 {
    let mut binom = 1.0;
    let mut acc = 0.0;
    for k in 0..=n {
        if k > 0 {
            binom = binom * (n - k + 1) as f64 / k as f64;
        }
        let sign = if (n - k).is_multiple_of(2) { 1.0 } else { -1.0 };
        acc += sign * binom * g(t + k as f64 * h);
    }
    acc
}

/// Checks `(-1)^n Δ_h^n g(t) ≥ -1e-9·|g(t_min)|` for `n ≤ nmax` over the grid.
/// Returns the first violation in (order, grid) order. Requires
/// `t_min > nmax·h`.
pub fn completely_monotone_check(
    g: &dyn Fn(f64) -> f64,
    grid: &[f64],
    nmax: usize,
    h: f64,
) -> Result<CmReport> {
    validate_grid(grid, h, nmax)?;
    let tol = CM_REL_TOL * g(grid[0]).abs();
    for n in 0..=nmax {
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        for &t in grid {
            let v = sign * forward_difference(g, t, n, h);
            if !(v >= -tol) {
                return Ok(CmReport {
                    passed: false,
                    violation: Some(CmViolation { order: n, t, value: v }),
                });
            }
        }
    }
    Ok(CmReport {
        passed: true,
        violation: None,
    })
}

/// Which of the `ℓ`-times completely monotone conditions failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EllCmCondition {
    Nonnegative,
    TailBounded,
    Convexity,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EllCmReport {
    pub passed: bool,
    pub nonnegative: bool,
    /// Stand-in for the existence of `lim_{t→∞} f(t)`: `f` is finite on the grid
    /// and bounded on its last quarter by `f(t_min)`. This is a heuristic.
    pub tail_bounded: bool,
    pub convex: bool,
    pub limit_check_is_heuristic: bool,
    pub first_failure: Option<(EllCmCondition, f64)>,
}

/// Numerical `ℓ`-times complete monotonicity: `f ≥ 0`, tail boundedness, and
/// convexity of `(-1)^{ℓ-2} f^{(ℓ-2)}` through `(-1)^{ℓ-2} Δ_h^ℓ f ≥ 0`, all at
/// tolerance `1e-8·|f(t_min)|`.
pub fn ell_cm_check(f: &dyn Fn(f64) -> f64, ell: usize, grid: &[f64], h: f64) -> Result<EllCmReport> {
    if ell < 2 {
        return Err(Error::InvalidGrid(format!("ell must be >= 2, got {ell}")));
    }
    validate_grid(grid, h, ell)?;
    let f0 = f(grid[0]);
    let tol = ELL_CM_REL_TOL * f0.abs();
    let mut first_failure = None;

    let mut nonnegative = true;
    for &t in grid {
        if !(f(t) >= -tol) {
            nonnegative = false;
            first_failure.get_or_insert((EllCmCondition::Nonnegative, t));
            break;
        }
    }

    let tail_start = grid.len() - grid.len().div_ceil(4);
    let mut tail_bounded = grid.iter().all(|&t| f(t).is_finite());
    if tail_bounded {
        for &t in &grid[tail_start..] {
            if f(t).abs() > f0.abs() + tol {
                tail_bounded = false;
                first_failure.get_or_insert((EllCmCondition::TailBounded, t));
                break;
            }
        }
    } else {
        first_failure.get_or_insert((EllCmCondition::TailBounded, grid[0]));
    }

    let sign = if ell.is_multiple_of(2) { 1.0 } else { -1.0 };
    let mut convex = true;
    for &t in grid {
        if !(sign * forward_difference(f, t, ell, h) >= -tol) {
            convex = false;
            first_failure.get_or_insert((EllCmCondition::Convexity, t));
            break;
        }
    }

    Ok(EllCmReport {
        passed: nonnegative && tail_bounded && convex,
        nonnegative,
        tail_bounded,
        convex,
        limit_check_is_heuristic: true,
        first_failure,
    })
}

/// `f(t) = Σ_j λ_j (1 - r_j t)_+^{ℓ-1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct WilliamsonFunction {
    atoms: Vec<(f64, f64)>,
    ell: usize,
}

impl WilliamsonFunction {
    pub fn eval(&self, t: f64) -> f64 {
        self.atoms
            .iter()
            .map(|&(r, lambda)| lambda * (1.0 - r * t).max(0.0).powi(self.ell as i32 - 1))
            .sum()
    }

    pub fn atoms(&self) -> &[(f64, f64)] {
        &self.atoms
    }

    pub fn ell(&self) -> usize {
        self.ell
    }
}

/// Builds the Williamson transform of the atomic measure `Σ λ_j δ_{r_j}`.
pub fn williamson_construct(atoms: &[(f64, f64)], ell: usize) -> Result<WilliamsonFunction> {
    if ell < 2 {
        return Err(Error::InvalidMeasure(format!("ell must be >= 2, got {ell}")));
    }
    for &(r, lambda) in atoms {
        if !(r >= 0.0) || !r.is_finite() {
            return Err(Error::InvalidMeasure(format!("support point must be >= 0, got {r}")));
        }
        if !(lambda >= 0.0) || !lambda.is_finite() {
            return Err(Error::InvalidMeasure(format!("weight must be >= 0, got {lambda}")));
        }
    }
    Ok(WilliamsonFunction {
        atoms: atoms.to_vec(),
        ell,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(a: f64, b: f64, n: usize) -> Vec<f64> {
        (0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect()
    }

    #[test]
    fn exp_and_reciprocal_are_cm() {
        let g = grid(0.5, 5.0, 46);
        assert!(completely_monotone_check(&|t: f64| (-t).exp(), &g, 6, DEFAULT_STEP).unwrap().passed);
        assert!(completely_monotone_check(&|t| 1.0 / (1.0 + t), &g, 6, DEFAULT_STEP).unwrap().passed);
    }

    #[test]
    fn two_plus_sin_fails_with_witness() {
        let g = grid(0.5, 10.0, 96);
        let r = completely_monotone_check(&|t: f64| 2.0 + t.sin(), &g, 2, DEFAULT_STEP).unwrap();
        assert!(!r.passed);
        let v = r.violation.unwrap();
        // First order: -Δ(2+sin) = -h cos t < 0 already at t = 0.5.
        assert_eq!(v.order, 1);
        assert_eq!(v.t, 0.5);
    }

    #[test]
    fn grid_precondition() {
        let g = grid(0.01, 1.0, 10);
        assert!(matches!(
            completely_monotone_check(&|t: f64| (-t).exp(), &g, 6, DEFAULT_STEP),
            Err(Error::InvalidGrid(_))
        ));
        assert!(matches!(
            completely_monotone_check(&|t: f64| t, &[1.0, 0.9], 1, 0.01),
            Err(Error::InvalidGrid(_))
        ));
    }

    #[test]
    fn williamson_examples() {
        let f = williamson_construct(&[(1.0, 1.0)], 2).unwrap();
        assert_eq!(f.eval(0.25), 0.75);
        assert_eq!(f.eval(3.0), 0.0);
        let empty = williamson_construct(&[], 3).unwrap();
        assert_eq!(empty.eval(0.1), 0.0);
        let f = williamson_construct(&[(1.0, 1.0), (2.0, 1.0)], 3).unwrap();
        assert!((f.eval(0.25) - 0.8125).abs() < 1e-15);
        assert_eq!(f.eval(0.0), 2.0);
        assert!(matches!(williamson_construct(&[(1.0, -1.0)], 3), Err(Error::InvalidMeasure(_))));
    }

    #[test]
    fn ell_cm_examples() {
        let g = grid(0.1, 4.0, 79);
        let f = williamson_construct(&[(1.0, 1.0)], 3).unwrap();
        assert!(ell_cm_check(&|t| f.eval(t), 3, &g, DEFAULT_STEP).unwrap().passed);
        for ell in 2..=6 {
            assert!(ell_cm_check(&|t: f64| (-t).exp(), ell, &g, DEFAULT_STEP).unwrap().passed);
        }
        let r = ell_cm_check(&|_| -1.0, 3, &g, DEFAULT_STEP).unwrap();
        assert!(!r.passed && !r.nonnegative);
        assert_eq!(r.first_failure.unwrap().0, EllCmCondition::Nonnegative);
    }
}
