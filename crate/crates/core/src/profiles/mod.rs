//! Scalar base families `p_ω` and their derivative machinery.
//!
//! Parameter conventions:
//!
//! * Gaussian atoms scale the squared distance: `p_ω(x, y) = exp(-ω‖x-y‖²)`.
//! * Askey atoms scale the distance: `p_ω(x, y) = (1 - ω‖x-y‖)_+^{ℓ-1}`.
//! * `Ω_m` atoms scale the distance: `p_ω(x, y) = Ω_m(ω‖x-y‖)`.
//! * Plane waves are indexed by a frequency vector: `p_ξ(x, y) = e^{-i(x-y)·ξ}`.
//!
//! Radial families are written as `f(d) = g̃(‖d‖²)` and differentiated
//! symbolically through [`RadialJet`]. Askey profiles are not smooth in `‖d‖²` at
//! the origin and have no jets.

mod jet;
mod monotone;
mod multi_index;
mod omega;

use alloc::format;
use alloc::vec::Vec;

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::{Error, Result, C64};

pub use jet::{Polynomial, RadialJet};
pub use monotone::{
    completely_monotone_check, ell_cm_check, forward_difference, williamson_construct, CmReport,
    CmViolation, EllCmCondition, EllCmReport, WilliamsonFunction, DEFAULT_STEP,
};
pub use multi_index::MultiIndex;
pub use omega::omega_eval;

/// Radial base family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadialProfile {
    Gaussian,
    /// `(1 - ωt)_+^{smoothness-1}`, `smoothness ≥ 2`.
    Askey { smoothness: u32 },
    /// `Ω_{source_dim}(ωt)`, `source_dim ≥ 1`.
    Omega { source_dim: u32 },
}

impl RadialProfile {
    pub fn validate(&self) -> Result<()> {
        match *self {
            RadialProfile::Askey { smoothness } if smoothness < 2 => Err(Error::InvalidMeasure(
                format!("askey smoothness must be >= 2, got {smoothness}"),
            )),
            RadialProfile::Omega { source_dim } if source_dim < 1 => Err(Error::InvalidMeasure(
                "omega source dimension must be >= 1".into(),
            )),
            _ => Ok(()),
        }
    }

    pub fn has_jets(&self) -> bool {
        !matches!(self, RadialProfile::Askey { .. })
    }

    /// `p_ω` at distance `t`.
    pub fn value(&self, omega: f64, t: f64) -> f64 {
        profile_value(*self, omega, t)
    }
}

pub fn profile_value(p: RadialProfile, omega: f64, t: f64) -> f64 {
    match p {
        RadialProfile::Gaussian => (-omega * t * t).exp(),
        RadialProfile::Askey { smoothness } => {
            (1.0 - omega * t).max(0.0).powi(smoothness as i32 - 1)
        }
        RadialProfile::Omega { source_dim } => omega_eval(source_dim, omega * t),
    }
}

/// `g̃^{(k)}(s)` for `k = 0..=kmax`, where the profile is `g̃(‖d‖²)`.
pub fn sjet_derivatives(p: RadialProfile, omega: f64, s: f64, kmax: usize) -> Result<Vec<f64>> {
    match p {
        RadialProfile::Gaussian => {
            let e = (-omega * s).exp();
            let mut out = Vec::with_capacity(kmax + 1);
            let mut pow = 1.0;
            for k in 0..=kmax {
                if k > 0 {
                    pow *= -omega;
                }
                out.push(pow * e);
            }
            Ok(out)
        }
        RadialProfile::Omega { source_dim } => Ok(omega::omega_sjet(source_dim, omega, s, kmax)),
        RadialProfile::Askey { .. } => Err(Error::UnsupportedJet(
            "askey profiles are not smooth in the squared distance".into(),
        )),
    }
}

/// Frequency vector of a plane wave `e^{-i(x-y)·ξ}`.
#[derive(Debug, Clone, PartialEq)]
pub struct PlaneWaveParam {
    xi: Vec<f64>,
}

impl PlaneWaveParam {
    pub fn new(xi: Vec<f64>) -> Result<Self> {
        if xi.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidPoint("non-finite frequency".into()));
        }
        Ok(Self { xi })
    }

    pub fn xi(&self) -> &[f64] {
        &self.xi
    }
}

/// `∂_1^α ∂_2^β e^{-i(x-y)·ξ} = (-i)^{|α|} i^{|β|} ξ^{α+β} e^{-i(x-y)·ξ}`.
pub fn plane_wave_deriv(
    xi: &[f64],
    alpha: &MultiIndex,
    beta: &MultiIndex,
    x: &[f64],
    y: &[f64],
) -> Result<C64> {
    let m = xi.len();
    if alpha.dim() != m || beta.dim() != m || x.len() != m || y.len() != m {
        return Err(Error::InvalidPoint(format!("expected dimension {m}")));
    }
    let phase: f64 = x.iter().zip(y).zip(xi).map(|((a, b), w)| (a - b) * w).sum();
    let mut mono = 1.0;
    for i in 0..m {
        let e = alpha.components()[i] + beta.components()[i];
        mono *= xi[i].powi(e as i32);
    }
    let unit = i_power(3 * alpha.order() + beta.order());
    Ok(unit * mono * C64::new(0.0, -phase).exp())
}

/// `i^k`.
fn i_power(k: usize) -> C64 {
    match k % 4 {
        0 => C64::new(1.0, 0.0),
        1 => C64::new(0.0, 1.0),
        2 => C64::new(-1.0, 0.0),
        _ => C64::new(0.0, -1.0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profile_examples() {
        assert_eq!(profile_value(RadialProfile::Gaussian, 1.0, 0.0), 1.0);
        let askey = RadialProfile::Askey { smoothness: 3 };
        assert_eq!(profile_value(askey, 1.0, 2.0), 0.0);
        assert_eq!(profile_value(askey, 1.0, 0.5), 0.25);
        let om = RadialProfile::Omega { source_dim: 1 };
        assert!((profile_value(om, 2.0, 0.5) - 1.0f64.cos()).abs() < 1e-15);
    }

    #[test]
    fn sjet_examples() {
        assert_eq!(sjet_derivatives(RadialProfile::Gaussian, 2.0, 0.0, 2).unwrap(), [1.0, -2.0, 4.0]);
        assert_eq!(sjet_derivatives(RadialProfile::Gaussian, 0.0, 5.0, 3).unwrap(), [1.0, 0.0, 0.0, 0.0]);
        let j = sjet_derivatives(RadialProfile::Omega { source_dim: 3 }, 1.0, 0.0, 1).unwrap();
        assert!((j[1] + 1.0 / 6.0).abs() < 1e-16);
        assert!(matches!(
            sjet_derivatives(RadialProfile::Askey { smoothness: 3 }, 1.0, 0.0, 1),
            Err(Error::UnsupportedJet(_))
        ));
    }

    #[test]
    fn plane_wave_examples() {
        let z = MultiIndex::zero(1);
        let one = MultiIndex::unit(1, 0);
        let xi = [1.5];
        let v = plane_wave_deriv(&xi, &z, &z, &[0.3], &[-0.2]).unwrap();
        assert!((v - C64::new(0.0, -0.75).exp()).norm() < 1e-15);
        let v = plane_wave_deriv(&xi, &one, &z, &[0.3], &[0.3]).unwrap();
        assert!((v - C64::new(0.0, -1.5)).norm() < 1e-15);
        let v = plane_wave_deriv(&xi, &one, &one, &[0.3], &[0.3]).unwrap();
        assert!((v - C64::new(2.25, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn askey_continuous_at_kink() {
        for ell in 3..7 {
            let p = RadialProfile::Askey { smoothness: ell };
            let a = p.value(2.0, 0.5 - 1e-12);
            let b = p.value(2.0, 0.5 + 1e-12);
            assert!((a - b).abs() <= 1e-9);
        }
    }
}
