//! `Ω_m`, the average of the plane wave `e^{-i x·ξ}` over the unit sphere `S^{m-1}`,
//! as a function of `t = ‖x‖`.
//!
//! `Ω_m(t) = Σ_k c_k(m) (-t²/4)^k` with `c_0 = 1` and term ratio
//! `(-t²/4) / ((k+1)(k+m/2))`. The series is summed directly for small `t`.
//! For larger `t` the terms grow before they shrink and cancellation eats the
//! precision, so there the Poisson integral
//! `Ω_m(t) = c_m ∫_{-1}^{1} cos(tu) (1-u²)^{(m-3)/2} du`,
//! `c_m = Γ(m/2) / (√π Γ((m-1)/2))`, is evaluated with a quadrature that is exact
//! up to the smoothness of `cos(tu)`.

use core::f64::consts::PI;

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::quadrature::gauss_legendre;

const SERIES_MAX_T: f64 = 8.0;
const SERIES_REL_TOL: f64 = 1e-17;
const SERIES_MAX_TERMS: usize = 500;

/// `Ω_m(t)` for `m ≥ 1`. Even in `t`.
pub fn omega_eval(m: u32, t: f64) -> f64 {
    assert!(m >= 1, "omega_eval requires m >= 1");
    let t = t.abs();
    if m == 1 && t > SERIES_MAX_T {
        return t.cos();
    }
    if t <= SERIES_MAX_T {
        omega_series(m, t)
    } else {
        omega_poisson(m, t)
    }
}

pub(crate) fn omega_series(m: u32, t: f64) -> f64 {
    let x = -t * t / 4.0;
    let half_m = f64::from(m) / 2.0;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut magnitude = 1.0;
    for k in 0..SERIES_MAX_TERMS {
        let kf = k as f64;
        term *= x / ((kf + 1.0) * (kf + half_m));
        sum += term;
        magnitude += term.abs();
        if term.abs() < SERIES_REL_TOL * magnitude {
            break;
        }
    }
    sum
}

fn poisson_constant(m: u32) -> f64 {
    let a = f64::from(m) / 2.0;
    (libm::lgamma(a) - libm::lgamma(a - 0.5)).exp() / PI.sqrt()
}

fn omega_poisson(m: u32, t: f64) -> f64 {
    let n = (t.ceil() as usize) + (m as usize) + 24;
    let c = poisson_constant(m);
    if m.is_multiple_of(2) {
        // u = cos θ turns the (1-u²)^{-1/2} factor into dθ; midpoint rule in θ is
        // Gauss–Chebyshev and exact for the trigonometric polynomial part.
        let p = (m - 2) / 2;
        let h = PI / n as f64;
        let s: f64 = (0..n)
            .map(|k| {
                let th = (k as f64 + 0.5) * h;
                let (sn, cs) = th.sin_cos();
                (t * cs).cos() * sn.powi(2 * p as i32)
            })
            .sum();
        c * h * s
    } else {
        let p = (m - 3) / 2;
        let (nodes, weights) = gauss_legendre(n);
        let s: f64 = nodes
            .iter()
            .zip(&weights)
            .map(|(&u, &w)| w * (t * u).cos() * (1.0 - u * u).powi(p as i32))
            .sum();
        c * s
    }
}

/// `g̃^{(k)}(s)`, `k = 0..=kmax`, for `g̃(s) = Ω_m(ω√s)`.
///
/// Differentiating the series termwise gives
/// `g̃^{(k)}(s) = (-ω²/4)^k / Π_{i<k}(m/2+i) · Ω_{m+2k}(ω√s)`.
pub(crate) fn omega_sjet(m: u32, omega: f64, s: f64, kmax: usize) -> alloc::vec::Vec<f64> {
    let t = omega * s.max(0.0).sqrt();
    let half_m = f64::from(m) / 2.0;
    let step = -omega * omega / 4.0;
    let mut prefactor = 1.0;
    let mut out = alloc::vec::Vec::with_capacity(kmax + 1);
    for k in 0..=kmax {
        if k > 0 {
            prefactor *= step / (half_m + (k - 1) as f64);
        }
        out.push(prefactor * omega_eval(m + 2 * k as u32, t));
    }
    out
}
