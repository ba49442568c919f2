mod common;

use opkernel::profiles::omega_eval;
use proptest::prelude::*;

fn lgamma(x: f64) -> f64 {
    libm::lgamma(x)
}

/// Right-hand side of the dimension-lowering recurrence
/// `Ω_m(t) = c_m ∫_0^1 Ω_{m-1}(rt) (1-r²)^{-1/2} r^{m-2} dr`,
/// `c_m = 2Γ(m/2) / (Γ(1/2)Γ((m-1)/2))`.
///
/// With `r = sin θ` the integral is half the integral of
/// `Ω_{m-1}(t sin θ) sin^{m-2} θ` over `[0, π]`, which Chebyshev–Gauss
/// quadrature of the first kind evaluates at equispaced `θ` nodes. For odd `m`
/// the periodic extension has kinks at `0, π`, so two Richardson steps in `N`
/// remove the `N^{-2}` and `N^{-4}` error terms.
fn recurrence_rhs(m: u32, t: f64, n: usize) -> f64 {
    let cm = 2.0 * (lgamma(f64::from(m) / 2.0) - lgamma(0.5) - lgamma(f64::from(m - 1) / 2.0)).exp();
    let q = |n: usize| -> f64 {
        let s: f64 = (1..=n)
            .map(|k| {
                let theta = (2 * k - 1) as f64 * std::f64::consts::PI / (2 * n) as f64;
                omega_eval(m - 1, t * theta.sin()) * theta.sin().powi(m as i32 - 2)
            })
            .sum();
        0.5 * std::f64::consts::PI / n as f64 * s
    };
    let (q1, q2, q4) = (q(n), q(2 * n), q(4 * n));
    let r1 = (4.0 * q2 - q1) / 3.0;
    let r2 = (4.0 * q4 - q2) / 3.0;
    cm * (16.0 * r2 - r1) / 15.0
}

#[test]
fn recurrence_holds_for_low_dimensions() {
    for m in 2..=4 {
        let mut worst = 0.0f64;
        for i in 0..=100 {
            let t = 10.0 * f64::from(i) / 100.0;
            worst = worst.max((omega_eval(m, t) - recurrence_rhs(m, t, 400)).abs());
        }
        assert!(worst <= 1e-8, "m = {m}: recurrence residual {worst:e}");
    }
}

#[test]
fn closed_forms_on_long_ranges() {
    let mut e1 = 0.0f64;
    let mut e3 = 0.0f64;
    for i in 0..=3000 {
        let t = 30.0 * f64::from(i) / 3000.0;
        e1 = e1.max((omega_eval(1, t) - t.cos()).abs());
        let sinc = if t == 0.0 { 1.0 } else { t.sin() / t };
        e3 = e3.max((omega_eval(3, t) - sinc).abs());
    }
    assert!(e1 <= 1e-10, "cos error {e1:e}");
    assert!(e3 <= 1e-10, "sinc error {e3:e}");
}

#[test]
fn two_dimensional_profile_is_bessel_j0() {
    for i in 0..=60 {
        let t = 0.5 * f64::from(i);
        assert!((omega_eval(2, t) - libm::j0(t)).abs() < 1e-10, "t = {t}");
    }
}

proptest! {
    #[test]
    fn bounded_by_one(m in 1u32..=6, t in 0.0f64..40.0) {
        prop_assert!(omega_eval(m, t).abs() <= 1.0 + 1e-12);
    }

    #[test]
    fn even_in_t(m in 1u32..=6, t in 0.0f64..20.0) {
        prop_assert!((omega_eval(m, t) - omega_eval(m, -t)).abs() <= 1e-14);
    }
}
