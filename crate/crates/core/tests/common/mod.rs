#![allow(dead_code)]

use opkernel::{CMatrix, HermitianMatrix, MultiIndex, C64};
use proptest::prelude::*;

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// `B B†` for a random `l x r` complex `B`, so PSD of rank at most `r`.
pub fn psd_matrix(l: usize, r: usize) -> impl Strategy<Value = HermitianMatrix> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), l * r).prop_map(move |e| {
        let b = CMatrix::from_fn(l, r, |i, j| c(e[i * r + j].0, e[i * r + j].1));
        HermitianMatrix::from_cmatrix(b.matmul(&b.adjoint())).unwrap()
    })
}

pub fn hermitian_matrix(l: usize) -> impl Strategy<Value = HermitianMatrix> {
    prop::collection::vec((-2.0f64..2.0, -2.0f64..2.0), l * l)
        .prop_map(move |e| HermitianMatrix::new(l, e.into_iter().map(|(a, b)| c(a, b)).collect()).unwrap())
}

pub fn complex_vec(l: usize) -> impl Strategy<Value = Vec<C64>> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), l).prop_map(|v| v.into_iter().map(|(a, b)| c(a, b)).collect())
}

pub fn points(n: usize, m: usize, b: f64) -> impl Strategy<Value = Vec<Vec<f64>>> {
    prop::collection::vec(prop::collection::vec(-b..b, m), n)
}

pub fn well_separated(pts: &[Vec<f64>], sep: f64) -> bool {
    pts.iter().enumerate().all(|(i, p)| {
        pts[..i]
            .iter()
            .all(|q| p.iter().zip(q).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt() >= sep)
    })
}

/// Nested central difference of `f` over `2m` coordinates, multi-index `gamma`.
fn nested(f: &dyn Fn(&[f64]) -> CMatrix, z: &mut Vec<f64>, gamma: &mut Vec<u32>, h: f64) -> CMatrix {
    let Some(i) = gamma.iter().position(|&g| g > 0) else {
        return f(z);
    };
    gamma[i] -= 1;
    let orig = z[i];
    z[i] = orig + h;
    let p = nested(f, z, gamma, h);
    z[i] = orig - h;
    let q = nested(f, z, gamma, h);
    z[i] = orig;
    gamma[i] += 1;
    p.sub(&q).scaled(c(0.5 / h, 0.0))
}

/// Richardson-extrapolated central differences (three levels, error `O(h^6)`)
/// of `(x, y) ↦ K(x, y)` for `∂_1^α ∂_2^β`.
pub fn richardson_deriv(
    k: &dyn Fn(&[f64], &[f64]) -> CMatrix,
    alpha: &MultiIndex,
    beta: &MultiIndex,
    x: &[f64],
    y: &[f64],
    h: f64,
) -> CMatrix {
    let m = x.len();
    let f = |z: &[f64]| k(&z[..m], &z[m..]);
    let mut z: Vec<f64> = x.iter().chain(y).copied().collect();
    let mut gamma: Vec<u32> = alpha.components().iter().chain(beta.components()).copied().collect();
    let d1 = nested(&f, &mut z, &mut gamma, h);
    let d2 = nested(&f, &mut z, &mut gamma, h / 2.0);
    let d4 = nested(&f, &mut z, &mut gamma, h / 4.0);
    let r1 = d2.scaled(c(4.0 / 3.0, 0.0)).sub(&d1.scaled(c(1.0 / 3.0, 0.0)));
    let r2 = d4.scaled(c(4.0 / 3.0, 0.0)).sub(&d2.scaled(c(1.0 / 3.0, 0.0)));
    r2.scaled(c(16.0 / 15.0, 0.0)).sub(&r1.scaled(c(1.0 / 15.0, 0.0)))
}

/// All pairs `(α, β)` in `m` dimensions with `|α| + |β| ≤ order`.
pub fn index_pairs(m: usize, order: usize) -> Vec<(MultiIndex, MultiIndex)> {
    let all = MultiIndex::graded_lex(m, order);
    let mut out = Vec::new();
    for a in &all {
        for b in &all {
            if a.order() + b.order() <= order {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}
