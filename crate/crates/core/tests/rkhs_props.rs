mod common;

use common::{c, complex_vec, points, psd_matrix, well_separated};
use opkernel::rkhs::{
    embed, hermite_interpolate, interpolate, quadratic_form, quadratic_form_routes, rkhs_deriv_eval, rkhs_eval,
    DerivVectorMeasure, VectorAtomMeasure,
};
use opkernel::{HermitianMatrix, MatrixKernel, MultiIndex, OperatorKernel, OperatorMeasure, RadialProfile, C64};
use proptest::prelude::*;

fn kernel(l: usize, m: usize, atoms: Vec<(f64, HermitianMatrix)>) -> OperatorKernel {
    OperatorKernel::radial(RadialProfile::Gaussian, OperatorMeasure::new(l, atoms).unwrap(), m).unwrap()
}

fn vector_measure(l: usize, m: usize, q: usize) -> impl Strategy<Value = DerivVectorMeasure> {
    let component = (0..MultiIndex::graded_lex(m, q).len(), prop::collection::vec((prop::collection::vec(-1.5f64..1.5, m), complex_vec(l)), 1..=3));
    prop::collection::vec(component, 1..=3).prop_map(move |comps| {
        let idx = MultiIndex::graded_lex(m, q);
        let comps = comps
            .into_iter()
            .map(|(i, atoms)| (idx[i].clone(), VectorAtomMeasure::new(m, l, atoms).unwrap()))
            .collect();
        DerivVectorMeasure::new(q, comps).unwrap()
    })
}

fn case() -> impl Strategy<Value = (OperatorKernel, DerivVectorMeasure)> {
    (1usize..=2, 1usize..=2, 0usize..=2).prop_flat_map(|(l, m, q)| {
        (prop::collection::vec((0.2f64..2.0, psd_matrix(l, 2)), 1..=3), vector_measure(l, m, q))
            .prop_map(move |(a, eta)| (kernel(l, m, a), eta))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn routes_agree((k, eta) in case()) {
        let r = quadratic_form_routes(&k, &eta).unwrap();
        prop_assert!(r.discrepancy() <= 1e-12 * r.scale, "gap {:e} at scale {:e}", r.discrepancy(), r.scale);
        prop_assert!(r.block_gram >= -1e-10 * r.scale);
    }

    #[test]
    fn form_is_quadratic_in_the_measure((k, eta) in case(), re in -2.0f64..2.0, im in -2.0f64..2.0) {
        let s = C64::new(re, im);
        let q = quadratic_form(&k, &eta).unwrap();
        let qs = quadratic_form(&k, &eta.scaled(s)).unwrap();
        prop_assert!((qs - s.norm_sqr() * q).abs() <= 1e-10 * (1.0 + s.norm_sqr() * q.abs()));
    }
}

proptest! {
    #[test]
    fn single_atom_form_is_the_diagonal_value(
        g in psd_matrix(2, 2),
        x in prop::collection::vec(-2.0f64..2.0, 2),
        v in complex_vec(2),
    ) {
        let k = kernel(2, 2, vec![(1.0, g)]);
        let eta = DerivVectorMeasure::from_atoms(VectorAtomMeasure::new(2, 2, vec![(x.clone(), v.clone())]).unwrap());
        let expect = k.eval(&x, &x).unwrap().sesquilinear(&v, &v).re;
        prop_assert!((quadratic_form(&k, &eta).unwrap() - expect).abs() < 1e-13);
    }

    #[test]
    fn reproducing_property(
        g in psd_matrix(2, 2),
        pts in points(3, 1, 2.0),
        v in complex_vec(2),
        u in complex_vec(2),
    ) {
        // ⟨K_η(y), u⟩ = Σ_i ⟨K(x_i, y) u, v_i⟩
        let k = kernel(2, 1, vec![(0.8, g)]);
        let atoms = vec![(pts[0].clone(), v.clone()), (pts[1].clone(), v.iter().map(|z| z * 0.5).collect())];
        let eta = DerivVectorMeasure::from_atoms(VectorAtomMeasure::new(1, 2, atoms.clone()).unwrap());
        let f = embed(&k, &eta).unwrap();
        let y = &pts[2];
        let lhs: C64 = rkhs_eval(&f, y).unwrap().iter().zip(&u).map(|(a, b)| b.conj() * a).sum();
        let mut rhs = c(0.0, 0.0);
        for (x, vi) in &atoms {
            let ku = k.eval(x, y).unwrap().mul_vec(&u);
            rhs += ku.iter().zip(vi).map(|(a, b)| b.conj() * a).sum::<C64>().conj();
        }
        prop_assert!((lhs - rhs).norm() < 1e-13);
    }

    #[test]
    fn interpolant_reproduces_data(
        pts in points(5, 2, 2.0),
        targets in prop::collection::vec(complex_vec(2), 5),
    ) {
        prop_assume!(well_separated(&pts, 0.3));
        let k = kernel(2, 2, vec![(1.0, HermitianMatrix::identity(2)), (3.0, HermitianMatrix::diag(&[1.0, 0.5]))]);
        let data: Vec<_> = pts.iter().cloned().zip(targets.iter().cloned()).collect();
        let it = interpolate(&k, &data, Some(0.0)).unwrap();
        for (x, t) in &data {
            let v = rkhs_eval(&it.element, x).unwrap();
            for (a, b) in v.iter().zip(t) {
                prop_assert!((a - b).norm() < 1e-7);
            }
        }
    }
}

#[test]
fn hermite_targets_on_two_points() {
    let k = kernel(1, 1, vec![(1.0, HermitianMatrix::identity(1))]);
    let z = MultiIndex::zero(1);
    let d = MultiIndex::unit(1, 0);
    let data = vec![
        (vec![-0.5], z.clone(), vec![c(1.0, 0.0)]),
        (vec![-0.5], d.clone(), vec![c(0.0, 2.0)]),
        (vec![0.7], z.clone(), vec![c(-1.0, 0.0)]),
        (vec![0.7], d.clone(), vec![c(0.5, 0.0)]),
    ];
    let it = hermite_interpolate(&k, &data, Some(0.0)).unwrap();
    for (x, a, t) in &data {
        let v = rkhs_deriv_eval(&it.element, a, x).unwrap();
        assert!((v[0] - t[0]).norm() < 1e-9, "{a} at {x:?}");
    }
}
