use polylandau::sampling::spiral_points;
use polylandau::{AnalyticFunction, Complex64, PolyAnalyticFunction};
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn point() -> impl Strategy<Value = Complex64> {
    (0.0..0.8f64, 0.0..std::f64::consts::TAU).prop_map(|(r, t)| Complex64::from_polar(r, t))
}

fn analytic() -> impl Strategy<Value = AnalyticFunction> {
    prop_oneof![
        (1.0..6.0f64).prop_map(|m| AnalyticFunction::classical_landau(m).unwrap()),
        (1.01..6.0f64, 2u32..6).prop_map(|(m, n)| AnalyticFunction::blaschke_type(m, n).unwrap()),
        (1.01..6.0f64).prop_map(|l| AnalyticFunction::log_distortion(l).unwrap()),
        (-2.0..2.0f64, -2.0..2.0f64).prop_map(|(a, b)| AnalyticFunction::scaled_identity(c(a, b))),
        prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64), 1..8).prop_map(|v| {
            AnalyticFunction::power_series(v.into_iter().map(|(a, b)| c(a, b)).collect()).unwrap()
        }),
    ]
}

fn rel_close(a: Complex64, b: Complex64, rel: f64) -> bool {
    (a - b).norm() <= rel * a.norm().max(b.norm()).max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 100, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn deriv_matches_central_difference(f in analytic(), z in point()) {
        let h = 1e-6;
        let fd = (f.eval(z + h).unwrap() - f.eval(z - h).unwrap()) / (2.0 * h);
        prop_assert!(rel_close(f.deriv(z).unwrap(), fd, 1e-6));
    }

    #[test]
    fn wirtinger_matches_coordinate_differences(
        comps in prop::collection::vec(analytic(), 1..4),
        z in point(),
    ) {
        let f = PolyAnalyticFunction::new(comps).unwrap();
        let h = 1e-6;
        let fx = (f.eval(z + h).unwrap() - f.eval(z - h).unwrap()) / (2.0 * h);
        let ih = c(0.0, h);
        let fy = (f.eval(z + ih).unwrap() - f.eval(z - ih).unwrap()) / (2.0 * h);
        let i = c(0.0, 1.0);
        let w = f.wirtinger(z).unwrap();
        prop_assert!(rel_close(w.dz, 0.5 * (fx - i * fy), 1e-6));
        prop_assert!(rel_close(w.dzbar, 0.5 * (fx + i * fy), 1e-6));
    }

    #[test]
    fn zero_tail_reduces_to_head(f in analytic(), extra in 1usize..4, z in point()) {
        let mut comps = vec![f.clone()];
        comps.extend(std::iter::repeat_n(AnalyticFunction::zero(), extra));
        let g = PolyAnalyticFunction::new(comps).unwrap();
        prop_assert_eq!(g.eval(z).unwrap(), f.eval(z).unwrap());
    }

    #[test]
    fn taylor_coefficients_do_not_depend_on_contour(f in analytic()) {
        let a = f.taylor_coefficients(10, 0.3).unwrap();
        for rho in [0.5, 0.7] {
            let b = f.taylor_coefficients(10, rho).unwrap();
            for (x, y) in a.iter().zip(&b) {
                prop_assert!((x - y).norm() < 1e-8, "{x} vs {y} at {rho}");
            }
        }
    }
}

#[test]
fn blaschke_type_is_bounded_and_sharp() {
    let pts = spiral_points(2000, 0.999);
    for m in [1.5, 2.0, 4.0] {
        for n in [2u32, 3, 5] {
            let f = AnalyticFunction::blaschke_type(m, n).unwrap();
            assert!(pts.iter().all(|z| f.eval(*z).unwrap().norm() <= m + 1e-12));
            let a = f.taylor_coefficients(n as usize, 0.5).unwrap();
            assert!((a[1].norm() - 1.0).abs() < 1e-8);
            assert!((a[n as usize].norm() - (m - 1.0 / m)).abs() < 1e-8);
        }
    }
}

#[test]
fn log_distortion_derivative_bound() {
    let pts = spiral_points(2000, 0.999);
    for l in [1.1, 1.5, 2.0, 5.0] {
        let f = AnalyticFunction::log_distortion(l).unwrap();
        assert_eq!(f.deriv(c(0.0, 0.0)).unwrap(), c(1.0, 0.0));
        assert!(pts.iter().all(|z| f.deriv(*z).unwrap().norm() < l));
    }
}

#[test]
fn extremal_matches_class_hypotheses() {
    let pts = spiral_points(1000, 0.999);
    for (l0, tail) in [
        (2.0, vec![1.0]),
        (1.5, vec![0.5, 2.0]),
        (5.0, vec![0.0, 0.0, 3.0]),
    ] {
        let f = PolyAnalyticFunction::extremal_f0(l0, &tail).unwrap();
        assert!(f.is_normalized());
        let zero = c(0.0, 0.0);
        assert!(f.eval(zero).unwrap().norm() <= 1e-12);
        assert!((f.wirtinger(zero).unwrap().dz - 1.0).norm() <= 1e-12);
        for z in &pts {
            assert!(f.components()[0].deriv(*z).unwrap().norm() < l0);
            for (k, lk) in tail.iter().enumerate() {
                assert_eq!(f.components()[k + 1].deriv(*z).unwrap().norm(), *lk);
            }
        }
    }
}
