use polylandau::radii::{bilipschitz, solve_radius};
use polylandau::verify::{
    brute_force_univalence_radius, check_colipschitz, check_lipschitz, check_schlicht,
    class_witness, find_collision, run_battery, BatteryConfig, Check,
};
use polylandau::{
    BoundarySampler, ClassParams, Complex64, PairSampler, PolyAnalyticFunction, RootFindConfig,
};

fn cfg() -> RootFindConfig {
    RootFindConfig::default()
}

fn f3_sweep() -> Vec<(f64, Vec<f64>)> {
    let tails = [
        vec![],
        vec![0.5],
        vec![1.0],
        vec![2.0],
        vec![1.0, 1.0],
        vec![0.5, 2.0],
        vec![2.0, 0.5],
    ];
    [1.5, 2.0, 5.0]
        .into_iter()
        .flat_map(|l0| tails.iter().map(move |t| (l0, t.clone())))
        .collect()
}

#[test]
fn bilipschitz_holds_for_every_sweep_witness() {
    let mut classes: Vec<ClassParams> = f3_sweep()
        .into_iter()
        .map(|(l0, t)| ClassParams::f3(l0, t).unwrap())
        .collect();
    for t in [vec![], vec![0.5], vec![1.0, 0.25]] {
        for h in [1.5, 2.0, 5.0] {
            classes.push(ClassParams::f1(h, t.clone()).unwrap());
            classes.push(ClassParams::f2(h, t.clone()).unwrap());
        }
    }
    for p in classes {
        let f = class_witness(&p).unwrap();
        let r = solve_radius(&p, &cfg()).unwrap().univalence_radius;
        let rho = 0.9 * r;
        let b = bilipschitz(&p, rho, &cfg()).unwrap();
        let s = PairSampler::new(11, 5000, rho).unwrap();
        let lo = check_colipschitz(&f, &p, &s, b.l, &cfg()).unwrap();
        let hi = check_lipschitz(&f, &p, &s, b.lip, &cfg()).unwrap();
        assert!(lo.passed, "{p:?} {lo:?}");
        assert!(hi.passed, "{p:?} {hi:?}");
    }
}

#[test]
fn collision_exists_just_beyond_r3() {
    for (l0, t) in f3_sweep() {
        let r3 = solve_radius(&ClassParams::f3(l0, t.clone()).unwrap(), &cfg())
            .unwrap()
            .univalence_radius;
        let r = (r3 + 0.05).min(1.0);
        let c = find_collision(l0, &t, r, &cfg()).unwrap();
        assert!(c.x2 > 0.0 && c.x2 < r3 && c.x1 > r3 && c.x1 <= r);
        assert!((c.x1 - c.x2).abs() >= 1e-3, "{l0} {t:?} {c:?}");
        let f0 = PolyAnalyticFunction::extremal_f0(l0, &t).unwrap();
        let d = f0.eval(Complex64::new(c.x1, 0.0)).unwrap()
            - f0.eval(Complex64::new(c.x2, 0.0)).unwrap();
        assert!(d.norm() <= 1e-9);
    }
}

#[test]
fn schlicht_minimum_sits_on_the_positive_axis() {
    for (l0, t) in f3_sweep() {
        let p = ClassParams::f3(l0, t.clone()).unwrap();
        let res = solve_radius(&p, &cfg()).unwrap();
        let f0 = PolyAnalyticFunction::extremal_f0(l0, &t).unwrap();
        let b = BoundarySampler::new(res.univalence_radius, 720).unwrap();
        let rep = check_schlicht(&f0, &b, res.schlicht_radius).unwrap();
        let w = rep.witness.unwrap();
        assert!((w.values[0] - res.schlicht_radius).abs() < 1e-6);
        let step = b.angle(1);
        let theta = w.values[1];
        assert!(theta <= step || theta >= std::f64::consts::TAU - step);
    }
}

#[test]
fn brute_force_never_undercuts_r3() {
    for (l0, t) in f3_sweep() {
        let r3 = solve_radius(&ClassParams::f3(l0, t.clone()).unwrap(), &cfg())
            .unwrap()
            .univalence_radius;
        let f0 = PolyAnalyticFunction::extremal_f0(l0, &t).unwrap();
        let est = brute_force_univalence_radius(&f0, 32).unwrap();
        assert!(
            est.estimate >= r3 - est.ladder_step,
            "{l0} {t:?} {est:?} r3={r3}"
        );
        // collisions appear within a rung of r3 as well
        let first = est
            .first_collision
            .expect("extremal folds inside the unit disc");
        assert!(
            first <= r3 + 2.0 * est.ladder_step + 1e-12,
            "{l0} {t:?} {est:?} r3={r3}"
        );
    }
}

#[test]
fn brute_force_reference_examples() {
    let f0 = PolyAnalyticFunction::extremal_f0(2.0, &[]).unwrap();
    let est = brute_force_univalence_radius(&f0, 32).unwrap();
    assert!((est.estimate - 0.5).abs() <= est.ladder_step);
    let f0 = PolyAnalyticFunction::extremal_f0(2.0, &[1.0]).unwrap();
    let est = brute_force_univalence_radius(&f0, 32).unwrap();
    assert!((est.estimate - (2.0 - 3f64.sqrt())).abs() <= est.ladder_step);
}

#[test]
fn reports_are_reproducible() {
    let p = ClassParams::f3(2.0, vec![1.0]).unwrap();
    let c = BatteryConfig {
        pairs: 3000,
        ..BatteryConfig::default()
    };
    let a = run_battery(&p, &Check::ALL, &c).unwrap();
    let b = run_battery(&p, &Check::ALL, &c).unwrap();
    assert_eq!(a, b);
    let c2 = BatteryConfig { seed: 43, ..c };
    assert_ne!(
        run_battery(&p, &[Check::Colipschitz], &c2).unwrap()[0],
        a[1]
    );
}
