use depthlab_core::depth::depth_2d_exact;
use depthlab_core::lp::{scaled_sum_density_gap, LpExponent, LpSymmetricModel};
use depthlab_core::quadrature::integrate;

fn model(p: f64) -> LpSymmetricModel {
    LpSymmetricModel::generalized_gaussian(p, 2).unwrap()
}

#[test]
fn sampler_matches_axis_tail() {
    for (k, p) in [0.5, 1.0, 2.0, 5.0].into_iter().enumerate() {
        let m = LpSymmetricModel::generalized_gaussian(p, 1).unwrap();
        let data = m.sample(100_000, 40 + k as u64).unwrap();
        for x in [0.0, 0.5, 1.0, 2.0] {
            let emp = data.rows().filter(|r| r[0] >= x).count() as f64 / data.len() as f64;
            let tail = m.axis_tail(x);
            assert!((emp - tail).abs() <= 0.005, "p={p} x={x}: {emp} vs {tail}");
        }
    }
}

#[test]
fn empirical_axis_depth_matches_oracle() {
    for (k, p) in [1.0, 2.0, 5.0].into_iter().enumerate() {
        let m = model(p);
        let data = m.sample(20_000, 100 + k as u64).unwrap();
        for x in [0.3, 0.8] {
            let emp = depth_2d_exact(&data, &[x, 0.0]).unwrap().value();
            let oracle = m.axis_depth_oracle(x);
            assert!((emp - oracle).abs() <= 0.015, "p={p} x={x}: {emp} vs {oracle}");
        }
    }
}

#[test]
fn empirical_diagonal_depth_matches_oracle() {
    for (k, p) in [1.0, 2.0, 5.0].into_iter().enumerate() {
        let m = model(p);
        let data = m.sample(20_000, 200 + k as u64).unwrap();
        for c in [0.3, 0.8] {
            let emp = depth_2d_exact(&data, &[c, c]).unwrap().value();
            let oracle = m.diagonal_depth_oracle(c).unwrap();
            assert!((emp - oracle).abs() <= 0.015, "p={p} c={c}: {emp} vs {oracle}");
        }
    }
}

#[test]
fn cube_sum_tail_is_below_axis_tail_on_the_grid() {
    let cube = LpSymmetricModel::hypercube(2).unwrap();
    for k in 1..=99 {
        let x = k as f64 / 100.0;
        assert!(cube.cube_sum_tail(x).unwrap() < cube.axis_tail(x), "x={x}");
    }
}

#[test]
fn axis_versus_diagonal_ordering_depends_on_p() {
    let grid: Vec<f64> = (1..=20).map(|k| k as f64 / 10.0).collect();
    let gap = |p: f64, c: f64| {
        let m = model(p);
        m.axis_depth_oracle(2f64.powf(1.0 / p) * c) - m.diagonal_depth_oracle(c).unwrap()
    };
    assert!(grid.iter().all(|&c| gap(2.0, c).abs() <= 1e-6));
    assert!(grid.iter().any(|&c| gap(5.0, c) > 0.0));
    assert!(grid.iter().any(|&c| gap(1.0, c) < 0.0));
}

#[test]
fn axis_point_is_shallower_than_contour_point_for_small_p() {
    // B = (0, 1) and C = (a, a) with 2 a^p = 1 lie on the same l_p contour
    let p = 0.5;
    let m = model(p);
    let data = m.sample(20_000, 7).unwrap();
    let a = 0.5f64.powf(1.0 / p);
    let b = depth_2d_exact(&data, &[0.0, 1.0]).unwrap().value();
    let c = depth_2d_exact(&data, &[a, a]).unwrap().value();
    assert!(b < c, "B {b} vs C {c}");
    assert!((b - m.axis_depth_oracle(1.0)).abs() <= 0.015);
}

#[test]
fn density_integrates_to_one() {
    for p in [0.5, 1.0, 2.0, 5.0] {
        let m1 = LpSymmetricModel::generalized_gaussian(p, 1).unwrap();
        let cutoff = (12.0 * std::f64::consts::LN_10).powf(1.0 / p);
        let one_d = integrate(|t| m1.density(&[t]).unwrap(), -cutoff, cutoff, 1e-10);
        assert!((one_d - 1.0).abs() < 1e-6, "d=1 p={p}: {one_d}");

        let m2 = model(p);
        let two_d = integrate(
            |s| integrate(|t| m2.density(&[s, t]).unwrap(), -cutoff, cutoff, 1e-10),
            -cutoff,
            cutoff,
            1e-9,
        );
        assert!((two_d - 1.0).abs() < 1e-6, "d=2 p={p}: {two_d}");
    }
    let cube = LpSymmetricModel::hypercube(2).unwrap();
    assert_eq!(cube.density(&[0.3, -0.9]).unwrap(), 0.25);
}

#[test]
fn scaled_sum_density_gap_vanishes_only_at_two() {
    let grid = [0.0, 0.5, 1.0];
    assert!(scaled_sum_density_gap(2.0, &grid).unwrap() <= 1e-4);
    assert!(scaled_sum_density_gap(1.0, &grid).unwrap() >= 1e-2);
    assert!(scaled_sum_density_gap(5.0, &grid).unwrap() > 1e-5);
}

#[test]
fn exponent_display() {
    assert_eq!(LpExponent::Infinity.to_string(), "inf");
    assert_eq!(LpExponent::Finite(0.5).to_string(), "0.5");
}
