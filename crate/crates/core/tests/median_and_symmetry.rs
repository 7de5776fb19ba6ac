use depthlab_core::depth::depth_2d_exact;
use depthlab_core::median::{coordinatewise_median, max_depth, tukey_median};
use depthlab_core::symmetry::{angular_symmetry_test, center, sample_distribution, sign_flip, sign_vector, Distribution};
use depthlab_core::{Dataset, Fraction};
use proptest::prelude::*;

/// Maximal depth over data points and all intersections of lines through
/// pairs of data points, which contain the vertices of every depth region.
fn brute_force_max_depth(data: &Dataset) -> usize {
    let pts: Vec<[f64; 2]> = data.rows().map(|r| [r[0], r[1]]).collect();
    let mut best = pts.iter().map(|p| depth_2d_exact(data, p).unwrap().count).max().unwrap();
    let mut lines = Vec::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            if pts[i] != pts[j] {
                lines.push((pts[i], pts[j]));
            }
        }
    }
    for a in 0..lines.len() {
        for b in a + 1..lines.len() {
            let ((p1, p2), (p3, p4)) = (lines[a], lines[b]);
            let d1 = [p2[0] - p1[0], p2[1] - p1[1]];
            let d2 = [p4[0] - p3[0], p4[1] - p3[1]];
            let den = d1[0] * d2[1] - d1[1] * d2[0];
            if den == 0.0 {
                continue;
            }
            let t = ((p3[0] - p1[0]) * d2[1] - (p3[1] - p1[1]) * d2[0]) / den;
            let x = [p1[0] + t * d1[0], p1[1] + t * d1[1]];
            best = best.max(depth_2d_exact(data, &x).unwrap().count);
        }
    }
    best
}

fn gaussian_like(n: usize, seed: u64) -> Dataset {
    sample_distribution(Distribution::D1s, 2, n, seed).unwrap()
}

#[test]
fn search_is_bounded_by_the_true_maximum_and_half() {
    for seed in 0..15 {
        let n = 8 + (seed as usize * 3) % 23;
        let data = gaussian_like(n, seed);
        let m = tukey_median(&data, seed).unwrap();
        let truth = brute_force_max_depth(&data);
        assert!(m.depth.count <= truth, "seed {seed}");
        assert!(m.depth.count >= 1);
        // general position: no more than half plus one
        assert!(2 * truth <= n + 2, "n={n} max={truth}");
        assert_eq!(depth_2d_exact(&data, m.point.as_slice()).unwrap().count, m.depth.count);
    }
}

#[test]
fn search_dominates_data_points_and_coordinatewise_median() {
    let data = gaussian_like(40, 3);
    let m = tukey_median(&data, 9).unwrap();
    for row in data.rows() {
        assert!(depth_2d_exact(&data, row).unwrap().count <= m.depth.count);
    }
    let cm = coordinatewise_median(&data);
    assert!(depth_2d_exact(&data, cm.as_slice()).unwrap().count <= m.depth.count);
}

#[test]
fn all_coincident_data_have_depth_one() {
    let data = Dataset::from_rows(&[[2.0, 1.0]; 7]).unwrap();
    assert_eq!(max_depth(&data, 0).unwrap(), Fraction::new(7, 7));
}

#[test]
fn centrally_symmetric_data_reach_the_centre_depth() {
    for seed in 0..10 {
        let half = gaussian_like(15, 50 + seed);
        let mut rows: Vec<Vec<f64>> = half.rows().map(<[f64]>::to_vec).collect();
        rows.extend(half.rows().map(|r| vec![-r[0], -r[1]]));
        let data = Dataset::from_rows(&rows).unwrap();
        let origin = depth_2d_exact(&data, &[0.0, 0.0]).unwrap().count;
        assert!(origin >= data.len() / 2);
        assert!(tukey_median(&data, seed).unwrap().depth.count >= origin);
    }
}

#[test]
fn bootstrap_of_symmetric_data_concentrates_at_delta_n() {
    // symmetric pairs on a line through the centre: any sign flip keeps the
    // sample on that line, so its maximal depth stays at least one half
    for seed in 0..4 {
        let half = gaussian_like(20, 90 + seed);
        let dir = [0.6, 0.8];
        let mut rows = Vec::new();
        for r in half.rows() {
            rows.push(vec![r[0] * dir[0], r[0] * dir[1]]);
            rows.push(vec![-r[0] * dir[0], -r[0] * dir[1]]);
        }
        let data = Dataset::from_rows(&rows).unwrap();
        let r = angular_symmetry_test(&data, 60, 0.05, seed).unwrap();
        let n = data.len() as f64;
        let mean = r.bootstrap_deltas.iter().map(|d| d.value()).sum::<f64>() / 60.0;
        assert!((mean - r.delta_n.value()).abs() <= 2.0 / n, "{mean} vs {}", r.delta_n);
    }
}

#[test]
fn triangle_sample_is_rejected_more_often_than_symmetric_one() {
    // single large-sample runs: D6 should give a small p-value, D1s a large one
    let d6 = sample_distribution(Distribution::D6, 2, 300, 1).unwrap();
    let d1 = sample_distribution(Distribution::D1s, 2, 300, 1).unwrap();
    let p6 = angular_symmetry_test(&d6, 40, 0.05, 2).unwrap().p_value;
    let p1 = angular_symmetry_test(&d1, 40, 0.05, 2).unwrap().p_value;
    assert!(p6 < p1, "{p6} vs {p1}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn reported_depth_is_affine_invariant_under_diagonal_maps(
        seed in 0u64..1000,
        s in (1i32..=4, 1i32..=4),
        flip in (any::<bool>(), any::<bool>()),
        b in (-3i32..=3, -3i32..=3),
    ) {
        // scaling by powers of two, reflections and integer shifts keep every
        // candidate and perturbation of the search exact
        let sx = 2f64.powi(s.0 - 2) * if flip.0 { -1.0 } else { 1.0 };
        let sy = 2f64.powi(s.1 - 2) * if flip.1 { -1.0 } else { 1.0 };
        let data = gaussian_like(25, seed);
        let mapped = data.map_rows(2, |r, o| {
            o[0] = sx * r[0] + b.0 as f64;
            o[1] = sy * r[1] + b.1 as f64;
        }).unwrap();
        let a = tukey_median(&data, seed).unwrap();
        let m = tukey_median(&mapped, seed).unwrap();
        // the value of any point is preserved exactly by the map
        let image = [sx * a.point[0] + b.0 as f64, sy * a.point[1] + b.1 as f64];
        prop_assert_eq!(depth_2d_exact(&mapped, &image).unwrap().count, a.depth.count);
        prop_assert!(m.depth.count >= 1);
        prop_assert!(m.depth.count <= brute_force_max_depth(&mapped));
    }

    #[test]
    fn sign_flip_round_trips(seed in any::<u64>(), k in 0u64..100) {
        let data = gaussian_like(30, seed % 1000);
        let centred = center(&data, &[0.37, -1.1]);
        let signs = sign_vector(seed, k, data.len());
        prop_assert_eq!(sign_flip(&sign_flip(&centred, &signs), &signs), centred);
    }

    #[test]
    fn p_value_is_a_multiple_of_one_over_m(seed in 0u64..200, m in 1usize..12) {
        let data = gaussian_like(12, seed);
        let r = angular_symmetry_test(&data, m, 0.3, seed).unwrap();
        let scaled = r.p_value * m as f64;
        prop_assert!((scaled - scaled.round()).abs() < 1e-12);
        prop_assert!((0.0..=1.0).contains(&r.p_value));
        prop_assert_eq!(r.reject, r.p_value < 0.3);
    }
}
