use proptest::prelude::*;

use regionstereo::depth::{depth_from_disparity, median_filter, CameraRig};
use regionstereo::energy::{box_smooth, compute_energy_volume, MatchWindow};
use regionstereo::global::global_match;
use regionstereo::image::{load_color, load_gray, save_color, save_gray, ColorImage, GrayMap};
use regionstereo::linegrow::{line_grow_match, GrowConfig, PointStatus};
use regionstereo::reliability::{filter_unreliable, reliability, verify_monotonicity, MapEnergy};
use regionstereo::DisparityMap;

fn image(max: u8) -> impl Strategy<Value = ColorImage> {
    (1usize..12, 1usize..8).prop_flat_map(move |(w, h)| {
        prop::collection::vec(0..=max, w * h * 3).prop_map(move |data| ColorImage::new(w, h, data).unwrap())
    })
}

fn pair(max: u8) -> impl Strategy<Value = (ColorImage, ColorImage)> {
    (2usize..14, 1usize..8).prop_flat_map(move |(w, h)| {
        let img = move || {
            prop::collection::vec(0..=max, w * h * 3).prop_map(move |d| ColorImage::new(w, h, d).unwrap())
        };
        (img(), img())
    })
}

fn mirror(img: &ColorImage) -> ColorImage {
    let w = img.width();
    ColorImage::from_fn(w, img.height(), |r, c| img.pixel(r, w - 1 - c))
}

fn energy_map() -> impl Strategy<Value = (DisparityMap, MapEnergy)> {
    prop::collection::vec(prop::option::weighted(0.8, 0.0..1000.0f64), 1..64).prop_map(|entries| {
        let n = entries.len();
        let d = DisparityMap::new(n, 1, 40, entries.iter().map(|e| e.map(|_| 7)).collect()).unwrap();
        (d, MapEnergy::new(n, 1, entries).unwrap())
    })
}

proptest! {
    #[test]
    fn ppm_round_trip(img in image(255)) {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("a.ppm");
        save_color(&img, &p).unwrap();
        prop_assert_eq!(load_color(&p).unwrap(), img);
    }

    #[test]
    fn pgm_round_trip(data in prop::collection::vec(0u8..=255, 1..80)) {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("a.pgm");
        let map = GrayMap::new(data.len(), 1, data.iter().map(|&v| f64::from(v)).collect()).unwrap();
        save_gray(&map, &p, false).unwrap();
        prop_assert_eq!(load_gray(&p).unwrap(), map);
    }

    #[test]
    fn smoothing_stays_within_input_range(
        values in prop::collection::vec(prop::option::weighted(0.9, 0.0..1e6f64), 1..60),
        n in 1usize..5, m in 1usize..5, iterations in 0usize..6,
    ) {
        let w = values.len().min(10);
        let h = values.len() / w;
        let data: Vec<f64> = values[..w * h].iter().map(|v| v.unwrap_or(f64::INFINITY)).collect();
        let slice = GrayMap::new(w, h, data).unwrap();
        let out = box_smooth(&slice, MatchWindow::new(n, m).unwrap(), iterations);
        if let Some((lo, hi)) = slice.finite_range() {
            for &v in out.data().iter().filter(|v| v.is_finite()) {
                prop_assert!(v >= lo && v <= hi);
            }
        }
        // invalid entries stay invalid, valid stay valid
        for (a, b) in slice.data().iter().zip(out.data()) {
            prop_assert_eq!(a.is_finite(), b.is_finite());
        }
    }

    /// Swapping the images and mirroring both turns the leftward search into
    /// the rightward one: e'(i, j, d) = e(i, W - j - m - d, d).
    #[test]
    fn energy_swap_symmetry((left, right) in pair(255), n in 1usize..3, m in 1usize..4, d_max in 0usize..4) {
        let win = MatchWindow::new(n, m).unwrap();
        let (w, h) = left.dims();
        let vol = compute_energy_volume(&left, &right, win, d_max).unwrap();
        let swapped = compute_energy_volume(&mirror(&right), &mirror(&left), win, d_max).unwrap();
        for d in 0..=d_max {
            for i in 0..h {
                for j in 0..w {
                    let e = swapped.get(i, j, d);
                    if e.is_finite() {
                        prop_assert_eq!(e, vol.get(i, w - j - m - d, d));
                    }
                }
            }
        }
    }

    #[test]
    fn global_match_is_deterministic_and_bounded((left, right) in pair(255), d_max in 0usize..6, it in 0usize..4) {
        let win = MatchWindow::new(1, 2).unwrap();
        let a = global_match(&left, &right, win, d_max, it).unwrap();
        let b = global_match(&left, &right, win, d_max, it).unwrap();
        prop_assert_eq!(&a.0, &b.0);
        prop_assert!(a.0.values().iter().flatten().all(|&d| d <= d_max));
    }

    /// Doubling every sample scales all energies by exactly 4.
    #[test]
    fn global_match_scale_invariant((left, right) in pair(127), d_max in 0usize..6, it in 0usize..4, n in 1usize..3, m in 1usize..3) {
        let win = MatchWindow::new(n, m).unwrap();
        let (a, _) = global_match(&left, &right, win, d_max, it).unwrap();
        let (b, _) = global_match(&left.scaled(2.0), &right.scaled(2.0), win, d_max, it).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn line_growing_invariants((left, right) in pair(255), m in 1usize..4, d_max in 0usize..5, v in 0.0..4000.0f64) {
        let win = MatchWindow::line(m).unwrap();
        let cfg = GrowConfig::new(win, d_max, v).unwrap();
        let (d, s) = line_grow_match(&left, &right, &cfg).unwrap();
        prop_assert_eq!(s.count(PointStatus::NotProcessed), 0);
        for row in 0..left.height() {
            let mut in_line = false;
            for col in 0..left.width() {
                match s.get(row, col) {
                    PointStatus::Root => in_line = true,
                    PointStatus::Region => prop_assert!(in_line),
                    _ => in_line = false,
                }
                match d.get(row, col) {
                    Some(dd) => {
                        let e = regionstereo::energy::window_energy(&left, &right, win, row, col, dd).unwrap();
                        prop_assert!(e <= v);
                        prop_assert!(matches!(s.get(row, col), PointStatus::Root | PointStatus::Region));
                    }
                    None => prop_assert_eq!(s.get(row, col), PointStatus::Idle),
                }
            }
        }
    }

    #[test]
    fn idle_count_non_increasing_in_threshold((left, right) in pair(255), lo in 0.0..3000.0f64, extra in 0.0..3000.0f64) {
        let win = MatchWindow::line(2).unwrap();
        let idle = |v| {
            let cfg = GrowConfig::new(win, 3, v).unwrap();
            line_grow_match(&left, &right, &cfg).unwrap().1.count(PointStatus::Idle)
        };
        prop_assert!(idle(lo) >= idle(lo + extra));
    }

    #[test]
    fn rows_are_independent((left, right) in pair(255), v in 0.0..3000.0f64) {
        let h = left.height();
        let flip = |img: &ColorImage| ColorImage::from_fn(img.width(), h, |r, c| img.pixel(h - 1 - r, c));
        let cfg = GrowConfig::new(MatchWindow::line(2).unwrap(), 3, v).unwrap();
        let (d, s) = line_grow_match(&left, &right, &cfg).unwrap();
        let (df, sf) = line_grow_match(&flip(&left), &flip(&right), &cfg).unwrap();
        for r in 0..h {
            prop_assert_eq!(s.row(r), sf.row(h - 1 - r));
            for c in 0..left.width() {
                prop_assert_eq!(d.get(r, c), df.get(h - 1 - r, c));
            }
        }
    }

    #[test]
    fn reliability_monotone_in_alpha((d, e) in energy_map(), a in 0.0..4.0f64, b in 0.0..4.0f64, c in 0.0..4.0f64) {
        prop_assume!(e.estimated_count() > 0);
        let mut alphas = vec![a, b, c];
        alphas.sort_by(|x, y| y.total_cmp(x));
        alphas.dedup();
        let reports = verify_monotonicity(&d, &e, &alphas).unwrap();
        prop_assert!(reports.windows(2).all(|w| w[1].r_d >= w[0].r_d));
    }

    #[test]
    fn filter_contract((d, e) in energy_map(), alpha in 0.0..4.0f64) {
        prop_assume!(e.estimated_count() > 0);
        let f = filter_unreliable(&d, &e, alpha).unwrap();
        let ve = f.report.ve.unwrap();
        prop_assert!(f.energy.entries().iter().flatten().all(|&v| v <= ve));
        prop_assert!((0.0..=1.0).contains(&f.report.retained_fraction));
        prop_assert!(f.report.s_d <= e.estimated_count());
        prop_assert!(f.report.r_d >= reliability(&e).unwrap().r_d);
        for (dv, ev) in f.disparity.values().iter().zip(f.energy.entries()) {
            prop_assert_eq!(dv.is_some(), ev.is_some());
        }
    }

    #[test]
    fn reliability_ignores_pixel_order((_, e) in energy_map(), seed in any::<u64>()) {
        prop_assume!(e.estimated_count() > 0);
        let mut entries = e.entries().to_vec();
        let n = entries.len();
        // deterministic shuffle
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
            entries.swap(i, (state >> 33) as usize % (i + 1));
        }
        let shuffled = MapEnergy::new(n, 1, entries).unwrap();
        let (a, b) = (reliability(&e).unwrap(), reliability(&shuffled).unwrap());
        prop_assert_eq!(a.s_d, b.s_d);
        prop_assert!((a.r_d - b.r_d).abs() <= 1e-12 * a.r_d.abs().max(1.0) || a.r_d == b.r_d);
    }

    #[test]
    fn depth_times_disparity_is_ft(values in prop::collection::vec(prop::option::of(0usize..=40), 1..50), f in 0.5..100.0f64, t in 0.5..100.0f64) {
        let n = values.len();
        let d = DisparityMap::new(n, 1, 40, values).unwrap();
        let rig = CameraRig::new(f, t).unwrap();
        let z = depth_from_disparity(&d, &rig);
        for (dv, zv) in d.values().iter().zip(z.values()) {
            match (dv, zv) {
                (Some(dd), Some(zz)) => prop_assert!((zz * *dd as f64 - f * t).abs() <= 1e-9 * f * t),
                (Some(0), None) | (None, None) => {}
                other => prop_assert!(false, "unexpected {:?}", other),
            }
        }
    }

    #[test]
    fn median_draws_from_input_values(values in prop::collection::vec(prop::option::weighted(0.7, 0usize..=40), 36), window in prop::sample::select(vec![1usize, 3, 5])) {
        let d = DisparityMap::new(6, 6, 40, values.clone()).unwrap();
        let out = median_filter(&d, window).unwrap();
        let present: std::collections::HashSet<_> = values.iter().flatten().collect();
        prop_assert!(out.values().iter().flatten().all(|v| present.contains(v)));
        if window == 1 {
            prop_assert_eq!(out, d);
        }
    }
}
