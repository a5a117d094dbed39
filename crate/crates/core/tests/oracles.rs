//! Independent brute-force oracles checked against the library paths.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use regionstereo::energy::{box_smooth, compute_energy_volume, MatchWindow, INVALID_ENERGY};
use regionstereo::global::global_match;
use regionstereo::image::{ColorImage, GrayMap};
use regionstereo::reliability::map_energy;
use regionstereo::synthetic::shifted_pair;

fn random_image(width: usize, height: usize, rng: &mut ChaCha8Rng) -> ColorImage {
    ColorImage::from_fn(width, height, |_, _| rng.gen())
}

/// Triple loop straight from the energy formula, top-left anchored window.
fn energy_oracle(
    left: &ColorImage,
    right: &ColorImage,
    n: usize,
    m: usize,
    i: usize,
    j: usize,
    d: usize,
) -> f64 {
    let (w, h) = right.dims();
    if i + n > h || j + d + m > w {
        return INVALID_ENERGY;
    }
    let mut sum = 0.0;
    for x in i..i + n {
        for y in j..j + m {
            for k in 0..3 {
                let diff = left.sample(x, y + d, k) - right.sample(x, y, k);
                sum += diff * diff;
            }
        }
    }
    sum / (3 * n * m) as f64
}

/// Centered mean over finite neighbors, one pass, shrinking at borders.
fn smooth_oracle(input: &GrayMap, n: usize, m: usize) -> GrayMap {
    let (w, h) = input.dims();
    GrayMap::from_fn(w, h, |r, c| {
        if !input.get(r, c).is_finite() {
            return INVALID_ENERGY;
        }
        let (mut s, mut k) = (0.0, 0);
        for rr in r as isize - ((n - 1) / 2) as isize..=(r + n / 2) as isize {
            for cc in c as isize - ((m - 1) / 2) as isize..=(c + m / 2) as isize {
                if rr < 0 || cc < 0 || rr >= h as isize || cc >= w as isize {
                    continue;
                }
                let v = input.get(rr as usize, cc as usize);
                if v.is_finite() {
                    s += v;
                    k += 1;
                }
            }
        }
        s / k as f64
    })
}

#[test]
fn energy_volume_matches_triple_loop_6x6() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let left = random_image(6, 6, &mut rng);
    let right = random_image(6, 6, &mut rng);
    let vol = compute_energy_volume(&left, &right, MatchWindow::new(1, 2).unwrap(), 3).unwrap();
    for d in 0..=3 {
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(
                    vol.get(i, j, d),
                    energy_oracle(&left, &right, 1, 2, i, j, d),
                    "({i},{j},{d})"
                );
            }
        }
    }
}

#[test]
fn energy_volume_matches_triple_loop_random_shapes() {
    let mut rng = ChaCha8Rng::seed_from_u64(60);
    for _ in 0..40 {
        let (w, h) = (rng.gen_range(1..14), rng.gen_range(1..10));
        let (n, m) = (rng.gen_range(1..5), rng.gen_range(1..6));
        let d_max = rng.gen_range(0..8);
        let left = random_image(w, h, &mut rng);
        let right = random_image(w, h, &mut rng);
        let vol = compute_energy_volume(&left, &right, MatchWindow::new(n, m).unwrap(), d_max).unwrap();
        for d in 0..=d_max {
            for i in 0..h {
                for j in 0..w {
                    assert_eq!(vol.get(i, j, d), energy_oracle(&left, &right, n, m, i, j, d));
                }
            }
        }
    }
}

#[test]
fn box_smooth_matches_direct_average() {
    let mut rng = ChaCha8Rng::seed_from_u64(61);
    for _ in 0..40 {
        let (w, h) = (rng.gen_range(1..12), rng.gen_range(1..12));
        let (n, m) = (rng.gen_range(1..6), rng.gen_range(1..6));
        let iterations = rng.gen_range(0..5);
        let slice = GrayMap::from_fn(w, h, |_, _| {
            if rng.gen_bool(0.15) {
                INVALID_ENERGY
            } else {
                rng.gen_range(0.0..1000.0)
            }
        });
        let mut want = slice.clone();
        if n * m > 1 {
            for _ in 0..iterations {
                want = smooth_oracle(&want, n, m);
            }
        }
        let got = box_smooth(&slice, MatchWindow::new(n, m).unwrap(), iterations);
        for (g, e) in got.data().iter().zip(want.data()) {
            if e.is_finite() {
                assert!((g - e).abs() <= 1e-9 * e.abs().max(1.0), "{g} vs {e}");
            } else {
                assert_eq!(g, e);
            }
        }
    }
}

#[test]
fn shifted_pair_recovered_by_global_matcher() {
    let scene = shifted_pair(40, 20, 2, 11);
    let win = MatchWindow::new(3, 3).unwrap();
    let (d, _) = global_match(&scene.left, &scene.right, win, 6, 10).unwrap();
    for row in 0..20 {
        for col in 0..40 {
            if win.fits(40, 20, row, col, 6) {
                assert_eq!(d.get(row, col), Some(2), "({row},{col})");
            }
        }
    }
    let e = map_energy(&scene.left, &scene.right, &d, win).unwrap();
    for row in 0..20 {
        for col in 0..40 {
            if win.fits(40, 20, row, col, 6) {
                assert_eq!(e.get(row, col), Some(0.0));
            }
        }
    }
}
