//! Deterministic synthetic stereo scenes with known disparity.
//!
//! Scenes are built as layers painted back to front. A layer pixel at
//! right-image column `c` with disparity `d` appears at left column `c + d`
//! with the same color, so correspondences are exact and occlusions arise
//! naturally where a nearer layer covers a farther one in either view.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::disparity::DisparityMap;
use crate::image::ColorImage;

#[derive(Debug, Clone)]
pub struct SyntheticScene {
    pub left: ColorImage,
    pub right: ColorImage,
    /// True disparity in right-image coordinates.
    pub truth: DisparityMap,
}

/// Per-pixel random RGB texture.
fn random_texture(width: usize, height: usize, rng: &mut ChaCha8Rng) -> Vec<[u8; 3]> {
    (0..width * height).map(|_| rng.gen()).collect()
}

/// Right image of uniform noise; left image is the right shifted `shift`
/// columns to the right, with fresh noise filling the uncovered left strip.
pub fn shifted_pair(width: usize, height: usize, shift: usize, seed: u64) -> SyntheticScene {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tex = random_texture(width, height, &mut rng);
    let right = ColorImage::from_fn(width, height, |r, c| tex[r * width + c]);
    let fill = random_texture(shift.min(width), height, &mut rng);
    let left = ColorImage::from_fn(width, height, |r, c| {
        if c >= shift {
            tex[r * width + c - shift]
        } else {
            fill[r * shift + c]
        }
    });
    let truth = DisparityMap::new(
        width,
        height,
        shift,
        (0..height)
            .flat_map(|_| (0..width).map(|c| (c + shift < width).then_some(shift)))
            .collect(),
    )
    .expect("shift within range");
    SyntheticScene { left, right, truth }
}

struct Layer {
    disparity: usize,
    contains: Box<dyn Fn(usize, usize) -> bool>,
    texture: Vec<[u8; 3]>,
}

fn render(width: usize, height: usize, layers: &[Layer], noise: u8, rng: &mut ChaCha8Rng) -> SyntheticScene {
    let max_disparity = layers.iter().map(|l| l.disparity).max().unwrap_or(0);
    let mut right = vec![[0u8; 3]; width * height];
    let mut left = vec![[0u8; 3]; width * height];
    let mut truth = vec![None; width * height];
    // layers ordered far to near
    for layer in layers {
        for r in 0..height {
            for c in 0..width {
                if (layer.contains)(r, c) {
                    let px = layer.texture[r * width + c];
                    right[r * width + c] = px;
                    truth[r * width + c] = Some(layer.disparity);
                    if c + layer.disparity < width {
                        left[r * width + c + layer.disparity] = px;
                    }
                }
            }
        }
    }
    // Left columns no layer reached (left border of the far plane).
    for r in 0..height {
        for c in 0..layers[0].disparity.min(width) {
            left[r * width + c] = rng.gen();
        }
    }
    let jitter = |px: [u8; 3], rng: &mut ChaCha8Rng| {
        px.map(|v| {
            let n = if noise == 0 {
                0
            } else {
                rng.gen_range(-i16::from(noise)..=i16::from(noise))
            };
            (i16::from(v) + n).clamp(0, 255) as u8
        })
    };
    let right: Vec<[u8; 3]> = right.into_iter().map(|p| jitter(p, rng)).collect();
    let left: Vec<[u8; 3]> = left.into_iter().map(|p| jitter(p, rng)).collect();
    for (i, t) in truth.iter_mut().enumerate() {
        if let Some(d) = *t {
            if i % width + d >= width {
                *t = None;
            }
        }
    }
    SyntheticScene {
        left: ColorImage::from_fn(width, height, |r, c| left[r * width + c]),
        right: ColorImage::from_fn(width, height, |r, c| right[r * width + c]),
        truth: DisparityMap::new(width, height, max_disparity, truth).expect("within range"),
    }
}

/// Two vertical bands: columns `< split` at `near` disparity in front,
/// the rest at `far`. With `near > far` the first `near - far` background
/// columns right of the split are hidden in the left view.
pub fn shift_composite(
    width: usize,
    height: usize,
    split: usize,
    near: usize,
    far: usize,
    seed: u64,
) -> SyntheticScene {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let layers = [
        Layer {
            disparity: far,
            contains: Box::new(|_, _| true),
            texture: random_texture(width, height, &mut rng),
        },
        Layer {
            disparity: near,
            contains: Box::new(move |_, c| c < split),
            texture: random_texture(width, height, &mut rng),
        },
    ];
    render(width, height, &layers, 0, &mut rng)
}

/// Smoothly varying texture: random lattice values bilinearly interpolated
/// at `cell` pixel spacing plus per-pixel grain.
fn value_noise(width: usize, height: usize, cell: usize, grain: u8, rng: &mut ChaCha8Rng) -> Vec<[u8; 3]> {
    let gw = width / cell + 2;
    let gh = height / cell + 2;
    let lattice: Vec<[f64; 3]> = (0..gw * gh)
        .map(|_| {
            [
                rng.gen_range(0.0..255.0),
                rng.gen_range(0.0..255.0),
                rng.gen_range(0.0..255.0),
            ]
        })
        .collect();
    let mut out = Vec::with_capacity(width * height);
    for r in 0..height {
        for c in 0..width {
            let (gy, fy) = (r / cell, (r % cell) as f64 / cell as f64);
            let (gx, fx) = (c / cell, (c % cell) as f64 / cell as f64);
            let at = |y: usize, x: usize, k: usize| lattice[y * gw + x][k];
            let px = std::array::from_fn(|k| {
                let top = at(gy, gx, k) * (1.0 - fx) + at(gy, gx + 1, k) * fx;
                let bottom = at(gy + 1, gx, k) * (1.0 - fx) + at(gy + 1, gx + 1, k) * fx;
                let v = top * (1.0 - fy)
                    + bottom * fy
                    + f64::from(rng.gen_range(-i16::from(grain)..=i16::from(grain)));
                v.round().clamp(0.0, 255.0) as u8
            });
            out.push(px);
        }
    }
    out
}

/// A 384x288 layered scene in the spirit of the classic lab test pairs: a
/// textured back wall, a mid-depth box, a lamp-like disc and a near post,
/// disparities within 0..=16, with mild independent sensor noise.
pub fn lab_scene(seed: u64) -> SyntheticScene {
    lab_scene_sized(384, 288, seed)
}

pub fn lab_scene_sized(width: usize, height: usize, seed: u64) -> SyntheticScene {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (w, h) = (width as f64, height as f64);
    let wall = value_noise(width, height, 6, 24, &mut rng);
    let shelf = value_noise(width, height, 4, 20, &mut rng);
    let lamp = value_noise(width, height, 3, 20, &mut rng);
    let post = value_noise(width, height, 5, 24, &mut rng);
    let layers = vec![
        Layer {
            disparity: 5,
            contains: Box::new(|_, _| true),
            texture: wall,
        },
        Layer {
            disparity: 9,
            contains: Box::new(move |r, c| {
                let (r, c) = (r as f64, c as f64);
                r > 0.45 * h && r < 0.9 * h && c > 0.08 * w && c < 0.5 * w
            }),
            texture: shelf,
        },
        Layer {
            disparity: 13,
            contains: Box::new(move |r, c| {
                let (dy, dx) = (r as f64 - 0.35 * h, c as f64 - 0.55 * w);
                dy * dy + dx * dx < (0.17 * h) * (0.17 * h)
            }),
            texture: lamp,
        },
        Layer {
            disparity: 16,
            contains: Box::new(move |r, c| {
                let (r, c) = (r as f64, c as f64);
                r > 0.3 * h && c > 0.72 * w && c < 0.8 * w
            }),
            texture: post,
        },
    ];
    render(width, height, &layers, 3, &mut rng)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shifted_pair_correspondence() {
        let s = shifted_pair(20, 6, 3, 1);
        for r in 0..6 {
            for c in 0..17 {
                assert_eq!(s.left.pixel(r, c + 3), s.right.pixel(r, c));
            }
        }
        assert_eq!(s.truth.get(0, 16), Some(3));
        assert_eq!(s.truth.get(0, 17), None);
    }

    #[test]
    fn composite_occludes_background_next_to_split() {
        let s = shift_composite(40, 4, 20, 6, 2, 7);
        assert_eq!(s.truth.get(0, 19), Some(6));
        assert_eq!(s.truth.get(0, 20), Some(2));
        // background columns 20..24 map under the foreground in the left view
        for c in 20..24 {
            assert_ne!(s.left.pixel(1, c + 2), s.right.pixel(1, c));
        }
        for c in 24..38 {
            assert_eq!(s.left.pixel(1, c + 2), s.right.pixel(1, c));
        }
    }

    #[test]
    fn lab_scene_is_deterministic() {
        let a = lab_scene_sized(64, 48, 3);
        let b = lab_scene_sized(64, 48, 3);
        assert_eq!(a.left, b.left);
        assert_eq!(a.right, b.right);
        assert_eq!(a.truth.max_disparity(), 16);
    }
}
