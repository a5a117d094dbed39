//! Windowed color matching energy and its iterated mean smoothing.
//!
//! The energy at right-image anchor `(row, col)` and disparity `d` is the mean
//! squared RGB difference between the right window covering rows
//! `row..row+n`, columns `col..col+m` and the left window shifted `d` columns
//! to the right. Anchors whose window leaves either image get
//! [`INVALID_ENERGY`].

use crate::error::{Error, Result};
use crate::image::{finite_range, ColorImage, GrayMap};
use crate::par;

/// Marker for energies whose matching window exits an image.
pub const INVALID_ENERGY: f64 = f64::INFINITY;

/// Matching window of `rows` x `cols` pixels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MatchWindow {
    rows: usize,
    cols: usize,
}

impl MatchWindow {
    pub fn new(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidParameter(format!(
                "match window must be at least 1x1, got {rows}x{cols}"
            )));
        }
        Ok(MatchWindow { rows, cols })
    }

    /// Single-row window of `cols` pixels.
    pub fn line(cols: usize) -> Result<Self> {
        Self::new(1, cols)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn area(&self) -> usize {
        self.rows * self.cols
    }

    /// True when the window anchored at `(row, col)` in the right image, and
    /// its `disparity`-shifted copy in the left image, both fit.
    #[inline]
    pub fn fits(&self, width: usize, height: usize, row: usize, col: usize, disparity: usize) -> bool {
        row + self.rows <= height && col + disparity + self.cols <= width
    }
}

impl std::fmt::Display for MatchWindow {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}x{}", self.rows, self.cols)
    }
}

/// Energy slices for disparities `0..=max_disparity`, in right-image
/// coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorEnergyVolume {
    width: usize,
    height: usize,
    slices: Vec<GrayMap>,
}

impl ErrorEnergyVolume {
    pub fn from_slices(slices: Vec<GrayMap>) -> Result<Self> {
        let first = slices
            .first()
            .ok_or_else(|| Error::InvalidParameter("volume needs at least one slice".into()))?;
        let dims = first.dims();
        if let Some(bad) = slices.iter().find(|s| s.dims() != dims) {
            return Err(Error::mismatch(dims, bad.dims()));
        }
        if slices
            .iter()
            .flat_map(|s| s.data())
            .any(|&v| v.is_nan() || v < 0.0 || v == f64::NEG_INFINITY)
        {
            return Err(Error::InvalidParameter(
                "energies must be nonnegative or the invalid marker".into(),
            ));
        }
        Ok(ErrorEnergyVolume {
            width: dims.0,
            height: dims.1,
            slices,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn max_disparity(&self) -> usize {
        self.slices.len() - 1
    }

    pub fn slice(&self, disparity: usize) -> &GrayMap {
        &self.slices[disparity]
    }

    pub fn slices(&self) -> &[GrayMap] {
        &self.slices
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize, disparity: usize) -> f64 {
        self.slices[disparity].get(row, col)
    }

    /// Applies [`box_smooth`] to every slice.
    pub fn smoothed(&self, win: MatchWindow, iterations: usize) -> ErrorEnergyVolume {
        let slices = par::map_range(self.slices.len(), |d| {
            box_smooth(&self.slices[d], win, iterations)
        });
        ErrorEnergyVolume {
            width: self.width,
            height: self.height,
            slices,
        }
    }
}

pub(crate) fn check_pair(left: &ColorImage, right: &ColorImage) -> Result<()> {
    if left.dims() != right.dims() {
        return Err(Error::mismatch(left.dims(), right.dims()));
    }
    Ok(())
}

#[inline]
fn squared_diff(left: &ColorImage, right: &ColorImage, row: usize, col: usize, disparity: usize) -> u64 {
    let l = left.pixel(row, col + disparity);
    let r = right.pixel(row, col);
    l.iter()
        .zip(r.iter())
        .map(|(&a, &b)| {
            let diff = i64::from(a) - i64::from(b);
            (diff * diff) as u64
        })
        .sum()
}

#[inline]
fn normalize(sum: u64, win: MatchWindow) -> f64 {
    sum as f64 / (3 * win.area()) as f64
}

/// Energy of a single window, or `None` when the window does not fit.
/// Pair dimensions are assumed equal.
pub fn window_energy(
    left: &ColorImage,
    right: &ColorImage,
    win: MatchWindow,
    row: usize,
    col: usize,
    disparity: usize,
) -> Option<f64> {
    if !win.fits(right.width(), right.height(), row, col, disparity) {
        return None;
    }
    let mut sum = 0u64;
    for r in row..row + win.rows {
        for c in col..col + win.cols {
            sum += squared_diff(left, right, r, c, disparity);
        }
    }
    Some(normalize(sum, win))
}

/// Builds the energy volume for disparities `0..=max_disparity`.
///
/// Sums are accumulated in integers, so every finite entry is bitwise equal
/// to what [`window_energy`] returns for the same anchor.
pub fn compute_energy_volume(
    left: &ColorImage,
    right: &ColorImage,
    win: MatchWindow,
    max_disparity: usize,
) -> Result<ErrorEnergyVolume> {
    check_pair(left, right)?;
    let (width, height) = right.dims();
    let slices = par::map_range(max_disparity + 1, |d| energy_slice(left, right, win, d));
    Ok(ErrorEnergyVolume {
        width,
        height,
        slices,
    })
}

fn energy_slice(left: &ColorImage, right: &ColorImage, win: MatchWindow, disparity: usize) -> GrayMap {
    let (width, height) = right.dims();
    let mut out = GrayMap::filled(width, height, INVALID_ENERGY);
    if disparity + win.cols > width || win.rows > height {
        return out;
    }
    // Number of anchors per row whose shifted window fits.
    let anchors = width - disparity - win.cols + 1;
    // Horizontal window sums per row, then summed down the window rows.
    let row_sums: Vec<Vec<u64>> = (0..height)
        .map(|row| {
            let diffs: Vec<u64> = (0..width - disparity)
                .map(|col| squared_diff(left, right, row, col, disparity))
                .collect();
            let mut sums = Vec::with_capacity(anchors);
            let mut acc: u64 = diffs[..win.cols].iter().sum();
            sums.push(acc);
            for col in 1..anchors {
                acc = acc + diffs[col + win.cols - 1] - diffs[col - 1];
                sums.push(acc);
            }
            sums
        })
        .collect();
    for row in 0..=height - win.rows {
        for col in 0..anchors {
            let sum: u64 = row_sums[row..row + win.rows].iter().map(|s| s[col]).sum();
            out.set(row, col, normalize(sum, win));
        }
    }
    out
}

/// Applies a centered `rows` x `cols` mean filter `iterations` times.
///
/// Invalid entries never contribute to an average and stay invalid. Windows
/// shrink at the borders. Each output is clamped to the finite range of the
/// pass input, which a convex combination can only leave through rounding.
pub fn box_smooth(slice: &GrayMap, win: MatchWindow, iterations: usize) -> GrayMap {
    let mut current = slice.clone();
    if win.area() == 1 {
        return current;
    }
    for _ in 0..iterations {
        current = smooth_once(&current, win);
    }
    current
}

fn smooth_once(input: &GrayMap, win: MatchWindow) -> GrayMap {
    let (width, height) = input.dims();
    let Some((lo, hi)) = finite_range(input.data()) else {
        return input.clone();
    };
    let (up, down) = ((win.rows - 1) / 2, win.rows / 2);
    let (back, ahead) = ((win.cols - 1) / 2, win.cols / 2);

    // Horizontal pass: per-pixel sums and counts of finite neighbors.
    let mut hsum = vec![0.0; width * height];
    let mut hcount = vec![0u32; width * height];
    for row in 0..height {
        let line = &input.data()[row * width..(row + 1) * width];
        for col in 0..width {
            let start = col.saturating_sub(back);
            let end = (col + ahead).min(width - 1);
            let (mut s, mut c) = (0.0, 0);
            for &v in &line[start..=end] {
                if v.is_finite() {
                    s += v;
                    c += 1;
                }
            }
            hsum[row * width + col] = s;
            hcount[row * width + col] = c;
        }
    }

    let mut out = GrayMap::filled(width, height, INVALID_ENERGY);
    for row in 0..height {
        let start = row.saturating_sub(up);
        let end = (row + down).min(height - 1);
        for col in 0..width {
            if !input.get(row, col).is_finite() {
                continue;
            }
            let (mut s, mut c) = (0.0, 0);
            for r in start..=end {
                s += hsum[r * width + col];
                c += hcount[r * width + col];
            }
            // c >= 1: the center itself is finite.
            out.set(row, col, (s / f64::from(c)).clamp(lo, hi));
        }
    }
    out
}
