//! Scanline disparity growing.
//!
//! Each row is scanned left to right. An unassigned pixel searches all
//! disparities with a one-row window; if the best energy is within the
//! threshold it becomes a root and its disparity becomes the region
//! disparity. Following pixels are tested at the region disparity only and
//! join the region while their energy stays within the threshold. The first
//! failure resumes root selection at that same pixel.

use std::collections::BTreeMap;

use crate::disparity::DisparityMap;
use crate::energy::{check_pair, window_energy, MatchWindow};
use crate::error::{Error, Result};
use crate::image::{ColorImage, GrayMap};
use crate::par;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[repr(u8)]
pub enum PointStatus {
    NotProcessed = 0,
    Region = 1,
    Root = 2,
    Idle = 3,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointStatusMap {
    width: usize,
    height: usize,
    statuses: Vec<PointStatus>,
}

impl PointStatusMap {
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> PointStatus {
        self.statuses[row * self.width + col]
    }

    pub fn statuses(&self) -> &[PointStatus] {
        &self.statuses
    }

    pub fn row(&self, row: usize) -> &[PointStatus] {
        &self.statuses[row * self.width..(row + 1) * self.width]
    }

    pub fn count(&self, status: PointStatus) -> usize {
        self.statuses.iter().filter(|&&s| s == status).count()
    }

    /// Status codes 0..=3 as a raster, for rendering.
    pub fn to_gray(&self) -> GrayMap {
        let data = self.statuses.iter().map(|&s| f64::from(s as u8)).collect();
        GrayMap::new(self.width, self.height, data).expect("dimensions match")
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrowConfig {
    window: MatchWindow,
    max_disparity: usize,
    threshold: f64,
}

impl GrowConfig {
    /// `threshold` is in the same normalized units as the matching energy.
    pub fn new(window: MatchWindow, max_disparity: usize, threshold: f64) -> Result<Self> {
        if window.rows() != 1 {
            return Err(Error::InvalidParameter(format!(
                "line growing needs a single-row window, got {window}"
            )));
        }
        if !(threshold.is_finite() && threshold >= 0.0) {
            return Err(Error::InvalidParameter(format!(
                "growing threshold must be finite and >= 0, got {threshold}"
            )));
        }
        Ok(GrowConfig {
            window,
            max_disparity,
            threshold,
        })
    }

    pub fn window(&self) -> MatchWindow {
        self.window
    }

    pub fn max_disparity(&self) -> usize {
        self.max_disparity
    }

    pub fn threshold(&self) -> f64 {
        self.threshold
    }
}

pub fn line_grow_match(
    left: &ColorImage,
    right: &ColorImage,
    cfg: &GrowConfig,
) -> Result<(DisparityMap, PointStatusMap)> {
    check_pair(left, right)?;
    let (width, height) = right.dims();
    let rows = par::map_range(height, |row| grow_row(left, right, cfg, row));

    let mut values = Vec::with_capacity(width * height);
    let mut statuses = Vec::with_capacity(width * height);
    for (d, s) in rows {
        values.extend(d);
        statuses.extend(s);
    }
    let disparity = DisparityMap::new(width, height, cfg.max_disparity, values)?;
    Ok((
        disparity,
        PointStatusMap {
            width,
            height,
            statuses,
        },
    ))
}

fn grow_row(
    left: &ColorImage,
    right: &ColorImage,
    cfg: &GrowConfig,
    row: usize,
) -> (Vec<Option<usize>>, Vec<PointStatus>) {
    let width = right.width();
    let mut disparities = vec![None; width];
    let mut statuses = vec![PointStatus::NotProcessed; width];
    let energy = |col, d| window_energy(left, right, cfg.window, row, col, d);

    let mut region: Option<usize> = None;
    for col in 0..width {
        if let Some(d) = region {
            if energy(col, d).is_some_and(|e| e <= cfg.threshold) {
                statuses[col] = PointStatus::Region;
                disparities[col] = Some(d);
                continue;
            }
            region = None;
        }
        // Root selection, smallest disparity on ties.
        let mut best: Option<(usize, f64)> = None;
        for d in 0..=cfg.max_disparity {
            match energy(col, d) {
                Some(e) if best.is_none_or(|(_, b)| e < b) => best = Some((d, e)),
                Some(_) => {}
                // larger shifts cannot fit either
                None => break,
            }
        }
        match best {
            Some((d, e)) if e <= cfg.threshold => {
                statuses[col] = PointStatus::Root;
                disparities[col] = Some(d);
                region = Some(d);
            }
            _ => statuses[col] = PointStatus::Idle,
        }
    }
    (disparities, statuses)
}

/// Lengths of grown lines (a root plus the region points that follow it),
/// as length -> number of lines.
pub fn segment_lengths(status: &PointStatusMap) -> BTreeMap<usize, usize> {
    let mut histogram = BTreeMap::new();
    for row in 0..status.height {
        let mut run = 0;
        for &s in status.row(row) {
            match s {
                PointStatus::Root => {
                    if run > 0 {
                        *histogram.entry(run).or_insert(0) += 1;
                    }
                    run = 1;
                }
                PointStatus::Region if run > 0 => run += 1,
                _ => {
                    if run > 0 {
                        *histogram.entry(run).or_insert(0) += 1;
                    }
                    run = 0;
                }
            }
        }
        if run > 0 {
            *histogram.entry(run).or_insert(0) += 1;
        }
    }
    histogram
}

/// Mean grown-line length, `None` for an empty histogram.
pub fn mean_segment_length(histogram: &BTreeMap<usize, usize>) -> Option<f64> {
    let lines: usize = histogram.values().sum();
    let pixels: usize = histogram.iter().map(|(len, n)| len * n).sum();
    (lines > 0).then(|| pixels as f64 / lines as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn textured(width: usize, height: usize) -> ColorImage {
        ColorImage::from_fn(width, height, |r, c| {
            [
                ((r * 37 + c * 91) % 251) as u8,
                ((c * c + r) % 256) as u8,
                (c * 13 % 200) as u8,
            ]
        })
    }

    #[test]
    fn config_validation() {
        let w = MatchWindow::line(5).unwrap();
        assert!(GrowConfig::new(MatchWindow::new(2, 5).unwrap(), 40, 60.0).is_err());
        assert!(GrowConfig::new(w, 40, -1.0).is_err());
        assert!(GrowConfig::new(w, 40, f64::NAN).is_err());
        assert!(GrowConfig::new(w, 40, 0.0).is_ok());
    }

    #[test]
    fn identical_images_grow_whole_rows() {
        let img = textured(20, 4);
        let cfg = GrowConfig::new(MatchWindow::line(5).unwrap(), 6, 60.0).unwrap();
        let (d, s) = line_grow_match(&img, &img, &cfg).unwrap();
        for row in 0..4 {
            assert_eq!(s.get(row, 0), PointStatus::Root);
            assert_eq!(d.get(row, 0), Some(0));
            for col in 1..16 {
                assert_eq!(s.get(row, col), PointStatus::Region);
                assert_eq!(d.get(row, col), Some(0));
            }
            // last m-1 columns have no fitting window
            for col in 16..20 {
                assert_eq!(s.get(row, col), PointStatus::Idle);
                assert_eq!(d.get(row, col), None);
            }
        }
        assert_eq!(s.count(PointStatus::NotProcessed), 0);
        let hist = segment_lengths(&s);
        assert_eq!(hist, BTreeMap::from([(16, 4)]));
    }

    #[test]
    fn failed_growth_retries_same_pixel_as_root() {
        // Right row: a b c d ; left built so d=0 matches cols 0,1 and d=1
        // matches from col 2 on.
        let right = ColorImage::from_fn(6, 1, |_, c| [(c * 40) as u8, 0, 0]);
        let left = ColorImage::from_fn(6, 1, |_, c| match c {
            0 | 1 => [(c * 40) as u8, 0, 0],
            _ => [((c - 1) * 40) as u8, 0, 0],
        });
        let cfg = GrowConfig::new(MatchWindow::line(1).unwrap(), 1, 0.0).unwrap();
        let (d, s) = line_grow_match(&left, &right, &cfg).unwrap();
        use PointStatus::*;
        assert_eq!(s.row(0), &[Root, Region, Root, Region, Region, Idle]);
        assert_eq!(d.values(), &[Some(0), Some(0), Some(1), Some(1), Some(1), None]);
        assert_eq!(segment_lengths(&s), BTreeMap::from([(2, 1), (3, 1)]));
    }

    #[test]
    fn histogram_edge_cases() {
        let idle = PointStatusMap {
            width: 3,
            height: 2,
            statuses: vec![PointStatus::Idle; 6],
        };
        assert!(segment_lengths(&idle).is_empty());
        assert_eq!(mean_segment_length(&segment_lengths(&idle)), None);
        let mixed = PointStatusMap {
            width: 5,
            height: 1,
            statuses: vec![
                PointStatus::Root,
                PointStatus::Region,
                PointStatus::Idle,
                PointStatus::Root,
                PointStatus::Root,
            ],
        };
        assert_eq!(segment_lengths(&mixed), BTreeMap::from([(1, 2), (2, 1)]));
        assert_eq!(mean_segment_length(&segment_lengths(&mixed)), Some(4.0 / 3.0));
    }

    #[test]
    fn dimension_mismatch() {
        let cfg = GrowConfig::new(MatchWindow::line(1).unwrap(), 1, 1.0).unwrap();
        assert!(line_grow_match(&textured(4, 4), &textured(5, 4), &cfg).is_err());
    }
}
