//! Demo state kept free of JS types so it can be tested natively.

use regionstereo::linegrow::{mean_segment_length, segment_lengths};
use regionstereo::reliability::{filter_unreliable, map_energy, reliability};
use regionstereo::synthetic::{lab_scene_sized, SyntheticScene};
use regionstereo::{
    global_match, line_grow_match, ColorImage, DisparityMap, GrowConfig, MatchWindow, PointStatus,
    PointStatusMap, Result,
};

/// Color used for pixels without an estimate.
pub const UNESTIMATED_RGB: [u8; 3] = [150, 30, 90];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatchStats {
    pub estimated: usize,
    pub r_d: f64,
    pub roots: usize,
    pub idle: usize,
    pub mean_line: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FilterStats {
    pub r_d_before: f64,
    pub r_d_after: f64,
    pub ve: f64,
    pub retained_fraction: f64,
}

pub struct Session {
    scene: SyntheticScene,
    disparity: Option<DisparityMap>,
    window: MatchWindow,
    status: Option<PointStatusMap>,
    filtered: Option<DisparityMap>,
}

impl Session {
    pub fn new(width: usize, height: usize, seed: u64) -> Self {
        Session {
            scene: lab_scene_sized(width, height, seed),
            disparity: None,
            window: MatchWindow::new(1, 1).expect("positive"),
            status: None,
            filtered: None,
        }
    }

    pub fn dims(&self) -> (usize, usize) {
        self.scene.right.dims()
    }

    pub fn left(&self) -> &ColorImage {
        &self.scene.left
    }

    pub fn right(&self) -> &ColorImage {
        &self.scene.right
    }

    pub fn truth(&self) -> &DisparityMap {
        &self.scene.truth
    }

    pub fn disparity(&self) -> Option<&DisparityMap> {
        self.disparity.as_ref()
    }

    pub fn status(&self) -> Option<&PointStatusMap> {
        self.status.as_ref()
    }

    pub fn filtered(&self) -> Option<&DisparityMap> {
        self.filtered.as_ref()
    }

    pub fn run_global(&mut self, n: usize, m: usize, d_max: usize, iterations: usize) -> Result<MatchStats> {
        let window = MatchWindow::new(n, m)?;
        let (d, _) = global_match(&self.scene.left, &self.scene.right, window, d_max, iterations)?;
        self.store(d, window, None)
    }

    pub fn run_linegrow(&mut self, m: usize, d_max: usize, v_lg: f64) -> Result<MatchStats> {
        let window = MatchWindow::line(m)?;
        let cfg = GrowConfig::new(window, d_max, v_lg)?;
        let (d, status) = line_grow_match(&self.scene.left, &self.scene.right, &cfg)?;
        self.store(d, window, Some(status))
    }

    fn store(
        &mut self,
        d: DisparityMap,
        window: MatchWindow,
        status: Option<PointStatusMap>,
    ) -> Result<MatchStats> {
        let energy = map_energy(&self.scene.left, &self.scene.right, &d, window)?;
        let r_d = if energy.estimated_count() > 0 {
            reliability(&energy)?.r_d
        } else {
            f64::NAN
        };
        let (roots, idle, mean_line) = match &status {
            Some(s) => (
                s.count(PointStatus::Root),
                s.count(PointStatus::Idle),
                mean_segment_length(&segment_lengths(s)).unwrap_or(0.0),
            ),
            None => (0, 0, 0.0),
        };
        let stats = MatchStats {
            estimated: d.estimated_count(),
            r_d,
            roots,
            idle,
            mean_line,
        };
        self.disparity = Some(d);
        self.window = window;
        self.status = status;
        self.filtered = None;
        Ok(stats)
    }

    /// Filters the last match at `alpha`. `None` before any match.
    pub fn filter(&mut self, alpha: f64) -> Result<Option<FilterStats>> {
        let Some(d) = &self.disparity else {
            return Ok(None);
        };
        let energy = map_energy(&self.scene.left, &self.scene.right, d, self.window)?;
        let before = reliability(&energy)?;
        let f = filter_unreliable(d, &energy, alpha)?;
        let stats = FilterStats {
            r_d_before: before.r_d,
            r_d_after: f.report.r_d,
            ve: f.report.ve.unwrap_or(f64::NAN),
            retained_fraction: f.report.retained_fraction,
        };
        self.filtered = Some(f.disparity);
        Ok(Some(stats))
    }
}

pub fn image_rgba(img: &ColorImage) -> Vec<u8> {
    img.data()
        .chunks_exact(3)
        .flat_map(|p| [p[0], p[1], p[2], 255])
        .collect()
}

/// Gray ramp over `0..=max_disparity`, unestimated pixels in a flag color.
pub fn disparity_rgba(d: &DisparityMap) -> Vec<u8> {
    let scale = 255.0 / d.max_disparity().max(1) as f64;
    d.values()
        .iter()
        .flat_map(|v| match v {
            Some(x) => {
                let g = (*x as f64 * scale).round().min(255.0) as u8;
                [g, g, g, 255]
            }
            None => {
                let [r, g, b] = UNESTIMATED_RGB;
                [r, g, b, 255]
            }
        })
        .collect()
}

pub fn status_rgba(s: &PointStatusMap) -> Vec<u8> {
    s.statuses()
        .iter()
        .flat_map(|st| match st {
            PointStatus::NotProcessed => [0, 0, 0, 255],
            PointStatus::Region => [70, 170, 90, 255],
            PointStatus::Root => [230, 80, 40, 255],
            PointStatus::Idle => [40, 40, 48, 255],
        })
        .collect()
}
