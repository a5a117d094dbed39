//! Depth from disparity, world coordinates, median post-filtering and PLY
//! export.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use crate::disparity::DisparityMap;
use crate::error::{Error, Result};
use crate::image::{ColorImage, GrayMap};

/// Median window applied to disparities before depth conversion.
pub const DEFAULT_MEDIAN_WINDOW: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CameraRig {
    focal: f64,
    baseline: f64,
}

impl CameraRig {
    pub fn new(focal: f64, baseline: f64) -> Result<Self> {
        if !(focal > 0.0 && focal.is_finite() && baseline > 0.0 && baseline.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "focal length and baseline must be positive, got f={focal}, T={baseline}"
            )));
        }
        Ok(CameraRig { focal, baseline })
    }

    pub fn focal(&self) -> f64 {
        self.focal
    }

    pub fn baseline(&self) -> f64 {
        self.baseline
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DepthMap {
    width: usize,
    height: usize,
    z: Vec<Option<f64>>,
}

impl DepthMap {
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.width, self.height)
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Option<f64> {
        self.z[row * self.width + col]
    }

    pub fn values(&self) -> &[Option<f64>] {
        &self.z
    }

    pub fn to_gray(&self) -> GrayMap {
        let data = self.z.iter().map(|z| z.unwrap_or(f64::NAN)).collect();
        GrayMap::new(self.width, self.height, data).expect("dimensions match")
    }
}

/// `Z = f * T / d`. Zero disparity has no finite depth and stays unestimated.
pub fn depth_from_disparity(disparity: &DisparityMap, rig: &CameraRig) -> DepthMap {
    let z = disparity
        .values()
        .iter()
        .map(|d| d.filter(|&d| d > 0).map(|d| rig.focal * rig.baseline / d as f64))
        .collect();
    DepthMap {
        width: disparity.width(),
        height: disparity.height(),
        z,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CloudPoint {
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub color: [u8; 3],
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct PointCloud {
    pub points: Vec<CloudPoint>,
}

/// One point per estimated depth: `X = (Z - f)/f * row`, `Y = (Z - f)/f * col`,
/// colored from `colors` (the right image).
pub fn project_xyz(depth: &DepthMap, rig: &CameraRig, colors: &ColorImage) -> Result<PointCloud> {
    if depth.dims() != colors.dims() {
        return Err(Error::mismatch(depth.dims(), colors.dims()));
    }
    let mut points = Vec::new();
    for row in 0..depth.height {
        for col in 0..depth.width {
            if let Some(z) = depth.get(row, col) {
                let scale = (z - rig.focal) / rig.focal;
                points.push(CloudPoint {
                    x: scale * row as f64,
                    y: scale * col as f64,
                    z,
                    color: colors.pixel(row, col),
                });
            }
        }
    }
    Ok(PointCloud { points })
}

/// Median over estimated values in a centered `window` x `window`
/// neighborhood, shrinking at borders. Even counts take the lower middle.
pub fn median_filter(disparity: &DisparityMap, window: usize) -> Result<DisparityMap> {
    if window == 0 || window.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "median window must be odd and >= 1, got {window}"
        )));
    }
    let (width, height) = disparity.dims();
    let radius = window / 2;
    let mut out = DisparityMap::unestimated(width, height, disparity.max_disparity());
    let mut buf = Vec::with_capacity(window * window);
    for row in 0..height {
        for col in 0..width {
            buf.clear();
            for r in row.saturating_sub(radius)..=(row + radius).min(height - 1) {
                for c in col.saturating_sub(radius)..=(col + radius).min(width - 1) {
                    buf.extend(disparity.get(r, c));
                }
            }
            if buf.is_empty() {
                continue;
            }
            let mid = (buf.len() - 1) / 2;
            let (_, median, _) = buf.select_nth_unstable(mid);
            out.set(row, col, Some(*median));
        }
    }
    Ok(out)
}

/// ASCII PLY with float x, y, z and uchar red, green, blue.
pub fn write_ply(cloud: &PointCloud, mut out: impl Write) -> std::io::Result<()> {
    writeln!(out, "ply")?;
    writeln!(out, "format ascii 1.0")?;
    writeln!(out, "element vertex {}", cloud.points.len())?;
    for axis in ["x", "y", "z"] {
        writeln!(out, "property float {axis}")?;
    }
    for channel in ["red", "green", "blue"] {
        writeln!(out, "property uchar {channel}")?;
    }
    writeln!(out, "end_header")?;
    for p in &cloud.points {
        let [r, g, b] = p.color;
        writeln!(out, "{} {} {} {r} {g} {b}", p.x, p.y, p.z)?;
    }
    out.flush()
}

pub fn export_ply(cloud: &PointCloud, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    write_ply(cloud, BufWriter::new(file)).map_err(|e| Error::io(path, e))
}
