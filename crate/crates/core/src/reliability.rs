//! Disparity-map energy, reliability score and average-error thresholding.
//!
//! Reliability is the reciprocal of the mean energy over estimated pixels.
//! The filter threshold is `alpha` times the mean energy of the unfiltered
//! map; pixels above it lose their estimate. Lowering `alpha` only ever
//! removes the highest energies, so reliability cannot drop.

use crate::disparity::DisparityMap;
use crate::energy::{check_pair, window_energy, MatchWindow};
use crate::error::{Error, Result};
use crate::image::{ColorImage, GrayMap};

/// Per-pixel energy of a chosen disparity map; `None` marks no estimate.
#[derive(Debug, Clone, PartialEq)]
pub struct MapEnergy {
    width: usize,
    height: usize,
    entries: Vec<Option<f64>>,
}

impl MapEnergy {
    pub fn new(width: usize, height: usize, entries: Vec<Option<f64>>) -> Result<Self> {
        if entries.len() != width * height {
            return Err(Error::Malformed(format!(
                "expected {} energies for {width}x{height}, got {}",
                width * height,
                entries.len()
            )));
        }
        if entries.iter().flatten().any(|&e| !(e.is_finite() && e >= 0.0)) {
            return Err(Error::InvalidParameter(
                "map energies must be finite and nonnegative".into(),
            ));
        }
        Ok(MapEnergy {
            width,
            height,
            entries,
        })
    }

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
        self.entries[row * self.width + col]
    }

    pub fn entries(&self) -> &[Option<f64>] {
        &self.entries
    }

    pub fn estimated_count(&self) -> usize {
        self.entries.iter().flatten().count()
    }

    /// Energies as reals; no-estimate pixels become NaN.
    pub fn to_gray(&self) -> GrayMap {
        let data = self.entries.iter().map(|e| e.unwrap_or(f64::NAN)).collect();
        GrayMap::new(self.width, self.height, data).expect("dimensions match")
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReliabilityReport {
    /// `1 / mean_energy`; `+inf` when the mean is zero or nothing remains.
    pub r_d: f64,
    /// Number of estimated pixels.
    pub s_d: usize,
    pub mean_energy: f64,
    /// Threshold applied by the filter, if any.
    pub ve: Option<f64>,
    pub alpha: Option<f64>,
    /// Estimated pixels after filtering over those before.
    pub retained_fraction: f64,
}

impl ReliabilityReport {
    pub const CSV_HEADER: &'static str = "r_d,s_d,mean_energy,ve,alpha,retained_fraction";

    pub fn csv_record(&self) -> String {
        let opt = |v: Option<f64>| v.map_or(String::new(), |v| v.to_string());
        format!(
            "{},{},{},{},{},{}",
            self.r_d,
            self.s_d,
            self.mean_energy,
            opt(self.ve),
            opt(self.alpha),
            self.retained_fraction
        )
    }
}

impl std::fmt::Display for ReliabilityReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "reliability R_d     : {}", self.r_d)?;
        writeln!(f, "estimated pixels    : {}", self.s_d)?;
        writeln!(f, "mean energy         : {}", self.mean_energy)?;
        if let (Some(ve), Some(alpha)) = (self.ve, self.alpha) {
            writeln!(f, "threshold Ve        : {ve} (alpha {alpha})")?;
        }
        write!(f, "retained fraction   : {}", self.retained_fraction)
    }
}

/// Energy at each pixel's assigned disparity. Unestimated pixels and windows
/// that do not fit give no estimate.
pub fn map_energy(
    left: &ColorImage,
    right: &ColorImage,
    disparity: &DisparityMap,
    win: MatchWindow,
) -> Result<MapEnergy> {
    check_pair(left, right)?;
    if disparity.dims() != right.dims() {
        return Err(Error::mismatch(right.dims(), disparity.dims()));
    }
    let (width, height) = right.dims();
    let mut entries = Vec::with_capacity(width * height);
    for row in 0..height {
        for col in 0..width {
            entries.push(
                disparity
                    .get(row, col)
                    .and_then(|d| window_energy(left, right, win, row, col, d)),
            );
        }
    }
    MapEnergy::new(width, height, entries)
}

fn mean_of(entries: &[Option<f64>]) -> Option<(f64, usize)> {
    let (sum, count) = entries
        .iter()
        .flatten()
        .fold((0.0, 0usize), |(s, n), &e| (s + e, n + 1));
    (count > 0).then(|| (sum / count as f64, count))
}

fn reciprocal(mean: f64) -> f64 {
    if mean > 0.0 {
        1.0 / mean
    } else {
        f64::INFINITY
    }
}

pub fn reliability(energy: &MapEnergy) -> Result<ReliabilityReport> {
    let (mean, count) = mean_of(&energy.entries).ok_or(Error::NoEstimates)?;
    Ok(ReliabilityReport {
        r_d: reciprocal(mean),
        s_d: count,
        mean_energy: mean,
        ve: None,
        alpha: None,
        retained_fraction: 1.0,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Filtered {
    pub disparity: DisparityMap,
    pub energy: MapEnergy,
    pub report: ReliabilityReport,
}

/// Drops every estimate whose energy exceeds `alpha` times the mean energy.
///
/// If nothing survives, the report carries `r_d = +inf`, `s_d = 0` and a
/// zero mean.
pub fn filter_unreliable(disparity: &DisparityMap, energy: &MapEnergy, alpha: f64) -> Result<Filtered> {
    if !(alpha.is_finite() && alpha >= 0.0) {
        return Err(Error::InvalidParameter(format!(
            "alpha must be finite and >= 0, got {alpha}"
        )));
    }
    if disparity.dims() != energy.dims() {
        return Err(Error::mismatch(disparity.dims(), energy.dims()));
    }
    let (mean, before) = mean_of(&energy.entries).ok_or(Error::NoEstimates)?;
    let ve = alpha * mean;

    let entries: Vec<Option<f64>> = energy.entries.iter().map(|e| e.filter(|&e| e <= ve)).collect();
    let values = disparity
        .values()
        .iter()
        .zip(&entries)
        .map(|(&d, e)| e.and(d))
        .collect();

    let (filtered_mean, after) = mean_of(&entries).unwrap_or((0.0, 0));
    let report = ReliabilityReport {
        r_d: reciprocal(filtered_mean),
        s_d: after,
        mean_energy: filtered_mean,
        ve: Some(ve),
        alpha: Some(alpha),
        retained_fraction: after as f64 / before as f64,
    };
    Ok(Filtered {
        disparity: DisparityMap::new(
            disparity.width(),
            disparity.height(),
            disparity.max_disparity(),
            values,
        )?,
        energy: MapEnergy {
            width: energy.width,
            height: energy.height,
            entries,
        },
        report,
    })
}

/// Filters the same unfiltered inputs at each of the strictly decreasing
/// `alphas` and checks that reliability never drops.
pub fn verify_monotonicity(
    disparity: &DisparityMap,
    energy: &MapEnergy,
    alphas: &[f64],
) -> Result<Vec<ReliabilityReport>> {
    if alphas
        .windows(2)
        .any(|w| w[1].partial_cmp(&w[0]) != Some(std::cmp::Ordering::Less))
    {
        return Err(Error::InvalidParameter(
            "alphas must be strictly decreasing".into(),
        ));
    }
    let mut reports: Vec<ReliabilityReport> = Vec::with_capacity(alphas.len());
    for &alpha in alphas {
        let report = filter_unreliable(disparity, energy, alpha)?.report;
        if let Some(prev) = reports.last() {
            if report.r_d < prev.r_d {
                return Err(Error::MonotonicityViolation {
                    alpha,
                    previous: prev.r_d,
                    current: report.r_d,
                });
            }
        }
        reports.push(report);
    }
    Ok(reports)
}
