//! Benchmark harness: runs matcher configurations end to end and records
//! reliability before and after filtering, matching time and optional
//! ground-truth error.

use std::io::Write;
use std::time::Instant;

use serde::Serialize;

use crate::disparity::DisparityMap;
use crate::energy::MatchWindow;
use crate::error::{Error, Result};
use crate::global::global_match;
use crate::image::{ColorImage, GrayMap};
use crate::linegrow::{line_grow_match, GrowConfig};
use crate::reliability::{filter_unreliable, map_energy, reliability};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Matcher {
    Global { window: MatchWindow, iterations: usize },
    LineGrow { config: GrowConfig },
}

impl Matcher {
    pub fn window(&self) -> MatchWindow {
        match self {
            Matcher::Global { window, .. } => *window,
            Matcher::LineGrow { config } => config.window(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub label: String,
    pub matcher: Matcher,
    pub max_disparity: usize,
}

impl BenchConfig {
    /// Global 1x1, 1x5, 3x3 and line growing at thresholds 60 and 10, all
    /// searching disparities 0..=40.
    pub fn canonical(iterations: usize) -> Vec<BenchConfig> {
        const MAX_DISPARITY: usize = 40;
        let global = |rows, cols| {
            let window = MatchWindow::new(rows, cols).expect("positive window");
            BenchConfig {
                label: format!("global {window}"),
                matcher: Matcher::Global { window, iterations },
                max_disparity: MAX_DISPARITY,
            }
        };
        let grow = |threshold: f64| {
            let config = GrowConfig::new(MatchWindow::line(5).expect("positive"), MAX_DISPARITY, threshold)
                .expect("valid threshold");
            BenchConfig {
                label: format!("linegrow 1x5 vlg={threshold}"),
                matcher: Matcher::LineGrow { config },
                max_disparity: MAX_DISPARITY,
            }
        };
        vec![global(1, 1), global(1, 5), global(3, 3), grow(60.0), grow(10.0)]
    }
}

/// Disparity map from one matcher run plus the wall-clock time it took.
#[derive(Debug, Clone)]
pub struct TimedMatch {
    pub disparity: DisparityMap,
    pub seconds: f64,
}

pub fn run_matcher(left: &ColorImage, right: &ColorImage, config: &BenchConfig) -> Result<TimedMatch> {
    let start = Instant::now();
    let disparity = match &config.matcher {
        Matcher::Global { window, iterations } => {
            global_match(left, right, *window, config.max_disparity, *iterations)?.0
        }
        Matcher::LineGrow { config } => line_grow_match(left, right, config)?.0,
    };
    let seconds = start.elapsed().as_secs_f64();
    Ok(TimedMatch { disparity, seconds })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroundTruth<'a> {
    pub map: &'a GrayMap,
    /// Divisor turning stored truth values into disparities.
    pub scale: f64,
    pub threshold: f64,
}

/// How pixels a matcher left unassigned enter the reliability score.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Unassigned {
    /// Scored as disparity 0, like a zero-initialized map. Only the
    /// reliability filter creates no-estimate pixels.
    #[default]
    ZeroDisparity,
    /// Left out of the score.
    Exclude,
}

impl std::str::FromStr for Unassigned {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "zero" => Ok(Unassigned::ZeroDisparity),
            "exclude" => Ok(Unassigned::Exclude),
            other => Err(Error::InvalidParameter(format!(
                "unknown unassigned policy {other:?} (expected zero or exclude)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchOptions<'a> {
    pub alpha: f64,
    pub unassigned: Unassigned,
    pub truth: Option<GroundTruth<'a>>,
}

impl Default for BenchOptions<'_> {
    fn default() -> Self {
        BenchOptions {
            alpha: 1.0,
            unassigned: Unassigned::default(),
            truth: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRecord {
    pub label: String,
    pub r_d_unfiltered: f64,
    pub r_d_filtered: f64,
    pub seconds: f64,
    pub retained_fraction: f64,
    pub bad_pixel_rate: Option<f64>,
}

/// Assigns disparity 0 to every unestimated pixel.
pub fn zero_fill(disparity: &DisparityMap) -> DisparityMap {
    let values = disparity.values().iter().map(|v| Some(v.unwrap_or(0))).collect();
    DisparityMap::new(
        disparity.width(),
        disparity.height(),
        disparity.max_disparity(),
        values,
    )
    .expect("zero is always in range")
}

/// Runs every configuration in order: match (timed), map energy,
/// reliability, filter. Bad-pixel rate is scored on the matcher's own map.
pub fn run_benchmark(
    left: &ColorImage,
    right: &ColorImage,
    configs: &[BenchConfig],
    options: &BenchOptions<'_>,
) -> Result<Vec<BenchRecord>> {
    if configs.is_empty() {
        return Err(Error::InvalidParameter("no benchmark configurations".into()));
    }
    configs
        .iter()
        .map(|config| {
            let timed = run_matcher(left, right, config)?;
            let scored = match options.unassigned {
                Unassigned::ZeroDisparity => zero_fill(&timed.disparity),
                Unassigned::Exclude => timed.disparity.clone(),
            };
            let energy = map_energy(left, right, &scored, config.matcher.window())?;
            let unfiltered = reliability(&energy)?;
            let filtered = filter_unreliable(&scored, &energy, options.alpha)?;
            let bad_pixel_rate = options
                .truth
                .map(|t| bad_pixel_rate(&timed.disparity, t.map, t.threshold, t.scale))
                .transpose()?;
            Ok(BenchRecord {
                label: config.label.clone(),
                r_d_unfiltered: unfiltered.r_d,
                r_d_filtered: filtered.report.r_d,
                seconds: timed.seconds,
                retained_fraction: filtered.report.retained_fraction,
                bad_pixel_rate,
            })
        })
        .collect()
}

/// Fraction of estimated pixels whose disparity differs from
/// `truth / scale` by more than `threshold`.
pub fn bad_pixel_rate(disparity: &DisparityMap, truth: &GrayMap, threshold: f64, scale: f64) -> Result<f64> {
    if disparity.dims() != truth.dims() {
        return Err(Error::mismatch(disparity.dims(), truth.dims()));
    }
    if !(scale.is_finite() && scale > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "truth scale must be positive, got {scale}"
        )));
    }
    let (mut bad, mut total) = (0usize, 0usize);
    for (d, &t) in disparity.values().iter().zip(truth.data()) {
        if let Some(d) = d {
            total += 1;
            if (*d as f64 - t / scale).abs() > threshold {
                bad += 1;
            }
        }
    }
    if total == 0 {
        return Err(Error::NoEstimates);
    }
    Ok(bad as f64 / total as f64)
}

pub fn write_csv(records: &[BenchRecord], out: impl Write) -> Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    for record in records {
        writer.serialize(record)?;
    }
    writer.flush().map_err(|e| Error::io("<csv>", e))?;
    Ok(())
}

pub fn format_table(records: &[BenchRecord]) -> String {
    let width = records.iter().map(|r| r.label.len()).max().unwrap_or(5).max(5);
    let mut out = format!(
        "{:<width$}  {:>12}  {:>12}  {:>10}  {:>9}  {:>9}\n",
        "label", "R_d", "R_d filt", "seconds", "retained", "bad"
    );
    for r in records {
        let bad = r.bad_pixel_rate.map_or("-".to_string(), |b| format!("{b:.4}"));
        out.push_str(&format!(
            "{:<width$}  {:>12.6}  {:>12.6}  {:>10.4}  {:>9.4}  {:>9}\n",
            r.label, r.r_d_unfiltered, r.r_d_filtered, r.seconds, r.retained_fraction, bad
        ));
    }
    out
}
