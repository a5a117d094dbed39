//! Run configuration with layered sources: built-in defaults, then a
//! `key = value` config file, then command-line overrides.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::depth::{CameraRig, DEFAULT_MEDIAN_WINDOW};
use crate::energy::MatchWindow;
use crate::error::{Error, Result};
use crate::global::DEFAULT_ITERATIONS;
use crate::linegrow::GrowConfig;

/// Largest disparity that still fits an 8-bit disparity raster.
pub const MAX_SUPPORTED_DISPARITY: usize = 255;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgorithmKind {
    Global,
    Linegrow,
}

impl FromStr for AlgorithmKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "global" => Ok(AlgorithmKind::Global),
            "linegrow" => Ok(AlgorithmKind::Linegrow),
            other => Err(Error::InvalidParameter(format!(
                "unknown algorithm {other:?} (expected global or linegrow)"
            ))),
        }
    }
}

impl fmt::Display for AlgorithmKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlgorithmKind::Global => "global",
            AlgorithmKind::Linegrow => "linegrow",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub algorithm: AlgorithmKind,
    pub n: usize,
    pub m: usize,
    pub d_max: usize,
    pub iterations: usize,
    pub v_lg: f64,
    pub alpha: f64,
    pub f: f64,
    pub t: f64,
    pub median: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub left: Option<PathBuf>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub right: Option<PathBuf>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dump_volume: Option<PathBuf>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dump_status: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            algorithm: AlgorithmKind::Global,
            n: 1,
            m: 5,
            d_max: 40,
            iterations: DEFAULT_ITERATIONS,
            v_lg: 60.0,
            alpha: 1.0,
            f: 30.0,
            t: 20.0,
            median: DEFAULT_MEDIAN_WINDOW,
            left: None,
            right: None,
            output: None,
            dump_volume: None,
            dump_status: None,
        }
    }
}

/// One configuration source; unset fields leave lower layers untouched.
#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigLayer {
    pub algorithm: Option<AlgorithmKind>,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub d_max: Option<usize>,
    pub iterations: Option<usize>,
    pub v_lg: Option<f64>,
    pub alpha: Option<f64>,
    pub f: Option<f64>,
    pub t: Option<f64>,
    pub median: Option<usize>,
    pub left: Option<PathBuf>,
    pub right: Option<PathBuf>,
    pub output: Option<PathBuf>,
    pub dump_volume: Option<PathBuf>,
    pub dump_status: Option<PathBuf>,
}

impl ConfigLayer {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| {
            let line = e.span().map_or(1, |span| {
                text[..span.start.min(text.len())].matches('\n').count() + 1
            });
            Error::ConfigParse {
                line,
                message: e.message().trim().to_string(),
            }
        })
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text)
    }
}

macro_rules! overlay {
    ($target:ident, $layer:ident, $($field:ident),*) => {
        $( if let Some(v) = $layer.$field { $target.$field = v; } )*
    };
}

impl RunConfig {
    /// Applies `layer` on top of `self` without validating.
    pub fn overlay(mut self, layer: ConfigLayer) -> Self {
        overlay!(self, layer, algorithm, n, m, d_max, iterations, v_lg, alpha, f, t, median);
        for (slot, value) in [
            (&mut self.left, layer.left),
            (&mut self.right, layer.right),
            (&mut self.output, layer.output),
            (&mut self.dump_volume, layer.dump_volume),
            (&mut self.dump_status, layer.dump_status),
        ] {
            if value.is_some() {
                *slot = value;
            }
        }
        self
    }

    /// Defaults, then `file`, then `cli`, validated.
    pub fn resolve(file: Option<ConfigLayer>, cli: ConfigLayer) -> Result<Self> {
        let mut config = RunConfig::default();
        if let Some(file) = file {
            config = config.overlay(file);
        }
        let config = config.overlay(cli);
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        if self.n == 0 {
            return bad(format!("n must be >= 1, got {}", self.n));
        }
        if self.m == 0 {
            return bad(format!("m must be >= 1, got {}", self.m));
        }
        if self.d_max > MAX_SUPPORTED_DISPARITY {
            return bad(format!(
                "d_max must be <= {MAX_SUPPORTED_DISPARITY}, got {}",
                self.d_max
            ));
        }
        if self.algorithm == AlgorithmKind::Linegrow && self.n != 1 {
            return bad(format!("linegrow needs n = 1, got {}", self.n));
        }
        if !(self.v_lg.is_finite() && self.v_lg >= 0.0) {
            return bad(format!("v_lg must be finite and >= 0, got {}", self.v_lg));
        }
        if !(self.alpha.is_finite() && self.alpha >= 0.0) {
            return bad(format!("alpha must be finite and >= 0, got {}", self.alpha));
        }
        if self.median == 0 || self.median.is_multiple_of(2) {
            return bad(format!("median must be odd and >= 1, got {}", self.median));
        }
        CameraRig::new(self.f, self.t)?;
        Ok(())
    }

    pub fn window(&self) -> Result<MatchWindow> {
        MatchWindow::new(self.n, self.m)
    }

    pub fn grow_config(&self) -> Result<GrowConfig> {
        GrowConfig::new(self.window()?, self.d_max, self.v_lg)
    }

    pub fn rig(&self) -> Result<CameraRig> {
        CameraRig::new(self.f, self.t)
    }

    /// The resolved configuration in config-file syntax.
    pub fn to_file_text(&self) -> String {
        toml::to_string(self).expect("plain fields serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_file_gives_defaults() {
        let c = RunConfig::resolve(Some(ConfigLayer::parse("").unwrap()), ConfigLayer::default()).unwrap();
        assert_eq!(c, RunConfig::default());
        assert_eq!((c.d_max, c.f, c.t, c.alpha), (40, 30.0, 20.0, 1.0));
    }

    #[test]
    fn single_override() {
        let c = RunConfig::resolve(
            Some(ConfigLayer::parse("alpha = 0.5\n").unwrap()),
            ConfigLayer::default(),
        )
        .unwrap();
        assert_eq!(c.alpha, 0.5);
        assert_eq!(
            c,
            RunConfig {
                alpha: 0.5,
                ..RunConfig::default()
            }
        );
    }

    #[test]
    fn zero_window_is_range_error() {
        let err = RunConfig::resolve(Some(ConfigLayer::parse("n = 0").unwrap()), ConfigLayer::default());
        assert!(matches!(err, Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn unknown_key_reports_line() {
        let err = ConfigLayer::parse("alpha = 1.0\n\nbogus = 3\n").unwrap_err();
        match err {
            Error::ConfigParse { line, message } => {
                assert_eq!(line, 3);
                assert!(message.contains("bogus"), "{message}");
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            ConfigLayer::parse("d_max = \"many\"\n"),
            Err(Error::ConfigParse { line: 1, .. })
        ));
    }

    #[test]
    fn cli_beats_file_beats_default() {
        let file = ConfigLayer::parse("alpha = 0.5\nd_max = 20\nalgorithm = \"linegrow\"\n").unwrap();
        let cli = ConfigLayer {
            d_max: Some(12),
            ..ConfigLayer::default()
        };
        let c = RunConfig::resolve(Some(file), cli).unwrap();
        assert_eq!(c.d_max, 12);
        assert_eq!(c.alpha, 0.5);
        assert_eq!(c.algorithm, AlgorithmKind::Linegrow);
        assert_eq!(c.f, 30.0);
    }

    #[test]
    fn other_ranges() {
        let check =
            |text: &str| RunConfig::resolve(Some(ConfigLayer::parse(text).unwrap()), ConfigLayer::default());
        assert!(check("median = 4").is_err());
        assert!(check("alpha = -1.0").is_err());
        assert!(check("f = 0.0").is_err());
        assert!(check("d_max = 300").is_err());
        assert!(check("algorithm = \"linegrow\"\nn = 3").is_err());
        assert!(check("v_lg = -2.0").is_err());
    }

    #[test]
    fn echo_round_trips() {
        let c = RunConfig {
            alpha: 0.25,
            left: Some("l.ppm".into()),
            ..RunConfig::default()
        };
        let back = RunConfig::resolve(
            Some(ConfigLayer::parse(&c.to_file_text()).unwrap()),
            ConfigLayer::default(),
        )
        .unwrap();
        assert_eq!(back, c);
    }
}
