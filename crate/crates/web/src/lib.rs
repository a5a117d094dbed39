//! WebAssembly bindings for the browser demo in `www/`.
//!
//! The page drives three operations on a synthetic layered scene: the
//! global matcher, line growing (with its point-status map) and the
//! reliability filter. Images come back as RGBA bytes for `ImageData`.

mod session;

pub use session::{disparity_rgba, image_rgba, status_rgba, FilterStats, MatchStats, Session};

use wasm_bindgen::prelude::*;

fn js_err(e: regionstereo::Error) -> JsError {
    JsError::new(&e.to_string())
}

#[wasm_bindgen]
pub struct Demo {
    inner: Session,
}

#[wasm_bindgen]
pub struct MatchSummary {
    pub estimated: usize,
    pub r_d: f64,
    pub roots: usize,
    pub idle: usize,
    pub mean_line: f64,
}

#[wasm_bindgen]
pub struct FilterSummary {
    pub r_d_before: f64,
    pub r_d_after: f64,
    pub ve: f64,
    pub retained_fraction: f64,
}

#[wasm_bindgen]
impl Demo {
    #[wasm_bindgen(constructor)]
    pub fn new(width: usize, height: usize, seed: u32) -> Demo {
        Demo {
            inner: Session::new(width.max(8), height.max(4), u64::from(seed)),
        }
    }

    pub fn width(&self) -> usize {
        self.inner.dims().0
    }

    pub fn height(&self) -> usize {
        self.inner.dims().1
    }

    pub fn left_rgba(&self) -> Vec<u8> {
        image_rgba(self.inner.left())
    }

    pub fn right_rgba(&self) -> Vec<u8> {
        image_rgba(self.inner.right())
    }

    pub fn truth_rgba(&self) -> Vec<u8> {
        disparity_rgba(self.inner.truth())
    }

    pub fn run_global(
        &mut self,
        n: usize,
        m: usize,
        d_max: usize,
        iterations: usize,
    ) -> Result<MatchSummary, JsError> {
        self.inner
            .run_global(n, m, d_max, iterations)
            .map(summary)
            .map_err(js_err)
    }

    pub fn run_linegrow(&mut self, m: usize, d_max: usize, v_lg: f64) -> Result<MatchSummary, JsError> {
        self.inner
            .run_linegrow(m, d_max, v_lg)
            .map(summary)
            .map_err(js_err)
    }

    /// Filters the last match; `undefined` before any match has run.
    pub fn filter(&mut self, alpha: f64) -> Result<Option<FilterSummary>, JsError> {
        let stats = self.inner.filter(alpha).map_err(js_err)?;
        Ok(stats.map(|s| FilterSummary {
            r_d_before: s.r_d_before,
            r_d_after: s.r_d_after,
            ve: s.ve,
            retained_fraction: s.retained_fraction,
        }))
    }

    pub fn disparity_rgba(&self) -> Option<Vec<u8>> {
        self.inner.disparity().map(disparity_rgba)
    }

    pub fn status_rgba(&self) -> Option<Vec<u8>> {
        self.inner.status().map(status_rgba)
    }

    pub fn filtered_rgba(&self) -> Option<Vec<u8>> {
        self.inner.filtered().map(disparity_rgba)
    }
}

fn summary(s: MatchStats) -> MatchSummary {
    MatchSummary {
        estimated: s.estimated,
        r_d: s.r_d,
        roots: s.roots,
        idle: s.idle,
        mean_line: s.mean_line,
    }
}
