//! Global error-energy minimization: build the energy volume, smooth every
//! slice with repeated mean filtering, then take the per-pixel minimum.

use crate::disparity::DisparityMap;
use crate::energy::{compute_energy_volume, ErrorEnergyVolume, MatchWindow};
use crate::error::Result;
use crate::image::ColorImage;
use crate::par;

/// Smoothing passes used when the caller does not choose.
pub const DEFAULT_ITERATIONS: usize = 10;

/// Returns the disparity map and the smoothed volume it was selected from.
pub fn global_match(
    left: &ColorImage,
    right: &ColorImage,
    win: MatchWindow,
    max_disparity: usize,
    iterations: usize,
) -> Result<(DisparityMap, ErrorEnergyVolume)> {
    let volume = compute_energy_volume(left, right, win, max_disparity)?.smoothed(win, iterations);
    let disparity = wta_select(&volume);
    Ok((disparity, volume))
}

/// Per-pixel argmin over finite energies. Ties go to the smallest disparity;
/// pixels with no finite energy are left unestimated.
pub fn wta_select(volume: &ErrorEnergyVolume) -> DisparityMap {
    let (width, height) = (volume.width(), volume.height());
    let rows = par::map_range(height, |row| {
        (0..width)
            .map(|col| {
                let mut best: Option<(usize, f64)> = None;
                for (d, slice) in volume.slices().iter().enumerate() {
                    let e = slice.get(row, col);
                    if e.is_finite() && best.is_none_or(|(_, b)| e < b) {
                        best = Some((d, e));
                    }
                }
                best.map(|(d, _)| d)
            })
            .collect::<Vec<_>>()
    });
    DisparityMap::new(
        width,
        height,
        volume.max_disparity(),
        rows.into_iter().flatten().collect(),
    )
    .expect("argmin stays within the volume")
}
