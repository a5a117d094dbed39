//! Region based dense stereo matching for rectified color pairs.
//!
//! Two matchers share one energy definition, the mean squared RGB difference
//! over an `n x m` window between the right image and the left image shifted
//! by the candidate disparity:
//!
//! * [`global::global_match`] smooths every disparity slice of the energy
//!   volume with repeated mean filtering and takes the per-pixel minimum.
//! * [`linegrow::line_grow_match`] grows disparity runs along scanlines from
//!   seed pixels whose best energy is within a threshold.
//!
//! Results can be scored and thinned with [`reliability`], converted to
//! depth and point clouds with [`depth`], and compared with [`eval`].
//! All maps are registered to the right image.

pub mod config;
pub mod depth;
pub mod disparity;
pub mod energy;
pub mod error;
pub mod eval;
pub mod global;
pub mod image;
pub mod linegrow;
mod par;
pub mod reliability;
pub mod synthetic;

pub use disparity::DisparityMap;
pub use energy::{box_smooth, compute_energy_volume, ErrorEnergyVolume, MatchWindow};
pub use error::{Error, Result};
pub use global::{global_match, wta_select};
pub use image::{ColorImage, GrayMap};
pub use linegrow::{line_grow_match, GrowConfig, PointStatus, PointStatusMap};
pub use reliability::{filter_unreliable, map_energy, reliability, MapEnergy, ReliabilityReport};
