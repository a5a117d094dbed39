use crate::error::{Error, Result};
use crate::image::GrayMap;

/// Integer disparity per right-image pixel; `None` is the no-estimate state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisparityMap {
    width: usize,
    height: usize,
    max_disparity: usize,
    values: Vec<Option<usize>>,
}

impl DisparityMap {
    pub fn new(
        width: usize,
        height: usize,
        max_disparity: usize,
        values: Vec<Option<usize>>,
    ) -> Result<Self> {
        if values.len() != width * height {
            return Err(Error::Malformed(format!(
                "expected {} disparities for {width}x{height}, got {}",
                width * height,
                values.len()
            )));
        }
        if let Some(d) = values.iter().flatten().find(|&&d| d > max_disparity) {
            return Err(Error::InvalidParameter(format!(
                "disparity {d} exceeds maximum {max_disparity}"
            )));
        }
        Ok(DisparityMap {
            width,
            height,
            max_disparity,
            values,
        })
    }

    pub fn unestimated(width: usize, height: usize, max_disparity: usize) -> Self {
        DisparityMap {
            width,
            height,
            max_disparity,
            values: vec![None; width * height],
        }
    }

    /// Rebuilds a map from a disparity raster and an optional mask where
    /// nonzero marks an estimated pixel. Without a mask every pixel counts
    /// as estimated.
    pub fn from_raster(raster: &GrayMap, mask: Option<&GrayMap>, max_disparity: usize) -> Result<Self> {
        if let Some(mask) = mask {
            if mask.dims() != raster.dims() {
                return Err(Error::mismatch(raster.dims(), mask.dims()));
            }
        }
        let values = raster
            .data()
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let estimated = mask.is_none_or(|m| m.data()[i] != 0.0);
                (estimated && v.is_finite() && v >= 0.0).then(|| v.round() as usize)
            })
            .collect();
        DisparityMap::new(raster.width(), raster.height(), max_disparity, values)
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

    pub fn max_disparity(&self) -> usize {
        self.max_disparity
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Option<usize> {
        self.values[row * self.width + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: Option<usize>) {
        debug_assert!(value.is_none_or(|d| d <= self.max_disparity));
        self.values[row * self.width + col] = value;
    }

    pub fn values(&self) -> &[Option<usize>] {
        &self.values
    }

    pub fn estimated_count(&self) -> usize {
        self.values.iter().filter(|v| v.is_some()).count()
    }

    /// Disparities as reals; no-estimate pixels become NaN.
    pub fn to_gray(&self) -> GrayMap {
        let data = self
            .values
            .iter()
            .map(|v| v.map_or(f64::NAN, |d| d as f64))
            .collect();
        GrayMap::new(self.width, self.height, data).expect("dimensions match")
    }

    /// 255 where estimated, 0 elsewhere.
    pub fn mask(&self) -> GrayMap {
        let data = self
            .values
            .iter()
            .map(|v| if v.is_some() { 255.0 } else { 0.0 })
            .collect();
        GrayMap::new(self.width, self.height, data).expect("dimensions match")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_out_of_range() {
        assert!(DisparityMap::new(2, 1, 3, vec![Some(4), None]).is_err());
        assert!(DisparityMap::new(2, 1, 3, vec![Some(3)]).is_err());
    }

    #[test]
    fn raster_and_mask_round_trip() {
        let d = DisparityMap::new(3, 1, 9, vec![Some(0), None, Some(9)]).unwrap();
        let raster = d.to_gray();
        let back = DisparityMap::from_raster(&raster, Some(&d.mask()), 9).unwrap();
        assert_eq!(back, d);
        assert_eq!(d.estimated_count(), 2);
    }
}
