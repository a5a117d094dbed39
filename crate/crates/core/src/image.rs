//! Image containers and netpbm / PNG file I/O.
//!
//! Color images are kept as 8-bit samples and promoted to `f64` when read
//! through [`ColorImage::sample`]. Real-valued rasters (energies, disparities,
//! depths) travel as [`GrayMap`], where any non-finite value marks a pixel
//! without a value.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use crate::error::{Error, Result};

/// Rectified RGB image, row-major, 3 samples per pixel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorImage {
    width: usize,
    height: usize,
    data: Vec<u8>,
}

impl ColorImage {
    pub fn new(width: usize, height: usize, data: Vec<u8>) -> Result<Self> {
        if data.len() != width * height * 3 {
            return Err(Error::Malformed(format!(
                "expected {} samples for {width}x{height} RGB, got {}",
                width * height * 3,
                data.len()
            )));
        }
        Ok(ColorImage { width, height, data })
    }

    pub fn from_fn(width: usize, height: usize, mut f: impl FnMut(usize, usize) -> [u8; 3]) -> Self {
        let mut data = Vec::with_capacity(width * height * 3);
        for row in 0..height {
            for col in 0..width {
                data.extend_from_slice(&f(row, col));
            }
        }
        ColorImage { width, height, data }
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

    pub fn data(&self) -> &[u8] {
        &self.data
    }

    #[inline]
    pub fn pixel(&self, row: usize, col: usize) -> [u8; 3] {
        let i = (row * self.width + col) * 3;
        [self.data[i], self.data[i + 1], self.data[i + 2]]
    }

    #[inline]
    pub fn sample(&self, row: usize, col: usize, channel: usize) -> f64 {
        f64::from(self.data[(row * self.width + col) * 3 + channel])
    }

    /// Multiplies every sample by `factor`, saturating at 255.
    pub fn scaled(&self, factor: f64) -> ColorImage {
        let data = self
            .data
            .iter()
            .map(|&v| (f64::from(v) * factor).round().clamp(0.0, 255.0) as u8)
            .collect();
        ColorImage {
            width: self.width,
            height: self.height,
            data,
        }
    }
}

/// Row-major real-valued raster.
#[derive(Debug, Clone, PartialEq)]
pub struct GrayMap {
    width: usize,
    height: usize,
    data: Vec<f64>,
}

impl GrayMap {
    pub fn new(width: usize, height: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != width * height {
            return Err(Error::Malformed(format!(
                "expected {} values for {width}x{height} map, got {}",
                width * height,
                data.len()
            )));
        }
        Ok(GrayMap { width, height, data })
    }

    pub fn filled(width: usize, height: usize, value: f64) -> Self {
        GrayMap {
            width,
            height,
            data: vec![value; width * height],
        }
    }

    pub fn from_fn(width: usize, height: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(width * height);
        for row in 0..height {
            for col in 0..width {
                data.push(f(row, col));
            }
        }
        GrayMap { width, height, data }
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
    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.data[row * self.width + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: f64) {
        self.data[row * self.width + col] = value;
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn into_data(self) -> Vec<f64> {
        self.data
    }

    /// Min and max over finite entries, `None` when there are none.
    pub fn finite_range(&self) -> Option<(f64, f64)> {
        finite_range(&self.data)
    }

    /// Quantizes to 8 bits. With `normalize`, finite values are linearly
    /// rescaled so the finite minimum maps to 0 and the maximum to 255.
    /// Non-finite values always map to 0.
    pub fn to_u8(&self, normalize: bool) -> Vec<u8> {
        let range = if normalize { self.finite_range() } else { None };
        self.data
            .iter()
            .map(|&v| {
                if !v.is_finite() {
                    return 0;
                }
                let v = match range {
                    Some((lo, hi)) if hi > lo => (v - lo) * 255.0 / (hi - lo),
                    Some(_) => 0.0,
                    None => v,
                };
                v.round().clamp(0.0, 255.0) as u8
            })
            .collect()
    }
}

pub(crate) fn finite_range(values: &[f64]) -> Option<(f64, f64)> {
    values
        .iter()
        .copied()
        .filter(|v| v.is_finite())
        .fold(None, |acc, v| match acc {
            None => Some((v, v)),
            Some((lo, hi)) => Some((lo.min(v), hi.max(v))),
        })
}

/// Loads a rectified pair; both images must have the same dimensions.
pub fn load_stereo_pair(
    left_path: impl AsRef<Path>,
    right_path: impl AsRef<Path>,
) -> Result<(ColorImage, ColorImage)> {
    let left = load_color(left_path)?;
    let right = load_color(right_path)?;
    if left.dims() != right.dims() {
        return Err(Error::mismatch(left.dims(), right.dims()));
    }
    Ok((left, right))
}

/// Reads a P6/P3 PPM or an 8-bit truecolor PNG.
pub fn load_color(path: impl AsRef<Path>) -> Result<ColorImage> {
    let path = path.as_ref();
    let bytes = std::fs::read(path).map_err(|e| Error::io(path, e))?;
    if bytes.starts_with(b"P6") || bytes.starts_with(b"P3") {
        decode_ppm(&bytes)
    } else if bytes.starts_with(PNG_SIGNATURE) {
        let (width, height, channels, data) = decode_png(&bytes)?;
        let data = match channels {
            3 => data,
            4 => data.chunks_exact(4).flat_map(|p| [p[0], p[1], p[2]]).collect(),
            _ => {
                return Err(Error::UnsupportedFormat(format!(
                    "{}: PNG is not truecolor",
                    path.display()
                )))
            }
        };
        ColorImage::new(width, height, data)
    } else {
        Err(Error::UnsupportedFormat(format!(
            "{}: expected PPM (P6/P3) or PNG",
            path.display()
        )))
    }
}

/// Reads an 8-bit grayscale raster (P5/P2 PGM or grayscale PNG), values
/// promoted to `f64`.
pub fn load_gray(path: impl AsRef<Path>) -> Result<GrayMap> {
    let path = path.as_ref();
    let bytes = std::fs::read(path).map_err(|e| Error::io(path, e))?;
    let (width, height, data) = if bytes.starts_with(b"P5") || bytes.starts_with(b"P2") {
        decode_pgm(&bytes)?
    } else if bytes.starts_with(PNG_SIGNATURE) {
        let (width, height, channels, data) = decode_png(&bytes)?;
        let data = match channels {
            1 => data,
            2 => data.chunks_exact(2).map(|p| p[0]).collect(),
            _ => {
                return Err(Error::UnsupportedFormat(format!(
                    "{}: PNG is not grayscale",
                    path.display()
                )))
            }
        };
        (width, height, data)
    } else {
        return Err(Error::UnsupportedFormat(format!(
            "{}: expected PGM (P5/P2) or PNG",
            path.display()
        )));
    };
    GrayMap::new(width, height, data.into_iter().map(f64::from).collect())
}

/// Writes `map` as a binary P5 PGM. See [`GrayMap::to_u8`] for quantization.
pub fn save_gray(map: &GrayMap, path: impl AsRef<Path>, normalize: bool) -> Result<()> {
    if map.data.is_empty() {
        return Err(Error::InvalidParameter("cannot save an empty map".into()));
    }
    write_netpbm(path.as_ref(), b"P5", map.width, map.height, &map.to_u8(normalize))
}

/// Writes `image` as a binary P6 PPM.
pub fn save_color(image: &ColorImage, path: impl AsRef<Path>) -> Result<()> {
    write_netpbm(path.as_ref(), b"P6", image.width, image.height, &image.data)
}

fn write_netpbm(path: &Path, magic: &[u8], width: usize, height: usize, data: &[u8]) -> Result<()> {
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut out = BufWriter::new(file);
    out.write_all(magic)
        .and_then(|_| write!(out, "\n{width} {height}\n255\n"))
        .and_then(|_| out.write_all(data))
        .and_then(|_| out.flush())
        .map_err(|e| Error::io(path, e))
}

const PNG_SIGNATURE: &[u8] = &[0x89, b'P', b'N', b'G', b'\r', b'\n', 0x1a, b'\n'];

struct Header {
    magic: [u8; 2],
    width: usize,
    height: usize,
    maxval: usize,
    data_start: usize,
}

fn parse_header(bytes: &[u8]) -> Result<Header> {
    let magic = [bytes[0], bytes[1]];
    let mut pos = 2;
    let mut fields = [0usize; 3];
    for field in fields.iter_mut() {
        // whitespace and comments
        loop {
            match bytes.get(pos) {
                Some(b) if b.is_ascii_whitespace() => pos += 1,
                Some(b'#') => {
                    while !matches!(bytes.get(pos), None | Some(b'\n')) {
                        pos += 1;
                    }
                }
                _ => break,
            }
        }
        let start = pos;
        while bytes.get(pos).is_some_and(u8::is_ascii_digit) {
            pos += 1;
        }
        if start == pos {
            return Err(Error::Malformed("truncated netpbm header".into()));
        }
        *field = std::str::from_utf8(&bytes[start..pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Malformed("bad netpbm header number".into()))?;
    }
    // exactly one whitespace byte separates the header from binary data
    if !bytes.get(pos).is_some_and(u8::is_ascii_whitespace) {
        return Err(Error::Malformed("missing whitespace after netpbm header".into()));
    }
    let [width, height, maxval] = fields;
    if maxval == 0 || maxval > 255 {
        return Err(Error::UnsupportedFormat(format!(
            "netpbm maxval {maxval} (only 8-bit supported)"
        )));
    }
    Ok(Header {
        magic,
        width,
        height,
        maxval,
        data_start: pos + 1,
    })
}

fn read_samples(bytes: &[u8], header: &Header, channels: usize) -> Result<Vec<u8>> {
    let count = header.width * header.height * channels;
    let body = &bytes[header.data_start..];
    let samples: Vec<u8> = match &header.magic {
        b"P6" | b"P5" => {
            if body.len() < count {
                return Err(Error::Malformed(format!(
                    "expected {count} sample bytes, found {}",
                    body.len()
                )));
            }
            body[..count].to_vec()
        }
        _ => {
            let text = std::str::from_utf8(body)
                .map_err(|_| Error::Malformed("non-ASCII plain netpbm body".into()))?;
            let samples = text
                .split_ascii_whitespace()
                .take(count)
                .map(|t| t.parse::<u8>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| Error::Malformed("bad sample in plain netpbm body".into()))?;
            if samples.len() < count {
                return Err(Error::Malformed("truncated plain netpbm body".into()));
            }
            samples
        }
    };
    if samples.iter().any(|&s| usize::from(s) > header.maxval) {
        return Err(Error::Malformed("sample exceeds maxval".into()));
    }
    Ok(samples)
}

fn decode_ppm(bytes: &[u8]) -> Result<ColorImage> {
    let header = parse_header(bytes)?;
    let data = read_samples(bytes, &header, 3)?;
    ColorImage::new(header.width, header.height, data)
}

fn decode_pgm(bytes: &[u8]) -> Result<(usize, usize, Vec<u8>)> {
    let header = parse_header(bytes)?;
    let data = read_samples(bytes, &header, 1)?;
    Ok((header.width, header.height, data))
}

fn decode_png(bytes: &[u8]) -> Result<(usize, usize, usize, Vec<u8>)> {
    let mut decoder = png::Decoder::new(std::io::Cursor::new(bytes));
    decoder.set_transformations(png::Transformations::normalize_to_color8());
    let mut reader = decoder
        .read_info()
        .map_err(|e| Error::Malformed(format!("png: {e}")))?;
    let mut buf = vec![
        0;
        reader
            .output_buffer_size()
            .ok_or_else(|| Error::Malformed("png: image too large".into()))?
    ];
    let info = reader
        .next_frame(&mut buf)
        .map_err(|e| Error::Malformed(format!("png: {e}")))?;
    buf.truncate(info.buffer_size());
    let channels = info.color_type.samples();
    Ok((info.width as usize, info.height as usize, channels, buf))
}
