//! Dense 2D complex- and real-valued grids.
//!
//! All pixel storage is row-major, `data[y * width + x]`, double precision.
//! Spatial coordinates are "centered": pixel `(x, y)` sits at
//! `(x - width/2, y - height/2)` in pixel units, so the grid origin is the
//! pixel at `(width/2, height/2)`. Frequency-domain grids use FFT index
//! order (DC at index 0).

use num_complex::Complex64;

use crate::error::{ReconError, Result};

/// 2D complex image (or k-space grid) in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexImage {
    width: usize,
    height: usize,
    data: Vec<Complex64>,
}

impl ComplexImage {
    pub fn zeros(width: usize, height: usize) -> Self {
        Self {
            width,
            height,
            data: vec![Complex64::ZERO; width * height],
        }
    }

    pub fn filled(width: usize, height: usize, value: Complex64) -> Self {
        Self {
            width,
            height,
            data: vec![value; width * height],
        }
    }

    pub fn from_vec(width: usize, height: usize, data: Vec<Complex64>) -> Result<Self> {
        if width < 2 || height < 2 {
            return Err(ReconError::InvalidParameter(format!(
                "image dimensions must be at least 2x2, got {width}x{height}"
            )));
        }
        if data.len() != width * height {
            return Err(ReconError::DimensionMismatch(format!(
                "data length {} != {}x{}",
                data.len(),
                width,
                height
            )));
        }
        Ok(Self {
            width,
            height,
            data,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [Complex64] {
        &mut self.data
    }

    pub fn into_vec(self) -> Vec<Complex64> {
        self.data
    }

    #[inline]
    pub fn at(&self, x: usize, y: usize) -> Complex64 {
        self.data[y * self.width + x]
    }

    #[inline]
    pub fn set(&mut self, x: usize, y: usize, v: Complex64) {
        self.data[y * self.width + x] = v;
    }

    pub fn same_dims(&self, other: &Self) -> bool {
        self.width == other.width && self.height == other.height
    }

    pub fn check_same_dims(&self, other: &Self, what: &str) -> Result<()> {
        if self.same_dims(other) {
            Ok(())
        } else {
            Err(ReconError::DimensionMismatch(format!(
                "{what}: {}x{} vs {}x{}",
                self.width, self.height, other.width, other.height
            )))
        }
    }

    pub fn all_finite(&self) -> bool {
        self.data.iter().all(|c| c.re.is_finite() && c.im.is_finite())
    }

    /// Pointwise product `self * other`.
    pub fn mul(&self, other: &Self) -> Self {
        debug_assert!(self.same_dims(other));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a * b)
            .collect();
        Self {
            width: self.width,
            height: self.height,
            data,
        }
    }

    /// Pointwise product `conj(self) * other`.
    pub fn conj_mul(&self, other: &Self) -> Self {
        debug_assert!(self.same_dims(other));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.conj() * b)
            .collect();
        Self {
            width: self.width,
            height: self.height,
            data,
        }
    }

    /// `self += alpha * other`.
    pub fn add_scaled(&mut self, alpha: Complex64, other: &Self) {
        debug_assert!(self.same_dims(other));
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += alpha * b;
        }
    }

    pub fn scale(&mut self, alpha: Complex64) {
        for v in &mut self.data {
            *v *= alpha;
        }
    }

    /// Conjugate-linear in `self`: sum of `conj(self) * other`.
    pub fn inner(&self, other: &Self) -> Complex64 {
        debug_assert!(self.same_dims(other));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn norm_sq(&self) -> f64 {
        self.data.iter().map(|c| c.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// Per-pixel magnitudes as a real image.
    pub fn magnitude(&self) -> RealImage {
        RealImage {
            width: self.width,
            height: self.height,
            data: self.data.iter().map(|c| c.norm()).collect(),
        }
    }
}

/// 2D real image, same layout conventions as [`ComplexImage`].
#[derive(Debug, Clone, PartialEq)]
pub struct RealImage {
    width: usize,
    height: usize,
    data: Vec<f64>,
}

impl RealImage {
    pub fn zeros(width: usize, height: usize) -> Self {
        Self {
            width,
            height,
            data: vec![0.0; width * height],
        }
    }

    pub fn from_vec(width: usize, height: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != width * height {
            return Err(ReconError::DimensionMismatch(format!(
                "data length {} != {}x{}",
                data.len(),
                width,
                height
            )));
        }
        Ok(Self {
            width,
            height,
            data,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    #[inline]
    pub fn at(&self, x: usize, y: usize) -> f64 {
        self.data[y * self.width + x]
    }

    #[inline]
    pub fn set(&mut self, x: usize, y: usize, v: f64) {
        self.data[y * self.width + x] = v;
    }

    pub fn same_dims(&self, other: &Self) -> bool {
        self.width == other.width && self.height == other.height
    }

    pub fn all_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    pub fn max_value(&self) -> f64 {
        self.data.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn to_complex(&self) -> ComplexImage {
        ComplexImage {
            width: self.width,
            height: self.height,
            data: self.data.iter().map(|&v| Complex64::new(v, 0.0)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_vec_rejects_bad_lengths() {
        assert!(ComplexImage::from_vec(2, 2, vec![Complex64::ZERO; 3]).is_err());
        assert!(ComplexImage::from_vec(1, 4, vec![Complex64::ZERO; 4]).is_err());
    }

    #[test]
    fn inner_is_conjugate_linear_in_first_argument() {
        let a = ComplexImage::filled(2, 2, Complex64::new(0.0, 1.0));
        let b = ComplexImage::filled(2, 2, Complex64::new(1.0, 0.0));
        // conj(i) * 1 = -i, summed over 4 pixels
        assert_eq!(a.inner(&b), Complex64::new(0.0, -4.0));
    }
}
