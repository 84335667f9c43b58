//! Sobolev-type frequency weighting for coil sensitivity maps.
//!
//! The operator `W` maps a k-space representation to image space while
//! damping high frequencies: `W = IFFT \circ diag(w)` with
//! `w(k) = a^-1 (1 + b*|k|^2)^(-m/2)` and `|k|` in normalized frequency
//! units (cycles per field of view, each axis spanning `[-0.5, 0.5)`).
//! Reconstruction unknowns hold coils in this weighted k-space form, which
//! both enforces smoothness and preconditions the normal equations.

use crate::error::{ReconError, Result};
use crate::fft::{fft2, ifft2, signed_freq};
use crate::image::ComplexImage;

/// Parameters of the frequency weight `a^-1 (1 + b*|k|^2)^(-m/2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SobolevConfig {
    /// Balance weight between density and coil penalties.
    pub a: f64,
    /// Frequency scale inside the polynomial.
    pub b: f64,
    /// Polynomial degree; larger means smoother coils.
    pub m: f64,
}

impl Default for SobolevConfig {
    fn default() -> Self {
        Self {
            a: 240.0,
            b: 32.0,
            m: 16.0,
        }
    }
}

impl SobolevConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.a > 0.0) || !(self.b > 0.0) || !(self.m >= 0.0) {
            return Err(ReconError::InvalidParameter(format!(
                "sobolev config requires a > 0, b > 0, m >= 0 (got a={}, b={}, m={})",
                self.a, self.b, self.m
            )));
        }
        Ok(())
    }
}

/// `W` and `W*` with the weight plane precomputed for one grid size.
#[derive(Debug, Clone)]
pub struct SobolevOp {
    width: usize,
    height: usize,
    weights: Vec<f64>,
}

impl SobolevOp {
    pub fn new(width: usize, height: usize, cfg: &SobolevConfig) -> Result<Self> {
        cfg.validate()?;
        if width < 2 || height < 2 {
            return Err(ReconError::InvalidParameter(
                "sobolev operator needs a grid of at least 2x2".into(),
            ));
        }
        let mut weights = vec![0.0; width * height];
        for y in 0..height {
            let fy = signed_freq(y, height) as f64 / height as f64;
            for x in 0..width {
                let fx = signed_freq(x, width) as f64 / width as f64;
                let k_sq = fx * fx + fy * fy;
                weights[y * width + x] = (1.0 + cfg.b * k_sq).powf(-cfg.m / 2.0) / cfg.a;
            }
        }
        Ok(Self {
            width,
            height,
            weights,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    /// The real diagonal weight plane in FFT index order.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    fn check(&self, img: &ComplexImage) -> Result<()> {
        if img.width() != self.width || img.height() != self.height {
            return Err(ReconError::DimensionMismatch(format!(
                "sobolev operator built for {}x{}, got {}x{}",
                self.width,
                self.height,
                img.width(),
                img.height()
            )));
        }
        if !img.all_finite() {
            return Err(ReconError::NonFinite("sobolev input"));
        }
        Ok(())
    }

    /// `W khat = IFFT(w .* khat)`, k-space in, image out.
    pub fn apply(&self, khat: &ComplexImage) -> Result<ComplexImage> {
        self.check(khat)?;
        let mut scaled = khat.clone();
        for (v, w) in scaled.data_mut().iter_mut().zip(&self.weights) {
            *v *= w;
        }
        Ok(ifft2(&scaled))
    }

    /// Exact adjoint `W* g = w .* FFT(g) / (width*height)`, image in, k-space out.
    pub fn adjoint(&self, img: &ComplexImage) -> Result<ComplexImage> {
        self.check(img)?;
        let mut hat = fft2(img);
        let scale = 1.0 / (self.width * self.height) as f64;
        for (v, w) in hat.data_mut().iter_mut().zip(&self.weights) {
            *v *= w * scale;
        }
        Ok(hat)
    }
}

/// One-shot `W` application.
pub fn sobolev_weight_apply(khat: &ComplexImage, cfg: &SobolevConfig) -> Result<ComplexImage> {
    SobolevOp::new(khat.width(), khat.height(), cfg)?.apply(khat)
}

/// One-shot `W*` application.
pub fn sobolev_weight_adjoint(img: &ComplexImage, cfg: &SobolevConfig) -> Result<ComplexImage> {
    SobolevOp::new(img.width(), img.height(), cfg)?.adjoint(img)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn lcg(seed: &mut u64) -> f64 {
        *seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (*seed >> 33) as f64 / (1u64 << 31) as f64 - 1.0
    }

    fn random_image(w: usize, h: usize, seed: u64) -> ComplexImage {
        let mut s = seed;
        let mut img = ComplexImage::zeros(w, h);
        for v in img.data_mut() {
            *v = Complex64::new(lcg(&mut s), lcg(&mut s));
        }
        img
    }

    #[test]
    fn dc_delta_gives_constant_image() {
        // weight at k=0 is a^-1 = 1; the inverse FFT of a unit DC spike is
        // the constant 1/(w*h)
        let mut khat = ComplexImage::zeros(8, 8);
        khat.set(0, 0, Complex64::new(1.0, 0.0));
        let cfg = SobolevConfig {
            a: 1.0,
            b: 32.0,
            m: 16.0,
        };
        let img = sobolev_weight_apply(&khat, &cfg).unwrap();
        for v in img.data() {
            assert!((v - Complex64::new(1.0 / 64.0, 0.0)).norm() < 1e-14);
        }
    }

    #[test]
    fn m_zero_is_plain_inverse_fft() {
        let khat = random_image(8, 6, 3);
        let cfg = SobolevConfig {
            a: 1.0,
            b: 32.0,
            m: 0.0,
        };
        let via_w = sobolev_weight_apply(&khat, &cfg).unwrap();
        let direct = crate::fft::ifft2(&khat);
        for (a, b) in via_w.data().iter().zip(direct.data()) {
            assert!((a - b).norm() < 1e-13);
        }
    }

    #[test]
    fn adjoint_dot_test() {
        let cfg = SobolevConfig::default();
        let op = SobolevOp::new(8, 8, &cfg).unwrap();
        for seed in 0..10 {
            let khat = random_image(8, 8, 100 + seed);
            let g = random_image(8, 8, 200 + seed);
            let lhs = op.apply(&khat).unwrap().inner(&g);
            let rhs = khat.inner(&op.adjoint(&g).unwrap());
            assert!(
                (lhs - rhs).norm() / lhs.norm() < 1e-12,
                "dot test failed: {lhs} vs {rhs}"
            );
        }
    }

    #[test]
    fn forward_fft_then_inverse_scaling_recovers_input() {
        // W is diagonal in the frequency domain
        let cfg = SobolevConfig::default();
        let op = SobolevOp::new(8, 8, &cfg).unwrap();
        let khat = random_image(8, 8, 17);
        let img = op.apply(&khat).unwrap();
        let mut hat = fft2(&img);
        for (v, w) in hat.data_mut().iter_mut().zip(op.weights()) {
            *v /= w;
        }
        for (a, b) in hat.data().iter().zip(khat.data()) {
            assert!((a - b).norm() < 1e-10 * khat.norm());
        }
    }

    #[test]
    fn rejects_non_finite() {
        let mut khat = ComplexImage::zeros(4, 4);
        khat.set(1, 1, Complex64::new(f64::NAN, 0.0));
        assert!(sobolev_weight_apply(&khat, &SobolevConfig::default()).is_err());
    }
}
