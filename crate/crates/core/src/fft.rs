//! 2D FFT helpers with one fixed convention used everywhere:
//! the forward transform is the plain sum with `e^(-2*pi*i*<x,k>)` and no
//! scale factor, the inverse carries `1/(width*height)`. The unnormalized
//! inverse (`conj`-kernel sum without the `1/N`) is exposed separately
//! because it is the exact adjoint of the forward transform.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex64;
use rustfft::{Fft, FftDirection, FftPlanner};

use crate::image::ComplexImage;

fn plan(len: usize, direction: FftDirection) -> Arc<dyn Fft<f64>> {
    static PLANNER: OnceLock<Mutex<FftPlanner<f64>>> = OnceLock::new();
    static CACHE: OnceLock<Mutex<HashMap<(usize, bool), Arc<dyn Fft<f64>>>>> = OnceLock::new();
    let key = (len, direction == FftDirection::Forward);
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&key) {
        return p.clone();
    }
    let p = PLANNER
        .get_or_init(|| Mutex::new(FftPlanner::new()))
        .lock()
        .unwrap()
        .plan_fft(len, direction);
    cache.lock().unwrap().insert(key, p.clone());
    p
}

fn transform_2d(img: &mut ComplexImage, direction: FftDirection) {
    let (w, h) = (img.width(), img.height());
    let row_fft = plan(w, direction);
    let mut scratch = vec![Complex64::ZERO; row_fft.get_inplace_scratch_len()];
    for row in img.data_mut().chunks_exact_mut(w) {
        row_fft.process_with_scratch(row, &mut scratch);
    }
    let col_fft = plan(h, direction);
    let mut scratch = vec![Complex64::ZERO; col_fft.get_inplace_scratch_len()];
    let mut col = vec![Complex64::ZERO; h];
    for x in 0..w {
        let data = img.data_mut();
        for y in 0..h {
            col[y] = data[y * w + x];
        }
        col_fft.process_with_scratch(&mut col, &mut scratch);
        let data = img.data_mut();
        for y in 0..h {
            data[y * w + x] = col[y];
        }
    }
}

/// Unnormalized forward transform.
pub fn fft2(img: &ComplexImage) -> ComplexImage {
    let mut out = img.clone();
    transform_2d(&mut out, FftDirection::Forward);
    out
}

pub fn fft2_inplace(img: &mut ComplexImage) {
    transform_2d(img, FftDirection::Forward);
}

/// Inverse transform, scaled by `1/(width*height)`.
pub fn ifft2(img: &ComplexImage) -> ComplexImage {
    let mut out = img.clone();
    ifft2_inplace(&mut out);
    out
}

pub fn ifft2_inplace(img: &mut ComplexImage) {
    transform_2d(img, FftDirection::Inverse);
    let scale = 1.0 / (img.width() * img.height()) as f64;
    for v in img.data_mut() {
        *v *= scale;
    }
}

/// Unnormalized inverse transform: the exact adjoint of [`fft2`].
pub fn ifft2_unnormalized(img: &ComplexImage) -> ComplexImage {
    let mut out = img.clone();
    ifft2_unnormalized_inplace(&mut out);
    out
}

pub fn ifft2_unnormalized_inplace(img: &mut ComplexImage) {
    transform_2d(img, FftDirection::Inverse);
}

/// Signed frequency index `i -> i` or `i - n` so that DC is 0 and the
/// range is `[-n/2, n/2)`.
#[inline]
pub fn signed_freq(i: usize, n: usize) -> i64 {
    if i <= (n - 1) / 2 {
        i as i64
    } else {
        i as i64 - n as i64
    }
}
