//! Shared helpers for unit tests: random problem data and finite-difference
//! oracles, independent of the implementation paths they check.

use alloc::vec::Vec;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::model::{CMat, RMat};

pub fn random_hermitian(n: usize, rng: &mut ChaCha8Rng) -> CMat {
    let mut m = CMat::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = Complex64::new(rng.random_range(-1.0..1.0), 0.0);
        for j in i + 1..n {
            let v = Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
            m[(i, j)] = v;
            m[(j, i)] = v.conj();
        }
    }
    m
}

pub fn random_symmetric(n: usize, rng: &mut ChaCha8Rng) -> RMat {
    let mut m = RMat::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = rng.random_range(-1.0..1.0);
        for j in i + 1..n {
            let v = rng.random_range(-1.0..1.0);
            m[(i, j)] = v;
            m[(j, i)] = v;
        }
    }
    m
}

pub fn random_cvec(n: usize, rng: &mut ChaCha8Rng) -> DVector<Complex64> {
    DVector::from_fn(n, |_, _| {
        Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
    })
}

pub fn random_rvec(n: usize, rng: &mut ChaCha8Rng) -> DVector<f64> {
    DVector::from_fn(n, |_, _| rng.random_range(-1.0..1.0))
}

/// Central finite-difference gradient of a scalar function.
pub fn fd_gradient(f: &mut dyn FnMut(&[f64]) -> f64, x: &[f64], step: f64) -> Vec<f64> {
    let mut g = Vec::with_capacity(x.len());
    let mut xp = x.to_vec();
    for i in 0..x.len() {
        let orig = xp[i];
        xp[i] = orig + step;
        let fp = f(&xp);
        xp[i] = orig - step;
        let fm = f(&xp);
        xp[i] = orig;
        g.push((fp - fm) / (2.0 * step));
    }
    g
}

/// Central finite-difference Hessian of a scalar function.
pub fn fd_hessian(f: &mut dyn FnMut(&[f64]) -> f64, x: &[f64], step: f64) -> DMatrix<f64> {
    let n = x.len();
    let mut h = DMatrix::zeros(n, n);
    let mut xp = x.to_vec();
    let f0 = f(&xp);
    for i in 0..n {
        for j in i..n {
            let v = if i == j {
                let oi = xp[i];
                xp[i] = oi + step;
                let fp = f(&xp);
                xp[i] = oi - step;
                let fm = f(&xp);
                xp[i] = oi;
                (fp - 2.0 * f0 + fm) / (step * step)
            } else {
                let (oi, oj) = (xp[i], xp[j]);
                xp[i] = oi + step;
                xp[j] = oj + step;
                let fpp = f(&xp);
                xp[j] = oj - step;
                let fpm = f(&xp);
                xp[i] = oi - step;
                xp[j] = oj + step;
                let fmp = f(&xp);
                xp[j] = oj - step;
                let fmm = f(&xp);
                xp[i] = oi;
                xp[j] = oj;
                (fpp - fpm - fmp + fmm) / (4.0 * step * step)
            };
            h[(i, j)] = v;
            h[(j, i)] = v;
        }
    }
    h
}
