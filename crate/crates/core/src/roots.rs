//! Bracketing root finders for monotone scalar functions.

use crate::error::{Error, Result};

/// Outcome of a bisection run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bisection {
    pub root: f64,
    /// Final bracket `[lo, hi]`; the function changes sign across it.
    pub lo: f64,
    pub hi: f64,
    /// Function value at `root`.
    pub residual: f64,
    pub iterations: usize,
}

/// Bisection for a continuous function with `f(lo) > 0 ≥ f(hi)` (or the
/// mirror image). Stops once the bracket is narrower than `tol` or cannot be
/// split further in `f64`.
pub fn bisect<F>(f: F, lo: f64, hi: f64, tol: f64, max_iter: usize) -> Result<Bisection>
where
    F: Fn(f64) -> f64,
{
    let (mut lo, mut hi) = (lo, hi);
    let flo = f(lo);
    let fhi = f(hi);
    if flo.is_nan() || fhi.is_nan() {
        return Err(Error::Domain(format!(
            "function is NaN at the bracket ends [{lo}, {hi}]"
        )));
    }
    if flo == 0.0 {
        return Ok(Bisection {
            root: lo,
            lo,
            hi: lo,
            residual: 0.0,
            iterations: 0,
        });
    }
    if fhi == 0.0 {
        return Ok(Bisection {
            root: hi,
            lo: hi,
            hi,
            residual: 0.0,
            iterations: 0,
        });
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::Infeasible(format!(
            "no sign change on [{lo}, {hi}]: f = {flo}, {fhi}"
        )));
    }
    let lo_positive = flo > 0.0;
    let mut iterations = 0;
    loop {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= tol || mid <= lo || mid >= hi {
            let residual = f(mid);
            return Ok(Bisection {
                root: mid,
                lo,
                hi,
                residual,
                iterations,
            });
        }
        if iterations >= max_iter {
            return Err(Error::NonConvergence {
                iterations,
                width: hi - lo,
            });
        }
        iterations += 1;
        let fm = f(mid);
        if fm.is_nan() {
            return Err(Error::Domain(format!("function is NaN at {mid}")));
        }
        if fm == 0.0 {
            return Ok(Bisection {
                root: mid,
                lo: mid,
                hi: mid,
                residual: 0.0,
                iterations,
            });
        }
        if (fm > 0.0) == lo_positive {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

/// Minimizes a unimodal function on `[a, b]` by golden-section search; returns
/// `(argmin, min)` once the bracket is narrower than `tol`.
pub fn golden_section_min<F>(f: F, a: f64, b: f64, tol: f64) -> (f64, f64)
where
    F: Fn(f64) -> f64,
{
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (a, b);
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while (b - a).abs() > tol {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    let x = 0.5 * (a + b);
    (x, f(x))
}
