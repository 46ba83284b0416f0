//! Holomorphic building blocks on the unit disc.
//!
//! Every variant has a closed-form value and derivative. `PowerSeries` is a
//! finite truncation and reports its order; it is never treated as the exact
//! infinite series it approximates.

use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{check_in_disc, Error, Result};

/// Truncated power series `Σ_{n=0}^{N} c_n z^n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PowerSeries {
    coeffs: Vec<Complex64>,
}

impl PowerSeries {
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Parameter(
                "power series needs at least one coefficient".into(),
            ));
        }
        if coeffs
            .iter()
            .any(|c| !(c.re.is_finite() && c.im.is_finite()))
        {
            return Err(Error::Parameter(
                "power series coefficients must be finite".into(),
            ));
        }
        Ok(Self { coeffs })
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Degree of the last stored term.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    fn deriv(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, (n, &c)| {
                acc * z + c * n as f64
            })
    }
}

/// The concrete holomorphic functions the radius theorems are built from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AnalyticKind {
    PowerSeries(PowerSeries),
    /// `M z (1 − M z) / (M − z)`, sharp for the classical Landau theorem.
    ClassicalLandauExtremal {
        m: f64,
    },
    /// `M z (1 − M z^{n−1}) / (M − z^{n−1})`; its `n`-th Taylor coefficient
    /// has modulus exactly `M − 1/M`.
    BlaschkeTypeExtremal {
        m: f64,
        n: u32,
    },
    /// `Λ² z + (Λ³ − Λ) ln(1 − z/Λ)`, whose derivative `Λ(1 − Λz)/(Λ − z)`
    /// vanishes at `z = 1/Λ`.
    LogDistortionExtremal {
        lambda: f64,
    },
    ScaledIdentity {
        c: Complex64,
    },
}

/// A validated holomorphic function on the open unit disc.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalyticFunction {
    kind: AnalyticKind,
}

impl AnalyticFunction {
    pub fn new(kind: AnalyticKind) -> Result<Self> {
        match &kind {
            AnalyticKind::PowerSeries(_) => {}
            AnalyticKind::ClassicalLandauExtremal { m } => {
                if !(m.is_finite() && *m >= 1.0) {
                    return Err(Error::Parameter(format!(
                        "classical Landau extremal needs M >= 1, got {m}"
                    )));
                }
            }
            AnalyticKind::BlaschkeTypeExtremal { m, n } => {
                if !(m.is_finite() && *m > 1.0) {
                    return Err(Error::Parameter(format!(
                        "Blaschke-type extremal needs M > 1, got {m}"
                    )));
                }
                if *n < 2 {
                    return Err(Error::Parameter(format!(
                        "Blaschke-type extremal needs n >= 2, got {n}"
                    )));
                }
            }
            AnalyticKind::LogDistortionExtremal { lambda } => {
                if !(lambda.is_finite() && *lambda > 1.0) {
                    return Err(Error::Parameter(format!(
                        "log-distortion extremal needs Λ > 1, got {lambda}"
                    )));
                }
            }
            AnalyticKind::ScaledIdentity { c } => {
                if !(c.re.is_finite() && c.im.is_finite()) {
                    return Err(Error::Parameter("scale factor must be finite".into()));
                }
            }
        }
        Ok(Self { kind })
    }

    pub fn power_series(coeffs: Vec<Complex64>) -> Result<Self> {
        Self::new(AnalyticKind::PowerSeries(PowerSeries::new(coeffs)?))
    }

    pub fn classical_landau(m: f64) -> Result<Self> {
        Self::new(AnalyticKind::ClassicalLandauExtremal { m })
    }

    pub fn blaschke_type(m: f64, n: u32) -> Result<Self> {
        Self::new(AnalyticKind::BlaschkeTypeExtremal { m, n })
    }

    pub fn log_distortion(lambda: f64) -> Result<Self> {
        Self::new(AnalyticKind::LogDistortionExtremal { lambda })
    }

    pub fn scaled_identity(c: Complex64) -> Self {
        Self {
            kind: AnalyticKind::ScaledIdentity { c },
        }
    }

    /// The constant zero function.
    pub fn zero() -> Self {
        Self::scaled_identity(Complex64::new(0.0, 0.0))
    }

    pub fn kind(&self) -> &AnalyticKind {
        &self.kind
    }

    /// Truncation order for power series, `None` for closed forms.
    pub fn truncation_order(&self) -> Option<usize> {
        match &self.kind {
            AnalyticKind::PowerSeries(s) => Some(s.order()),
            _ => None,
        }
    }

    /// Value at `z`, `|z| < 1`.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        check_in_disc(z)?;
        Ok(self.eval_unchecked(z))
    }

    /// Derivative at `z`, `|z| < 1`.
    pub fn deriv(&self, z: Complex64) -> Result<Complex64> {
        check_in_disc(z)?;
        Ok(self.deriv_unchecked(z))
    }

    pub(crate) fn eval_unchecked(&self, z: Complex64) -> Complex64 {
        match &self.kind {
            AnalyticKind::PowerSeries(s) => s.eval(z),
            AnalyticKind::ClassicalLandauExtremal { m } => *m * z * (1.0 - *m * z) / (*m - z),
            AnalyticKind::BlaschkeTypeExtremal { m, n } => {
                let w = z.powu(n - 1);
                *m * z * (1.0 - *m * w) / (*m - w)
            }
            AnalyticKind::LogDistortionExtremal { lambda } => {
                let l = *lambda;
                // Re(1 − z/Λ) > 0 on the disc, so the principal branch is continuous.
                l * l * z + (l * l * l - l) * (1.0 - z / l).ln()
            }
            AnalyticKind::ScaledIdentity { c } => c * z,
        }
    }

    pub(crate) fn deriv_unchecked(&self, z: Complex64) -> Complex64 {
        match &self.kind {
            AnalyticKind::PowerSeries(s) => s.deriv(z),
            AnalyticKind::ClassicalLandauExtremal { m } => {
                let d = *m - z;
                *m * *m * (1.0 - 2.0 * *m * z + z * z) / (d * d)
            }
            AnalyticKind::BlaschkeTypeExtremal { m, n } => {
                let w = z.powu(n - 1);
                let d = *m - w;
                let h = (1.0 - *m * w) / d;
                let dh = (1.0 - *m * *m) / (d * d);
                *m * h + *m * f64::from(n - 1) * w * dh
            }
            AnalyticKind::LogDistortionExtremal { lambda } => {
                let l = *lambda;
                l * (1.0 - l * z) / (l - z)
            }
            AnalyticKind::ScaledIdentity { c } => *c,
        }
    }

    /// Taylor coefficients `a_0..=a_n` by the discrete Cauchy integral with
    /// the default sampling (see [`TaylorConfig`]) on the circle of radius
    /// `radius`.
    pub fn taylor_coefficients(&self, n: usize, radius: f64) -> Result<Vec<Complex64>> {
        TaylorConfig {
            radius,
            ..TaylorConfig::default()
        }
        .coefficients(self, n)
    }
}

/// Sampling parameters for Taylor-coefficient extraction.
///
/// Coefficient `a_n` is recovered as
/// `(1/S) Σ_j f(ρ e^{iθ_j}) e^{−i n θ_j} / ρ^n` with `θ_j = 2πj/S`. The
/// aliasing error is of order `ρ^S` while round-off grows like `ρ^{−n}`, so
/// `ρ = 0.5` and `S = 256` are comfortable for `n ≤ 32`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TaylorConfig {
    pub radius: f64,
    /// Number of circle samples; raised to `4(n + 1)` when smaller.
    pub samples: usize,
}

impl Default for TaylorConfig {
    fn default() -> Self {
        Self {
            radius: 0.5,
            samples: 256,
        }
    }
}

impl TaylorConfig {
    pub fn coefficients(&self, f: &AnalyticFunction, n: usize) -> Result<Vec<Complex64>> {
        if !(self.radius > 0.0 && self.radius < 1.0) {
            return Err(Error::Domain(format!(
                "contour radius must lie in (0, 1), got {}",
                self.radius
            )));
        }
        if n < 1 {
            return Err(Error::Parameter(
                "need at least one coefficient beyond a_0".into(),
            ));
        }
        let s = self.samples.max(4 * (n + 1));
        let values: Vec<Complex64> = (0..s)
            .map(|j| {
                f.eval_unchecked(Complex64::from_polar(
                    self.radius,
                    TAU * j as f64 / s as f64,
                ))
            })
            .collect();
        Ok((0..=n)
            .map(|k| {
                let sum: Complex64 = values
                    .iter()
                    .enumerate()
                    .map(|(j, v)| {
                        // reduce the phase index mod s to keep the angle small
                        let phase = ((j * k) % s) as f64 / s as f64;
                        v * Complex64::from_polar(1.0, -TAU * phase)
                    })
                    .sum();
                sum / (s as f64 * self.radius.powi(k as i32))
            })
            .collect())
    }
}
