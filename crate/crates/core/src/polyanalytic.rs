//! Poly-analytic functions `F(z) = Σ_{k=0}^{m−1} z̄^k f_k(z)`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::analytic::AnalyticFunction;
use crate::error::{check_in_disc, Error, Result};

/// Tolerance for the `F_z(0) = 1`, `f_k(0) = 0` normalization check.
pub const NORMALIZATION_TOL: f64 = 1e-12;

/// Wirtinger derivatives `(∂F/∂z, ∂F/∂z̄)` at a point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WirtingerPair {
    pub dz: Complex64,
    pub dzbar: Complex64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolyAnalyticFunction {
    components: Vec<AnalyticFunction>,
    normalized: bool,
}

impl PolyAnalyticFunction {
    /// Builds `F` without claiming the normalization `F_z(0) = 1`,
    /// `f_k(0) = 0`. Such functions evaluate normally but are refused by the
    /// certification checks.
    pub fn new(components: Vec<AnalyticFunction>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Parameter(
                "a poly-analytic function needs at least one component".into(),
            ));
        }
        Ok(Self {
            components,
            normalized: false,
        })
    }

    /// Builds `F` and verifies the normalization within [`NORMALIZATION_TOL`].
    pub fn normalized(components: Vec<AnalyticFunction>) -> Result<Self> {
        let mut f = Self::new(components)?;
        let zero = Complex64::new(0.0, 0.0);
        for (k, fk) in f.components.iter().enumerate() {
            let v = fk.eval_unchecked(zero);
            if v.norm() > NORMALIZATION_TOL {
                return Err(Error::Parameter(format!(
                    "normalization requires f_{k}(0) = 0, got {v}"
                )));
            }
        }
        let dz = f.wirtinger_unchecked(zero).dz;
        if (dz - 1.0).norm() > NORMALIZATION_TOL {
            return Err(Error::Parameter(format!(
                "normalization requires F_z(0) = 1, got {dz}"
            )));
        }
        f.normalized = true;
        Ok(f)
    }

    /// The sharp extremal function for the class `F3`:
    /// `Λ0² z + (Λ0³ − Λ0) ln(1 − z/Λ0) − Σ_k z̄^k Λ_k z`.
    pub fn extremal_f0(lambda0: f64, tail: &[f64]) -> Result<Self> {
        if let Some((k, l)) = tail
            .iter()
            .enumerate()
            .find(|(_, l)| !(l.is_finite() && **l >= 0.0))
        {
            return Err(Error::Parameter(format!(
                "Λ_{} must be finite and >= 0, got {l}",
                k + 1
            )));
        }
        let mut components = vec![AnalyticFunction::log_distortion(lambda0)?];
        components.extend(
            tail.iter()
                .map(|&l| AnalyticFunction::scaled_identity(Complex64::new(-l, 0.0))),
        );
        Self::normalized(components)
    }

    /// Order `m`, the number of analytic components.
    pub fn order(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[AnalyticFunction] {
        &self.components
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        check_in_disc(z)?;
        Ok(self.eval_unchecked(z))
    }

    pub fn wirtinger(&self, z: Complex64) -> Result<WirtingerPair> {
        check_in_disc(z)?;
        Ok(self.wirtinger_unchecked(z))
    }

    /// `(Λ_F, λ_F) = (|F_z| + |F_z̄|, ||F_z| − |F_z̄||)`.
    pub fn dilatation_bounds(&self, z: Complex64) -> Result<(f64, f64)> {
        let w = self.wirtinger(z)?;
        let (a, b) = (w.dz.norm(), w.dzbar.norm());
        Ok((a + b, (a - b).abs()))
    }

    pub(crate) fn eval_unchecked(&self, z: Complex64) -> Complex64 {
        let zbar = z.conj();
        self.components
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, fk| {
                acc * zbar + fk.eval_unchecked(z)
            })
    }

    pub(crate) fn wirtinger_unchecked(&self, z: Complex64) -> WirtingerPair {
        let zbar = z.conj();
        let mut dz = Complex64::new(0.0, 0.0);
        let mut dzbar = Complex64::new(0.0, 0.0);
        // running power z̄^k
        let mut pow = Complex64::new(1.0, 0.0);
        let mut pow_prev = Complex64::new(0.0, 0.0);
        for (k, fk) in self.components.iter().enumerate() {
            dz += pow * fk.deriv_unchecked(z);
            if k > 0 {
                dzbar += k as f64 * pow_prev * fk.eval_unchecked(z);
            }
            pow_prev = pow;
            pow *= zbar;
        }
        WirtingerPair { dz, dzbar }
    }
}
