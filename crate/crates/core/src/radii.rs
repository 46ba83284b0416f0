//! Univalence and schlicht radii.
//!
//! Each class has a radius function that equals 1 at `r = 0` and is strictly
//! decreasing on `[0, 1)`:
//!
//! * `F1`: `φ(r) = Λ(1 − Λr)/(Λ − r) − Σ_k r^k (M_k/(1 − r²) + k M_k)`
//! * `F2`: `ψ₁(r) = 1 − (M − 1/M)(2r − r²)/(1 − r)² − Σ_k (k + 1) r^k Λ_k`
//! * `F3`: `ψ₂(r) = Λ0(1 − Λ0 r)/(Λ0 − r) − Σ_k (k + 1) Λ_k r^k`
//!
//! The univalence radius is its unique zero in `(0, 1)`, located by
//! bisection, so the returned bracket is a certificate for the sign change.
//! The schlicht radius is then a closed-form expression in that root.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::roots::{bisect, golden_section_min};

/// Bisection settings for the radius equations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RootFindConfig {
    /// Bracket width at which bisection stops.
    pub tol: f64,
    pub max_iter: usize,
    /// The search interval is `[margin, 1 − margin]`; the radius functions
    /// have poles at `r = 1`.
    pub endpoint_margin: f64,
}

impl Default for RootFindConfig {
    fn default() -> Self {
        Self {
            tol: 1e-12,
            max_iter: 200,
            endpoint_margin: 1e-9,
        }
    }
}

impl RootFindConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(Error::Parameter(format!(
                "tol must be > 0, got {}",
                self.tol
            )));
        }
        if self.max_iter < 1 {
            return Err(Error::Parameter("max_iter must be >= 1".into()));
        }
        if !(self.endpoint_margin > 0.0 && self.endpoint_margin < 0.5) {
            return Err(Error::Parameter(format!(
                "endpoint_margin must lie in (0, 0.5), got {}",
                self.endpoint_margin
            )));
        }
        Ok(())
    }
}

/// `F1`: `|f_0'| < Λ`, `|f_k| ≤ M_k`. `tail` holds `M_1..M_{m−1}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct F1Params {
    pub lambda: f64,
    pub tail: Vec<f64>,
}

/// `F2`: `|f_0| < M`, `|f_k'| ≤ Λ_k`. `tail` holds `Λ_1..Λ_{m−1}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct F2Params {
    pub m_bound: f64,
    pub tail: Vec<f64>,
}

/// `F3`: `|f_0'| < Λ0`, `|f_k'| ≤ Λ_k`. `tail` holds `Λ_1..Λ_{m−1}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct F3Params {
    pub lambda0: f64,
    pub tail: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "lowercase")]
pub enum ClassParams {
    F1(F1Params),
    F2(F2Params),
    F3(F3Params),
}

fn check_tail(tail: &[f64], symbol: &str) -> Result<()> {
    for (k, v) in tail.iter().enumerate() {
        if !(v.is_finite() && *v >= 0.0) {
            return Err(Error::Parameter(format!(
                "{symbol}_{} must be finite and >= 0, got {v}",
                k + 1
            )));
        }
    }
    Ok(())
}

fn check_r(r: f64) -> Result<()> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::Domain(format!("radius must lie in [0, 1), got {r}")));
    }
    Ok(())
}

/// `Λ(1 − Λr)/(Λ − r)`: lower bound for `|f_0'|` on `|z| = r` when
/// `f_0'(0) = 1` and `|f_0'| < Λ`.
fn distortion_lower(lambda: f64, r: f64) -> f64 {
    lambda * (1.0 - lambda * r) / (lambda - r)
}

/// `Λ² r + (Λ³ − Λ) ln(1 − r/Λ)`, the integral of [`distortion_lower`].
fn distortion_integral(lambda: f64, r: f64) -> f64 {
    lambda * lambda * r + (lambda * lambda * lambda - lambda) * (-r / lambda).ln_1p()
}

/// `Σ_k (k + 1) c_k r^k` for `k = 1..`.
fn weighted_tail(tail: &[f64], r: f64) -> f64 {
    tail.iter()
        .enumerate()
        .map(|(i, c)| (i + 2) as f64 * c * r.powi(i as i32 + 1))
        .sum()
}

/// `Σ_k c_k r^{k+1}` for `k = 1..`.
fn shifted_tail(tail: &[f64], r: f64) -> f64 {
    tail.iter()
        .enumerate()
        .map(|(i, c)| c * r.powi(i as i32 + 2))
        .sum()
}

impl F1Params {
    pub fn validate(&self) -> Result<()> {
        if !(self.lambda.is_finite() && self.lambda > 1.0) {
            return Err(Error::Parameter(format!(
                "class f1 requires Λ > 1, got {}",
                self.lambda
            )));
        }
        check_tail(&self.tail, "M")
    }

    /// `Σ_k r^k (M_k/(1 − r²) + k M_k)`, the Lipschitz bound of the tail.
    fn tail_term(&self, r: f64) -> f64 {
        let q = 1.0 - r * r;
        self.tail
            .iter()
            .enumerate()
            .map(|(i, m)| {
                let k = (i + 1) as f64;
                r.powi(i as i32 + 1) * (m / q + k * m)
            })
            .sum()
    }

    fn phi(&self, r: f64) -> f64 {
        distortion_lower(self.lambda, r) - self.tail_term(r)
    }

    fn schlicht(&self, r: f64) -> f64 {
        distortion_integral(self.lambda, r) - shifted_tail(&self.tail, r)
    }
}

impl F2Params {
    pub fn validate(&self) -> Result<()> {
        if !(self.m_bound.is_finite() && self.m_bound >= 1.0) {
            return Err(Error::Parameter(format!(
                "class f2 requires M >= 1, got {}",
                self.m_bound
            )));
        }
        check_tail(&self.tail, "Λ")
    }

    /// `M − 1/M`, the coefficient bound for `|a_n|`, `n ≥ 2`.
    fn coeff_bound(&self) -> f64 {
        self.m_bound - 1.0 / self.m_bound
    }

    fn psi(&self, r: f64) -> f64 {
        let c = self.coeff_bound();
        let head = if c == 0.0 {
            0.0
        } else {
            c * (2.0 * r - r * r) / ((1.0 - r) * (1.0 - r))
        };
        1.0 - head - weighted_tail(&self.tail, r)
    }

    fn schlicht(&self, r: f64) -> f64 {
        let c = self.coeff_bound();
        let head = if c == 0.0 { 0.0 } else { c * r * r / (1.0 - r) };
        r - head - shifted_tail(&self.tail, r)
    }
}

impl F3Params {
    pub fn validate(&self) -> Result<()> {
        if !(self.lambda0.is_finite() && self.lambda0 > 1.0) {
            return Err(Error::Parameter(format!(
                "class f3 requires Λ0 > 1, got {}",
                self.lambda0
            )));
        }
        check_tail(&self.tail, "Λ")
    }

    fn psi(&self, r: f64) -> f64 {
        distortion_lower(self.lambda0, r) - weighted_tail(&self.tail, r)
    }

    fn schlicht(&self, r: f64) -> f64 {
        distortion_integral(self.lambda0, r) - shifted_tail(&self.tail, r)
    }
}

/// `φ(r)` for class `F1`.
pub fn phi_f1(r: f64, p: &F1Params) -> Result<f64> {
    p.validate()?;
    check_r(r)?;
    Ok(p.phi(r))
}

/// `ψ₁(r)` for class `F2`.
pub fn psi_f2(r: f64, p: &F2Params) -> Result<f64> {
    p.validate()?;
    check_r(r)?;
    Ok(p.psi(r))
}

/// `ψ₂(r)` for class `F3`.
pub fn psi_f3(r: f64, p: &F3Params) -> Result<f64> {
    p.validate()?;
    check_r(r)?;
    Ok(p.psi(r))
}

impl ClassParams {
    pub fn f1(lambda: f64, tail: Vec<f64>) -> Result<Self> {
        let p = F1Params { lambda, tail };
        p.validate()?;
        Ok(Self::F1(p))
    }

    pub fn f2(m_bound: f64, tail: Vec<f64>) -> Result<Self> {
        let p = F2Params { m_bound, tail };
        p.validate()?;
        Ok(Self::F2(p))
    }

    pub fn f3(lambda0: f64, tail: Vec<f64>) -> Result<Self> {
        let p = F3Params { lambda0, tail };
        p.validate()?;
        Ok(Self::F3(p))
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Self::F1(p) => p.validate(),
            Self::F2(p) => p.validate(),
            Self::F3(p) => p.validate(),
        }
    }

    /// Order `m` of the functions in the class.
    pub fn order(&self) -> usize {
        self.tail().len() + 1
    }

    pub fn tail(&self) -> &[f64] {
        match self {
            Self::F1(p) => &p.tail,
            Self::F2(p) => &p.tail,
            Self::F3(p) => &p.tail,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::F1(_) => "f1",
            Self::F2(_) => "f2",
            Self::F3(_) => "f3",
        }
    }

    /// The class radius function (`φ`, `ψ₁` or `ψ₂`) at `r ∈ [0, 1)`.
    pub fn radius_function(&self, r: f64) -> Result<f64> {
        self.validate()?;
        check_r(r)?;
        Ok(self.radius_function_unchecked(r))
    }

    /// The schlicht-radius expression (`R₁`, `R₂` or `R₃`) evaluated at `r`.
    pub fn schlicht_value(&self, r: f64) -> Result<f64> {
        self.validate()?;
        if !(0.0..=1.0).contains(&r) {
            return Err(Error::Domain(format!("radius must lie in [0, 1], got {r}")));
        }
        Ok(self.schlicht_unchecked(r))
    }

    pub(crate) fn radius_function_unchecked(&self, r: f64) -> f64 {
        match self {
            Self::F1(p) => p.phi(r),
            Self::F2(p) => p.psi(r),
            Self::F3(p) => p.psi(r),
        }
    }

    fn schlicht_unchecked(&self, r: f64) -> f64 {
        match self {
            Self::F1(p) => p.schlicht(r),
            Self::F2(p) => p.schlicht(r),
            Self::F3(p) => p.schlicht(r),
        }
    }

    /// Upper Lipschitz constant on the closed disc of radius `rho`.
    fn lipschitz_upper(&self, rho: f64) -> f64 {
        match self {
            Self::F1(p) => p.lambda + p.tail_term(rho),
            Self::F2(p) => p.m_bound / (1.0 - rho * rho) + weighted_tail(&p.tail, rho),
            Self::F3(p) => p.lambda0 + weighted_tail(&p.tail, rho),
        }
    }
}

/// Univalence radius `r` and schlicht radius `R` of a class.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadiusResult {
    pub univalence_radius: f64,
    pub schlicht_radius: f64,
    /// Radius function at the reported `r` (at `1 − margin` for the whole disc).
    pub residual: f64,
    pub iterations: usize,
    /// The radius function stays positive on `[0, 1 − margin]`; `r = 1`.
    /// Only `F2` with `M = 1` and `Σ (k + 1) Λ_k ≤ 1` gets here.
    pub whole_disc: bool,
}

/// Solves the radius equation of `p` and evaluates its schlicht radius.
pub fn solve_radius(p: &ClassParams, cfg: &RootFindConfig) -> Result<RadiusResult> {
    p.validate()?;
    cfg.validate()?;
    let lo = cfg.endpoint_margin;
    let hi = 1.0 - cfg.endpoint_margin;
    let f = |r: f64| p.radius_function_unchecked(r);
    let at_hi = f(hi);
    if at_hi > 0.0 {
        return Ok(RadiusResult {
            univalence_radius: 1.0,
            schlicht_radius: p.schlicht_unchecked(1.0),
            residual: at_hi,
            iterations: 0,
            whole_disc: true,
        });
    }
    let b = bisect(f, lo, hi, cfg.tol, cfg.max_iter)?;
    Ok(RadiusResult {
        univalence_radius: b.root,
        schlicht_radius: p.schlicht_unchecked(b.root),
        residual: b.residual,
        iterations: b.iterations,
        whole_disc: false,
    })
}

/// Co-Lipschitz constant `l` and Lipschitz constant `L` on the closed disc
/// of radius `rho`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LipschitzBounds {
    pub rho: f64,
    pub l: f64,
    #[serde(rename = "L")]
    pub lip: f64,
}

/// Bi-Lipschitz constants for `0 < rho < r`, where `r` is the class
/// univalence radius.
pub fn bilipschitz(p: &ClassParams, rho: f64, cfg: &RootFindConfig) -> Result<LipschitzBounds> {
    let r = solve_radius(p, cfg)?.univalence_radius;
    if !(rho > 0.0 && rho < r) {
        return Err(Error::Parameter(format!(
            "ρ = {rho} must lie in (0, r) with univalence radius r = {r}"
        )));
    }
    let l = p.radius_function_unchecked(rho);
    if l <= 0.0 {
        return Err(Error::Parameter(format!(
            "co-Lipschitz constant {l} at ρ = {rho} is not positive"
        )));
    }
    Ok(LipschitzBounds {
        rho,
        l,
        lip: p.lipschitz_upper(rho),
    })
}

/// A radius pair `(ρ, σ)` from one of the reference theorems.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReferenceRadius {
    pub rho: f64,
    pub sigma: f64,
}

/// Classical Landau radii `r0 = 1/(M + √(M² − 1))`, `σ0 = M r0²`.
pub fn classical_landau(m_bound: f64) -> Result<ReferenceRadius> {
    if !(m_bound.is_finite() && m_bound >= 1.0) {
        return Err(Error::Parameter(format!("M must be >= 1, got {m_bound}")));
    }
    let r0 = 1.0 / (m_bound + (m_bound * m_bound - 1.0).sqrt());
    Ok(ReferenceRadius {
        rho: r0,
        sigma: m_bound * r0 * r0,
    })
}

/// Constants of the two harmonic-mapping Landau theorems.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HarmonicLandauConstants {
    /// Minimum of `(3 − r²)/(r(1 − r²))` over `(0, 1)`.
    pub m_const: f64,
    /// Univalence radius `π²/(16 m M)` under `|f| < M`.
    pub rho0_a: f64,
    pub r0_a: f64,
    /// Univalence radius `π/(4(1 + Λ))` under `Λ_f ≤ Λ`.
    pub rho0_b: f64,
    pub r0_b: f64,
}

/// Golden-section tolerance for the harmonic constant `m`.
const M_CONST_TOL: f64 = 1e-10;

pub fn harmonic_m_const() -> f64 {
    let h = |r: f64| (3.0 - r * r) / (r * (1.0 - r * r));
    golden_section_min(h, 1e-6, 1.0 - 1e-6, M_CONST_TOL).1
}

pub fn harmonic_landau_constants(m_bound: f64, lambda: f64) -> Result<HarmonicLandauConstants> {
    if !(m_bound.is_finite() && m_bound >= 1.0) {
        return Err(Error::Parameter(format!("M must be >= 1, got {m_bound}")));
    }
    if !(lambda.is_finite() && lambda >= 1.0) {
        return Err(Error::Parameter(format!("Λ must be >= 1, got {lambda}")));
    }
    let m_const = harmonic_m_const();
    let pi = std::f64::consts::PI;
    let rho0_a = pi * pi / (16.0 * m_const * m_bound);
    let rho0_b = pi / (4.0 * (1.0 + lambda));
    Ok(HarmonicLandauConstants {
        m_const,
        rho0_a,
        r0_a: rho0_a / 2.0,
        rho0_b,
        r0_b: rho0_b / 2.0,
    })
}

/// Radius equation for order-`m` poly-analytic maps with
/// `|f_k| ≤ M` and `f_k'(0) = 1` for all `k`. Reference only; not sharp.
fn bounded_order_equation(m: u32, m_bound: f64, rho: f64) -> f64 {
    let q = 1.0 - rho;
    let mut s = rho * (2.0 - rho) / (q * q);
    for k in 1..m {
        let k = f64::from(k);
        let d = 1.0 - k * rho;
        s += rho.powf(k) * (1.0 + k - k * rho) / (d * d);
    }
    1.0 - m_bound * s
}

pub fn theorem_c_radius(m: u32, m_bound: f64, cfg: &RootFindConfig) -> Result<ReferenceRadius> {
    if m < 2 {
        return Err(Error::Parameter(format!("order m must be >= 2, got {m}")));
    }
    if !(m_bound.is_finite() && m_bound > 1.0) {
        return Err(Error::Parameter(format!("M must be > 1, got {m_bound}")));
    }
    cfg.validate()?;
    // (1 − kρ)² in the denominators needs (m − 1)ρ < 1
    let hi = (1.0f64).min(1.0 / f64::from(m - 1)) - cfg.endpoint_margin;
    let b = bisect(
        |rho| bounded_order_equation(m, m_bound, rho),
        cfg.endpoint_margin,
        hi,
        cfg.tol,
        cfg.max_iter,
    )?;
    let rho = b.root;
    let q = 1.0 - rho;
    let geometric = (1.0 - rho.powi(m as i32 - 1)) / q;
    let tail: f64 = (0..m).map(|k| rho.powi(k as i32 + 2) / q).sum();
    Ok(ReferenceRadius {
        rho,
        sigma: rho - rho * rho * geometric - m_bound * tail,
    })
}

/// Sharp bi-analytic radii for `|G'| ≤ Λ1`, `|H'| < Λ2`.
pub fn theorem_d_radius(lambda1: f64, lambda2: f64) -> Result<ReferenceRadius> {
    if !(lambda1.is_finite() && lambda1 >= 0.0) {
        return Err(Error::Parameter(format!("Λ1 must be >= 0, got {lambda1}")));
    }
    if !(lambda2.is_finite() && lambda2 > 1.0) {
        return Err(Error::Parameter(format!("Λ2 must be > 1, got {lambda2}")));
    }
    let s = 2.0 * lambda1 + lambda2;
    let disc = lambda2 * lambda2 * s * s - 8.0 * lambda1 * lambda2;
    let rho = 2.0 * lambda2 / (lambda2 * s + disc.sqrt());
    Ok(ReferenceRadius {
        rho,
        sigma: distortion_integral(lambda2, rho) - lambda1 * rho * rho,
    })
}

/// Sharp bi-analytic radii for `|G'| ≤ Λ` with `|H| < 1` or `|H'| ≤ 1`.
pub fn theorem_e_radius(lambda: f64) -> Result<ReferenceRadius> {
    if !(lambda.is_finite() && lambda >= 0.0) {
        return Err(Error::Parameter(format!("Λ must be >= 0, got {lambda}")));
    }
    let rho = if lambda <= 0.5 {
        1.0
    } else {
        1.0 / (2.0 * lambda)
    };
    Ok(ReferenceRadius {
        rho,
        sigma: rho - lambda * rho * rho,
    })
}
