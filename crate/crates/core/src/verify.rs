//! Sampling-based certification of the radius and Lipschitz claims on
//! concrete functions.
//!
//! Every check returns a [`VerificationReport`] whose `worst_margin` is the
//! smallest sampled value of a quantity that the corresponding theorem says
//! is non-negative. A check passes when `worst_margin ≥ −slack`; the slack
//! only absorbs floating-point noise and is recorded in the report.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::analytic::{AnalyticFunction, TaylorConfig};
use crate::error::{Error, Result};
use crate::polyanalytic::PolyAnalyticFunction;
use crate::radii::{solve_radius, ClassParams, F3Params, RootFindConfig};
use crate::roots::bisect;
use crate::sampling::spiral_points;

pub use crate::sampling::{BoundarySampler, PairSampler};

/// Default absolute slack on report margins.
pub const DEFAULT_SLACK: f64 = 1e-9;

/// Largest allowed `|F₀(x1) − F₀(x2)|` for a collision pair.
pub const COLLISION_VALUE_TOL: f64 = 1e-9;
/// Smallest allowed `|x1 − x2|` for a collision pair.
pub const COLLISION_MIN_SEPARATION: f64 = 1e-3;

/// Largest sampled radius for sup-norm hypotheses on the open disc.
const MEMBERSHIP_RADIUS: f64 = 0.999;
const MEMBERSHIP_INTERIOR_POINTS: usize = 4096;
const MEMBERSHIP_RING_POINTS: usize = 512;

/// Point(s) where the worst margin of a check was observed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub z1: Complex64,
    pub z2: Option<Complex64>,
    /// Check-specific values at the witness, documented per check.
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check_name: String,
    pub passed: bool,
    pub worst_margin: f64,
    pub slack: f64,
    pub witness: Option<Witness>,
    pub samples_used: usize,
}

impl VerificationReport {
    fn from_margin(
        name: &str,
        worst_margin: f64,
        slack: f64,
        witness: Option<Witness>,
        samples_used: usize,
    ) -> Self {
        Self {
            check_name: name.to_string(),
            passed: worst_margin >= -slack,
            worst_margin,
            slack,
            witness,
            samples_used,
        }
    }
}

/// Tracks the minimum margin and where it occurred.
struct Worst {
    margin: f64,
    witness: Option<Witness>,
    samples: usize,
}

impl Worst {
    fn new() -> Self {
        Self {
            margin: f64::INFINITY,
            witness: None,
            samples: 0,
        }
    }

    fn observe(&mut self, margin: f64, witness: impl FnOnce() -> Witness) {
        self.samples += 1;
        // NaN margins are failures
        if margin < self.margin || margin.is_nan() && !self.margin.is_nan() {
            self.margin = margin;
            self.witness = Some(witness());
        }
    }

    fn into_report(self, name: &str, slack: f64) -> VerificationReport {
        VerificationReport::from_margin(name, self.margin, slack, self.witness, self.samples)
    }
}

fn membership_points() -> Vec<Complex64> {
    let mut pts = spiral_points(MEMBERSHIP_INTERIOR_POINTS, MEMBERSHIP_RADIUS);
    pts.extend(
        BoundarySampler {
            radius: MEMBERSHIP_RADIUS,
            n_points: MEMBERSHIP_RING_POINTS,
        }
        .points()
        .map(|(_, z)| z),
    );
    pts
}

/// Samples the class hypotheses of `params` on `f`.
///
/// The strict bound on `f_0` and the non-strict bounds on the tail are both
/// checked non-strictly; sampling cannot tell them apart. Fails with
/// [`Error::Hypothesis`] when `f` does not carry the normalization flag or
/// its order differs from the class order.
pub fn check_membership(
    f: &PolyAnalyticFunction,
    params: &ClassParams,
) -> Result<VerificationReport> {
    params.validate()?;
    if !f.is_normalized() {
        return Err(Error::Hypothesis(
            "function is not normalized (F_z(0) = 1, f_k(0) = 0); radii are not certified for it"
                .into(),
        ));
    }
    if f.order() != params.order() {
        return Err(Error::Hypothesis(format!(
            "function has order {} but the class parameters describe order {}",
            f.order(),
            params.order()
        )));
    }
    let comps = f.components();
    let mut worst = Worst::new();
    for z in membership_points() {
        for (k, fk) in comps.iter().enumerate() {
            let (bound, value) = match (params, k) {
                (ClassParams::F1(p), 0) => (p.lambda, fk.deriv_unchecked(z).norm()),
                (ClassParams::F1(p), k) => (p.tail[k - 1], fk.eval_unchecked(z).norm()),
                (ClassParams::F2(p), 0) => (p.m_bound, fk.eval_unchecked(z).norm()),
                (ClassParams::F2(p), k) => (p.tail[k - 1], fk.deriv_unchecked(z).norm()),
                (ClassParams::F3(p), 0) => (p.lambda0, fk.deriv_unchecked(z).norm()),
                (ClassParams::F3(p), k) => (p.tail[k - 1], fk.deriv_unchecked(z).norm()),
            };
            worst.observe(bound - value, || Witness {
                z1: z,
                z2: None,
                values: vec![k as f64, value, bound],
            });
        }
    }
    Ok(worst.into_report("membership", DEFAULT_SLACK))
}

fn require_certified(f: &PolyAnalyticFunction, params: &ClassParams) -> Result<()> {
    let report = check_membership(f, params)?;
    if !report.passed {
        return Err(Error::Hypothesis(format!(
            "sampled class bounds violated (worst margin {:e})",
            report.worst_margin
        )));
    }
    Ok(())
}

fn require_inside_radius(params: &ClassParams, rho: f64, cfg: &RootFindConfig) -> Result<()> {
    let r = solve_radius(params, cfg)?.univalence_radius;
    if rho >= r {
        return Err(Error::Precondition(format!(
            "sampling radius {rho} is not below the univalence radius {r}"
        )));
    }
    Ok(())
}

/// Checks `|F(z1) − F(z2)| ≥ l |z1 − z2|` on sampled pairs.
///
/// Witness values: `[|ΔF|, |Δz|]`.
pub fn check_colipschitz(
    f: &PolyAnalyticFunction,
    params: &ClassParams,
    sampler: &PairSampler,
    l: f64,
    cfg: &RootFindConfig,
) -> Result<VerificationReport> {
    require_certified(f, params)?;
    require_inside_radius(params, sampler.radius, cfg)?;
    let mut worst = Worst::new();
    for (z1, z2) in sampler.pairs() {
        let df = (f.eval_unchecked(z1) - f.eval_unchecked(z2)).norm();
        let dz = (z1 - z2).norm();
        worst.observe(df - l * dz, || Witness {
            z1,
            z2: Some(z2),
            values: vec![df, dz],
        });
    }
    Ok(worst.into_report("colipschitz", DEFAULT_SLACK))
}

/// Checks `|F(z1) − F(z2)| ≤ L |z1 − z2|` on sampled pairs.
///
/// Witness values: `[|ΔF|, |Δz|]`.
pub fn check_lipschitz(
    f: &PolyAnalyticFunction,
    params: &ClassParams,
    sampler: &PairSampler,
    lip: f64,
    cfg: &RootFindConfig,
) -> Result<VerificationReport> {
    require_certified(f, params)?;
    require_inside_radius(params, sampler.radius, cfg)?;
    let mut worst = Worst::new();
    for (z1, z2) in sampler.pairs() {
        let df = (f.eval_unchecked(z1) - f.eval_unchecked(z2)).norm();
        let dz = (z1 - z2).norm();
        worst.observe(lip * dz - df, || Witness {
            z1,
            z2: Some(z2),
            values: vec![df, dz],
        });
    }
    Ok(worst.into_report("lipschitz", DEFAULT_SLACK))
}

/// Checks `min |F|` over the boundary samples against the schlicht radius
/// `R`. The boundary should be the circle of the univalence radius.
///
/// Witness values: `[min |F|, argmin angle]`.
pub fn check_schlicht(
    f: &PolyAnalyticFunction,
    boundary: &BoundarySampler,
    schlicht_radius: f64,
) -> Result<VerificationReport> {
    let mut worst = Worst::new();
    for (theta, z) in boundary.points() {
        let v = f.eval(z)?.norm();
        worst.observe(v - schlicht_radius, || Witness {
            z1: z,
            z2: None,
            values: vec![v, theta],
        });
    }
    Ok(worst.into_report("schlicht", DEFAULT_SLACK))
}

/// A pair of real points with equal image under the `F3` extremal function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Collision {
    pub x1: f64,
    pub x2: f64,
    /// Univalence radius `r₃` separating the two points.
    pub r3: f64,
    /// `|g(x1) − g(x2)|` for the real profile `g = F₀|[0, 1]`.
    pub gap: f64,
}

/// Real profile of the extremal function,
/// `g(x) = Λ0² x + (Λ0³ − Λ0) ln(1 − x/Λ0) − Σ x^{k+1} Λ_k`.
fn profile(p: &F3Params, x: f64) -> f64 {
    let l = p.lambda0;
    let tail: f64 = p
        .tail
        .iter()
        .enumerate()
        .map(|(i, c)| c * x.powi(i as i32 + 2))
        .sum();
    l * l * x + (l * l * l - l) * (-x / l).ln_1p() - tail
}

/// For `x1 ∈ (r₃, 1]`, the point `x2 ∈ (0, r₃)` on the increasing branch of
/// `g` with `g(x2) = g(x1)`.
pub fn collision_partner(
    lambda0: f64,
    tail: &[f64],
    x1: f64,
    cfg: &RootFindConfig,
) -> Result<Collision> {
    let p = F3Params {
        lambda0,
        tail: tail.to_vec(),
    };
    p.validate()?;
    let r3 = solve_radius(&ClassParams::F3(p.clone()), cfg)?.univalence_radius;
    if !(x1 > r3 && x1 <= 1.0) {
        return Err(Error::Precondition(format!(
            "x1 = {x1} must lie in (r3, 1] = ({r3}, 1]; g peaks at r3 and has no partner there"
        )));
    }
    let target = profile(&p, x1);
    if target <= 0.0 {
        return Err(Error::Infeasible(format!(
            "g(x1) = {target} is not above g(0) = 0, so no partner exists in (0, r3)"
        )));
    }
    // tol = 0 runs the bisection to the last representable bracket
    let b = bisect(|x| profile(&p, x) - target, 0.0, r3, 0.0, cfg.max_iter)?;
    let x2 = b.root;
    let gap = (profile(&p, x2) - target).abs();
    if gap > 1e-12 {
        return Err(Error::NonConvergence {
            iterations: b.iterations,
            width: b.hi - b.lo,
        });
    }
    Ok(Collision { x1, x2, r3, gap })
}

/// Exhibits non-injectivity of the `F3` extremal function on the disc of
/// radius `r ∈ (r₃, 1]`.
///
/// `x1 = r₃ + ε` with `ε = (r − r₃)/2`, shrunk to `(r′ − r₃)/2` when `g(1) ≤ 0`
/// and `r′` is the zero of `g` beyond `r₃`. This keeps `g(x1) > 0 = g(0)`, so
/// the increasing branch has a partner.
pub fn find_collision(
    lambda0: f64,
    tail: &[f64],
    r: f64,
    cfg: &RootFindConfig,
) -> Result<Collision> {
    let p = F3Params {
        lambda0,
        tail: tail.to_vec(),
    };
    p.validate()?;
    let r3 = solve_radius(&ClassParams::F3(p.clone()), cfg)?.univalence_radius;
    if !(r > r3 && r <= 1.0) {
        return Err(Error::Precondition(format!(
            "r = {r} must lie in (r3, 1] = ({r3}, 1]"
        )));
    }
    let mut eps = (r - r3) / 2.0;
    if profile(&p, 1.0) <= 0.0 {
        let r_zero = bisect(|x| profile(&p, x), r3, 1.0, 0.0, cfg.max_iter)?.root;
        eps = eps.min((r_zero - r3) / 2.0);
    }
    collision_partner(lambda0, tail, r3 + eps, cfg)
}

/// Runs [`find_collision`] at `r = min(1, r₃ + r_offset)` and confirms the
/// pair on the poly-analytic extremal function itself.
///
/// The margin is `min(1e−9 − |F₀(x1) − F₀(x2)|, |x1 − x2| − 1e−3)` and the
/// slack is zero. Witness values: `[|F₀(x1) − F₀(x2)|, r₃, r]`.
pub fn check_collision(
    lambda0: f64,
    tail: &[f64],
    r_offset: f64,
    cfg: &RootFindConfig,
) -> Result<VerificationReport> {
    if !(r_offset > 0.0) {
        return Err(Error::Parameter(format!(
            "r offset must be > 0, got {r_offset}"
        )));
    }
    let f0 = PolyAnalyticFunction::extremal_f0(lambda0, tail)?;
    let r3 = solve_radius(&ClassParams::f3(lambda0, tail.to_vec())?, cfg)?.univalence_radius;
    let r = (r3 + r_offset).min(1.0);
    let c = find_collision(lambda0, tail, r, cfg)?;
    let z1 = Complex64::new(c.x1, 0.0);
    let z2 = Complex64::new(c.x2, 0.0);
    // x1 may be 1 when r3 + ε reaches the unit circle; F₀ extends continuously there
    let value = |z: Complex64| -> Result<Complex64> {
        if z.re < 1.0 {
            f0.eval(z)
        } else {
            Ok(f0.eval_unchecked(z))
        }
    };
    let df = (value(z1)? - value(z2)?).norm();
    let margin = (COLLISION_VALUE_TOL - df).min((c.x1 - c.x2).abs() - COLLISION_MIN_SEPARATION);
    Ok(VerificationReport::from_margin(
        "collision",
        margin,
        0.0,
        Some(Witness {
            z1,
            z2: Some(z2),
            values: vec![df, c.r3, r],
        }),
        1,
    ))
}

/// Checks `(1 − |z|²)|f'(z)| ≤ 1` on `n_samples` spiral points of the disc
/// of radius 0.999, after confirming `|f| ≤ 1` there.
///
/// Witness values: `[(1 − |z|²)|f'(z)|]`.
pub fn check_schwarz_pick(f: &AnalyticFunction, n_samples: usize) -> Result<VerificationReport> {
    if n_samples < 1 {
        return Err(Error::Parameter("need at least one sample".into()));
    }
    let pts = spiral_points(n_samples, MEMBERSHIP_RADIUS);
    if let Some(z) = pts
        .iter()
        .find(|z| f.eval_unchecked(**z).norm() > 1.0 + DEFAULT_SLACK)
    {
        return Err(Error::Hypothesis(format!(
            "|f({z})| = {} exceeds 1; f is not a self-map of the disc",
            f.eval_unchecked(*z).norm()
        )));
    }
    let mut worst = Worst::new();
    for z in pts {
        let v = (1.0 - z.norm_sqr()) * f.deriv_unchecked(z).norm();
        worst.observe(1.0 - v, || Witness {
            z1: z,
            z2: None,
            values: vec![v],
        });
    }
    Ok(worst.into_report("schwarz_pick", DEFAULT_SLACK))
}

/// Radius of the circle on which `|f| ≤ M` is sampled before extracting
/// coefficients.
const COEFF_HYPOTHESIS_RADIUS: f64 = 0.9;
const COEFF_HYPOTHESIS_POINTS: usize = 256;
/// Tolerance for the `f(0) = 0`, `|a_1| = 1` hypotheses.
const COEFF_NORMALIZATION_TOL: f64 = 1e-6;

/// Checks `|a_n| ≤ M − 1/M` for `n = 2..=n_max`.
///
/// Witness values: `[n, |a_n|]` for the tightest coefficient.
pub fn check_coefficient_bounds(
    f: &AnalyticFunction,
    m_bound: f64,
    n_max: usize,
) -> Result<VerificationReport> {
    if !(m_bound.is_finite() && m_bound >= 1.0) {
        return Err(Error::Parameter(format!("M must be >= 1, got {m_bound}")));
    }
    if n_max < 2 {
        return Err(Error::Parameter(format!("N must be >= 2, got {n_max}")));
    }
    let ring = BoundarySampler {
        radius: COEFF_HYPOTHESIS_RADIUS,
        n_points: COEFF_HYPOTHESIS_POINTS,
    };
    if let Some((_, z)) = ring
        .points()
        .find(|(_, z)| f.eval_unchecked(*z).norm() > m_bound + DEFAULT_SLACK)
    {
        return Err(Error::Hypothesis(format!(
            "|f({z})| = {} exceeds M = {m_bound}",
            f.eval_unchecked(z).norm()
        )));
    }
    let a = TaylorConfig::default().coefficients(f, n_max)?;
    if a[0].norm() > COEFF_NORMALIZATION_TOL {
        return Err(Error::Hypothesis(format!("f(0) = {} is not 0", a[0])));
    }
    if (a[1].norm() - 1.0).abs() > COEFF_NORMALIZATION_TOL {
        return Err(Error::Hypothesis(format!(
            "|a_1| = {} is not 1",
            a[1].norm()
        )));
    }
    let bound = m_bound - 1.0 / m_bound;
    let mut worst = Worst::new();
    for (n, an) in a.iter().enumerate().skip(2) {
        worst.observe(bound - an.norm(), || Witness {
            z1: Complex64::new(0.0, 0.0),
            z2: None,
            values: vec![n as f64, an.norm()],
        });
    }
    Ok(worst.into_report("coefficient_bounds", DEFAULT_SLACK))
}

/// Smallest radius on the brute-force ladder.
pub const LADDER_START: f64 = 0.02;
/// Largest radius on the brute-force ladder.
pub const LADDER_TOP: f64 = 0.99;
/// Ratio between consecutive ladder rungs.
pub const LADDER_RATIO: f64 = 1.02;
/// Two mesh edges whose images come this close count as a collision.
pub const MESH_CONTACT_TOL: f64 = 1e-12;

/// Result of [`brute_force_univalence_radius`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UnivalenceEstimate {
    /// Last ladder rung before the first rung showing a collision, or the
    /// top of the ladder.
    pub estimate: f64,
    /// First rung showing a collision.
    pub first_collision: Option<f64>,
    /// Distance from `estimate` to the next rung, `estimate·(ratio − 1)`.
    pub ladder_step: f64,
}

/// Empirical univalence radius from a polar mesh.
///
/// For each rung `r` of the geometric ladder the closed disc of radius `r`
/// is covered by a polar mesh with `grid_n` rings and `grid_n` rays. The
/// mesh edges are mapped by `F` as straight segments, and a collision is any
/// pair of edges without a common vertex whose images come within
/// [`MESH_CONTACT_TOL`]. This is an estimate, neither an upper nor a lower
/// bound on the true univalence radius.
pub fn brute_force_univalence_radius(
    f: &PolyAnalyticFunction,
    grid_n: usize,
) -> Result<UnivalenceEstimate> {
    if grid_n < 16 {
        return Err(Error::Parameter(format!(
            "grid_n must be >= 16, got {grid_n}"
        )));
    }
    let mut best = None;
    let mut r = LADDER_START;
    while r <= LADDER_TOP {
        if mesh_has_collision(f, r, grid_n) {
            let estimate = best.unwrap_or(0.0);
            return Ok(UnivalenceEstimate {
                estimate,
                first_collision: Some(r),
                ladder_step: estimate * (LADDER_RATIO - 1.0),
            });
        }
        best = Some(r);
        r *= LADDER_RATIO;
    }
    let estimate = best.unwrap_or(0.0);
    Ok(UnivalenceEstimate {
        estimate,
        first_collision: None,
        ladder_step: estimate * (LADDER_RATIO - 1.0),
    })
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: [f64; 2],
    b: [f64; 2],
    va: usize,
    vb: usize,
}

impl Segment {
    fn x_range(&self) -> (f64, f64) {
        (self.a[0].min(self.b[0]), self.a[0].max(self.b[0]))
    }

    fn y_range(&self) -> (f64, f64) {
        (self.a[1].min(self.b[1]), self.a[1].max(self.b[1]))
    }

    fn shares_vertex(&self, other: &Segment) -> bool {
        self.va == other.va || self.va == other.vb || self.vb == other.va || self.vb == other.vb
    }
}

fn mesh_has_collision(f: &PolyAnalyticFunction, r: f64, n: usize) -> bool {
    // vertex 0 is the origin, ring i (1..=n) ray j (0..n) is 1 + (i − 1)n + j
    let idx = |i: usize, j: usize| 1 + (i - 1) * n + (j % n);
    let mut images = vec![[0.0; 2]; 1 + n * n];
    let origin = f.eval_unchecked(Complex64::new(0.0, 0.0));
    images[0] = [origin.re, origin.im];
    for i in 1..=n {
        let rho = r * i as f64 / n as f64;
        for j in 0..n {
            let theta = std::f64::consts::TAU * j as f64 / n as f64;
            let w = f.eval_unchecked(Complex64::from_polar(rho, theta));
            images[idx(i, j)] = [w.re, w.im];
        }
    }
    let seg = |va: usize, vb: usize| Segment {
        a: images[va],
        b: images[vb],
        va,
        vb,
    };
    let mut segments = Vec::with_capacity(2 * n * n);
    for j in 0..n {
        segments.push(seg(0, idx(1, j)));
        for i in 1..=n {
            if i < n {
                segments.push(seg(idx(i, j), idx(i + 1, j)));
            }
            segments.push(seg(idx(i, j), idx(i, j + 1)));
        }
    }
    if images.iter().flatten().any(|v| !v.is_finite()) {
        return true;
    }
    // sweep and prune along x
    segments.sort_by(|s, t| s.x_range().0.total_cmp(&t.x_range().0));
    for (i, s) in segments.iter().enumerate() {
        let (_, sx_max) = s.x_range();
        let (sy_min, sy_max) = s.y_range();
        for t in &segments[i + 1..] {
            if t.x_range().0 > sx_max + MESH_CONTACT_TOL {
                break;
            }
            let (ty_min, ty_max) = t.y_range();
            if ty_min > sy_max + MESH_CONTACT_TOL || sy_min > ty_max + MESH_CONTACT_TOL {
                continue;
            }
            if s.shares_vertex(t) {
                continue;
            }
            if segment_distance(s.a, s.b, t.a, t.b) <= MESH_CONTACT_TOL {
                return true;
            }
        }
    }
    false
}

fn cross(o: [f64; 2], a: [f64; 2], b: [f64; 2]) -> f64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

fn point_segment_distance(p: [f64; 2], a: [f64; 2], b: [f64; 2]) -> f64 {
    let d = [b[0] - a[0], b[1] - a[1]];
    let len2 = d[0] * d[0] + d[1] * d[1];
    let t = if len2 > 0.0 {
        (((p[0] - a[0]) * d[0] + (p[1] - a[1]) * d[1]) / len2).clamp(0.0, 1.0)
    } else {
        0.0
    };
    let q = [a[0] + t * d[0], a[1] + t * d[1]];
    ((p[0] - q[0]).powi(2) + (p[1] - q[1]).powi(2)).sqrt()
}

fn segment_distance(a: [f64; 2], b: [f64; 2], c: [f64; 2], d: [f64; 2]) -> f64 {
    let d1 = cross(c, d, a);
    let d2 = cross(c, d, b);
    let d3 = cross(a, b, c);
    let d4 = cross(a, b, d);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return 0.0;
    }
    point_segment_distance(a, c, d)
        .min(point_segment_distance(b, c, d))
        .min(point_segment_distance(c, a, b))
        .min(point_segment_distance(d, a, b))
}

/// Parameters of the full verification battery for one class.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BatteryConfig {
    /// Pairs are sampled on the disc of radius `rho_frac · r`.
    pub rho_frac: f64,
    pub seed: u64,
    pub pairs: usize,
    pub boundary_points: usize,
    /// The collision check uses `r = min(1, r₃ + r_offset)`.
    pub r_offset: f64,
    pub root: RootFindConfig,
}

impl Default for BatteryConfig {
    fn default() -> Self {
        Self {
            rho_frac: 0.9,
            seed: 42,
            pairs: 100_000,
            boundary_points: 720,
            r_offset: 0.05,
            root: RootFindConfig::default(),
        }
    }
}

/// The checks of the verification battery.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Membership,
    Colipschitz,
    Lipschitz,
    Schlicht,
    /// `F3` only.
    Collision,
    /// `F2` only: coefficient bounds of the bounded component.
    CoefficientBounds,
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::Membership,
        Check::Colipschitz,
        Check::Lipschitz,
        Check::Schlicht,
        Check::Collision,
        Check::CoefficientBounds,
    ];

    fn applies_to(self, params: &ClassParams) -> bool {
        match self {
            Check::Collision => matches!(params, ClassParams::F3(_)),
            Check::CoefficientBounds => matches!(params, ClassParams::F2(_)),
            _ => true,
        }
    }
}

/// A function in the class described by `params` that the battery runs on.
///
/// `F3` uses the sharp extremal function. `F1` uses the log-distortion
/// extremal with tail `f_k(z) = −M_k z`. `F2` uses the Blaschke-type
/// extremal with `n = 2` (the identity when `M = 1`) with tail
/// `f_k(z) = −Λ_k z`.
pub fn class_witness(params: &ClassParams) -> Result<PolyAnalyticFunction> {
    params.validate()?;
    let tail = |v: &[f64]| {
        v.iter()
            .map(|&c| AnalyticFunction::scaled_identity(Complex64::new(-c, 0.0)))
            .collect::<Vec<_>>()
    };
    match params {
        ClassParams::F1(p) => {
            let mut comps = vec![AnalyticFunction::log_distortion(p.lambda)?];
            comps.extend(tail(&p.tail));
            PolyAnalyticFunction::normalized(comps)
        }
        ClassParams::F2(p) => {
            let head = if p.m_bound > 1.0 {
                AnalyticFunction::blaschke_type(p.m_bound, 2)?
            } else {
                AnalyticFunction::scaled_identity(Complex64::new(1.0, 0.0))
            };
            let mut comps = vec![head];
            comps.extend(tail(&p.tail));
            PolyAnalyticFunction::normalized(comps)
        }
        ClassParams::F3(p) => PolyAnalyticFunction::extremal_f0(p.lambda0, &p.tail),
    }
}

/// Largest coefficient index checked by the battery's coefficient check.
const BATTERY_COEFFS: usize = 8;
/// Boundary radius used for the schlicht check when the whole disc is univalent.
const WHOLE_DISC_BOUNDARY: f64 = 1.0 - 1e-6;

/// Runs the selected checks on [`class_witness`] of `params`, in the order
/// of [`Check::ALL`]. Checks that do not apply to the class are skipped.
pub fn run_battery(
    params: &ClassParams,
    checks: &[Check],
    cfg: &BatteryConfig,
) -> Result<Vec<VerificationReport>> {
    if !(cfg.rho_frac > 0.0 && cfg.rho_frac < 1.0) {
        return Err(Error::Parameter(format!(
            "rho fraction must lie in (0, 1), got {}",
            cfg.rho_frac
        )));
    }
    let f = class_witness(params)?;
    let radius = solve_radius(params, &cfg.root)?;
    let rho = cfg.rho_frac * radius.univalence_radius;
    let sampler = PairSampler::new(cfg.seed, cfg.pairs, rho)?;
    let mut reports = Vec::new();
    for check in Check::ALL {
        if !checks.contains(&check) || !check.applies_to(params) {
            continue;
        }
        let report = match check {
            Check::Membership => check_membership(&f, params)?,
            Check::Colipschitz => {
                let b = crate::radii::bilipschitz(params, rho, &cfg.root)?;
                check_colipschitz(&f, params, &sampler, b.l, &cfg.root)?
            }
            Check::Lipschitz => {
                let b = crate::radii::bilipschitz(params, rho, &cfg.root)?;
                check_lipschitz(&f, params, &sampler, b.lip, &cfg.root)?
            }
            Check::Schlicht => {
                let (r, big_r) = if radius.whole_disc {
                    (
                        WHOLE_DISC_BOUNDARY,
                        params.schlicht_value(WHOLE_DISC_BOUNDARY)?,
                    )
                } else {
                    (radius.univalence_radius, radius.schlicht_radius)
                };
                check_schlicht(&f, &BoundarySampler::new(r, cfg.boundary_points)?, big_r)?
            }
            Check::Collision => match params {
                ClassParams::F3(p) => check_collision(p.lambda0, &p.tail, cfg.r_offset, &cfg.root)?,
                _ => unreachable!("collision applies to f3 only"),
            },
            Check::CoefficientBounds => match params {
                ClassParams::F2(p) => {
                    check_coefficient_bounds(&f.components()[0], p.m_bound, BATTERY_COEFFS)?
                }
                _ => unreachable!("coefficient bounds apply to f2 only"),
            },
        };
        reports.push(report);
    }
    Ok(reports)
}
