use polylandau::radii::{
    bilipschitz, classical_landau, harmonic_landau_constants, solve_radius, theorem_c_radius,
    theorem_d_radius, theorem_e_radius, ReferenceRadius,
};
use polylandau::verify::{class_witness, run_battery, BatteryConfig, Check};
use polylandau::{BoundarySampler, ClassParams, Error, RootFindConfig};

use crate::output::{csv_table, json_line, row_to_json, to_json, Row};
use crate::params::{ClassSpec, FloatList, Range};
use crate::{
    CheckName, ClassName, ConstantsArgs, Format, PlotDataArgs, RadiusArgs, SweepArgs, VerifyArgs,
};

#[derive(Debug)]
pub enum CliError {
    /// Bad flags or parameters outside a class's validity region (exit 2).
    Usage(String),
    /// A computation or certification could not be completed (exit 1).
    Failed(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failed(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Failed(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parameter(_) | Error::Domain(_) | Error::Precondition(_) => {
                CliError::Usage(e.to_string())
            }
            Error::Hypothesis(_) | Error::Infeasible(_) | Error::NonConvergence { .. } => {
                CliError::Failed(e.to_string())
            }
        }
    }
}

pub struct Output {
    pub text: String,
    pub passed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, passed: true }
    }
}

type CmdResult = Result<Output, CliError>;

/// Whole-disc classes are scanned on this circle instead of the unit circle.
const WHOLE_DISC_BOUNDARY: f64 = 1.0 - 1e-6;

fn root_config(tol: f64) -> Result<RootFindConfig, CliError> {
    let cfg = RootFindConfig {
        tol,
        ..RootFindConfig::default()
    };
    cfg.validate()?;
    Ok(cfg)
}

fn check_rho_frac(rho_frac: f64) -> Result<(), CliError> {
    if !(rho_frac > 0.0 && rho_frac < 1.0) {
        return Err(CliError::Usage(format!(
            "--rho-frac must lie in (0, 1) so that rho stays below the univalence radius, got {rho_frac}"
        )));
    }
    Ok(())
}

fn single_row(row: Row, format: Format) -> String {
    match format {
        Format::Json => json_line(&row_to_json(&row)) + "\n",
        Format::Csv => csv_table(&[row]),
    }
}

fn table(class: ClassName, rows: &[Row], format: Format) -> String {
    match format {
        Format::Json => {
            let rows: Vec<_> = rows.iter().map(row_to_json).collect();
            let v = serde_json::json!({ "class": class.as_str(), "rows": rows });
            json_line(&v) + "\n"
        }
        Format::Csv => csv_table(rows),
    }
}

/// Parameter columns of a class: head symbol and tail symbols.
fn class_columns(p: &ClassParams) -> Row {
    let (head, value, tail_symbol) = match p {
        ClassParams::F1(q) => ("lambda", q.lambda, "m"),
        ClassParams::F2(q) => ("M", q.m_bound, "lambda"),
        ClassParams::F3(q) => ("lambda0", q.lambda0, "lambda"),
    };
    let mut row: Row = vec![
        ("class".into(), p.name().into()),
        (head.into(), value.into()),
    ];
    for (k, v) in p.tail().iter().enumerate() {
        row.push((format!("{tail_symbol}_{}", k + 1), (*v).into()));
    }
    row
}

fn reference_row(target: &ClassSpec, r: ReferenceRadius) -> Row {
    let mut row: Row = match *target {
        ClassSpec::C { order, m_bound } => vec![
            ("class".into(), "c".into()),
            ("order".into(), u64::from(order).into()),
            ("M".into(), m_bound.into()),
        ],
        ClassSpec::D { lambda1, lambda2 } => vec![
            ("class".into(), "d".into()),
            ("lambda1".into(), lambda1.into()),
            ("lambda2".into(), lambda2.into()),
        ],
        ClassSpec::E { lambda } => vec![
            ("class".into(), "e".into()),
            ("lambda".into(), lambda.into()),
        ],
        ClassSpec::Poly(_) => unreachable!("poly-analytic classes have their own rows"),
    };
    row.push(("rho".into(), r.rho.into()));
    row.push(("sigma".into(), r.sigma.into()));
    row
}

fn reference_radius(target: &ClassSpec, cfg: &RootFindConfig) -> Result<ReferenceRadius, CliError> {
    Ok(match *target {
        ClassSpec::C { order, m_bound } => theorem_c_radius(order, m_bound, cfg)?,
        ClassSpec::D { lambda1, lambda2 } => theorem_d_radius(lambda1, lambda2)?,
        ClassSpec::E { lambda } => theorem_e_radius(lambda)?,
        ClassSpec::Poly(_) => unreachable!("poly-analytic classes use solve_radius"),
    })
}

pub fn radius(a: &RadiusArgs) -> CmdResult {
    let cfg = root_config(a.tol)?;
    let target = a.params.resolve(a.class)?;
    let row = match &target {
        ClassSpec::Poly(p) => {
            let res = solve_radius(p, &cfg)?;
            let mut row = class_columns(p);
            row.extend([
                ("r".into(), res.univalence_radius.into()),
                ("R".into(), res.schlicht_radius.into()),
                ("residual".into(), res.residual.into()),
                ("iterations".into(), (res.iterations as u64).into()),
                ("whole_disc".into(), res.whole_disc.into()),
            ]);
            row
        }
        _ => reference_row(&target, reference_radius(&target, &cfg)?),
    };
    Ok(Output::ok(single_row(row, a.format)))
}

fn to_check(c: CheckName) -> Check {
    match c {
        CheckName::Membership => Check::Membership,
        CheckName::Colipschitz => Check::Colipschitz,
        CheckName::Lipschitz => Check::Lipschitz,
        CheckName::Schlicht => Check::Schlicht,
        CheckName::Collision => Check::Collision,
        CheckName::CoefficientBounds => Check::CoefficientBounds,
    }
}

pub fn verify(a: &VerifyArgs) -> CmdResult {
    check_rho_frac(a.rho_frac)?;
    let (class, params) = match a.class {
        Some(c) => (c, a.params.clone()),
        None => {
            let mut p = a.params.clone();
            if p.lambda0.is_none() {
                p.lambda0 = Some(2.0);
            }
            if p.lambdas.is_none() {
                p.lambdas = Some(FloatList(vec![1.0]));
            }
            (ClassName::F3, p)
        }
    };
    let p = params.resolve_poly(class)?;
    let checks: Vec<Check> = if a.check.is_empty() {
        Check::ALL.to_vec()
    } else {
        a.check.iter().map(|c| to_check(*c)).collect()
    };
    for c in &checks {
        let applies = match c {
            Check::Collision => class == ClassName::F3,
            Check::CoefficientBounds => class == ClassName::F2,
            _ => true,
        };
        if !applies && !a.check.is_empty() {
            return Err(CliError::Usage(format!(
                "check {c:?} does not apply to class {}",
                class.as_str()
            )));
        }
    }
    let cfg = BatteryConfig {
        rho_frac: a.rho_frac,
        seed: a.seed,
        pairs: a.pairs,
        boundary_points: a.boundary_points,
        r_offset: a.r_offset,
        root: root_config(a.tol)?,
    };
    let reports = run_battery(&p, &checks, &cfg)?;
    let passed = reports.iter().all(|r| r.passed);
    let text = match a.format {
        Format::Json => reports
            .iter()
            .map(|r| json_line(&to_json(r)) + "\n")
            .collect(),
        Format::Csv => {
            let rows: Vec<Row> = reports
                .iter()
                .map(|r| {
                    let w = r.witness.as_ref();
                    let z1 = w.map(|w| w.z1);
                    let z2 = w.and_then(|w| w.z2);
                    vec![
                        ("check_name".into(), r.check_name.as_str().into()),
                        ("passed".into(), r.passed.into()),
                        ("worst_margin".into(), r.worst_margin.into()),
                        ("slack".into(), r.slack.into()),
                        ("samples_used".into(), (r.samples_used as u64).into()),
                        ("z1_re".into(), z1.map_or(f64::NAN, |z| z.re).into()),
                        ("z1_im".into(), z1.map_or(f64::NAN, |z| z.im).into()),
                        ("z2_re".into(), z2.map_or(f64::NAN, |z| z.re).into()),
                        ("z2_im".into(), z2.map_or(f64::NAN, |z| z.im).into()),
                    ]
                })
                .collect();
            csv_table(&rows)
        }
    };
    Ok(Output { text, passed })
}

fn cartesian(axes: &[Vec<f64>]) -> Vec<Vec<f64>> {
    axes.iter().fold(vec![Vec::new()], |acc, axis| {
        acc.iter()
            .flat_map(|prefix| {
                axis.iter().map(move |v| {
                    let mut p = prefix.clone();
                    p.push(*v);
                    p
                })
            })
            .collect()
    })
}

fn sweep_axes(a: &SweepArgs) -> Result<Vec<Vec<f64>>, CliError> {
    let given = [
        ("lambda", &a.lambda),
        ("lambda0", &a.lambda0),
        ("M", &a.m_bound),
        ("order", &a.order),
        ("lambda1", &a.lambda1),
        ("lambda2", &a.lambda2),
    ];
    let heads: &[&str] = match a.class {
        ClassName::F1 | ClassName::E => &["lambda"],
        ClassName::F2 => &["M"],
        ClassName::F3 => &["lambda0"],
        ClassName::C => &["order", "M"],
        ClassName::D => &["lambda1", "lambda2"],
    };
    for (flag, range) in given {
        if range.is_some() && !heads.contains(&flag) {
            return Err(CliError::Usage(format!(
                "--{flag} does not apply to class {}",
                a.class.as_str()
            )));
        }
    }
    let poly = matches!(a.class, ClassName::F1 | ClassName::F2 | ClassName::F3);
    if !poly && !a.tail.is_empty() {
        return Err(CliError::Usage(format!(
            "--tail does not apply to class {}",
            a.class.as_str()
        )));
    }
    let mut axes = Vec::new();
    for head in heads {
        let range: &Option<Range> = given.iter().find(|(f, _)| f == head).unwrap().1;
        let range = range.as_ref().ok_or_else(|| {
            CliError::Usage(format!("class {} requires --{head}", a.class.as_str()))
        })?;
        axes.push(range.sorted());
    }
    axes.extend(a.tail.iter().map(Range::sorted));
    Ok(axes)
}

fn poly_sweep_row(p: &ClassParams, rho_frac: f64, cfg: &RootFindConfig) -> Result<Row, CliError> {
    let res = solve_radius(p, cfg)?;
    let rho = rho_frac * res.univalence_radius;
    let b = bilipschitz(p, rho, cfg)?;
    let mut row = class_columns(p);
    row.extend([
        ("r".into(), res.univalence_radius.into()),
        ("R".into(), res.schlicht_radius.into()),
        ("rho".into(), rho.into()),
        ("l".into(), b.l.into()),
        ("L".into(), b.lip.into()),
        ("whole_disc".into(), res.whole_disc.into()),
    ]);
    if let ClassParams::F3(q) = p {
        if q.tail.len() == 1 {
            let d = theorem_d_radius(q.tail[0], q.lambda0)?;
            row.push(("d_rho".into(), d.rho.into()));
            row.push(("d_sigma".into(), d.sigma.into()));
        }
    }
    Ok(row)
}

fn order_value(x: f64) -> Result<u32, CliError> {
    if x.fract() != 0.0 || !(0.0..=f64::from(u32::MAX)).contains(&x) {
        return Err(CliError::Usage(format!(
            "order must be a non-negative integer, got {x}"
        )));
    }
    Ok(x as u32)
}

pub fn sweep(a: &SweepArgs) -> CmdResult {
    check_rho_frac(a.rho_frac)?;
    let cfg = root_config(a.tol)?;
    let axes = sweep_axes(a)?;
    let mut rows = Vec::new();
    for point in cartesian(&axes) {
        let row = match a.class {
            ClassName::F1 => poly_sweep_row(
                &ClassParams::f1(point[0], point[1..].to_vec())?,
                a.rho_frac,
                &cfg,
            )?,
            ClassName::F2 => poly_sweep_row(
                &ClassParams::f2(point[0], point[1..].to_vec())?,
                a.rho_frac,
                &cfg,
            )?,
            ClassName::F3 => poly_sweep_row(
                &ClassParams::f3(point[0], point[1..].to_vec())?,
                a.rho_frac,
                &cfg,
            )?,
            ClassName::C => {
                let target = ClassSpec::C {
                    order: order_value(point[0])?,
                    m_bound: point[1],
                };
                reference_row(&target, reference_radius(&target, &cfg)?)
            }
            ClassName::D => {
                let target = ClassSpec::D {
                    lambda1: point[0],
                    lambda2: point[1],
                };
                reference_row(&target, reference_radius(&target, &cfg)?)
            }
            ClassName::E => {
                let target = ClassSpec::E { lambda: point[0] };
                reference_row(&target, reference_radius(&target, &cfg)?)
            }
        };
        rows.push(row);
    }
    Ok(Output::ok(table(a.class, &rows, a.format)))
}

pub fn constants(a: &ConstantsArgs) -> CmdResult {
    let classical = classical_landau(a.m_bound)?;
    let h = harmonic_landau_constants(a.m_bound, a.lambda)?;
    let row: Row = vec![
        ("M".into(), a.m_bound.into()),
        ("lambda".into(), a.lambda.into()),
        ("m_const".into(), h.m_const.into()),
        ("r0".into(), classical.rho.into()),
        ("sigma0".into(), classical.sigma.into()),
        ("rho0_a".into(), h.rho0_a.into()),
        ("R0_a".into(), h.r0_a.into()),
        ("rho0_b".into(), h.rho0_b.into()),
        ("R0_b".into(), h.r0_b.into()),
    ];
    Ok(Output::ok(single_row(row, a.format)))
}

pub fn plot_data(a: &PlotDataArgs) -> CmdResult {
    let cfg = root_config(a.tol)?;
    let p = a.params.resolve_poly(a.class)?;
    let res = solve_radius(&p, &cfg)?;
    let (radius, big_r) = if res.whole_disc {
        (WHOLE_DISC_BOUNDARY, p.schlicht_value(WHOLE_DISC_BOUNDARY)?)
    } else {
        (res.univalence_radius, res.schlicht_radius)
    };
    let f = class_witness(&p)?;
    let boundary = BoundarySampler::new(radius, a.boundary_points)?;
    let mut rows = Vec::with_capacity(a.boundary_points);
    for (theta, z) in boundary.points() {
        let w = f.eval(z)?;
        rows.push(vec![
            ("theta".into(), theta.into()),
            ("re".into(), w.re.into()),
            ("im".into(), w.im.into()),
            ("abs".into(), w.norm().into()),
            ("R".into(), big_r.into()),
        ]);
    }
    Ok(Output::ok(table(a.class, &rows, a.format)))
}
