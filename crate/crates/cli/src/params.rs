//! Flag parsing and mapping of flags to class parameters.

use std::str::FromStr;

use clap::Args;
use polylandau::ClassParams;

use crate::commands::CliError;
use crate::ClassName;

/// Comma-separated list of reals; the empty string is the empty list.
#[derive(Debug, Clone, PartialEq)]
pub struct FloatList(pub Vec<f64>);

impl FromStr for FloatList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self(Vec::new()));
        }
        s.split(',')
            .map(|t| {
                let t = t.trim();
                t.parse::<f64>()
                    .ok()
                    .filter(|x| x.is_finite())
                    .ok_or_else(|| format!("`{t}` is not a finite number"))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Self)
    }
}

/// Grid of parameter values: `a,b,c` or `start:stop:steps` with both
/// endpoints included (`steps = 1` gives `start` alone).
#[derive(Debug, Clone, PartialEq)]
pub struct Range(pub Vec<f64>);

impl FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            [start, stop, steps] => {
                let num = |t: &str| {
                    t.trim()
                        .parse::<f64>()
                        .ok()
                        .filter(|x| x.is_finite())
                        .ok_or_else(|| format!("`{t}` is not a finite number"))
                };
                let (a, b) = (num(start)?, num(stop)?);
                let n: usize = steps
                    .trim()
                    .parse()
                    .map_err(|_| format!("steps `{steps}` is not a non-negative integer"))?;
                if n < 1 {
                    return Err("steps must be >= 1".into());
                }
                if n == 1 {
                    return Ok(Self(vec![a]));
                }
                let h = (b - a) / (n - 1) as f64;
                Ok(Self(
                    (0..n)
                        .map(|i| if i == n - 1 { b } else { a + h * i as f64 })
                        .collect(),
                ))
            }
            [_] => {
                let l = FloatList::from_str(s)?;
                if l.0.is_empty() {
                    return Err("empty range".into());
                }
                Ok(Self(l.0))
            }
            _ => Err(format!("`{s}` is neither a list nor start:stop:steps")),
        }
    }
}

impl Range {
    /// Sorted ascending with duplicates removed.
    pub fn sorted(&self) -> Vec<f64> {
        let mut v = self.0.clone();
        v.sort_by(f64::total_cmp);
        v.dedup();
        v
    }
}

/// Scalar parameter flags shared by `radius`, `verify` and `plot-data`.
#[derive(Args, Debug, Clone, Default)]
pub struct ScalarParams {
    /// Λ for f1 (bound on |f_0'|) and e.
    #[arg(long)]
    pub lambda: Option<f64>,
    /// Λ0 for f3 (bound on |f_0'|).
    #[arg(long)]
    pub lambda0: Option<f64>,
    /// Λ_1,...,Λ_{m-1} for f2 and f3 (bounds on |f_k'|).
    #[arg(long)]
    pub lambdas: Option<FloatList>,
    /// M_1,...,M_{m-1} for f1 (bounds on |f_k|).
    #[arg(long)]
    pub m_bounds: Option<FloatList>,
    /// M for f2 (bound on |f_0|) and c.
    #[arg(long = "M")]
    pub m_bound: Option<f64>,
    /// Order m for c.
    #[arg(long)]
    pub order: Option<u32>,
    /// Λ1 for d.
    #[arg(long)]
    pub lambda1: Option<f64>,
    /// Λ2 for d.
    #[arg(long)]
    pub lambda2: Option<f64>,
}

/// A fully resolved parameter set.
#[derive(Debug, Clone, PartialEq)]
pub enum ClassSpec {
    Poly(ClassParams),
    C { order: u32, m_bound: f64 },
    D { lambda1: f64, lambda2: f64 },
    E { lambda: f64 },
}

fn required<T: Copy>(v: Option<T>, flag: &str, class: ClassName) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("class {} requires --{flag}", class.as_str())))
}

impl ScalarParams {
    fn given(&self) -> [(&'static str, bool); 8] {
        [
            ("lambda", self.lambda.is_some()),
            ("lambda0", self.lambda0.is_some()),
            ("lambdas", self.lambdas.is_some()),
            ("m-bounds", self.m_bounds.is_some()),
            ("M", self.m_bound.is_some()),
            ("order", self.order.is_some()),
            ("lambda1", self.lambda1.is_some()),
            ("lambda2", self.lambda2.is_some()),
        ]
    }

    pub fn resolve(&self, class: ClassName) -> Result<ClassSpec, CliError> {
        let allowed: &[&str] = match class {
            ClassName::F1 => &["lambda", "m-bounds"],
            ClassName::F2 => &["M", "lambdas"],
            ClassName::F3 => &["lambda0", "lambdas"],
            ClassName::C => &["order", "M"],
            ClassName::D => &["lambda1", "lambda2"],
            ClassName::E => &["lambda"],
        };
        if let Some((flag, _)) = self
            .given()
            .into_iter()
            .find(|(flag, given)| *given && !allowed.contains(flag))
        {
            return Err(CliError::Usage(format!(
                "--{flag} does not apply to class {}",
                class.as_str()
            )));
        }
        let tail = |l: &Option<FloatList>| l.as_ref().map(|l| l.0.clone()).unwrap_or_default();
        Ok(match class {
            ClassName::F1 => ClassSpec::Poly(ClassParams::f1(
                required(self.lambda, "lambda", class)?,
                tail(&self.m_bounds),
            )?),
            ClassName::F2 => ClassSpec::Poly(ClassParams::f2(
                required(self.m_bound, "M", class)?,
                tail(&self.lambdas),
            )?),
            ClassName::F3 => ClassSpec::Poly(ClassParams::f3(
                required(self.lambda0, "lambda0", class)?,
                tail(&self.lambdas),
            )?),
            ClassName::C => ClassSpec::C {
                order: required(self.order, "order", class)?,
                m_bound: required(self.m_bound, "M", class)?,
            },
            ClassName::D => ClassSpec::D {
                lambda1: required(self.lambda1, "lambda1", class)?,
                lambda2: required(self.lambda2, "lambda2", class)?,
            },
            ClassName::E => ClassSpec::E {
                lambda: required(self.lambda, "lambda", class)?,
            },
        })
    }

    /// As [`resolve`](Self::resolve), restricted to f1/f2/f3.
    pub fn resolve_poly(&self, class: ClassName) -> Result<ClassParams, CliError> {
        match self.resolve(class)? {
            ClassSpec::Poly(p) => Ok(p),
            _ => Err(CliError::Usage(format!(
                "class {} has no poly-analytic witness; use f1, f2 or f3",
                class.as_str()
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lists() {
        assert_eq!("".parse::<FloatList>().unwrap().0, Vec::<f64>::new());
        assert_eq!("1, 0.5".parse::<FloatList>().unwrap().0, vec![1.0, 0.5]);
        assert!("1,x".parse::<FloatList>().is_err());
        assert!("nan".parse::<FloatList>().is_err());
    }

    #[test]
    fn ranges() {
        assert_eq!(
            "0:1:5".parse::<Range>().unwrap().0,
            vec![0.0, 0.25, 0.5, 0.75, 1.0]
        );
        assert_eq!("2:9:1".parse::<Range>().unwrap().0, vec![2.0]);
        assert!("0:1:0".parse::<Range>().is_err());
        assert!("".parse::<Range>().is_err());
        assert!("1:2".parse::<Range>().is_err());
        assert_eq!(
            "5,1.5,2,2".parse::<Range>().unwrap().sorted(),
            vec![1.5, 2.0, 5.0]
        );
    }

    #[test]
    fn resolution() {
        let p = ScalarParams {
            lambda0: Some(2.0),
            lambdas: Some(FloatList(vec![1.0])),
            ..Default::default()
        };
        assert_eq!(
            p.resolve(ClassName::F3).unwrap(),
            ClassSpec::Poly(ClassParams::f3(2.0, vec![1.0]).unwrap())
        );
        assert!(matches!(p.resolve(ClassName::F1), Err(CliError::Usage(_))));
        let q = ScalarParams {
            lambda: Some(1.0),
            ..Default::default()
        };
        assert!(matches!(q.resolve(ClassName::F1), Err(CliError::Usage(_))));
        assert_eq!(
            q.resolve(ClassName::E).unwrap(),
            ClassSpec::E { lambda: 1.0 }
        );
        assert!(q.resolve_poly(ClassName::E).is_err());
    }
}
