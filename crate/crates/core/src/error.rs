use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A point was outside the open unit disc (or not finite).
    #[error("domain error: {0}")]
    Domain(String),

    /// A parameter violated the invariant of the object being built.
    #[error("parameter error: {0}")]
    Parameter(String),

    #[error("bisection did not converge within {iterations} iterations (bracket width {width:e})")]
    NonConvergence { iterations: usize, width: f64 },

    /// The inputs of a check do not meet its preconditions.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A sampled hypothesis of a theorem does not hold for the given function.
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    #[error("infeasible: {0}")]
    Infeasible(String),
}

pub(crate) fn check_in_disc(z: num_complex::Complex64) -> Result<()> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::Domain(format!("non-finite point {z}")));
    }
    if z.norm() >= 1.0 {
        return Err(Error::Domain(format!(
            "|z| = {} is not inside the unit disc",
            z.norm()
        )));
    }
    Ok(())
}
