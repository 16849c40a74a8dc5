//! Error type and resource guards shared by every fallible operation.

use std::time::Instant;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid variable set: {0}")]
    InvalidVariables(String),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquareMatrix { rows: usize, cols: usize },
    #[error("minor size {k} out of range for {rows}x{cols} matrix")]
    MinorSizeOutOfRange { k: usize, rows: usize, cols: usize },
    #[error("degree in `{var}` is {deg}, need at least {need}")]
    DegreeTooLow { var: String, deg: u32, need: u32 },
    #[error("resource guard exceeded: {0}")]
    GuardExceeded(String),
    #[error("unit ideal: {0}")]
    UnitIdeal(String),
    #[error("ideal is not zero-dimensional (dimension {0})")]
    NotZeroDimensional(usize),
    #[error("elimination ideal is not principal ({} generators)", .generators.len())]
    NonPrincipalElimination { generators: Vec<String> },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

/// Resource limits enforced inside Groebner-basis computations.
///
/// `max_degree` bounds the total degree of any basis element produced,
/// `max_basis` the number of basis elements, and `deadline` the wall clock.
#[derive(Debug, Clone)]
pub struct Guard {
    pub max_basis: usize,
    pub max_degree: u32,
    pub deadline: Option<Instant>,
}

impl Default for Guard {
    fn default() -> Self {
        Guard { max_basis: 20_000, max_degree: 60, deadline: None }
    }
}

impl Guard {
    pub fn check_degree(&self, deg: u32) -> Result<()> {
        if deg > self.max_degree {
            return Err(Error::GuardExceeded(format!(
                "total degree {deg} exceeds limit {}",
                self.max_degree
            )));
        }
        Ok(())
    }

    pub fn check_basis(&self, len: usize) -> Result<()> {
        if len > self.max_basis {
            return Err(Error::GuardExceeded(format!(
                "basis size {len} exceeds limit {}",
                self.max_basis
            )));
        }
        Ok(())
    }

    pub fn check_clock(&self) -> Result<()> {
        if let Some(deadline) = self.deadline {
            if Instant::now() > deadline {
                return Err(Error::GuardExceeded("wall-clock budget exhausted".into()));
            }
        }
        Ok(())
    }
}
