use std::io::{Read, Write};
use std::path::Path;

use serde::Serialize;
use thiserror::Error;

use ambitoric_core::{AmbitoricData, Error as CoreError};

use crate::Format;

pub const EXIT_OK: u8 = 0;
pub const EXIT_MALFORMED: u8 = 1;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_VERIFY: u8 = 3;
pub const EXIT_USAGE: u8 = 64;

pub const CONVENTION: &str = "quartics list coefficients from z^4 down to z^0; quadratics q0 z^2 + 2 q1 z + q2; rationals are exact strings";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed JSON in {path}: {source}")]
    Json { path: String, source: serde_json::Error },
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("cannot write report: {0}")]
    Output(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Io { .. } | CliError::Json { .. } | CliError::Output(_) => EXIT_MALFORMED,
            CliError::Core(CoreError::Malformed(_)) => EXIT_MALFORMED,
            CliError::Core(_) => EXIT_INVALID,
        }
    }
}

pub struct Context {
    pub seed: u64,
    pub format: Format,
}

/// Reads a datum from a path, or stdin for `-`.
pub fn load(path: &Path) -> Result<AmbitoricData, CliError> {
    let name = path.display().to_string();
    let mut text = String::new();
    let res = if name == "-" { std::io::stdin().read_to_string(&mut text).map(|_| ()) } else { std::fs::read_to_string(path).map(|t| text = t) };
    res.map_err(|source| CliError::Io { path: name.clone(), source })?;
    serde_json::from_str(&text).map_err(|source| CliError::Json { path: name, source })
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    command: &'a str,
    seed: u64,
    convention: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    input: Option<&'a AmbitoricData>,
    #[serde(flatten)]
    body: &'a T,
}

impl Context {
    pub fn require_json(&self, command: &str) -> Result<(), CliError> {
        if self.format == Format::Csv {
            return Err(CliError::Usage(format!("{command} has no CSV output; use --format json")));
        }
        Ok(())
    }

    pub fn emit<T: Serialize>(&self, command: &str, input: Option<&AmbitoricData>, body: &T) -> Result<(), CliError> {
        let env = Envelope { command, seed: self.seed, convention: CONVENTION, input, body };
        let mut out = std::io::stdout().lock();
        serde_json::to_writer_pretty(&mut out, &env).map_err(|e| CliError::Output(e.to_string()))?;
        writeln!(out).map_err(|e| CliError::Output(e.to_string()))
    }

    pub fn emit_csv<R: Serialize>(&self, rows: &[R]) -> Result<(), CliError> {
        let mut w = csv::Writer::from_writer(std::io::stdout().lock());
        for r in rows {
            w.serialize(r).map_err(|e| CliError::Output(e.to_string()))?;
        }
        w.flush().map_err(|e| CliError::Output(e.to_string()))
    }
}
