use num_bigint::BigInt;
use pcb_core::pcb::PcbMatrix;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer};
use sha2::{Digest, Sha256};

use crate::error::CliError;

/// One integer entry, kept exact.
struct Entry(BigInt);

impl<'de> Deserialize<'de> for Entry {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let n = serde_json::Number::deserialize(d)?;
        n.to_string().parse().map(Entry).map_err(|_| D::Error::custom(format!("matrix entry {n} is not an integer")))
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMatrixFile {
    n: usize,
    #[serde(rename = "L")]
    l: Vec<Vec<Entry>>,
}

/// A parsed and validated matrix file.
pub struct MatrixFile {
    pub matrix: PcbMatrix,
    /// Lowercase hex SHA-256 of the raw file bytes.
    pub digest: String,
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

pub fn parse(bytes: &[u8]) -> Result<MatrixFile, CliError> {
    let raw: RawMatrixFile = serde_json::from_slice(bytes).map_err(|e| CliError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    if raw.l.len() != raw.n {
        return Err(CliError::Validation(format!("DimensionMismatch: n = {} but L has {} rows", raw.n, raw.l.len())));
    }
    let rows: Vec<Vec<BigInt>> = raw.l.into_iter().map(|r| r.into_iter().map(|e| e.0).collect()).collect();
    let matrix = PcbMatrix::validate(&rows).map_err(|e| CliError::Validation(e.to_string()))?;
    Ok(MatrixFile { matrix, digest: digest(bytes) })
}

pub fn read(path: &std::path::Path) -> Result<MatrixFile, CliError> {
    let bytes =
        std::fs::read(path).map_err(|e| CliError::Io { path: path.display().to_string(), message: e.to_string() })?;
    parse(&bytes)
}
