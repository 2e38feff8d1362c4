use std::path::PathBuf;

use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] ffharmonic::Error),
    #[error("cannot access {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot parse {path}: {source}")]
    Parse {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error("{0}")]
    Usage(String),
}

pub type CliResult<T> = Result<T, CliError>;

/// Structured error record written to stderr.
#[derive(Debug, Serialize)]
pub struct ErrorRecord {
    pub code: &'static str,
    pub message: String,
    pub witness: Value,
}

impl From<&CliError> for ErrorRecord {
    fn from(e: &CliError) -> Self {
        let (code, witness) = match e {
            CliError::Lib(inner) => (inner.code(), lib_witness(inner)),
            CliError::Io { path, .. } => ("Io", json!({ "path": path })),
            CliError::Parse { path, source } => (
                "Parse",
                json!({ "path": path, "line": source.line(), "column": source.column() }),
            ),
            CliError::Usage(_) => ("Usage", Value::Null),
        };
        ErrorRecord {
            code,
            message: e.to_string(),
            witness,
        }
    }
}

fn lib_witness(e: &ffharmonic::Error) -> Value {
    use ffharmonic::Error::*;
    match e {
        NonPrime(p) => json!({ "p": p }),
        FieldTooLarge { p, degree } => json!({ "p": p, "degree": degree }),
        DegreeMismatch { expected, got } => json!({ "expected": expected, "got": got }),
        InvalidElement { coeffs } => json!({ "coeffs": coeffs }),
        InvalidDivisor(d) => json!({ "d": d }),
        InadmissibleFactor(d) => json!({ "d": d }),
        ShapeMismatch(s) => json!({ "detail": s }),
        TooLarge { size, bound } => json!({ "size": size.to_string(), "bound": bound.to_string() }),
        NotCircleValued { index } | NotOnHypersphere { index } => json!({ "index": index }),
        NotQuadraticResidue(a, p) => json!({ "value": a, "p": p }),
        BudgetExceeded { candidates, budget } => {
            json!({ "candidates": candidates.to_string(), "budget": budget.to_string() })
        }
        InvalidOrder(m) => json!({ "order": m }),
        IndexOutOfRange { index, len } => json!({ "index": index, "len": len }),
        DimensionMismatch(a, b) => json!({ "got": a, "expected": b }),
        TableLength { expected, got } => json!({ "expected": expected, "got": got }),
        InvalidExponent { exponent, order } => json!({ "exponent": exponent, "order": order }),
        _ => Value::Null,
    }
}
