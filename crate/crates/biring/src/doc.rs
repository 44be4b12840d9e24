//! JSON interchange format for matrices and command results.
//!
//! A matrix document declares its scalar ring, dimensions, and a
//! row-major `data` table of scalar encodings: rationals as `"p/q"` or
//! `"p"` strings, quaternions as 4-arrays of rational strings
//! `["w","x","y","z"]`. Rendered documents are canonical — reduced
//! rationals, sorted keys, explicit dimensions — so rendering a parsed
//! canonical document reproduces it byte for byte.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::matrix::Matrix;
use crate::scalar::{Quaternion, Rational};

/// Scalar ring a document is declared over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RingTag {
    Rational,
    Quaternion,
}

impl fmt::Display for RingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingTag::Rational => write!(f, "rational"),
            RingTag::Quaternion => write!(f, "quaternion"),
        }
    }
}

/// Optional display names for row and column positions. Carried through
/// parsing and rendering; positions stay numeric everywhere else.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LabelTable {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cols: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rows: Option<Vec<String>>,
}

impl LabelTable {
    pub fn is_empty(&self) -> bool {
        self.cols.is_none() && self.rows.is_none()
    }

    /// Labels for the transposed matrix.
    pub fn transposed(&self) -> LabelTable {
        LabelTable {
            cols: self.rows.clone(),
            rows: self.cols.clone(),
        }
    }

    /// Labels restricted to the kept 1-based positions of a minor.
    pub fn select(&self, kept_rows: &[usize], kept_cols: &[usize]) -> LabelTable {
        let pick = |names: &Option<Vec<String>>, kept: &[usize]| {
            names
                .as_ref()
                .map(|all| kept.iter().map(|&p| all[p - 1].clone()).collect())
        };
        LabelTable {
            cols: pick(&self.cols, kept_cols),
            rows: pick(&self.rows, kept_rows),
        }
    }
}

/// A parsed matrix, tagged by its scalar ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyMatrix {
    Rational(Matrix<Rational>),
    Quaternion(Matrix<Quaternion>),
}

impl AnyMatrix {
    pub fn ring(&self) -> RingTag {
        match self {
            AnyMatrix::Rational(_) => RingTag::Rational,
            AnyMatrix::Quaternion(_) => RingTag::Quaternion,
        }
    }

    pub fn rows(&self) -> usize {
        match self {
            AnyMatrix::Rational(m) => m.rows(),
            AnyMatrix::Quaternion(m) => m.rows(),
        }
    }

    pub fn cols(&self) -> usize {
        match self {
            AnyMatrix::Rational(m) => m.cols(),
            AnyMatrix::Quaternion(m) => m.cols(),
        }
    }
}

/// A matrix together with its optional position labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixDocument {
    pub matrix: AnyMatrix,
    pub labels: Option<LabelTable>,
}

impl MatrixDocument {
    pub fn new(matrix: AnyMatrix) -> Self {
        MatrixDocument { matrix, labels: None }
    }
}

/// A scalar tagged by its ring, for single-value inputs and outputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyScalar {
    Rational(Rational),
    Quaternion(Quaternion),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DocError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("parse error at {locus}: {message}")]
    Parse { locus: String, message: String },
    #[error("ring mismatch at {locus}: {message}")]
    RingMismatch { locus: String, message: String },
}

// Serde-facing shape. Fields are declared in sorted key order so that
// plain struct serialization is already canonical.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    cols: Option<usize>,
    data: Vec<Vec<Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<LabelTable>,
    ring: RingTag,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rows: Option<usize>,
}

fn cell_locus(r: usize, c: usize) -> String {
    format!("row {r} col {c}")
}

fn parse_rational_text(text: &str, locus: &str) -> Result<Rational, DocError> {
    Rational::from_str(text).map_err(|e| DocError::Parse {
        locus: locus.to_owned(),
        message: e.to_string(),
    })
}

fn parse_rational_cell(value: &Value, r: usize, c: usize) -> Result<Rational, DocError> {
    let locus = cell_locus(r, c);
    match value {
        Value::String(text) => parse_rational_text(text, &locus),
        Value::Array(_) => Err(DocError::RingMismatch {
            locus,
            message: "found a quaternion 4-array in a rational document".to_owned(),
        }),
        other => Err(DocError::Parse {
            locus,
            message: format!("expected a rational string, found {other}"),
        }),
    }
}

fn parse_quaternion_cell(value: &Value, r: usize, c: usize) -> Result<Quaternion, DocError> {
    let locus = cell_locus(r, c);
    let parts = match value {
        Value::Array(parts) => parts,
        Value::String(_) => {
            return Err(DocError::RingMismatch {
                locus,
                message: "found a bare scalar string in a quaternion document".to_owned(),
            })
        }
        other => {
            return Err(DocError::Parse {
                locus,
                message: format!("expected a quaternion 4-array, found {other}"),
            })
        }
    };
    if parts.len() != 4 {
        return Err(DocError::RingMismatch {
            locus,
            message: format!("quaternion needs 4 coefficients, found {}", parts.len()),
        });
    }
    let mut coeffs = Vec::with_capacity(4);
    for part in parts {
        match part {
            Value::String(text) => coeffs.push(parse_rational_text(text, &locus)?),
            other => {
                return Err(DocError::Parse {
                    locus,
                    message: format!("quaternion coefficients must be strings, found {other}"),
                })
            }
        }
    }
    let mut it = coeffs.into_iter();
    Ok(Quaternion::new(
        it.next().unwrap(),
        it.next().unwrap(),
        it.next().unwrap(),
        it.next().unwrap(),
    ))
}

/// Parses and validates a matrix document. Dimensions may be omitted,
/// in which case they are inferred from the data table; when present
/// they must match it. Rationals are canonicalized on ingest.
pub fn parse_matrix_document(text: &str) -> Result<MatrixDocument, DocError> {
    let raw: RawDocument =
        serde_json::from_str(text).map_err(|e| DocError::Json(e.to_string()))?;

    let rows = raw.data.len();
    if let Some(declared) = raw.rows {
        if declared != rows {
            return Err(DocError::Parse {
                locus: "rows".to_owned(),
                message: format!("declared {declared} rows but data has {rows}"),
            });
        }
    }
    if rows == 0 {
        return Err(DocError::Parse {
            locus: "data".to_owned(),
            message: "matrix must have at least one row".to_owned(),
        });
    }
    let cols = raw.data[0].len();
    for (i, row) in raw.data.iter().enumerate() {
        if row.len() != cols {
            return Err(DocError::Parse {
                locus: format!("row {}", i + 1),
                message: format!("expected {cols} entries, found {}", row.len()),
            });
        }
    }
    if let Some(declared) = raw.cols {
        if declared != cols {
            return Err(DocError::Parse {
                locus: "cols".to_owned(),
                message: format!("declared {declared} columns but data has {cols}"),
            });
        }
    }
    if cols == 0 {
        return Err(DocError::Parse {
            locus: "data".to_owned(),
            message: "matrix must have at least one column".to_owned(),
        });
    }

    if let Some(labels) = &raw.labels {
        if let Some(row_names) = &labels.rows {
            if row_names.len() != rows {
                return Err(DocError::Parse {
                    locus: "labels.rows".to_owned(),
                    message: format!("expected {rows} names, found {}", row_names.len()),
                });
            }
        }
        if let Some(col_names) = &labels.cols {
            if col_names.len() != cols {
                return Err(DocError::Parse {
                    locus: "labels.cols".to_owned(),
                    message: format!("expected {cols} names, found {}", col_names.len()),
                });
            }
        }
    }

    let matrix = match raw.ring {
        RingTag::Rational => {
            let mut table = Vec::with_capacity(rows);
            for (i, row) in raw.data.iter().enumerate() {
                let mut parsed = Vec::with_capacity(cols);
                for (j, cell) in row.iter().enumerate() {
                    parsed.push(parse_rational_cell(cell, i + 1, j + 1)?);
                }
                table.push(parsed);
            }
            AnyMatrix::Rational(Matrix::from_rows(table).expect("shape validated"))
        }
        RingTag::Quaternion => {
            let mut table = Vec::with_capacity(rows);
            for (i, row) in raw.data.iter().enumerate() {
                let mut parsed = Vec::with_capacity(cols);
                for (j, cell) in row.iter().enumerate() {
                    parsed.push(parse_quaternion_cell(cell, i + 1, j + 1)?);
                }
                table.push(parsed);
            }
            AnyMatrix::Quaternion(Matrix::from_rows(table).expect("shape validated"))
        }
    };

    let labels = raw.labels.filter(|l| !l.is_empty());
    Ok(MatrixDocument { matrix, labels })
}

pub fn rational_to_value(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn quaternion_to_value(q: &Quaternion) -> Value {
    Value::Array(vec![
        Value::String(q.w.to_string()),
        Value::String(q.x.to_string()),
        Value::String(q.y.to_string()),
        Value::String(q.z.to_string()),
    ])
}

/// Renders a document in canonical form: explicit dimensions, sorted
/// keys, two-space indentation, trailing newline.
pub fn render_matrix_document(doc: &MatrixDocument) -> String {
    let (rows, cols) = (doc.matrix.rows(), doc.matrix.cols());
    let data: Vec<Vec<Value>> = match &doc.matrix {
        AnyMatrix::Rational(m) => (1..=rows)
            .map(|r| (1..=cols).map(|c| rational_to_value(m.entry(r, c))).collect())
            .collect(),
        AnyMatrix::Quaternion(m) => (1..=rows)
            .map(|r| (1..=cols).map(|c| quaternion_to_value(m.entry(r, c))).collect())
            .collect(),
    };
    let raw = RawDocument {
        cols: Some(cols),
        data,
        labels: doc.labels.clone().filter(|l| !l.is_empty()),
        ring: doc.matrix.ring(),
        rows: Some(rows),
    };
    let mut text = serde_json::to_string_pretty(&raw).expect("document serialization");
    text.push('\n');
    text
}

/// Parses a scalar in the textual encoding of the given ring: `"p/q"`
/// or `"p"` for rationals, a JSON 4-array of rational strings for
/// quaternions.
pub fn parse_scalar(ring: RingTag, text: &str) -> Result<AnyScalar, DocError> {
    match ring {
        RingTag::Rational => Ok(AnyScalar::Rational(parse_rational_text(text, "scalar")?)),
        RingTag::Quaternion => {
            let value: Value = serde_json::from_str(text).map_err(|e| DocError::Parse {
                locus: "scalar".to_owned(),
                message: format!("expected a JSON 4-array of rational strings: {e}"),
            })?;
            let q = parse_quaternion_cell(&value, 1, 1).map_err(|e| match e {
                DocError::Parse { message, .. } | DocError::RingMismatch { message, .. } => {
                    DocError::Parse {
                        locus: "scalar".to_owned(),
                        message,
                    }
                }
                other => other,
            })?;
            Ok(AnyScalar::Quaternion(q))
        }
    }
}

/// The textual encoding of a scalar: `p/q` for rationals, a compact
/// JSON 4-array for quaternions.
pub fn render_scalar(scalar: &AnyScalar) -> String {
    match scalar {
        AnyScalar::Rational(r) => r.to_string(),
        AnyScalar::Quaternion(q) => quaternion_to_value(q).to_string(),
    }
}

/// Outcome status of one CLI command.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Undefined,
    Error,
}

/// A position-tagged message attached to a command result.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub position: Option<(usize, usize)>,
}

/// Uniform result of one CLI command: a status, a payload when the
/// command produced one, and any diagnostics. `Ok` always carries a
/// payload.
#[derive(Debug, Clone, Serialize)]
pub struct CommandResult {
    pub diagnostics: Vec<Diagnostic>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub payload: Option<Value>,
    pub status: Status,
}

impl CommandResult {
    pub fn ok(payload: Value) -> Self {
        CommandResult {
            diagnostics: Vec::new(),
            payload: Some(payload),
            status: Status::Ok,
        }
    }

    pub fn undefined(diagnostics: Vec<Diagnostic>, payload: Option<Value>) -> Self {
        CommandResult {
            diagnostics,
            payload,
            status: Status::Undefined,
        }
    }

    /// Exit code contract: 0 for ok, 2 for undefined or not-invertible
    /// outcomes, 1 for usage and parse errors.
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Ok => 0,
            Status::Undefined => 2,
            Status::Error => 1,
        }
    }
}
