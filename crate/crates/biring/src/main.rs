//! Batch CLI over the biring library: parse matrix documents, run one
//! operation, print the result.
//!
//! Exit codes: 0 on success, 2 when the mathematical outcome is
//! undefined or not invertible (or a verification identity fails),
//! 1 on usage and parse errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use biring::doc::{
    parse_matrix_document, parse_scalar, quaternion_to_value, rational_to_value,
    render_matrix_document, render_scalar, AnyMatrix, AnyScalar, CommandResult, Diagnostic,
    DocError, LabelTable, MatrixDocument, RingTag, Status,
};
use biring::field::determinant;
use biring::matrix::{IndexSet, Matrix, MinorAxis, MinorSpec, ProductKind, Side};
use biring::quasidet::{
    cr_inverse, cr_quasideterminant, quasideterminant_matrix, rc_inverse, rc_quasideterminant,
    InverseAlgorithm, QuasidetOutcome,
};
use biring::scalar::DivisionRing;
use biring::verify::{verify_quaternion, verify_rational};
use biring::Error;

#[derive(Parser)]
#[command(
    name = "biring",
    version,
    about = "Exact biring matrix calculator: dual products, quasideterminants, and inverses \
             over rationals and rational quaternions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Rc,
    Cr,
}

impl From<KindArg> for ProductKind {
    fn from(kind: KindArg) -> ProductKind {
        match kind {
            KindArg::Rc => ProductKind::Rc,
            KindArg::Cr => ProductKind::Cr,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum AlgArg {
    Quasidet,
    Schur,
    Elim,
}

impl From<AlgArg> for InverseAlgorithm {
    fn from(alg: AlgArg) -> InverseAlgorithm {
        match alg {
            AlgArg::Quasidet => InverseAlgorithm::ViaQuasidet,
            AlgArg::Schur => InverseAlgorithm::Schur,
            AlgArg::Elim => InverseAlgorithm::Elimination,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Multiply two matrices under the chosen product.
    Product {
        #[arg(long, value_enum)]
        kind: KindArg,
        a: PathBuf,
        b: PathBuf,
    },
    /// Raise a square matrix to a power under the chosen product.
    Power {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: usize,
        a: PathBuf,
    },
    /// Transpose a matrix.
    Transpose { a: PathBuf },
    /// Entrywise sum of two matrices.
    Add { a: PathBuf, b: PathBuf },
    /// Multiply every entry by a scalar on the chosen side.
    Scalarmul {
        #[arg(long, value_enum)]
        side: SideArg,
        /// Scalar in the input's ring encoding: "p/q" for rational
        /// documents, a JSON 4-array of rational strings for quaternion
        /// documents.
        #[arg(long)]
        scalar: String,
        a: PathBuf,
    },
    /// Hadamard inverse: entrywise inverse with positions transposed.
    HadamardInv { a: PathBuf },
    /// Extract a minor by selecting or deleting rows and columns
    /// (comma-separated 1-based positions; at most one mode per axis).
    Minor {
        #[arg(long)]
        select_rows: Option<String>,
        #[arg(long)]
        delete_rows: Option<String>,
        #[arg(long)]
        select_cols: Option<String>,
        #[arg(long)]
        delete_cols: Option<String>,
        a: PathBuf,
    },
    /// A single quasideterminant (--row/--col) or the whole table
    /// (--matrix).
    Quasidet {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        row: Option<usize>,
        #[arg(long)]
        col: Option<usize>,
        #[arg(long)]
        matrix: bool,
        a: PathBuf,
    },
    /// Invert a square matrix under the chosen product.
    Inverse {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, value_enum)]
        alg: AlgArg,
        a: PathBuf,
    },
    /// Determinant of a rational square matrix.
    Det { a: PathBuf },
    /// Run every applicable identity of the biring on one or two square
    /// matrices and report pass/fail per identity.
    Verify { a: PathBuf, b: Option<PathBuf> },
}

/// Errors that terminate a command before it produces a result.
enum CliError {
    Usage(String),
}

impl From<DocError> for CliError {
    fn from(e: DocError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            eprintln!("{e}");
            return ExitCode::from(1);
        }
    };

    match run(cli.command) {
        Ok(result) => {
            match result.status {
                Status::Ok => {
                    if let Some(Value::String(text)) = &result.payload {
                        println!("{text}");
                    } else if let Some(payload) = &result.payload {
                        println!("{}", to_pretty(payload));
                    }
                }
                _ => {
                    println!("{}", to_pretty(&serde_json::to_value(&result).expect("result json")));
                    for diag in &result.diagnostics {
                        eprintln!("{}", diag.message);
                    }
                }
            }
            ExitCode::from(result.exit_code() as u8)
        }
        Err(CliError::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn to_pretty(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("json rendering")
}

fn load(path: &Path) -> Result<MatrixDocument, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    parse_matrix_document(&text)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn load_pair(a: &Path, b: &Path) -> Result<(MatrixDocument, MatrixDocument), CliError> {
    let a = load(a)?;
    let b = load(b)?;
    if a.matrix.ring() != b.matrix.ring() {
        return Err(CliError::Usage(format!(
            "ring mismatch: {} is {} but {} is {}",
            "first input",
            a.matrix.ring(),
            "second input",
            b.matrix.ring()
        )));
    }
    Ok((a, b))
}

fn matrix_payload(matrix: AnyMatrix, labels: Option<LabelTable>) -> CommandResult {
    let rendered = render_matrix_document(&MatrixDocument { matrix, labels });
    let value: Value = serde_json::from_str(&rendered).expect("canonical document json");
    CommandResult::ok(value)
}

/// Classifies a math error: undefined-style outcomes become exit-2
/// command results, everything else is a usage error.
fn math_outcome(e: Error) -> Result<CommandResult, CliError> {
    match e {
        Error::NotInvertible { ref witness } => {
            let position = match witness {
                biring::error::SingularWitness::UndefinedQuasidet { row, col, .. }
                | biring::error::SingularWitness::ZeroQuasidet { row, col } => Some((*row, *col)),
                biring::error::SingularWitness::NoPivot { .. } => None,
            };
            Ok(CommandResult::undefined(
                vec![Diagnostic {
                    message: e.to_string(),
                    position,
                }],
                None,
            ))
        }
        Error::ZeroEntry { row, col } => Ok(CommandResult::undefined(
            vec![Diagnostic {
                message: e.to_string(),
                position: Some((row, col)),
            }],
            None,
        )),
        other => Err(CliError::Usage(other.to_string())),
    }
}

fn run(command: Command) -> Result<CommandResult, CliError> {
    match command {
        Command::Product { kind, a, b } => {
            let (a, b) = load_pair(&a, &b)?;
            let kind = ProductKind::from(kind);
            let product = match (&a.matrix, &b.matrix) {
                (AnyMatrix::Rational(x), AnyMatrix::Rational(y)) => {
                    AnyMatrix::Rational(x.product(kind, y)?)
                }
                (AnyMatrix::Quaternion(x), AnyMatrix::Quaternion(y)) => {
                    AnyMatrix::Quaternion(x.product(kind, y)?)
                }
                _ => unreachable!("load_pair enforces equal rings"),
            };
            Ok(matrix_payload(product, None))
        }
        Command::Power { kind, n, a } => {
            let a = load(&a)?;
            let kind = ProductKind::from(kind);
            let result = match &a.matrix {
                AnyMatrix::Rational(m) => AnyMatrix::Rational(m.power(kind, n)?),
                AnyMatrix::Quaternion(m) => AnyMatrix::Quaternion(m.power(kind, n)?),
            };
            Ok(matrix_payload(result, None))
        }
        Command::Transpose { a } => {
            let a = load(&a)?;
            let transposed = match &a.matrix {
                AnyMatrix::Rational(m) => AnyMatrix::Rational(m.transpose()),
                AnyMatrix::Quaternion(m) => AnyMatrix::Quaternion(m.transpose()),
            };
            let labels = a.labels.as_ref().map(LabelTable::transposed);
            Ok(matrix_payload(transposed, labels))
        }
        Command::Add { a, b } => {
            let (a, b) = load_pair(&a, &b)?;
            let sum = match (&a.matrix, &b.matrix) {
                (AnyMatrix::Rational(x), AnyMatrix::Rational(y)) => {
                    AnyMatrix::Rational(x.add(y)?)
                }
                (AnyMatrix::Quaternion(x), AnyMatrix::Quaternion(y)) => {
                    AnyMatrix::Quaternion(x.add(y)?)
                }
                _ => unreachable!("load_pair enforces equal rings"),
            };
            Ok(matrix_payload(sum, None))
        }
        Command::Scalarmul { side, scalar, a } => {
            let a = load(&a)?;
            let side = match side {
                SideArg::Left => Side::Left,
                SideArg::Right => Side::Right,
            };
            let scalar = parse_scalar(a.matrix.ring(), &scalar)?;
            let result = match (&a.matrix, &scalar) {
                (AnyMatrix::Rational(m), AnyScalar::Rational(s)) => {
                    AnyMatrix::Rational(m.scalar_mul(side, s))
                }
                (AnyMatrix::Quaternion(m), AnyScalar::Quaternion(s)) => {
                    AnyMatrix::Quaternion(m.scalar_mul(side, s))
                }
                _ => unreachable!("scalar parsed in the document's ring"),
            };
            Ok(matrix_payload(result, None))
        }
        Command::HadamardInv { a } => {
            let a = load(&a)?;
            let inverted = match &a.matrix {
                AnyMatrix::Rational(m) => m.hadamard_inverse().map(AnyMatrix::Rational),
                AnyMatrix::Quaternion(m) => m.hadamard_inverse().map(AnyMatrix::Quaternion),
            };
            match inverted {
                Ok(matrix) => Ok(matrix_payload(matrix, None)),
                Err(e) => math_outcome(e),
            }
        }
        Command::Minor {
            select_rows,
            delete_rows,
            select_cols,
            delete_cols,
            a,
        } => {
            let a = load(&a)?;
            let rows = parse_axis("rows", select_rows, delete_rows)?;
            let cols = parse_axis("cols", select_cols, delete_cols)?;
            let spec = MinorSpec { rows, cols };
            let labels = a.labels.as_ref().map(|l| {
                l.select(
                    &resolve_axis(&spec.rows, a.matrix.rows()),
                    &resolve_axis(&spec.cols, a.matrix.cols()),
                )
            });
            let minor = match &a.matrix {
                AnyMatrix::Rational(m) => AnyMatrix::Rational(m.minor(&spec)?),
                AnyMatrix::Quaternion(m) => AnyMatrix::Quaternion(m.minor(&spec)?),
            };
            Ok(matrix_payload(minor, labels))
        }
        Command::Quasidet {
            kind,
            row,
            col,
            matrix,
            a,
        } => {
            let a = load(&a)?;
            let kind = ProductKind::from(kind);
            match (row, col, matrix) {
                (Some(row), Some(col), false) => quasidet_cell(&a.matrix, kind, row, col),
                (None, None, true) => quasidet_table(&a.matrix, kind),
                _ => Err(CliError::Usage(
                    "use either --row R --col C or --matrix".to_owned(),
                )),
            }
        }
        Command::Inverse { kind, alg, a } => {
            let a = load(&a)?;
            let kind = ProductKind::from(kind);
            let alg = InverseAlgorithm::from(alg);
            let inverted = match &a.matrix {
                AnyMatrix::Rational(m) => invert(m, kind, alg).map(AnyMatrix::Rational),
                AnyMatrix::Quaternion(m) => invert(m, kind, alg).map(AnyMatrix::Quaternion),
            };
            match inverted {
                Ok(matrix) => Ok(matrix_payload(matrix, None)),
                Err(e) => math_outcome(e),
            }
        }
        Command::Det { a } => {
            let a = load(&a)?;
            match &a.matrix {
                AnyMatrix::Rational(m) => {
                    let det = determinant(m)?;
                    Ok(CommandResult::ok(Value::String(render_scalar(
                        &AnyScalar::Rational(det),
                    ))))
                }
                AnyMatrix::Quaternion(_) => Err(CliError::Usage(
                    "det requires a rational matrix; determinants are not defined over \
                     noncommutative scalars"
                        .to_owned(),
                )),
            }
        }
        Command::Verify { a, b } => {
            let a = load(&a)?;
            let b = match b {
                Some(path) => Some(load(&path)?),
                None => None,
            };
            let report = match (&a.matrix, b.as_ref().map(|d| &d.matrix)) {
                (AnyMatrix::Rational(x), Some(AnyMatrix::Rational(y))) => {
                    verify_rational(x, Some(y))?
                }
                (AnyMatrix::Rational(x), None) => verify_rational(x, None)?,
                (AnyMatrix::Quaternion(x), Some(AnyMatrix::Quaternion(y))) => {
                    verify_quaternion(x, Some(y))?
                }
                (AnyMatrix::Quaternion(x), None) => verify_quaternion(x, None)?,
                _ => return Err(CliError::Usage("ring mismatch between inputs".to_owned())),
            };
            let payload = serde_json::to_value(&report).expect("report json");
            if report.all_passed() {
                Ok(CommandResult::ok(payload))
            } else {
                let diagnostics = report
                    .failures()
                    .map(|check| Diagnostic {
                        message: format!("identity {} failed", check.name),
                        position: check.counterexample,
                    })
                    .collect();
                Ok(CommandResult::undefined(diagnostics, Some(payload)))
            }
        }
    }
}

fn invert<S: DivisionRing>(
    m: &Matrix<S>,
    kind: ProductKind,
    alg: InverseAlgorithm,
) -> Result<Matrix<S>, Error> {
    match kind {
        ProductKind::Rc => rc_inverse(m, alg),
        ProductKind::Cr => cr_inverse(m, alg),
    }
}

fn parse_positions(axis: &str, text: &str) -> Result<IndexSet, CliError> {
    let mut positions = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        let pos: usize = part.parse().map_err(|_| {
            CliError::Usage(format!("invalid {axis} position {part:?}: expected a 1-based integer"))
        })?;
        positions.push(pos);
    }
    IndexSet::new(positions).map_err(|e| CliError::Usage(e.to_string()))
}

fn parse_axis(
    axis: &'static str,
    select: Option<String>,
    delete: Option<String>,
) -> Result<MinorAxis, CliError> {
    match (select, delete) {
        (Some(_), Some(_)) => Err(CliError::Usage(format!(
            "cannot both select and delete {axis}"
        ))),
        (Some(text), None) => Ok(MinorAxis::Select(parse_positions(axis, &text)?)),
        (None, Some(text)) => Ok(MinorAxis::Delete(parse_positions(axis, &text)?)),
        (None, None) => Ok(MinorAxis::all()),
    }
}

fn resolve_axis(axis: &MinorAxis, bound: usize) -> Vec<usize> {
    match axis {
        MinorAxis::Select(set) => set.positions().to_vec(),
        MinorAxis::Delete(set) => set.complement(bound).positions().to_vec(),
    }
}

fn quasidet_cell(
    matrix: &AnyMatrix,
    kind: ProductKind,
    row: usize,
    col: usize,
) -> Result<CommandResult, CliError> {
    match matrix {
        AnyMatrix::Rational(m) => {
            quasidet_cell_generic(m, kind, row, col, |s| s.to_string()).map_err(CliError::from)
        }
        AnyMatrix::Quaternion(m) => {
            quasidet_cell_generic(m, kind, row, col, |q| quaternion_to_value(q).to_string())
                .map_err(CliError::from)
        }
    }
}

fn quasidet_cell_generic<S: DivisionRing>(
    m: &Matrix<S>,
    kind: ProductKind,
    row: usize,
    col: usize,
    render: impl Fn(&S) -> String,
) -> Result<CommandResult, Error> {
    let outcome = match kind {
        ProductKind::Rc => rc_quasideterminant(m, row, col)?,
        ProductKind::Cr => cr_quasideterminant(m, row, col)?,
    };
    Ok(match outcome {
        QuasidetOutcome::Value(v) => CommandResult::ok(Value::String(render(&v))),
        QuasidetOutcome::Undefined(u) => CommandResult::undefined(
            vec![Diagnostic {
                message: u.cause,
                position: Some(u.position),
            }],
            None,
        ),
    })
}

fn quasidet_table(matrix: &AnyMatrix, kind: ProductKind) -> Result<CommandResult, CliError> {
    let mut diagnostics = Vec::new();
    let (ring, size, cells) = match matrix {
        AnyMatrix::Rational(m) => {
            let table = quasideterminant_matrix(kind, m)?;
            let cells = collect_cells(&table, rational_to_value, &mut diagnostics);
            (RingTag::Rational, table.size(), cells)
        }
        AnyMatrix::Quaternion(m) => {
            let table = quasideterminant_matrix(kind, m)?;
            let cells = collect_cells(&table, quaternion_to_value, &mut diagnostics);
            (RingTag::Quaternion, table.size(), cells)
        }
    };
    let payload = json!({
        "cols": size,
        "data": cells,
        "ring": ring,
        "rows": size,
    });
    if diagnostics.is_empty() {
        Ok(CommandResult::ok(payload))
    } else {
        Ok(CommandResult::undefined(diagnostics, Some(payload)))
    }
}

fn collect_cells<S: DivisionRing>(
    table: &biring::quasidet::QuasidetTable<S>,
    render: impl Fn(&S) -> Value,
    diagnostics: &mut Vec<Diagnostic>,
) -> Vec<Vec<Value>> {
    (1..=table.size())
        .map(|r| {
            (1..=table.size())
                .map(|c| match table.at(r, c) {
                    QuasidetOutcome::Value(v) => render(v),
                    QuasidetOutcome::Undefined(u) => {
                        diagnostics.push(Diagnostic {
                            message: u.cause.clone(),
                            position: Some((r, c)),
                        });
                        json!({ "undefined": u.cause })
                    }
                })
                .collect()
        })
        .collect()
}
