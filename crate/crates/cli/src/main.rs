//! Command line surface over the classification and invariant
//! pipelines: unit fraction enumeration, the three classification
//! tables, Hodge invariants of a single type, isotypical
//! decompositions, and structural verification of weight files.
//!
//! Every subcommand emits text (default), JSON, or CSV. JSON output
//! is one envelope object carrying the command name, raw arguments,
//! crate version, an optional summary, and a `rows` array. Exit
//! codes: 0 success, 1 verification failures, 2 usage or input parse
//! errors, 3 invalid mathematical input, 4 invalid sub-argument.

use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use symcy_core::{
    classify_fermat, distinct_type_classes, egyptian_counts, egyptian_five, eigenspace_table,
    genus, hodge_numbers_cy3, isotypical_decomposition, kuranishi_dim, quotient_hodge, rep_string,
    search_case1, search_case2, verify_row, EquivariantError, FermatRow, HodgeVector, NonFermatRow,
    QuasiSmoothStatus, SymmetricCYType, TypeError, WeightedType,
};

// ---- Argument surface ----

#[derive(Parser)]
#[command(
    name = "symcy",
    version,
    about = "Classification and exact Hodge invariants of symmetric Calabi-Yau threefold hypersurfaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate five-term unit fraction decompositions of 1.
    Egyptian(EgyptianArgs),
    /// Print one of the three classification tables.
    Classify(ClassifyArgs),
    /// Hodge invariants of one weighted hypersurface type.
    Hodge(HodgeArgs),
    /// Isotypical decomposition of middle cohomology of a symmetric type.
    Decompose(DecomposeArgs),
    /// Check each row of a weight file against the structural criteria.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct EgyptianArgs {
    /// Keep only solutions whose smallest denominator is at least this.
    #[arg(long, value_name = "N")]
    min_first_denominator: Option<u64>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("mode").required(true).multiple(false)))]
struct ClassifyArgs {
    /// Types whose general equation is a sum of pure coordinate powers.
    #[arg(long, group = "mode")]
    fermat: bool,
    /// Types needing a tail monomial ending in the weight-1 coordinate.
    #[arg(long, group = "mode")]
    case1: bool,
    /// Types with curve weights (1,2,d) and a tail ending in the weight-2 coordinate.
    #[arg(long, group = "mode")]
    case2: bool,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args)]
struct HodgeArgs {
    /// Degree of the defining equation.
    degree: u64,
    /// Three weights for a curve, five for a threefold.
    #[arg(required = true, num_args = 1..)]
    weights: Vec<u64>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args)]
struct DecomposeArgs {
    /// Symmetry weight A; the symmetry order is 2c/A.
    #[arg(value_name = "A")]
    s_weight: u64,
    /// Second curve weight (the first is always 1).
    #[arg(value_name = "a")]
    a: u64,
    /// Third curve weight.
    #[arg(value_name = "b")]
    b: u64,
    /// Half the degree; also the weight of the square coordinate.
    #[arg(value_name = "c")]
    c: u64,
    /// Also print middle cohomology of the quotient by the subgroup
    /// of index d (d a proper divisor of the order).
    #[arg(long, value_name = "d")]
    quotient: Option<u64>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// File of five-weight rows, one per line, as "(A,1,a,b,c)" or
    /// whitespace separated; blank lines and #-comments are skipped.
    file: PathBuf,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

// ---- Errors and exit codes ----

#[derive(Debug)]
enum CliError {
    /// Mathematically invalid input (exit 3).
    Domain(String),
    /// Invalid sub-argument such as a bad quotient index (exit 4).
    Argument(String),
    /// Unparsable input file content (exit 2).
    InputParse { line: usize, message: String },
    /// Input or output stream failure (exit 4).
    Io(String),
    /// Downstream consumer closed the stream; not a failure.
    Pipe,
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Domain(_) => 3,
            CliError::Argument(_) => 4,
            CliError::InputParse { .. } => 2,
            CliError::Io(_) => 4,
            CliError::Pipe => 0,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Domain(msg) | CliError::Argument(msg) | CliError::Io(msg) => f.write_str(msg),
            CliError::InputParse { line, message } => write!(f, "line {line}: {message}"),
            CliError::Pipe => f.write_str("output stream closed"),
        }
    }
}

impl From<TypeError> for CliError {
    fn from(err: TypeError) -> Self {
        match err {
            TypeError::InvalidQuotient { .. } => CliError::Argument(err.to_string()),
            _ => CliError::Domain(err.to_string()),
        }
    }
}

impl From<symcy_core::HodgeError> for CliError {
    fn from(err: symcy_core::HodgeError) -> Self {
        CliError::Domain(err.to_string())
    }
}

impl From<EquivariantError> for CliError {
    fn from(err: EquivariantError) -> Self {
        match err {
            EquivariantError::InvalidQuotient { .. } => CliError::Argument(err.to_string()),
            _ => CliError::Domain(err.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(err: io::Error) -> Self {
        if err.kind() == io::ErrorKind::BrokenPipe {
            CliError::Pipe
        } else {
            CliError::Io(err.to_string())
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(err: serde_json::Error) -> Self {
        if err.io_error_kind() == Some(io::ErrorKind::BrokenPipe) {
            CliError::Pipe
        } else {
            CliError::Io(err.to_string())
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(err: csv::Error) -> Self {
        if let csv::ErrorKind::Io(io_err) = err.kind() {
            if io_err.kind() == io::ErrorKind::BrokenPipe {
                return CliError::Pipe;
            }
        }
        CliError::Io(err.to_string())
    }
}

// ---- JSON envelope ----

#[derive(Serialize)]
struct Envelope<R: Serialize> {
    command: &'static str,
    args: Vec<String>,
    version: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    summary: Option<serde_json::Value>,
    rows: Vec<R>,
}

fn emit_json<R: Serialize>(
    out: &mut impl Write,
    command: &'static str,
    summary: Option<serde_json::Value>,
    rows: Vec<R>,
) -> Result<(), CliError> {
    let envelope = Envelope {
        command,
        args: std::env::args().skip(1).collect(),
        version: env!("CARGO_PKG_VERSION"),
        summary,
        rows,
    };
    serde_json::to_writer_pretty(&mut *out, &envelope)?;
    writeln!(out)?;
    Ok(())
}

// ---- Shared display helpers ----

fn tuple_string(weights: &[u64]) -> String {
    let parts: Vec<String> = weights.iter().map(|w| w.to_string()).collect();
    format!("({})", parts.join(","))
}

fn hodge_tokens(h: &HodgeVector) -> String {
    format!("h30={} h21={} h12={} h03={}", h.h30, h.h21, h.h12, h.h03)
}

fn status_label(status: QuasiSmoothStatus) -> &'static str {
    match status {
        QuasiSmoothStatus::Fermat => "fermat",
        QuasiSmoothStatus::SingleNondivider => "single-nondivider",
        QuasiSmoothStatus::CoveredByMonomials => "covered-by-monomials",
        QuasiSmoothStatus::NotQuasiSmooth => "not-quasi-smooth",
        QuasiSmoothStatus::Inconclusive => "inconclusive",
    }
}

// ---- egyptian ----

fn run_egyptian(args: &EgyptianArgs, out: &mut impl Write) -> Result<(), CliError> {
    let minimum = args.min_first_denominator.unwrap_or(1);
    let solutions: Vec<_> = egyptian_five()
        .into_iter()
        .filter(|s| s.denoms()[0] >= minimum)
        .collect();
    let counts = egyptian_counts(&solutions);

    match args.format {
        Format::Text => {
            for sol in &solutions {
                writeln!(out, "{}", tuple_string(&sol.denoms()))?;
            }
            for (first, count) in &counts {
                writeln!(out, "first denominator {first}: {count} solutions")?;
            }
            writeln!(out, "total: {}", solutions.len())?;
        }
        Format::Json => {
            let summary = json!({
                "counts": counts
                    .iter()
                    .map(|(first, count)| json!({"first": first, "solutions": count}))
                    .collect::<Vec<_>>(),
                "total": solutions.len(),
            });
            emit_json(out, "egyptian", Some(summary), solutions)?;
        }
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(out);
            writer.write_record(["n", "p", "q", "r", "s"])?;
            for sol in &solutions {
                let row: Vec<String> = sol.denoms().iter().map(|v| v.to_string()).collect();
                writer.write_record(&row)?;
            }
            writer.flush()?;
        }
    }
    Ok(())
}

// ---- classify ----

/// One output row of any classification table, with every derived
/// column filled in; quadruple and cover columns apply to only some
/// modes.
#[derive(Serialize)]
struct ClassifyRecord {
    mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    quad: Option<[u64; 4]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cover_exponent: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cover_divisor: Option<u64>,
    degree: u64,
    weights: [u64; 5],
    h21: i64,
    h12: i64,
    genus: i64,
    order: u64,
    rep: String,
}

fn fermat_record(row: &FermatRow) -> ClassifyRecord {
    let cy = row.cy;
    ClassifyRecord {
        mode: "fermat",
        quad: Some(row.quad),
        cover_exponent: None,
        cover_divisor: None,
        degree: cy.degree(),
        weights: [cy.s_weight(), 1, cy.a(), cy.b(), cy.c()],
        h21: row.hodge.h21,
        h12: row.hodge.h12,
        genus: row.genus,
        order: row.order(),
        rep: rep_string(&row.decomposition),
    }
}

fn case_record(row: &NonFermatRow) -> Result<ClassifyRecord, CliError> {
    let hodge = hodge_numbers_cy3(&row.cy.weight_type())?;
    let table = eigenspace_table(&row.cy)?;
    let dec = isotypical_decomposition(&table)?;
    Ok(ClassifyRecord {
        mode: if row.case == 1 { "case1" } else { "case2" },
        quad: None,
        cover_exponent: Some(row.cover_exponent),
        cover_divisor: Some(row.cover_divisor),
        degree: row.cy.degree(),
        weights: row.tuple,
        h21: hodge.h21,
        h12: hodge.h12,
        genus: genus(&row.cy.curve_type())?,
        order: row.cy.order(),
        rep: rep_string(&dec),
    })
}

fn run_classify(args: &ClassifyArgs, out: &mut impl Write) -> Result<(), CliError> {
    let (records, classes): (Vec<ClassifyRecord>, Option<usize>) = if args.fermat {
        (classify_fermat().iter().map(fermat_record).collect(), None)
    } else {
        let rows = if args.case1 {
            search_case1()
        } else {
            search_case2()
        };
        let records = rows
            .iter()
            .map(case_record)
            .collect::<Result<Vec<_>, CliError>>()?;
        (records, Some(distinct_type_classes(&rows)))
    };

    match args.format {
        Format::Text => {
            for r in &records {
                match r.quad {
                    Some(quad) => write!(out, "quad={}", tuple_string(&quad))?,
                    None => write!(
                        out,
                        "tuple={} cover={}*{}",
                        tuple_string(&r.weights),
                        r.cover_exponent.unwrap_or(0),
                        r.cover_divisor.unwrap_or(0),
                    )?,
                }
                writeln!(
                    out,
                    " type=({},[{}]) h21={} h12={} genus={} order={} rep={}",
                    r.degree,
                    r.weights
                        .iter()
                        .map(|w| w.to_string())
                        .collect::<Vec<_>>()
                        .join(","),
                    r.h21,
                    r.h12,
                    r.genus,
                    r.order,
                    r.rep,
                )?;
            }
            write!(out, "rows: {}", records.len())?;
            match classes {
                Some(k) => writeln!(out, " distinct classes: {k}")?,
                None => writeln!(out)?,
            }
        }
        Format::Json => {
            let mut summary = json!({"rows": records.len()});
            if let Some(k) = classes {
                summary["distinct_classes"] = json!(k);
            }
            emit_json(out, "classify", Some(summary), records)?;
        }
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(out);
            writer.write_record([
                "mode",
                "degree",
                "w0",
                "w1",
                "w2",
                "w3",
                "w4",
                "h21",
                "h12",
                "genus",
                "order",
                "rep",
                "x",
                "y",
                "t",
                "cover_exponent",
                "cover_divisor",
            ])?;
            for r in &records {
                let opt = |v: Option<u64>| v.map_or(String::new(), |x| x.to_string());
                let quad = |i: usize| r.quad.map_or(String::new(), |q| q[i].to_string());
                let mut row: Vec<String> = vec![r.mode.to_string(), r.degree.to_string()];
                row.extend(r.weights.iter().map(|w| w.to_string()));
                row.extend([
                    r.h21.to_string(),
                    r.h12.to_string(),
                    r.genus.to_string(),
                    r.order.to_string(),
                    r.rep.clone(),
                    quad(0),
                    quad(1),
                    quad(2),
                    opt(r.cover_exponent),
                    opt(r.cover_divisor),
                ]);
                writer.write_record(&row)?;
            }
            writer.flush()?;
        }
    }
    Ok(())
}

// ---- hodge ----

#[derive(Serialize)]
struct HodgeRecord {
    degree: u64,
    weights: Vec<u64>,
    amplitude: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    hodge: Option<HodgeVector>,
    #[serde(skip_serializing_if = "Option::is_none")]
    genus: Option<i64>,
    kuranishi: i64,
}

fn hodge_record(degree: u64, weights: &[u64]) -> Result<HodgeRecord, CliError> {
    let t = WeightedType::new(degree, weights.to_vec())?;
    let record = match weights.len() {
        5 => HodgeRecord {
            degree,
            weights: weights.to_vec(),
            amplitude: t.amplitude(),
            hodge: Some(hodge_numbers_cy3(&t)?),
            genus: None,
            kuranishi: kuranishi_dim(&t)?,
        },
        3 => HodgeRecord {
            degree,
            weights: weights.to_vec(),
            amplitude: t.amplitude(),
            hodge: None,
            genus: Some(genus(&t)?),
            kuranishi: kuranishi_dim(&t)?,
        },
        n => {
            return Err(CliError::Domain(format!(
                "expected 3 or 5 weights, got {n}"
            )))
        }
    };
    Ok(record)
}

fn run_hodge(args: &HodgeArgs, out: &mut impl Write) -> Result<(), CliError> {
    let record = hodge_record(args.degree, &args.weights)?;
    match args.format {
        Format::Text => {
            writeln!(
                out,
                "type=({},[{}]) amplitude={}",
                record.degree,
                record
                    .weights
                    .iter()
                    .map(|w| w.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
                record.amplitude,
            )?;
            if let Some(h) = &record.hodge {
                writeln!(out, "{}", hodge_tokens(h))?;
            }
            if let Some(g) = record.genus {
                writeln!(out, "genus={g}")?;
            }
            writeln!(out, "kuranishi={}", record.kuranishi)?;
        }
        Format::Json => emit_json(out, "hodge", None, vec![record])?,
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(out);
            writer.write_record([
                "degree",
                "w0",
                "w1",
                "w2",
                "w3",
                "w4",
                "amplitude",
                "h30",
                "h21",
                "h12",
                "h03",
                "genus",
                "kuranishi",
            ])?;
            let w = |i: usize| {
                record
                    .weights
                    .get(i)
                    .map_or(String::new(), |v| v.to_string())
            };
            let h = |f: fn(&HodgeVector) -> i64| {
                record
                    .hodge
                    .as_ref()
                    .map_or(String::new(), |v| f(v).to_string())
            };
            writer.write_record([
                record.degree.to_string(),
                w(0),
                w(1),
                w(2),
                w(3),
                w(4),
                record.amplitude.to_string(),
                h(|v| v.h30),
                h(|v| v.h21),
                h(|v| v.h12),
                h(|v| v.h03),
                record.genus.map_or(String::new(), |g| g.to_string()),
                record.kuranishi.to_string(),
            ])?;
            writer.flush()?;
        }
    }
    Ok(())
}

// ---- decompose ----

#[derive(Serialize)]
struct ComponentRecord {
    divisor: u64,
    multiplicity: u64,
    hodge: HodgeVector,
}

fn run_decompose(args: &DecomposeArgs, out: &mut impl Write) -> Result<(), CliError> {
    let cy = SymmetricCYType::new(args.s_weight, args.a, args.b, args.c)?;
    let table = eigenspace_table(&cy)?;
    let dec = isotypical_decomposition(&table)?;
    let full = hodge_numbers_cy3(&cy.weight_type())?;
    let rep = rep_string(&dec);
    let quotient = match args.quotient {
        Some(d) => Some((d, cy.quotient_type(d)?, quotient_hodge(&dec, d)?)),
        None => None,
    };
    let records: Vec<ComponentRecord> = dec
        .components()
        .iter()
        .map(|c| ComponentRecord {
            divisor: c.divisor,
            multiplicity: c.multiplicity,
            hodge: c.hodge,
        })
        .collect();

    match args.format {
        Format::Text => {
            writeln!(
                out,
                "type={} order={} {}",
                cy.weight_type(),
                cy.order(),
                hodge_tokens(&full),
            )?;
            for r in &records {
                writeln!(
                    out,
                    "divisor={} multiplicity={} {}",
                    r.divisor,
                    r.multiplicity,
                    hodge_tokens(&r.hodge),
                )?;
            }
            writeln!(out, "rep={rep}")?;
            writeln!(out, "total={}", dec.total_dimension())?;
            if let Some((d, qt, qh)) = &quotient {
                writeln!(out, "quotient={} type={} {}", d, qt, hodge_tokens(qh))?;
            }
        }
        Format::Json => {
            let mut summary = json!({
                "type": cy.weight_type().to_string(),
                "order": cy.order(),
                "hodge": full,
                "rep": rep,
                "total_dimension": dec.total_dimension(),
            });
            if let Some((d, qt, qh)) = &quotient {
                summary["quotient"] = json!({
                    "index": d,
                    "type": qt.to_string(),
                    "hodge": qh,
                });
            }
            emit_json(out, "decompose", Some(summary), records)?;
        }
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(out);
            writer.write_record(["divisor", "multiplicity", "h30", "h21", "h12", "h03"])?;
            for r in &records {
                writer.write_record([
                    r.divisor.to_string(),
                    r.multiplicity.to_string(),
                    r.hodge.h30.to_string(),
                    r.hodge.h21.to_string(),
                    r.hodge.h12.to_string(),
                    r.hodge.h03.to_string(),
                ])?;
            }
            writer.flush()?;
        }
    }
    Ok(())
}

// ---- verify ----

#[derive(Serialize)]
struct VerifyRecord {
    line: usize,
    weights: [u64; 5],
    all_passed: bool,
    checks: Vec<symcy_core::VerificationCheck>,
    quasi_smooth_status: QuasiSmoothStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    quasi_smooth_witness: Option<String>,
}

fn parse_weight_line(text: &str) -> Option<[u64; 5]> {
    let cleaned: String = text
        .chars()
        .map(|ch| if "(),".contains(ch) { ' ' } else { ch })
        .collect();
    let parts: Vec<&str> = cleaned.split_whitespace().collect();
    if parts.len() != 5 {
        return None;
    }
    let mut weights = [0u64; 5];
    for (slot, part) in weights.iter_mut().zip(&parts) {
        *slot = part.parse().ok()?;
    }
    Some(weights)
}

fn run_verify(args: &VerifyArgs, out: &mut impl Write) -> Result<bool, CliError> {
    let content = fs::read_to_string(&args.file)
        .map_err(|e| CliError::Io(format!("{}: {e}", args.file.display())))?;
    let mut records = Vec::new();
    for (index, raw) in content.lines().enumerate() {
        let line = index + 1;
        let text = raw.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let weights = parse_weight_line(text).ok_or_else(|| CliError::InputParse {
            line,
            message: format!("expected five positive integers, got {text:?}"),
        })?;
        let report = verify_row(weights);
        records.push(VerifyRecord {
            line,
            weights,
            all_passed: report.all_passed(),
            checks: report.checks,
            quasi_smooth_status: report.quasi_smooth.status,
            quasi_smooth_witness: report.quasi_smooth.witness,
        });
    }
    let passed = records.iter().filter(|r| r.all_passed).count();
    let failed = records.len() - passed;

    match args.format {
        Format::Text => {
            for r in &records {
                let failures: Vec<String> = r
                    .checks
                    .iter()
                    .filter(|c| !c.passed)
                    .map(|c| format!("{}: {}", c.name, c.detail))
                    .collect();
                write!(
                    out,
                    "line={} weights={} {}",
                    r.line,
                    tuple_string(&r.weights),
                    if r.all_passed { "PASS" } else { "FAIL" },
                )?;
                write!(out, " qs={}", status_label(r.quasi_smooth_status))?;
                if let Some(w) = &r.quasi_smooth_witness {
                    write!(out, " witness={w}")?;
                }
                if failures.is_empty() {
                    writeln!(out)?;
                } else {
                    writeln!(out, " [{}]", failures.join("; "))?;
                }
            }
            writeln!(
                out,
                "total: {} passed: {passed} failed: {failed}",
                records.len(),
            )?;
        }
        Format::Json => {
            let summary = json!({
                "rows": records.len(),
                "passed": passed,
                "failed": failed,
            });
            emit_json(out, "verify", Some(summary), records)?;
        }
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(out);
            writer.write_record([
                "line",
                "w0",
                "w1",
                "w2",
                "w3",
                "w4",
                "all_passed",
                "qs_status",
                "witness",
                "failures",
            ])?;
            for r in &records {
                let failures: Vec<String> = r
                    .checks
                    .iter()
                    .filter(|c| !c.passed)
                    .map(|c| c.name.clone())
                    .collect();
                let mut row = vec![r.line.to_string()];
                row.extend(r.weights.iter().map(|w| w.to_string()));
                row.extend([
                    r.all_passed.to_string(),
                    status_label(r.quasi_smooth_status).to_string(),
                    r.quasi_smooth_witness.clone().unwrap_or_default(),
                    failures.join(";"),
                ]);
                writer.write_record(&row)?;
            }
            writer.flush()?;
        }
    }
    Ok(failed == 0)
}

// ---- Entry point ----

fn run(cli: &Cli, out: &mut impl Write) -> Result<bool, CliError> {
    match &cli.command {
        Command::Egyptian(args) => run_egyptian(args, out).map(|()| true),
        Command::Classify(args) => run_classify(args, out).map(|()| true),
        Command::Hodge(args) => run_hodge(args, out).map(|()| true),
        Command::Decompose(args) => run_decompose(args, out).map(|()| true),
        Command::Verify(args) => run_verify(args, out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = io::stdout().lock();
    match run(&cli, &mut out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Pipe) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.code())
        }
    }
}
