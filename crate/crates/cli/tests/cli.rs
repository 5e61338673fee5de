//! End-to-end tests of the `symcy` binary: command behavior, exit codes,
//! output formats, and agreement between the formats.

use std::collections::HashMap;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::{Command, Output};

fn symcy(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symcy"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("exit code")
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../paper-tables")
        .join(name)
}

/// Parses `key=value` tokens from one line of text output.
fn tokens(line: &str) -> HashMap<String, String> {
    line.split_whitespace()
        .filter_map(|tok| tok.split_once('='))
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect()
}

// ---- egyptian ----

#[test]
fn egyptian_counts_solutions_by_first_denominator() {
    let out = symcy(&["egyptian"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("first denominator 2: 108 solutions"));
    assert!(text.contains("first denominator 3: 33 solutions"));
    assert!(text.contains("first denominator 4: 5 solutions"));
    assert!(text.contains("first denominator 5: 1 solutions"));
    assert!(text.contains("total: 147"));
    assert!(text.contains("(2,3,7,43,1806)"));
    assert!(text.contains("(5,5,5,5,5)"));
}

#[test]
fn egyptian_min_first_denominator_is_inclusive() {
    let out = symcy(&["egyptian", "--min-first-denominator", "4"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout_of(&out).contains("total: 6"));

    let none = symcy(&["egyptian", "--min-first-denominator", "9"]);
    assert_eq!(exit_code(&none), 0);
    assert!(stdout_of(&none).contains("total: 0"));
}

// ---- classify ----

#[test]
fn classify_fermat_produces_101_rows() {
    let out = symcy(&["classify", "--fermat"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("rows: 101"));
    assert!(text.contains("type=(924,[21,1,132,308,462])"));
}

#[test]
fn classify_case1_reports_distinct_classes() {
    let out = symcy(&["classify", "--case1"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("rows: 55 distinct classes: 40"));
    assert!(text.contains("tuple=(18,1,264,113,396)"));
}

#[test]
fn classify_case2_includes_boundary_tuple() {
    let out = symcy(&["classify", "--case2"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("rows: 6"));
    assert!(text.contains("tuple=(8,1,2,5,16)"));
    assert!(text.contains("tuple=(1,1,2,3,7)"));
}

#[test]
fn classify_requires_exactly_one_mode_flag() {
    assert_eq!(exit_code(&symcy(&["classify"])), 2);
    assert_eq!(exit_code(&symcy(&["classify", "--fermat", "--case1"])), 2);
}

// ---- hodge ----

#[test]
fn hodge_five_weights_reports_hodge_vector() {
    let out = symcy(&["hodge", "14", "1", "1", "2", "3", "7"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("h30=1 h21=132 h12=132 h03=1"));
    assert!(text.contains("kuranishi=132"));
}

#[test]
fn hodge_three_weights_reports_genus() {
    let out = symcy(&["hodge", "14", "1", "2", "3"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("genus=10"));
    assert!(text.contains("kuranishi=18"));
}

#[test]
fn hodge_rejects_weights_not_summing_to_degree() {
    let out = symcy(&["hodge", "14", "2", "2", "2", "3", "7"]);
    assert_eq!(exit_code(&out), 3);
    assert!(!stderr_of(&out).is_empty());
}

#[test]
fn hodge_rejects_unsupported_weight_count() {
    let out = symcy(&["hodge", "14", "1", "2", "3", "8"]);
    assert_eq!(exit_code(&out), 3);
    assert!(stderr_of(&out).contains("3 or 5"));
}

// ---- decompose ----

#[test]
fn decompose_lists_isotypical_components() {
    let out = symcy(&["decompose", "1", "2", "3", "7"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("type=(14,[1,1,2,3,7]) order=14"));
    assert!(text.contains("divisor=2 multiplicity=20 h30=0 h21=10 h12=10 h03=0"));
    assert!(text.contains("divisor=7 multiplicity=20 h30=0 h21=60 h12=60 h03=0"));
    assert!(text.contains("divisor=14 multiplicity=21 h30=1 h21=62 h12=62 h03=1"));
    assert!(text.contains("rep=21.(14)+20.(7,2)"));
    assert!(text.contains("total=266"));
}

#[test]
fn decompose_quotient_reports_quotient_cohomology() {
    let out = symcy(&["decompose", "1", "2", "3", "7", "--quotient", "7"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("quotient=7 type=(14,[2,1,2,3,7]) h30=0 h21=60 h12=60 h03=0"));
}

#[test]
fn decompose_rejects_quotient_outside_proper_divisors() {
    assert_eq!(
        exit_code(&symcy(&[
            "decompose",
            "1",
            "2",
            "3",
            "7",
            "--quotient",
            "5"
        ])),
        4
    );
    assert_eq!(
        exit_code(&symcy(&[
            "decompose",
            "1",
            "2",
            "3",
            "7",
            "--quotient",
            "14"
        ])),
        4
    );
}

#[test]
fn decompose_rejects_invalid_symmetric_type() {
    let out = symcy(&["decompose", "5", "2", "3", "7"]);
    assert_eq!(exit_code(&out), 3);
    assert!(!stderr_of(&out).is_empty());
}

// ---- verify ----

fn write_temp(content: &str) -> tempfile::NamedTempFile {
    let mut file = tempfile::NamedTempFile::new().expect("temp file");
    file.write_all(content.as_bytes()).expect("write");
    file
}

#[test]
fn verify_passes_valid_rows_and_skips_comments() {
    let file = write_temp("(1,1,2,3,7)\n# comment\n\n(7,1,2,18,28)\n");
    let out = symcy(&["verify", file.path().to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("total: 2 passed: 2 failed: 0"));
}

#[test]
fn verify_flags_sum_violation_with_exit_1() {
    let file = write_temp("(2,1,2,3,7)\n");
    let out = symcy(&["verify", file.path().to_str().unwrap()]);
    assert_eq!(exit_code(&out), 1);
    let text = stdout_of(&out);
    assert!(text.contains("FAIL"));
    assert!(text.contains("weights sum to the degree"));
}

#[test]
fn verify_reports_parse_error_with_line_number() {
    let file = write_temp("(1,1,2,3,7)\nnot a weight row\n");
    let out = symcy(&["verify", file.path().to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_of(&out).contains("line 2"));
}

#[test]
fn verify_empty_file_passes_with_zero_rows() {
    let file = write_temp("");
    let out = symcy(&["verify", file.path().to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout_of(&out).contains("total: 0"));
}

#[test]
fn verify_missing_file_exits_4() {
    let out = symcy(&["verify", "/no/such/file"]);
    assert_eq!(exit_code(&out), 4);
    assert!(!stderr_of(&out).is_empty());
}

// ---- JSON schema conformance ----

/// Minimal structural validator for the subset of schema keywords used
/// in output-schema.json: type, required, properties, items, enum, $ref.
fn validate(
    value: &serde_json::Value,
    schema: &serde_json::Value,
    defs: &serde_json::Value,
    path: &str,
) -> Result<(), String> {
    if let Some(reference) = schema.get("$ref").and_then(|r| r.as_str()) {
        let target = defs
            .get(reference)
            .ok_or_else(|| format!("{path}: unknown $ref {reference}"))?;
        return validate(value, target, defs, path);
    }
    if let Some(allowed) = schema.get("enum").and_then(|e| e.as_array()) {
        if !allowed.contains(value) {
            return Err(format!("{path}: {value} not in enum"));
        }
    }
    match schema.get("type").and_then(|t| t.as_str()) {
        Some("object") => {
            let map = value
                .as_object()
                .ok_or_else(|| format!("{path}: expected object"))?;
            if let Some(required) = schema.get("required").and_then(|r| r.as_array()) {
                for key in required {
                    let key = key.as_str().unwrap();
                    if !map.contains_key(key) {
                        return Err(format!("{path}: missing required key {key}"));
                    }
                }
            }
            if let Some(props) = schema.get("properties").and_then(|p| p.as_object()) {
                for (key, sub) in props {
                    if let Some(item) = map.get(key) {
                        validate(item, sub, defs, &format!("{path}.{key}"))?;
                    }
                }
            }
        }
        Some("array") => {
            let items = value
                .as_array()
                .ok_or_else(|| format!("{path}: expected array"))?;
            if let Some(sub) = schema.get("items") {
                for (i, item) in items.iter().enumerate() {
                    validate(item, sub, defs, &format!("{path}[{i}]"))?;
                }
            }
        }
        Some("string") => {
            if !value.is_string() {
                return Err(format!("{path}: expected string"));
            }
        }
        Some("integer") => {
            let ok = value.as_i64().is_some() || value.as_u64().is_some();
            if !ok {
                return Err(format!("{path}: expected integer"));
            }
        }
        Some("boolean") if !value.is_boolean() => {
            return Err(format!("{path}: expected boolean"));
        }
        _ => {}
    }
    Ok(())
}

fn check_schema(args: &[&str], command: &str) {
    let schema: serde_json::Value =
        serde_json::from_str(include_str!("../output-schema.json")).expect("schema parses");
    let out = symcy(args);
    // verify exits 1 when rows fail checks; output is still well formed.
    assert!(
        matches!(exit_code(&out), 0 | 1),
        "{args:?} failed: {}",
        stderr_of(&out)
    );
    let value: serde_json::Value =
        serde_json::from_str(&stdout_of(&out)).expect("json output parses");
    validate(&value, &schema["envelope"], &schema, "envelope")
        .unwrap_or_else(|e| panic!("{args:?}: {e}"));
    assert_eq!(value["command"], command);
    let row_schema = &schema["rows"][command];
    for (i, row) in value["rows"].as_array().unwrap().iter().enumerate() {
        validate(row, row_schema, &schema, &format!("rows[{i}]"))
            .unwrap_or_else(|e| panic!("{args:?}: {e}"));
    }
}

#[test]
fn json_output_conforms_to_shipped_schema() {
    let table = fixture("table4-database.txt");
    let table = table.to_str().unwrap();
    check_schema(
        &[
            "egyptian",
            "--format",
            "json",
            "--min-first-denominator",
            "3",
        ],
        "egyptian",
    );
    check_schema(&["classify", "--case2", "--format", "json"], "classify");
    check_schema(&["classify", "--fermat", "--format", "json"], "classify");
    check_schema(
        &["hodge", "14", "1", "1", "2", "3", "7", "--format", "json"],
        "hodge",
    );
    check_schema(&["hodge", "14", "1", "2", "3", "--format", "json"], "hodge");
    check_schema(
        &[
            "decompose",
            "1",
            "2",
            "3",
            "7",
            "--quotient",
            "7",
            "--format",
            "json",
        ],
        "decompose",
    );
    check_schema(&["verify", table, "--format", "json"], "verify");
}

// ---- format agreement ----

#[test]
fn classify_text_and_json_carry_identical_numbers() {
    let text_out = symcy(&["classify", "--case2"]);
    let json_out = symcy(&["classify", "--case2", "--format", "json"]);
    assert_eq!(exit_code(&text_out), 0);
    assert_eq!(exit_code(&json_out), 0);

    let json: serde_json::Value = serde_json::from_str(&stdout_of(&json_out)).unwrap();
    let rows = json["rows"].as_array().unwrap();
    let text = stdout_of(&text_out);
    let lines: Vec<&str> = text.lines().filter(|l| l.starts_with("tuple=")).collect();
    assert_eq!(lines.len(), rows.len());

    for (line, row) in lines.iter().zip(rows) {
        let toks = tokens(line);
        assert_eq!(toks["h21"], row["h21"].to_string());
        assert_eq!(toks["h12"], row["h12"].to_string());
        assert_eq!(toks["genus"], row["genus"].to_string());
        assert_eq!(toks["order"], row["order"].to_string());
        assert_eq!(toks["rep"], row["rep"].as_str().unwrap());
        let weights: Vec<String> = row["weights"]
            .as_array()
            .unwrap()
            .iter()
            .map(|w| w.to_string())
            .collect();
        assert_eq!(toks["tuple"], format!("({})", weights.join(",")));
    }
}

#[test]
fn hodge_text_and_json_carry_identical_numbers() {
    let text_out = symcy(&["hodge", "22", "1", "1", "2", "7", "11"]);
    let json_out = symcy(&["hodge", "22", "1", "1", "2", "7", "11", "--format", "json"]);
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&json_out)).unwrap();
    let row = &json["rows"][0];
    let text = stdout_of(&text_out);
    let toks: HashMap<String, String> = text.lines().flat_map(tokens).collect();
    assert_eq!(toks["h21"], row["hodge"]["h21"].to_string());
    assert_eq!(toks["kuranishi"], row["kuranishi"].to_string());
    assert_eq!(toks["amplitude"], row["amplitude"].to_string());
}

#[test]
fn csv_output_has_consistent_columns_and_quoting() {
    let out = symcy(&["classify", "--case1", "--format", "csv"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let width = reader.headers().unwrap().len();
    let mut rows = 0;
    for record in reader.records() {
        let record = record.unwrap();
        assert_eq!(record.len(), width);
        rows += 1;
    }
    assert_eq!(rows, 55);

    // Decomposition strings contain commas, so the raw cells must be quoted.
    let case2 = stdout_of(&symcy(&["classify", "--case2", "--format", "csv"]));
    assert!(case2.contains("\"21.(14)+20.(7,2)\""));
}

#[test]
fn egyptian_csv_lists_header_and_all_rows() {
    let out = symcy(&["egyptian", "--format", "csv"]);
    let text = stdout_of(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,p,q,r,s"));
    assert_eq!(lines.count(), 147);
}
