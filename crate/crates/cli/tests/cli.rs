use std::process::{Command, Output};

use replica_entropy::OutputRecord;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_replica-entropy"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> &str {
    std::str::from_utf8(&o.stdout).unwrap()
}

fn stderr(o: &Output) -> &str {
    std::str::from_utf8(&o.stderr).unwrap()
}

fn json_records(o: &Output) -> Vec<OutputRecord> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

const TWO_STATE: &[&str] = &[
    "entropy-two-state",
    "--a", "0.5", "--b", "0.5", "--alpha-re", "1", "--beta-re", "-1",
];

#[test]
fn two_state_entropy_with_oracle() {
    let o = run(&[TWO_STATE, &["--oracle", "--json"]].concat());
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let recs = json_records(&o);
    assert_eq!(recs.len(), 1);
    assert!((recs[0].value - 0.6839611990567596).abs() < 1e-14);
    assert!(recs[0].abs_diff.unwrap() < 1e-8);
    assert!(recs[0].is_consistent());
}

#[test]
fn two_state_bits() {
    let o = run(&[TWO_STATE, &["--bits", "--json"]].concat());
    let v = json_records(&o)[0].value;
    assert!((v - 0.6839611990567596 / std::f64::consts::LN_2).abs() < 1e-14);
}

#[test]
fn pure_state_has_zero_entropy() {
    let o = run(&["entropy-two-state", "--a", "1", "--b", "0", "--alpha-re", "1", "--beta-re", "-1"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<_> = stdout(&o).lines().collect();
    assert_eq!(lines[0], OutputRecord::CSV_HEADER);
    assert!(lines[1].contains(",0.0,"), "{}", lines[1]);
}

#[test]
fn trace_violation_exits_2() {
    let o = run(&["entropy-two-state", "--a", "0.6", "--b", "0.6", "--alpha-re", "1", "--beta-re", "-1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("trace condition"));
    assert!(stdout(&o).is_empty());
}

#[test]
fn missing_flag_exits_2() {
    assert_eq!(run(&["entropy-two-state", "--a", "1"]).status.code(), Some(2));
    assert_eq!(run(&["fig1-sweep", "--points", "0"]).status.code(), Some(2));
    assert_eq!(run(&["fig1-sweep", "--a", "0.7"]).status.code(), Some(2));
    assert_eq!(run(&["fig1-sweep", "--grid-min", "2", "--grid-max", "1"]).status.code(), Some(2));
    assert_eq!(run(&["oracle-compare", "--tol", "-1"]).status.code(), Some(2));
}

#[test]
fn cutoff_exceeded_exits_3() {
    let o = run(&["entropy-two-state", "--a", "1", "--b", "0", "--alpha-re", "20", "--beta-re", "0", "--oracle"]);
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));
}

#[test]
fn default_sweep_has_600_rows_ending_near_ln2() {
    let o = run(&["fig1-sweep"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(!text.contains('\r'));
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines[0], "ratio,abs_alpha1,entropy_nats");
    assert_eq!(lines.len(), 601);
    for ratio in ["0.5", "1.0", "2.0"] {
        let last = lines.iter().rev().find(|l| l.starts_with(&format!("{ratio},"))).unwrap();
        let fields: Vec<f64> = last.split(',').map(|f| f.parse().unwrap()).collect();
        assert_eq!(fields[1], 4.0);
        assert!((fields[2] - std::f64::consts::LN_2).abs() < 1e-3);
    }
}

#[test]
fn sweep_is_bit_stable() {
    let args = ["fig1-sweep", "--points", "40", "--oracle-every", "7"];
    let first = run(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, run(&args).stdout);
}

#[test]
fn small_amplitude_single_row() {
    let o = run(&[
        "fig1-sweep", "--points", "1", "--grid-min", "0.001", "--grid-max", "0.001", "--ratios", "1",
    ]);
    let lines: Vec<_> = stdout(&o).lines().collect();
    assert_eq!(lines.len(), 2);
    let s: f64 = lines[1].split(',').nth(2).unwrap().parse().unwrap();
    assert!((s - 0.562335).abs() < 1e-4);
}

/// A pure even two-mode cat is entangled: its Schmidt weights on the even
/// and odd single-mode cats are `(1+e₁)(1+e₂)/(2(1+e₁e₂))` and the rest.
#[test]
fn pure_even_cat_sweep_matches_schmidt_weights() {
    let o = run(&["fig1-sweep", "--a", "1", "--b", "0", "--points", "25"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<_> = stdout(&o).lines().skip(1).collect();
    assert_eq!(lines.len(), 75);
    for l in lines {
        let f: Vec<f64> = l.split(',').map(|x| x.parse().unwrap()).collect();
        let e1 = (-2.0 * f[1] * f[1]).exp();
        let e2 = (-2.0 * (f[0] * f[1]).powi(2)).exp();
        let p = (1.0 + e1) * (1.0 + e2) / (2.0 * (1.0 + e1 * e2));
        let q = 1.0 - p;
        let s = -p * p.ln() - if q > 0.0 { q * q.ln() } else { 0.0 };
        assert!((f[2] - s).abs() < 1e-10, "{l} vs {s}");
    }
}

#[test]
fn sweep_oracle_columns() {
    let o = run(&["fig1-sweep", "--points", "10", "--oracle-every", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let rows: Vec<serde_json::Value> =
        stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 30);
    for (i, row) in rows.iter().enumerate() {
        let has = row.get("abs_diff").is_some();
        assert_eq!(has, i % 3 == 0);
        if has {
            assert!(row["abs_diff"].as_f64().unwrap() < 1e-8);
        }
    }
}

#[test]
fn degenerate_rows_are_skipped_with_warning() {
    let o = run(&["fig1-sweep", "--grid-min", "0", "--grid-max", "1", "--points", "3", "--ratios", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 3);
    assert!(stderr(&o).contains("warning"));
}

#[test]
fn purity_cat_values() {
    let o = run(&[
        "purity", "cat", "--a", "0.5", "--b", "0.5", "--alpha1-re", "1", "--alpha2-re", "1", "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let recs = json_records(&o);
    assert_eq!(recs.len(), 4);
    assert!((recs[3].value - 0.481852092425217).abs() < 1e-12);

    let o = run(&[
        "purity", "cat", "--a", "0.5", "--b", "0.5", "--alpha1-re", "0", "--alpha2-re", "1", "--json",
    ]);
    assert_eq!(json_records(&o)[3].value, 0.0);
}

#[test]
fn purity_thermal_values() {
    let o = run(&[
        "purity", "thermal", "--alpha1-re", "1", "--alpha2-re", "1", "--mean-photons", "1", "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let recs = json_records(&o);
    assert!((recs[3].value - 0.24271960029129896).abs() < 1e-11);

    let o = run(&["purity", "thermal", "--alpha1-re", "1", "--alpha2-re", "1", "--temperature", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("temperature=1.0"));
    let o = run(&["purity", "thermal", "--alpha1-re", "1", "--alpha2-re", "1", "--temperature", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn oracle_compare_quick_passes() {
    let o = run(&["oracle-compare", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let lines: Vec<_> = stdout(&o).lines().collect();
    let summary: serde_json::Value = serde_json::from_str(lines.last().unwrap()).unwrap();
    assert_eq!(summary["summary"]["pass"], true);
    assert!(summary["summary"]["cases"].as_u64().unwrap() >= 20);
    for l in &lines[..lines.len() - 1] {
        let r: OutputRecord = serde_json::from_str(l).unwrap();
        assert!(r.abs_diff.unwrap() <= 1e-8);
        // parse then re-serialize is the identity
        assert_eq!(&serde_json::to_string(&r).unwrap(), l);
    }
}

#[test]
fn oracle_compare_unreachable_tol_exits_5() {
    let o = run(&["oracle-compare", "--tol", "1e-30"]);
    assert_eq!(o.status.code(), Some(5));
    assert!(stderr(&o).contains("FAIL"));
    assert!(stdout(&o).starts_with(OutputRecord::CSV_HEADER));
}
