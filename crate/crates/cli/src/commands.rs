use std::f64::consts::LN_2;

use rayon::prelude::*;
use replica_entropy::compare::{self, Suite};
use replica_entropy::fock::{oracle, DEFAULT_TAIL_TOL};
use replica_entropy::purity::{self, SeparableCatMixture, ThermalMixture};
use replica_entropy::record::Quantity;
use replica_entropy::{cat, replica, Amplitude, CatMixture, Complex64, Error, OutputRecord, PurityTriple, Subsystem, TwoStateMixture};
use serde::Serialize;
use thiserror::Error;

use crate::output::{self, SweepLine};
use crate::{CatPurityArgs, CompareArgs, Format, SuiteArg, SweepArgs, ThermalPurityArgs, TwoStateArgs};

/// Gaps below this are treated as a violated inequality.
const GAP_TOL: f64 = 1e-12;

#[derive(Debug, Error)]
pub enum Failure {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("purity inequality violated: gap {0:e}")]
    Inequality(f64),
    #[error("{failed} of {cases} comparisons failed at tol {tol:e}")]
    Comparison { failed: usize, cases: usize, tol: f64 },
    /// A failure that still has records to print.
    #[error("{1}")]
    WithOutput(String, Box<Failure>),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Core(Error::CutoffExceeded { .. }) => 3,
            Failure::Core(_) => 2,
            Failure::Inequality(_) => 4,
            Failure::Comparison { .. } => 5,
            Failure::WithOutput(_, inner) => inner.exit_code(),
        }
    }
}

type CmdResult = Result<String, Failure>;

fn amplitude(re: f64, im: f64) -> Result<Amplitude, Failure> {
    Ok(Amplitude::new(re, im)?)
}

pub fn entropy_two_state(args: &TwoStateArgs) -> CmdResult {
    let spec = TwoStateMixture::new(
        args.a,
        args.b,
        Complex64::new(args.c_re, args.c_im),
        amplitude(args.alpha_re, args.alpha_im)?,
        amplitude(args.beta_re, args.beta_im)?,
    )?;
    let (quantity, unit) = if args.bits {
        (Quantity::EntropyBits, LN_2)
    } else {
        (Quantity::EntropyNats, 1.0)
    };
    let inputs = [
        ("a", args.a),
        ("b", args.b),
        ("c_re", args.c_re),
        ("c_im", args.c_im),
        ("alpha_re", args.alpha_re),
        ("alpha_im", args.alpha_im),
        ("beta_re", args.beta_re),
        ("beta_im", args.beta_im),
    ];
    let mut record = OutputRecord::new(quantity, inputs, replica::entropy_closed(&spec)? / unit);
    if args.oracle {
        record = record.with_oracle(oracle::two_state_entropy(&spec, DEFAULT_TAIL_TOL)? / unit);
    }
    Ok(output::records(&[record], args.json))
}

fn check_sweep(args: &SweepArgs) -> Result<(), Failure> {
    let usage = |m: String| Err(Failure::Usage(m));
    if args.ratios.is_empty() {
        return usage("--ratios must list at least one value".into());
    }
    if let Some(r) = args.ratios.iter().find(|r| !(r.is_finite() && **r >= 0.0)) {
        return usage(format!("ratio {r} must be finite and non-negative"));
    }
    if !(args.grid_min.is_finite() && args.grid_max.is_finite()) || args.grid_min < 0.0 {
        return usage("grid bounds must be finite and non-negative".into());
    }
    if args.grid_min > args.grid_max {
        return usage(format!("--grid-min {} exceeds --grid-max {}", args.grid_min, args.grid_max));
    }
    if args.points == 0 {
        return usage("--points must be at least 1".into());
    }
    if args.oracle_every == Some(0) {
        return usage("--oracle-every must be at least 1".into());
    }
    // weights are checked here so a bad pair fails before any row is skipped
    CatMixture::new(args.a, args.b, Amplitude::real(1.0), Amplitude::real(1.0))?;
    Ok(())
}

pub fn fig1_sweep(args: &SweepArgs) -> CmdResult {
    check_sweep(args)?;
    let grid = cat::linear_grid(args.grid_min, args.grid_max, args.points);
    let points: Vec<(f64, f64)> = args
        .ratios
        .iter()
        .flat_map(|&r| grid.iter().map(move |&x| (r, x)))
        .collect();

    let rows: Vec<Result<Option<SweepLine>, Error>> = points
        .par_iter()
        .enumerate()
        .map(|(i, &(ratio, x))| {
            let spec = match cat::sweep_spec(ratio, x, args.a, args.b) {
                Err(Error::DegenerateCatState) => return Ok(None),
                other => other?,
            };
            let entropy = cat::reduced_entropy(&spec, Subsystem::First)?;
            let oracle_entropy = match args.oracle_every {
                Some(k) if i % k == 0 => {
                    Some(oracle::cat_reduced_entropy(&spec, Subsystem::First, DEFAULT_TAIL_TOL)?)
                }
                _ => None,
            };
            Ok(Some(SweepLine {
                ratio,
                abs_alpha1: x,
                entropy_nats: entropy,
                oracle_entropy,
                abs_diff: oracle_entropy.map(|o| (entropy - o).abs()),
            }))
        })
        .collect();

    let mut lines = Vec::with_capacity(rows.len());
    for (row, &(ratio, x)) in rows.into_iter().zip(&points) {
        match row? {
            Some(line) => lines.push(line),
            None => eprintln!("warning: skipping ratio={ratio} abs_alpha1={x}: degenerate odd cat state"),
        }
    }

    Ok(match args.format {
        Format::Csv => output::sweep_csv(&lines, args.oracle_every.is_some()),
        Format::Json => {
            let mut out = String::new();
            for line in &lines {
                output::json_line(&mut out, line);
            }
            out
        }
    })
}

fn purity_records(
    inputs: &[(&str, f64)],
    triple: PurityTriple,
    gap: f64,
    json: bool,
) -> CmdResult {
    let records: Vec<OutputRecord> = [
        (Quantity::Mu12, triple.mu12),
        (Quantity::Mu1, triple.mu1),
        (Quantity::Mu2, triple.mu2),
        (Quantity::PurityGap, gap),
    ]
    .into_iter()
    .map(|(q, v)| OutputRecord::new(q, inputs.iter().copied(), v))
    .collect();
    let out = output::records(&records, json);
    let worst = gap.min(triple.gap());
    if worst < -GAP_TOL || worst.is_nan() {
        return Err(Failure::WithOutput(out, Box::new(Failure::Inequality(worst))));
    }
    Ok(out)
}

pub fn purity_cat(args: &CatPurityArgs) -> CmdResult {
    let spec = SeparableCatMixture::new(
        args.a,
        args.b,
        amplitude(args.alpha1_re, args.alpha1_im)?,
        amplitude(args.alpha2_re, args.alpha2_im)?,
    )?;
    let inputs = [
        ("a", args.a),
        ("b", args.b),
        ("alpha1_re", args.alpha1_re),
        ("alpha1_im", args.alpha1_im),
        ("alpha2_re", args.alpha2_re),
        ("alpha2_im", args.alpha2_im),
    ];
    purity_records(
        &inputs,
        purity::purity_triple_cat(&spec)?,
        purity::purity_gap_cat(&spec)?,
        args.json,
    )
}

pub fn purity_thermal(args: &ThermalPurityArgs) -> CmdResult {
    let mean_photons = match (args.mean_photons, args.temperature) {
        (Some(n), None) => n,
        (None, Some(t)) => purity::thermal_mean_photon(t)?,
        _ => return Err(Failure::Usage("give exactly one of --mean-photons, --temperature".into())),
    };
    let spec = ThermalMixture::new(
        amplitude(args.alpha1_re, args.alpha1_im)?,
        amplitude(args.alpha2_re, args.alpha2_im)?,
        mean_photons,
    )?;
    let mut inputs = vec![
        ("alpha1_re", args.alpha1_re),
        ("alpha1_im", args.alpha1_im),
        ("alpha2_re", args.alpha2_re),
        ("alpha2_im", args.alpha2_im),
        ("mean_photons", mean_photons),
    ];
    if let Some(t) = args.temperature {
        inputs.push(("temperature", t));
    }
    purity_records(
        &inputs,
        purity::purity_triple_thermal(&spec),
        purity::purity_gap_thermal(&spec),
        args.json,
    )
}

#[derive(Debug, Serialize)]
struct Summary {
    suite: &'static str,
    cases: usize,
    passed: usize,
    failed: usize,
    tol: f64,
    max_abs_diff: f64,
    pass: bool,
}

#[derive(Debug, Serialize)]
struct SummaryLine {
    summary: Summary,
}

pub fn oracle_compare(args: &CompareArgs) -> CmdResult {
    if !(args.tol >= 0.0 && args.tol.is_finite()) {
        return Err(Failure::Usage(format!("--tol {} must be finite and non-negative", args.tol)));
    }
    let (suite, name) = match args.suite {
        SuiteArg::Quick => (Suite::Quick, "quick"),
        SuiteArg::Full => (Suite::Full, "full"),
    };
    let cases = compare::suite_cases(suite);
    let results: Vec<_> = cases.par_iter().map(|c| c.evaluate()).collect();

    let mut records = Vec::with_capacity(cases.len());
    let mut failed = 0;
    let mut max_abs_diff: f64 = 0.0;
    for (case, result) in cases.iter().zip(results) {
        match result {
            Ok(r) => {
                let d = r.abs_diff.unwrap_or(f64::NAN);
                // NaN compares false, so it lands in the failure branch
                if !(d <= args.tol) {
                    failed += 1;
                    eprintln!("FAIL {} {:?} abs_diff={d:e}", case.label(), r.inputs);
                }
                max_abs_diff = max_abs_diff.max(d);
                records.push(r);
            }
            Err(e) => {
                failed += 1;
                eprintln!("FAIL {}: {e}", case.label());
            }
        }
    }

    let summary = Summary {
        suite: name,
        cases: cases.len(),
        passed: cases.len() - failed,
        failed,
        tol: args.tol,
        max_abs_diff,
        pass: failed == 0,
    };
    let mut out = output::records(&records, args.json);
    if args.json {
        output::json_line(&mut out, &SummaryLine { summary });
    } else {
        eprintln!(
            "oracle-compare {name}: {}/{} passed, max abs_diff {max_abs_diff:e}, tol {:e}",
            summary.passed, summary.cases, summary.tol
        );
    }
    if failed > 0 {
        let inner = Failure::Comparison { failed, cases: cases.len(), tol: args.tol };
        return Err(Failure::WithOutput(out, Box::new(inner)));
    }
    Ok(out)
}
