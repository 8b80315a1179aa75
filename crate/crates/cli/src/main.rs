mod input;
mod render;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use conic_isotopy::classify::{classify, golden, ClassifyError, ValidationError};
use conic_isotopy::exactalg::{format_rational, rat, ratio, Rational};
use conic_isotopy::oracle::{intersect_numeric, nesting_numeric, Nesting, OracleError, OracleOptions};
use conic_isotopy::quadform::QuadraticForm;
use conic_isotopy::sweep::{lookup, sweep};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "conics", version, about = "Exact classification of couples of real projective conics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// A couple of conics. Coefficients are in the order
/// a200 a020 a002 a110 a101 a011, first f then g.
#[derive(Args)]
struct Couple {
    /// Twelve rationals, or two quoted groups of six; read from --input or
    /// stdin when absent.
    #[arg(num_args = 0..)]
    coeffs: Vec<String>,
    /// File with the coefficients (text or JSON).
    #[arg(long, short)]
    input: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Class at all four levels, with the invariant signs used.
    Classify {
        #[command(flatten)]
        couple: Couple,
        #[arg(long)]
        json: bool,
    },
    /// Every invariant and covariant of the couple.
    Invariants {
        #[command(flatten)]
        couple: Couple,
        #[arg(long)]
        json: bool,
    },
    /// Orbit of the pencil and its base-point multiplicities.
    Orbit {
        #[command(flatten)]
        couple: Couple,
        #[arg(long)]
        json: bool,
    },
    /// Classifies a one-parameter family over an open interval.
    Sweep {
        /// JSON file with twelve coefficient polynomials.
        #[arg(long)]
        family: PathBuf,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        json: bool,
    },
    /// Compares the classification with numeric intersection and nesting.
    Verify {
        #[command(flatten)]
        couple: Couple,
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
        #[arg(long)]
        json: bool,
    },
    /// Runs a reference suite and prints one pass/fail row per case.
    Corpus {
        /// The fourteen representative couples.
        #[arg(long, conflicts_with = "uhlig", required_unless_present = "uhlig")]
        table2: bool,
        /// A normal form (U11 U12 U21 U22 U31 U32 U4) on a parameter grid.
        #[arg(long)]
        uhlig: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// SVG of the two conics in the chart z = 1, captioned with the class.
    Render {
        #[command(flatten)]
        couple: Couple,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug)]
enum CliError {
    Parse(String),
    Invalid(ValidationError),
    Inconsistent(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Invalid(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Inconsistent(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Invalid(e) => write!(f, "{}: {e}", e.kind()),
            CliError::Inconsistent(m) => write!(f, "inconsistency: {m}"),
        }
    }
}

impl From<ClassifyError> for CliError {
    fn from(e: ClassifyError) -> Self {
        match e {
            ClassifyError::Invalid(v) => CliError::Invalid(v),
            ClassifyError::InternalInconsistency(m) => CliError::Inconsistent(m),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::Invalid(v) => CliError::Invalid(v),
            other => CliError::Inconsistent(other.to_string()),
        }
    }
}

fn emit(v: &Value, json: bool, text: impl FnOnce() -> String) -> String {
    if json {
        report::to_canonical(v)
    } else {
        text()
    }
}

fn run(cmd: Command) -> Result<String, CliError> {
    match cmd {
        Command::Classify { couple, json } => {
            let (f, g) = input::couple(&couple.coeffs, couple.input.as_deref())?;
            let c = classify(&f, &g)?;
            let v = report::classification(&f, &g, &c);
            Ok(emit(&v, json, || format!("{}\nsigns: {}\n", c.label, c.signs)))
        }
        Command::Invariants { couple, json } => {
            let (f, g) = input::couple(&couple.coeffs, couple.input.as_deref())?;
            let c = classify(&f, &g)?;
            let v = report::bundle(&c.bundle);
            Ok(emit(&v, json, || report::flatten(&v)))
        }
        Command::Orbit { couple, json } => {
            let (f, g) = input::couple(&couple.coeffs, couple.input.as_deref())?;
            let o = classify(&f, &g)?.label.orbit;
            let v = json!({
                "orbit": o.name(),
                "real_base_points": o.real_base_points(),
                "imaginary_base_points": o.imaginary_base_points(),
            });
            Ok(emit(&v, json, || {
                format!("{}\nreal base points {:?}, imaginary {:?}\n", o, o.real_base_points(), o.imaginary_base_points())
            }))
        }
        Command::Sweep { family, from, to, json } => {
            let fam = input::family(&family)?;
            let (lo, hi) = (input::rational(&from)?, input::rational(&to)?);
            let r = sweep(&fam, &lo, &hi).map_err(|e| CliError::Parse(e.to_string()))?;
            let v = json!({
                "family": fam.to_json(),
                "from": format_rational(&lo),
                "to": format_rational(&hi),
                "pattern": r.pattern(),
                "segments": r.to_json(),
            });
            Ok(emit(&v, json, || {
                let mut s = format!("{}\n", r.pattern());
                for seg in &r.segments {
                    let status = match (&seg.status, seg.status.class()) {
                        (_, Some(c)) => c.to_string(),
                        (st, None) => format!("{st:?}"),
                    };
                    if seg.is_point() {
                        s.push_str(&format!("  at {:.6}: {status}\n", seg.lo.to_f64()));
                    } else {
                        s.push_str(&format!("  ({:.6}, {:.6}): {status}\n", seg.lo.to_f64(), seg.hi.to_f64()));
                    }
                }
                s
            }))
        }
        Command::Verify { couple, tolerance, json } => {
            let (f, g) = input::couple(&couple.coeffs, couple.input.as_deref())?;
            verify(&f, &g, tolerance, json)
        }
        Command::Corpus { table2: _, uhlig: Some(kind), json } => corpus_uhlig(&kind, json),
        Command::Corpus { json, .. } => corpus_golden(json),
        Command::Render { couple, out } => {
            let (f, g) = input::couple(&couple.coeffs, couple.input.as_deref())?;
            let c = classify(&f, &g)?;
            let svg = render::svg(&f, &g, &c.label.to_string());
            std::fs::write(&out, svg).map_err(|e| CliError::Parse(format!("{}: {e}", out.display())))?;
            Ok(format!("wrote {}\n", out.display()))
        }
    }
}

struct Verdict {
    value: Value,
    agree: bool,
    flagged: bool,
}

fn oracle_verdict(f: &QuadraticForm, g: &QuadraticForm, opts: &OracleOptions) -> Result<Verdict, CliError> {
    let c = classify(f, g)?.label;
    let expected = Nesting::expected_for(c.couple);
    let inter = match intersect_numeric(f, g, opts) {
        Ok(r) => r,
        Err(OracleError::IllConditioned(n)) => {
            return Ok(Verdict {
                value: json!({ "class": c.couple.to_string(), "flag": format!("ill_conditioned after {n} attempts") }),
                agree: false,
                flagged: true,
            })
        }
        Err(e) => return Err(e.into()),
    };
    let nesting = nesting_numeric(f, g, opts)?;
    let points_ok = inter.matches_orbit(c.orbit);
    let flagged = nesting == Nesting::TangentAmbiguous;
    let nesting_ok = nesting == expected;
    Ok(Verdict {
        value: json!({
            "class": c.couple.to_string(),
            "expected_real_base_points": c.orbit.real_base_points(),
            "expected_imaginary_base_points": c.orbit.imaginary_base_points(),
            "intersection": report::intersection(&inter),
            "base_points_agree": points_ok,
            "expected_nesting": expected.name(),
            "nesting": nesting.name(),
            "nesting_agrees": nesting_ok,
        }),
        agree: points_ok && nesting_ok,
        flagged,
    })
}

fn verify(f: &QuadraticForm, g: &QuadraticForm, tolerance: f64, json: bool) -> Result<String, CliError> {
    let opts = OracleOptions { tolerance, ..OracleOptions::default() };
    let v = oracle_verdict(f, g, &opts)?;
    let mut value = v.value;
    value.as_object_mut().unwrap().insert("agree".into(), v.agree.into());
    let out = emit(&value, json, || report::flatten(&value));
    if !v.agree && !v.flagged {
        print!("{out}");
        return Err(CliError::Inconsistent("oracle disagrees with the classification".into()));
    }
    Ok(out)
}

fn corpus_golden(json: bool) -> Result<String, CliError> {
    let mut rows = Vec::new();
    let mut text = String::new();
    let mut passed = 0;
    let cases = golden::couples();
    for (rep, expected) in &cases {
        let got = classify(&rep.f, &rep.g).map(|c| c.label.couple.to_string()).unwrap_or_else(|e| e.to_string());
        let ok = got == expected.to_string();
        passed += ok as usize;
        text.push_str(&format!(
            "{:<6} expected {:<10} got {:<10} {}\n",
            rep.label.name(),
            expected.to_string(),
            got,
            if ok { "pass" } else { "FAIL" }
        ));
        rows.push(json!({
            "pair": rep.label.name(),
            "f": report::form(&rep.f),
            "g": report::form(&rep.g),
            "expected": expected.to_string(),
            "got": got,
            "pass": ok,
        }));
    }
    text.push_str(&format!("{passed}/{} passed\n", cases.len()));
    let out = emit(&json!({ "rows": rows, "passed": passed, "total": cases.len() }), json, || text);
    if passed != cases.len() {
        print!("{out}");
        return Err(CliError::Inconsistent(format!("{} representatives misclassified", cases.len() - passed)));
    }
    Ok(out)
}

fn grid_values() -> Vec<Rational> {
    vec![rat(-2), rat(-1), ratio(-1, 2), ratio(1, 3), rat(1), rat(2)]
}

fn corpus_uhlig(kind: &str, json: bool) -> Result<String, CliError> {
    let nf = lookup(kind).map_err(|e| CliError::Parse(e.to_string()))?;
    let k = nf.params().len();
    let vals = grid_values();
    let opts = OracleOptions::default();
    let mut rows = Vec::new();
    let mut text = String::new();
    let (mut failed, mut total) = (0, 0);
    let mut idx = vec![0usize; k];
    loop {
        let p: Vec<Rational> = idx.iter().map(|&i| vals[i].clone()).collect();
        let (f, g) = nf.forms(&p).map_err(|e| CliError::Parse(e.to_string()))?;
        let params: Vec<String> = p.iter().map(format_rational).collect();
        let (status, agree, detail) = match classify(&f, &g) {
            Err(ClassifyError::Invalid(e)) => ("invalid".to_string(), true, Value::String(e.kind().into())),
            Err(e) => return Err(e.into()),
            Ok(c) => {
                let v = oracle_verdict(&f, &g, &opts)?;
                (c.label.couple.to_string(), v.agree || v.flagged, v.value)
            }
        };
        total += 1;
        failed += (!agree) as usize;
        let names: Vec<String> = nf.params().iter().zip(&params).map(|(n, v)| format!("{n}={v}")).collect();
        text.push_str(&format!("{:<28} {:<10} {}\n", names.join(" "), status, if agree { "pass" } else { "FAIL" }));
        rows.push(json!({ "params": params, "class": status, "oracle": detail, "pass": agree }));
        // Odometer over the grid.
        let mut j = 0;
        while j < k {
            idx[j] += 1;
            if idx[j] < vals.len() {
                break;
            }
            idx[j] = 0;
            j += 1;
        }
        if j == k {
            break;
        }
    }
    text.push_str(&format!("{}/{total} passed\n", total - failed));
    let out = emit(
        &json!({ "kind": nf.name(), "params": nf.params(), "rows": rows, "passed": total - failed, "total": total }),
        json,
        || text,
    );
    if failed > 0 {
        print!("{out}");
        return Err(CliError::Inconsistent(format!("{failed} grid points disagree with the oracle")));
    }
    Ok(out)
}

/// Negative numbers such as `-1/2` or `"-1 0 2 ..."` would read as flags;
/// a leading space makes them values and is ignored when parsing.
fn protect_negatives(args: impl Iterator<Item = String>) -> Vec<String> {
    args.map(|a| {
        let mut c = a.chars();
        match (c.next(), c.next()) {
            (Some('-'), Some(d)) if d.is_ascii_digit() || d == '.' => format!(" {a}"),
            _ => a,
        }
    })
    .collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse_from(protect_negatives(std::env::args()));
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
