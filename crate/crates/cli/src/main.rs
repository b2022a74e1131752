use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use vassiliev::diagrams::braid::parse_letters;
use vassiliev::suites::{self, SuiteReport};
use vassiliev::{parse_gauss_code, BraidWord, Formula, GaussDiagram};

/// Exit codes: 0 success, 1 verification failure, 2 input error.
const INPUT_ERROR: u8 = 2;

#[derive(Parser)]
#[command(name = "vassiliev", about = "Vassiliev invariants of knots from Gauss diagrams")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate invariants of one knot diagram.
    Compute {
        /// Gauss code, e.g. "O1+ U2+ O3+ U1+ O2+ U3+".
        #[arg(long, conflicts_with = "braid", allow_hyphen_values = true)]
        gauss: Option<String>,
        /// Braid closure: strand count and word, e.g. `--braid 2 "1 1 1"`.
        #[arg(long, num_args = 2, value_names = ["STRANDS", "WORD"], allow_hyphen_values = true)]
        braid: Option<Vec<String>>,
        /// Comma separated formula ids (v2pv,v2l,v3pv,v3l,v4pv,v4new or v4new[W4_3]).
        #[arg(long, value_delimiter = ',')]
        formulas: Option<Vec<String>>,
        #[arg(long)]
        json: bool,
        /// Include evaluation time (makes output vary between runs).
        #[arg(long)]
        timing: bool,
    },
    /// Dimensions of the weight-system spaces W_n and of V_n.
    Dims {
        #[arg(long, default_value_t = 4)]
        max: usize,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite.
    Verify {
        suite: Suite,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Weights,
    Invariance,
    Derivatives,
    Symbols,
    Basepoint,
    CrossFormula,
    Mirror,
}

#[derive(Serialize)]
struct Input {
    kind: &'static str,
    value: String,
    crossings: usize,
}

#[derive(Serialize)]
struct Value {
    formula: String,
    value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    micros: Option<u128>,
}

#[derive(Serialize)]
struct InvariantReport {
    input: Input,
    values: Vec<Value>,
}

fn input_error(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(INPUT_ERROR)
}

fn read_input(gauss: Option<String>, braid: Option<Vec<String>>) -> Result<(Input, GaussDiagram), String> {
    match (gauss, braid) {
        (Some(code), None) => {
            let g = parse_gauss_code(&code).map_err(|e| format!("gauss code: {e}"))?;
            Ok((Input { kind: "gauss", value: code, crossings: g.order() }, g))
        }
        (None, Some(b)) => {
            let strands: usize = b[0].parse().map_err(|_| format!("braid: bad strand count {:?}", b[0]))?;
            let letters = parse_letters(&b[1]).map_err(|e| format!("braid: {e}"))?;
            let w = BraidWord::new(strands, letters).map_err(|e| format!("braid: {e}"))?;
            let g = w.closure().map_err(|e| format!("braid: {e}"))?;
            Ok((Input { kind: "braid", value: w.to_string(), crossings: g.order() }, g))
        }
        _ => Err("give exactly one of --gauss or --braid".into()),
    }
}

fn compute(
    gauss: Option<String>,
    braid: Option<Vec<String>>,
    formulas: Option<Vec<String>>,
    json: bool,
    timing: bool,
) -> ExitCode {
    let (input, g) = match read_input(gauss, braid) {
        Ok(x) => x,
        Err(e) => return input_error(e),
    };
    let formulas: Vec<Formula> = match formulas {
        None => Formula::all(),
        Some(ids) => match ids.iter().map(|s| s.parse::<Formula>()).collect() {
            Ok(f) => f,
            Err(e) => return input_error(e),
        },
    };
    let values = formulas
        .iter()
        .map(|f| {
            let start = Instant::now();
            let v = f.eval(&g);
            Value { formula: f.to_string(), value: v.to_string(), micros: timing.then(|| start.elapsed().as_micros()) }
        })
        .collect();
    let report = InvariantReport { input, values };
    if json {
        println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    } else {
        println!("{} `{}` ({} crossings)", report.input.kind, report.input.value, report.input.crossings);
        for v in &report.values {
            match v.micros {
                Some(us) => println!("{} = {}  ({us} us)", v.formula, v.value),
                None => println!("{} = {}", v.formula, v.value),
            }
        }
    }
    ExitCode::SUCCESS
}

/// Orders up to 4 have published reference values; beyond that the
/// numbers are only what the solver derives.
const CHECKED_UP_TO: usize = 4;

fn dims(max: usize, json: bool) -> ExitCode {
    if max > 6 {
        return input_error(format!("--max {max} is above the supported 6"));
    }
    let rows = suites::dims(max);
    if json {
        #[derive(Serialize)]
        struct Row {
            n: usize,
            w: usize,
            v: usize,
            derived: bool,
        }
        let rows: Vec<Row> = rows.iter().map(|&(n, w, v)| Row { n, w, v, derived: n > CHECKED_UP_TO }).collect();
        println!("{}", serde_json::to_string_pretty(&rows).expect("serializable"));
        return ExitCode::SUCCESS;
    }
    let line = |label: &str, f: &dyn Fn(&(usize, usize, usize)) -> usize| {
        let cells: Vec<String> = rows.iter().map(|r| format!("{:>3}", f(r))).collect();
        println!("{label:<7}{}", cells.join(""));
    };
    line("n", &|r| r.0);
    line("dim W", &|r| r.1);
    line("dim V", &|r| r.2);
    if max > CHECKED_UP_TO {
        println!("(n >= {}: derived, no reference table)", CHECKED_UP_TO + 1);
    }
    ExitCode::SUCCESS
}

fn verify(suite: Suite, seed: u64, trials: usize, json: bool) -> ExitCode {
    let report: SuiteReport = match suite {
        Suite::Weights => suites::weights(),
        Suite::Invariance => suites::invariance(seed, trials, 20),
        Suite::Derivatives => suites::derivatives(seed, trials),
        Suite::Symbols => suites::symbols(seed, trials.min(10)),
        Suite::Basepoint => suites::basepoint(),
        Suite::CrossFormula => suites::cross_formula().0,
        Suite::Mirror => suites::mirror(),
    };
    if json {
        #[derive(Serialize)]
        struct C<'a> {
            name: &'a str,
            passed: bool,
            detail: &'a str,
        }
        #[derive(Serialize)]
        struct R<'a> {
            suite: &'a str,
            passed: bool,
            checks: Vec<C<'a>>,
        }
        let r = R {
            suite: &report.suite,
            passed: report.passed(),
            checks: report.checks.iter().map(|c| C { name: &c.name, passed: c.passed, detail: &c.detail }).collect(),
        };
        println!("{}", serde_json::to_string_pretty(&r).expect("serializable"));
    } else {
        print!("{report}");
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { INPUT_ERROR } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Compute { gauss, braid, formulas, json, timing } => compute(gauss, braid, formulas, json, timing),
        Command::Dims { max, json } => dims(max, json),
        Command::Verify { suite, seed, trials, json } => verify(suite, seed, trials, json),
    }
}
