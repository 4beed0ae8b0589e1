//! Command-line front end: construct, verify, profile and simulate codes.
//!
//! Exit codes: 0 success, 2 bad parameters or malformed input, 3 a check
//! failed, 4 the requested exact computation is too large. Machine-readable
//! output goes to stdout; diagnostics go to stderr.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use skewmdp::construction::{
    construct_code, verify_all, verify_construction, verify_dual_mdp, verify_mdp, CodeFile, ConstructOptions,
    ConvCode, SCHEMA_VERSION,
};
use skewmdp::conv::{distance_profile, free_distance_upper};
use skewmdp::erasure::{census, outcomes_csv, simulate, Window};
use skewmdp::{Error, ExtensionField};

#[derive(Parser, Debug)]
#[command(name = "skewmdp", version, about = "Skew-polynomial MDP convolutional codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
enum Command {
    /// Build a code and write it, with its verification report, as JSON.
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Base field prime; defaults to the smallest prime >= max(3, n).
        #[arg(long)]
        q: Option<u64>,
        /// Shuffle the evaluation points with this seed.
        #[arg(long)]
        lambda_seed: Option<u64>,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-verify a code file.
    Verify {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Mdp)]
        mode: Mode,
    },
    /// Column distance profile as CSV, followed by a free distance bound.
    Profile {
        file: PathBuf,
        #[arg(long)]
        jmax: usize,
        /// Message degree for the free distance bound; when omitted, 2 is tried
        /// and skipped if too large to enumerate.
        #[arg(long)]
        max_deg: Option<usize>,
    },
    /// Windowed erasure recovery over i.i.d. column erasures.
    Simulate {
        file: PathBuf,
        #[arg(long)]
        j: usize,
        #[arg(long, default_value_t = 0.0)]
        p: f64,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        /// Enumerate every erasure pattern of the window instead of sampling.
        #[arg(long)]
        exhaustive: bool,
        /// Per-pattern CSV for exhaustive mode.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Describe F_{q^t}.
    FieldInfo {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        t: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Mode {
    Mdp,
    Dual,
    Construction,
}

enum Failure {
    Error(Error),
    /// A check ran and failed; the report was already printed.
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Infeasible { .. } => 4,
        Error::Verification(_) | Error::Precondition(_) => 3,
        _ => 2,
    }
}

fn print_json<T: Serialize>(value: &T) -> Result<(), Failure> {
    println!("{}", serde_json::to_string_pretty(value).map_err(Error::from)?);
    Ok(())
}

fn load(path: &PathBuf) -> Result<ConvCode, Error> {
    let text = fs::read_to_string(path)?;
    let file: CodeFile = serde_json::from_str(&text).map_err(|e| Error::Schema(e.to_string()))?;
    file.to_code()
}

fn with_header<T: Serialize>(mode: &str, report: &T) -> Result<serde_json::Value, Error> {
    let mut value = json!({ "schema": SCHEMA_VERSION, "mode": mode });
    if let serde_json::Value::Object(fields) = serde_json::to_value(report)? {
        value.as_object_mut().expect("object").extend(fields);
    }
    Ok(value)
}

fn run(cmd: &Command) -> Result<(), Failure> {
    match cmd {
        Command::Construct {
            n,
            k,
            q,
            lambda_seed,
            out,
        } => {
            let opts = ConstructOptions {
                q: *q,
                lambda_seed: *lambda_seed,
            };
            let code = construct_code(*n, *k, opts)?;
            eprintln!("resolved: n = {n}, k = {k}, q = {}, t = {}", code.q(), code.t());
            if let Some(w) = code.hypothesis_warning() {
                eprintln!("warning: {w}");
            }
            let summary = verify_all(&code);
            let passed = summary.passed;
            let text = serde_json::to_string_pretty(&CodeFile::from_code(&code, Some(summary))).map_err(Error::from)?;
            match out {
                Some(path) => fs::write(path, text + "\n").map_err(Error::from)?,
                None => println!("{text}"),
            }
            if !passed {
                eprintln!("error: embedded verification failed");
                return Err(Failure::Check);
            }
        }
        Command::Verify { file, mode } => {
            let code = load(file)?;
            let (value, passed) = match mode {
                Mode::Mdp => {
                    let r = verify_mdp(&code)?;
                    (with_header("mdp", &r)?, r.is_mdp)
                }
                Mode::Dual => {
                    let r = verify_dual_mdp(&code)?;
                    (with_header("dual", &r)?, r.dual_mdp)
                }
                Mode::Construction => {
                    let r = verify_construction(&code);
                    (with_header("construction", &r)?, r.passed)
                }
            };
            print_json(&value)?;
            if !passed {
                eprintln!("error: verification failed; see witness");
                return Err(Failure::Check);
            }
        }
        Command::Profile { file, jmax, max_deg } => {
            let code = load(file)?;
            let g = code.generator();
            let profile = distance_profile(&code.field, &g, *jmax)?;
            let free = match free_distance_upper(&code.field, &g, max_deg.unwrap_or(2)) {
                Err(Error::Infeasible { size, .. }) if max_deg.is_none() => {
                    eprintln!("note: free distance enumeration skipped ({size} messages)");
                    None
                }
                other => Some(other?),
            };
            print!("{}", profile.to_csv());
            if let Some(free) = free {
                println!(
                    "# free_distance_upper={},max_deg={},converged={}",
                    free.weight, free.max_deg, free.converged
                );
            }
            if let (Some(delta), Some(s)) = (profile.delta, profile.singleton) {
                eprintln!(
                    "delta = {delta}, L = {}, M = {}, free distance bound = {}",
                    s.l, s.m, s.free_bound
                );
            }
        }
        Command::Simulate {
            file,
            j,
            p,
            trials,
            seed,
            exhaustive,
            csv,
        } => {
            let code = load(file)?;
            let window = Window::new(&code.field, &code.generator(), *j);
            let report = if *exhaustive {
                let (report, outcomes) = census(&window, *seed)?;
                if let Some(path) = csv {
                    fs::write(path, outcomes_csv(&outcomes)).map_err(Error::from)?;
                }
                report
            } else {
                if csv.is_some() {
                    return Err(Error::Parameters("--csv requires --exhaustive".into()).into());
                }
                simulate(&window, *p, *trials, *seed)?
            };
            eprintln!("elapsed: {:.3} s", report.elapsed.as_secs_f64());
            print_json(&report)?;
        }
        Command::FieldInfo { q, t } => {
            let f = ExtensionField::new(*q, *t)?;
            let nonzero = f.order() - 1;
            print_json(&json!({
                "schema": SCHEMA_VERSION,
                "q": f.q(),
                "t": f.t(),
                "order": f.order(),
                "modulus": f.modulus(),
                "gamma": f.to_coords(f.gamma()),
                "gamma_order": f.multiplicative_order(f.gamma())?,
                "conjugacy_classes": f.q(),
                "nonzero_class_size": nonzero / (f.q() - 1),
            }))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Ok(config) = serde_json::to_string(&cli.command) {
        eprintln!("config: {config}");
    }
    match run(&cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(3),
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
