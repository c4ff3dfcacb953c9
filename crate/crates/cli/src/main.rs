//! `weil`: Weil-algebra arithmetic, lifting and frame checks from the shell.
//!
//! Exit codes: 0 ok/pass, 1 fail, 2 indeterminate, 64 usage or invalid
//! input, 65 evaluation error (e.g. a lift outside its domain).

mod input;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};
use weil_core::algebra::{tensor, Algebra, WeilElement};
use weil_core::expr::{taylor_coeffs, SmoothExpr};
use weil_core::geometry::{parallelism_check, weil_iso_check, NearPoint, Sampler, VectorField};

const EXIT_USAGE: u8 = 64;
const EXIT_EVAL: u8 = 65;

#[derive(Parser)]
#[command(name = "weil", version, about = "Weil-algebra arithmetic, near-point lifting and frame checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the basis, dimension and height of an algebra.
    Algebra {
        /// Preset (`reals`, `dual`, `trunc:s,k`, `tensor:<a>,<b>`), inline JSON, or @file.
        spec: String,
        /// Print the presentation as re-ingestable JSON.
        #[arg(long)]
        json: bool,
    },
    /// Multiply two elements, e.g. `mul dual "3+5T" "2-T"`.
    Mul {
        spec: String,
        a: String,
        b: String,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate `f^A` at a near point.
    Lift {
        spec: String,
        expr: String,
        /// Near point, e.g. `x1=3+1T,x2=0.5`.
        #[arg(long)]
        point: String,
        /// Print the full element JSON instead of the labelled coefficients.
        #[arg(long)]
        json: bool,
    },
    /// Taylor coefficients of a univariate expression.
    Taylor {
        expr: String,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        at: f64,
        #[arg(long, default_value_t = 4)]
        order: u32,
        #[arg(long)]
        json: bool,
    },
    /// Describe `A ⊗ B`.
    Tensor {
        a: String,
        b: String,
        #[arg(long)]
        json: bool,
    },
    /// Test whether prolonged fields form a frame at sampled near points.
    FrameCheck {
        #[arg(long)]
        algebra: String,
        /// One field per flag, components separated by commas: `--field "cos(x1),sin(x1)"`.
        #[arg(long = "field", required = true, allow_hyphen_values = true)]
        fields: Vec<String>,
        /// Sampling box, e.g. `x1:[-1,1],x2:[0,2]`; defaults to `[-1,1]` per coordinate.
        #[arg(long, allow_hyphen_values = true)]
        region: Option<String>,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Explicit near point tested before the random ones (repeatable).
        #[arg(long = "point", allow_hyphen_values = true)]
        points: Vec<String>,
        #[arg(long)]
        out: Option<String>,
    },
    /// Compare `A^B` with `A ⊗ B`.
    WeilCheck {
        a: String,
        b: String,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<String>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Failure { code: EXIT_USAGE, message: message.to_string() }
    }

    fn eval(message: impl ToString) -> Self {
        Failure { code: EXIT_EVAL, message: message.to_string() }
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            let rendered = e.to_string();
            let line = rendered.lines().find(|l| !l.trim().is_empty()).unwrap_or("invalid arguments");
            eprintln!("error: {}", line.trim_start_matches("error:").trim());
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message.replace('\n', " "));
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Algebra { spec, json } => {
            let alg = input::algebra(&spec)?;
            emit(describe(&alg, json), None)?;
            Ok(0)
        }
        Command::Tensor { a, b, json } => {
            let (a, b) = (input::algebra(&a)?, input::algebra(&b)?);
            let ab = tensor(&a, &b);
            emit(describe(&ab, json), None)?;
            Ok(0)
        }
        Command::Mul { spec, a, b, json } => {
            let alg = input::algebra(&spec)?;
            let x = WeilElement::parse(&alg, &a).map_err(Failure::usage)?;
            let y = WeilElement::parse(&alg, &b).map_err(Failure::usage)?;
            let p = x.mul(&y).map_err(Failure::usage)?;
            if json {
                emit(Output::Json(serde_json::to_value(p.to_json()).expect("serializable")), None)?;
            } else {
                emit(Output::Text(p.to_string()), None)?;
            }
            Ok(0)
        }
        Command::Lift { spec, expr, point, json } => {
            let alg = input::algebra(&spec)?;
            let n = point.split(',').filter(|p| !p.trim().is_empty()).count();
            let xi = NearPoint::parse(&alg, n, &point).map_err(Failure::usage)?;
            let f = SmoothExpr::parse(&expr, n).map_err(Failure::usage)?;
            let v = f.eval_weil(&alg, xi.coords()).map_err(Failure::eval)?;
            let out = if json { serde_json::to_value(v.to_json()).expect("serializable") } else { labelled(&v) };
            emit(Output::Json(out), None)?;
            Ok(0)
        }
        Command::Taylor { expr, at, order, json } => {
            let f = SmoothExpr::parse(&expr, 1).map_err(Failure::usage)?;
            let coeffs = taylor_coeffs(&f, at, order).map_err(Failure::eval)?;
            if json {
                let v = json!({ "expr": f.to_string(), "at": at, "order": order, "coeffs": coeffs });
                emit(Output::Json(v), None)?;
            } else {
                let lines: Vec<String> = coeffs.iter().enumerate().map(|(j, c)| format!("{j}\t{c}")).collect();
                emit(Output::Text(lines.join("\n")), None)?;
            }
            Ok(0)
        }
        Command::FrameCheck { algebra, fields, region, samples, seed, points, out } => {
            let alg = input::algebra(&algebra)?;
            let fields = fields
                .iter()
                .map(|f| {
                    let comps: Vec<&str> = f.split(',').collect();
                    VectorField::parse(&comps).map_err(|e| Failure::usage(format!("field {f:?}: {e}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let n = fields.len();
            if let Some(bad) = fields.iter().find(|f| f.dim() != n) {
                return Err(Failure::usage(format!(
                    "{n} fields given but a field has {} components; a frame on R^n needs n fields of n components",
                    bad.dim()
                )));
            }
            let region = match region {
                Some(r) => input::region(&r, n)?,
                None => vec![(-1.0, 1.0); n],
            };
            let points = points
                .iter()
                .map(|p| NearPoint::parse(&alg, n, p).map_err(Failure::usage))
                .collect::<Result<Vec<_>, _>>()?;
            let sampler = Sampler { region, count: samples, seed, points };
            let report = parallelism_check(&fields, &alg, &sampler).map_err(Failure::usage)?;
            emit(Output::Json(serde_json::to_value(&report).expect("serializable")), out.as_deref())?;
            Ok(report.verdict.exit_code() as u8)
        }
        Command::WeilCheck { a, b, samples, seed, out } => {
            let report = weil_iso_check(&input::algebra(&a)?, &input::algebra(&b)?, samples, seed);
            emit(Output::Json(serde_json::to_value(&report).expect("serializable")), out.as_deref())?;
            Ok(report.verdict.exit_code() as u8)
        }
    }
}

enum Output {
    Text(String),
    Json(Value),
}

fn emit(output: Output, path: Option<&str>) -> Result<(), Failure> {
    let mut text = match output {
        Output::Text(t) => t,
        Output::Json(v) => serde_json::to_string_pretty(&v).expect("serializable"),
    };
    text.push('\n');
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::usage(format!("cannot write {p}: {e}"))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Coefficients keyed by basis label, in basis order.
fn labelled(v: &WeilElement) -> Value {
    let mut map = Map::new();
    for (label, c) in v.algebra().labels().into_iter().zip(v.coeffs()) {
        map.insert(label, json!(c));
    }
    Value::Object(map)
}

fn describe(alg: &Algebra, as_json: bool) -> Output {
    if as_json {
        let mut v = serde_json::to_value(alg.to_json()).expect("serializable");
        let obj = v.as_object_mut().expect("object");
        obj.insert("dim".into(), json!(alg.dim()));
        obj.insert("height".into(), json!(alg.height()));
        obj.insert("basis".into(), json!(alg.labels()));
        Output::Json(v)
    } else {
        Output::Text(format!(
            "dim: {}\nheight: {}\nbasis: [{}]",
            alg.dim(),
            alg.height(),
            alg.labels().join(", ")
        ))
    }
}
