//! Batch command-line front end for the braid-invariants library.
//!
//! Every invocation prints a single JSON envelope (or raw CSV with `--csv`)
//! and is deterministic for fixed inputs and seed: identical runs produce
//! byte-identical output. Exit codes: 0 success, 1 domain error, 2 usage
//! error.

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use braid_invariants::flow::{
    asymptotic_series, orbit_closure_knot, TorusFlowConfig, DEFAULT_SIGMA_SIZE_LIMIT,
};
use braid_invariants::qm::{
    defect_sample, example_checks, homogenize, parse_rational, phi_even, phi_odd, prop1_verify,
    rational_string, stable_length_bounds, BraidInvariant, InvariantKind,
};
use braid_invariants::{
    braids_equal, parse_braid, rasmussen_s, seifert_matrix, BraidWord, Error, LinkDiagram,
    SConfig, SOutcome,
};

#[derive(Parser)]
#[command(name = "braidinv", version, about = "Exact braid and knot invariants")]
struct Cli {
    /// Seed for the sampling subcommands; echoed in every envelope.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Braid-word algebra: canonical forms, equality, predicates.
    #[command(subcommand)]
    Braid(BraidCmd),
    /// Invariants of the braid closure.
    #[command(subcommand)]
    Invariant(InvariantCmd),
    /// Quasi-morphism measurements.
    #[command(subcommand)]
    Qm(QmCmd),
    /// Linear torus flow sampling.
    #[command(subcommand)]
    Flow(FlowCmd),
}

#[derive(clap::Args)]
struct BraidArg {
    /// Braid word: whitespace-separated nonzero integers.
    #[arg(long)]
    braid: String,
    /// Strand count; inferred as 1 + max|letter| when omitted.
    #[arg(long)]
    strands: Option<usize>,
}

impl BraidArg {
    fn parse(&self) -> Result<BraidWord, Error> {
        parse_braid(&self.braid, self.strands)
    }

    fn echo(&self) -> Value {
        json!({ "braid": self.braid, "strands": self.strands })
    }
}

#[derive(Subcommand)]
enum BraidCmd {
    /// Garside left-canonical form.
    Normalize(BraidArg),
    /// Word-problem equality test.
    Eq {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        strands: Option<usize>,
    },
    /// Linking number (exponent sum).
    Lk(BraidArg),
    /// Alternating-word predicate.
    Alt(BraidArg),
    /// Component count of the closure.
    Components(BraidArg),
}

#[derive(Subcommand)]
enum InvariantCmd {
    /// Rasmussen invariant of the closure.
    S {
        #[command(flatten)]
        braid: BraidArg,
        /// Crossing limit for the exact engine.
        #[arg(long, default_value_t = 16)]
        limit: usize,
    },
    /// Exact signature of the closure.
    Sigma(BraidArg),
    /// Writhe/Seifert-circle window for the Rasmussen invariant.
    Bounds(BraidArg),
    /// Seifert matrix in the column-loop basis.
    SeifertMatrix(BraidArg),
}

#[derive(Subcommand)]
enum QmCmd {
    /// Sampled defect report for an invariant.
    Defect {
        /// One of: lk, sigma, s, slk.
        #[arg(long)]
        invariant: String,
        #[arg(long)]
        strands: usize,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 6)]
        max_len: usize,
    },
    /// Homogenization sequence φ(g^k)/k.
    Homogenize {
        #[arg(long)]
        invariant: String,
        #[command(flatten)]
        braid: BraidArg,
        #[arg(long, default_value_t = 8)]
        kmax: u32,
        /// Emit the sequence as CSV instead of JSON.
        #[arg(long)]
        csv: bool,
    },
    /// Signature–Rasmussen combination that vanishes on the center.
    Phi {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        sigma_tilde: String,
        #[arg(long)]
        s_tilde: String,
    },
    /// Stable commutator/torsion length lower bounds.
    Bounds {
        #[arg(long)]
        phi: String,
        #[arg(long)]
        defect: String,
    },
    /// Torsion-generator and commutator structure checks.
    Prop1 {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
    /// Explicit small-braid identity checks.
    Examples,
}

#[derive(clap::Args)]
struct FlowArgs {
    /// Slope of the constant field (1, ω).
    #[arg(long)]
    omega: f64,
    /// Start point "x,y" in the unit square.
    #[arg(long, default_value = "0,0")]
    x0: String,
    /// Return-proximity threshold.
    #[arg(long, default_value_t = 0.05)]
    epsilon: f64,
}

impl FlowArgs {
    fn config(&self) -> Result<TorusFlowConfig, Error> {
        let (a, b) = self
            .x0
            .split_once(',')
            .ok_or_else(|| Error::BadRational(self.x0.clone()))?;
        let x: f64 = a.trim().parse().map_err(|_| Error::BadRational(self.x0.clone()))?;
        let y: f64 = b.trim().parse().map_err(|_| Error::BadRational(self.x0.clone()))?;
        TorusFlowConfig::new(self.omega, (x, y), self.epsilon)
    }

    fn echo(&self) -> Value {
        json!({ "omega": format!("{:.10}", self.omega), "x0": self.x0, "epsilon": format!("{:.10}", self.epsilon) })
    }
}

#[derive(Subcommand)]
enum FlowCmd {
    /// Asymptotic invariant series over all return times.
    Series {
        #[command(flatten)]
        flow: FlowArgs,
        #[arg(long, default_value_t = 40.0)]
        tmax: f64,
        /// Emit rows as CSV instead of JSON.
        #[arg(long)]
        csv: bool,
    },
    /// Knot type of the orbit closed at one return time.
    Knot {
        #[command(flatten)]
        flow: FlowArgs,
        #[arg(long)]
        t: f64,
    },
}

enum Output {
    Json { results: Value, warnings: Vec<String> },
    Csv(String),
}

fn invariant_kind(text: &str) -> Result<InvariantKind, Error> {
    InvariantKind::parse(text).ok_or_else(|| Error::BadRational(text.to_string()))
}

fn s_result(outcome: SOutcome) -> Value {
    match outcome {
        SOutcome::Exact { value, method } => {
            json!({ "value": value, "method": method.tag() })
        }
        SOutcome::Bounds { lo, hi } => {
            json!({ "lo": lo, "hi": hi, "method": "bounds-only" })
        }
    }
}

fn run(cli: &Cli) -> Result<(String, Value, Output), (String, Value, Error)> {
    let (name, inputs, result) = dispatch(cli);
    match result {
        Ok(output) => Ok((name, inputs, output)),
        Err(e) => Err((name, inputs, e)),
    }
}

fn dispatch(cli: &Cli) -> (String, Value, Result<Output, Error>) {
    match &cli.command {
        Command::Braid(cmd) => match cmd {
            BraidCmd::Normalize(arg) => (
                "braid normalize".into(),
                arg.echo(),
                arg.parse().map(|w| Output::Json {
                    results: serde_json::to_value(w.normal_form()).unwrap(),
                    warnings: vec![],
                }),
            ),
            BraidCmd::Eq { a, b, strands } => (
                "braid eq".into(),
                json!({ "a": a, "b": b, "strands": strands }),
                (|| {
                    let wa = parse_braid(a, *strands)?;
                    let wb = parse_braid(b, Some(wa.strands()))?;
                    Ok(Output::Json {
                        results: json!({ "equal": braids_equal(&wa, &wb)? }),
                        warnings: vec![],
                    })
                })(),
            ),
            BraidCmd::Lk(arg) => (
                "braid lk".into(),
                arg.echo(),
                arg.parse().map(|w| Output::Json {
                    results: json!({ "lk": w.linking_number() }),
                    warnings: vec![],
                }),
            ),
            BraidCmd::Alt(arg) => (
                "braid alt".into(),
                arg.echo(),
                arg.parse().map(|w| Output::Json {
                    results: json!({ "alternating": w.is_alternating() }),
                    warnings: vec![],
                }),
            ),
            BraidCmd::Components(arg) => (
                "braid components".into(),
                arg.echo(),
                arg.parse().map(|w| Output::Json {
                    results: json!({ "components": w.closure_component_count() }),
                    warnings: vec![],
                }),
            ),
        },
        Command::Invariant(cmd) => match cmd {
            InvariantCmd::S { braid, limit } => (
                "invariant s".into(),
                braid.echo(),
                braid.parse().map(|w| {
                    let outcome = rasmussen_s(&w, &SConfig { crossing_limit: *limit });
                    let warnings = match &outcome {
                        SOutcome::Bounds { .. } => {
                            vec!["crossing limit exceeded; only bounds are reported".into()]
                        }
                        _ => vec![],
                    };
                    Output::Json { results: s_result(outcome), warnings }
                }),
            ),
            InvariantCmd::Sigma(arg) => (
                "invariant sigma".into(),
                arg.echo(),
                arg.parse().map(|w| Output::Json {
                    results: json!({ "value": braid_invariants::link_signature(&w) }),
                    warnings: vec![],
                }),
            ),
            InvariantCmd::Bounds(arg) => (
                "invariant bounds".into(),
                arg.echo(),
                arg.parse().map(|w| {
                    let d = LinkDiagram::from_braid(&w);
                    let (lo, hi) = d.rasmussen_bounds();
                    Output::Json {
                        results: json!({
                            "lo": lo,
                            "hi": hi,
                            "writhe": d.writhe(),
                            "seifert_circles": d.seifert_circle_count(),
                        }),
                        warnings: vec![],
                    }
                }),
            ),
            InvariantCmd::SeifertMatrix(arg) => (
                "invariant seifert-matrix".into(),
                arg.echo(),
                arg.parse().map(|w| Output::Json {
                    results: serde_json::to_value(seifert_matrix(&w)).unwrap(),
                    warnings: vec![],
                }),
            ),
        },
        Command::Qm(cmd) => match cmd {
            QmCmd::Defect { invariant, strands, samples, max_len } => (
                "qm defect".into(),
                json!({
                    "invariant": invariant,
                    "strands": strands,
                    "samples": samples,
                    "max_len": max_len,
                }),
                (|| {
                    let kind = invariant_kind(invariant)?;
                    let report = defect_sample(
                        &BraidInvariant::new(kind),
                        *strands,
                        *samples,
                        *max_len,
                        cli.seed,
                    )?;
                    let warnings = if report.skipped > 0 {
                        vec![format!("{} samples skipped (crossing limit)", report.skipped)]
                    } else {
                        vec![]
                    };
                    Ok(Output::Json {
                        results: serde_json::to_value(report).unwrap(),
                        warnings,
                    })
                })(),
            ),
            QmCmd::Homogenize { invariant, braid, kmax, csv } => (
                "qm homogenize".into(),
                json!({ "invariant": invariant, "braid": braid.braid, "strands": braid.strands, "kmax": kmax }),
                (|| {
                    let kind = invariant_kind(invariant)?;
                    let w = braid.parse()?;
                    let est = homogenize(&BraidInvariant::new(kind), &w, *kmax);
                    if *csv {
                        return Ok(Output::Csv(est.to_csv()));
                    }
                    let warnings = if est.failed.is_empty() {
                        vec![]
                    } else {
                        vec![format!(
                            "powers {:?} exceeded the crossing limit; sequence is partial",
                            est.failed
                        )]
                    };
                    Ok(Output::Json {
                        results: serde_json::to_value(est).unwrap(),
                        warnings,
                    })
                })(),
            ),
            QmCmd::Phi { n, sigma_tilde, s_tilde } => (
                "qm phi".into(),
                json!({ "n": n, "sigma_tilde": sigma_tilde, "s_tilde": s_tilde }),
                (|| {
                    let st = parse_rational(sigma_tilde)?;
                    let s = parse_rational(s_tilde)?;
                    let (form, value) = if n % 2 == 1 {
                        ("odd", phi_odd(*n, &st, &s)?)
                    } else {
                        ("even", phi_even(*n, &st, &s)?)
                    };
                    Ok(Output::Json {
                        results: json!({ "form": form, "value": rational_string(&value) }),
                        warnings: vec![],
                    })
                })(),
            ),
            QmCmd::Bounds { phi, defect } => (
                "qm bounds".into(),
                json!({ "phi": phi, "defect": defect }),
                (|| {
                    let p = parse_rational(phi)?;
                    let d = parse_rational(defect)?;
                    let bounds = stable_length_bounds(&p, &d)?;
                    Ok(Output::Json {
                        results: serde_json::to_value(bounds).unwrap(),
                        warnings: vec![],
                    })
                })(),
            ),
            QmCmd::Prop1 { n, samples } => (
                "qm prop1".into(),
                json!({ "n": n, "samples": samples }),
                prop1_verify(*n, *samples, cli.seed).map(|report| Output::Json {
                    results: serde_json::to_value(report).unwrap(),
                    warnings: vec![],
                }),
            ),
            QmCmd::Examples => (
                "qm examples".into(),
                json!({}),
                example_checks().map(|report| {
                    let warnings = report.notes.clone();
                    Output::Json {
                        results: serde_json::to_value(report).unwrap(),
                        warnings,
                    }
                }),
            ),
        },
        Command::Flow(cmd) => match cmd {
            FlowCmd::Series { flow, tmax, csv } => (
                "flow series".into(),
                {
                    let mut inputs = flow.echo();
                    inputs["tmax"] = json!(format!("{tmax:.10}"));
                    inputs
                },
                (|| {
                    let cfg = flow.config()?;
                    let series = asymptotic_series(&cfg, *tmax, DEFAULT_SIGMA_SIZE_LIMIT);
                    if *csv {
                        return Ok(Output::Csv(series.to_csv()));
                    }
                    let rows: Vec<Value> = series
                        .rows
                        .iter()
                        .map(|r| {
                            json!({
                                "T": format!("{:.10}", r.t),
                                "p": r.p,
                                "q": r.q,
                                "w": r.writhe,
                                "o": r.circles,
                                "s": r.s,
                                "sigma": r.sigma,
                                "w_T2": format!("{:.10}", r.w_per_t2()),
                                "o_T2": format!("{:.10}", r.o_per_t2()),
                                "sigma_T2": r.sigma_per_t2().map(|x| format!("{x:.10}")),
                                "s_T2": format!("{:.10}", r.s_per_t2()),
                                "s_sigma": r.s_over_sigma().map(|x| format!("{x:.10}")),
                            })
                        })
                        .collect();
                    let warnings = series
                        .skipped
                        .iter()
                        .map(|(t, p, q)| {
                            format!("T={t}: windings ({p},{q}) not coprime; row skipped")
                        })
                        .collect();
                    Ok(Output::Json { results: json!({ "rows": rows }), warnings })
                })(),
            ),
            FlowCmd::Knot { flow, t } => (
                "flow knot".into(),
                {
                    let mut inputs = flow.echo();
                    inputs["t"] = json!(format!("{t:.10}"));
                    inputs
                },
                (|| {
                    let cfg = flow.config()?;
                    let knot = orbit_closure_knot(&cfg, *t)?;
                    Ok(Output::Json {
                        results: json!({
                            "T": format!("{:.10}", knot.t),
                            "p": knot.p,
                            "q": knot.q,
                            "chord": format!("{:.10}", knot.chord_displacement),
                            "braid": knot.braid_rep.to_string(),
                            "strands": knot.braid_rep.strands(),
                        }),
                        warnings: vec![],
                    })
                })(),
            ),
        },
    }
}

fn envelope(command: &str, seed: u64, inputs: Value, results: Value, warnings: &[String]) -> String {
    let body = json!({
        "command": command,
        "version": env!("CARGO_PKG_VERSION"),
        "inputs": inputs,
        "seed": seed,
        "results": results,
        "warnings": warnings,
    });
    format!("{body}")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((command, inputs, Output::Json { results, warnings })) => {
            println!("{}", envelope(&command, cli.seed, inputs, results, &warnings));
            ExitCode::SUCCESS
        }
        Ok((_, _, Output::Csv(text))) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err((command, inputs, error)) => {
            let results = json!({ "error": error.to_string() });
            println!("{}", envelope(&command, cli.seed, inputs, results, &[]));
            ExitCode::from(1)
        }
    }
}
