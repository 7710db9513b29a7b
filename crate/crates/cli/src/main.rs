//! `instanton`: certificates and tables for tensors ω ∈ S²H*⊗Λ²V*.
//!
//! Exit codes: 0 ok, 1 invariant failure, 2 input error.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use instanton_core::families::{named_example, sample_instanton, thooft_omega, NamedExampleId};
use instanton_core::geometry::{line_report, line_reports_csv, pencil_jump_poly, pencil_roots, point_plane_pencil, LineSpec};
use instanton_core::monad::coh_table;
use instanton_core::rng;
use instanton_core::suite::run_suite;
use instanton_core::tensor::TensorFile;
use instanton_core::verify::{smoothness_certificate, SCHEMA_VERSION};
use instanton_core::{Error, Field, FieldSpec, Fp, Fq, OmegaTensor, Rationals};

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Parser)]
#[command(name = "instanton", version, about = "Certificates and tables for symplectic instanton monads on P3")]
struct Cli {
    /// rational | fp:<p> | fq:<p>^<k>
    #[arg(long, global = true, default_value = "fp:32003")]
    field: String,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Output file; stdout when absent.
    #[arg(long, global = true, visible_alias = "emit")]
    out: Option<PathBuf>,
    /// JSON instead of CSV or text, where a command offers both.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Clone, Args, Serialize)]
#[group(required = true, multiple = false)]
struct Input {
    /// Tensor file, raw or as written by `sample`/`export`.
    #[arg(long)]
    tensor: Option<PathBuf>,
    /// Draw from M(n,r) with the induction-chain sampler.
    #[arg(long, value_name = "N,R")]
    sample: Option<String>,
    /// Named example, e.g. prop51, nc, thooft(4), omega_bar_t(1,0).
    #[arg(long)]
    example: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Write a smoothness certificate.
    Certify {
        #[command(flatten)]
        input: Input,
        /// Induction witness ξ ∈ H*, comma separated.
        #[arg(long)]
        xi: Option<String>,
    },
    /// CSV tables.
    Table {
        #[command(subcommand)]
        kind: TableKind,
    },
    /// Sample a tensor of M(n,r).
    Sample {
        #[arg(long, value_name = "N,R")]
        sample: String,
    },
    /// Write a named example in the tensor file format.
    Export {
        #[arg(long, visible_alias = "id")]
        example: String,
    },
    /// Run the acceptance battery.
    Suite {
        /// Criterion number, name or tag.
        #[arg(long)]
        only: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
enum TableKind {
    /// h⁰, h¹ of E(d) for d in [−2, dmax].
    Coh {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 3)]
        dmax: i64,
    },
    /// Splitting data on random lines, or the jump polynomial of a pencil.
    Lines {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 50)]
        lines: usize,
        /// `random`, or three points `p;q0;q1` with comma-separated coordinates.
        #[arg(long)]
        pencil: Option<String>,
    },
}

/// Everything the run depends on, echoed into each output.
#[derive(Debug, Clone, Serialize)]
struct RunConfig {
    command: String,
    field: String,
    seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    input: Option<Input>,
    options: BTreeMap<String, String>,
}

enum Failure {
    Invariant(String),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Invariant(_) | Error::Budget(_) => Failure::Invariant(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type CliResult<T> = Result<T, Failure>;

/// What a command produced: the bytes to write and whether every check held.
struct Output {
    body: String,
    ok: bool,
}

fn envelope(config: &RunConfig, key: &str, payload: Value) -> Value {
    json!({
        "tool": "instanton",
        "version": VERSION,
        "schema_version": SCHEMA_VERSION,
        "config": config,
        key: payload,
    })
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value");
    s.push('\n');
    s
}

/// Comment lines ahead of a CSV header.
fn csv_preamble(config: &RunConfig) -> String {
    format!(
        "# instanton {VERSION} schema {SCHEMA_VERSION}\n# config {}\n",
        serde_json::to_string(config).expect("config serializes")
    )
}

fn parse_pair(s: &str) -> CliResult<(usize, usize)> {
    let bad = || Failure::Input(format!("expected N,R, got {s:?}"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn parse_vec<F: Field>(f: &F, s: &str) -> CliResult<Vec<F::Elem>> {
    s.split(',').map(|c| f.parse(c).map_err(Failure::from)).collect()
}

fn read_tensor<F: Field>(f: &F, path: &PathBuf) -> CliResult<OmegaTensor<F>> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text).map_err(|e| Failure::Input(format!("parse error: {e}")))?;
    let raw = value.get("tensor").cloned().unwrap_or(value);
    let file: TensorFile = serde_json::from_value(raw).map_err(|e| Failure::Input(format!("parse error: {e}")))?;
    Ok(OmegaTensor::from_file(f, &file)?)
}

fn load<F: Field>(f: &F, input: &Input, seed: u64) -> CliResult<OmegaTensor<F>> {
    if let Some(path) = &input.tensor {
        return read_tensor(f, path);
    }
    if let Some(s) = &input.sample {
        let (n, r) = parse_pair(s)?;
        return Ok(sample_instanton(f, n, r, seed)?);
    }
    let id: NamedExampleId = input.example.as_deref().unwrap_or_default().parse()?;
    match id {
        // a net names its tensors only up to choice; take one with that image
        NamedExampleId::ThooftNet(n) => Ok(thooft_omega(f, n, seed)?),
        _ => Ok(named_example(f, &id, seed)?.tensor()?),
    }
}

fn certify<F: Field>(f: &F, cfg: &RunConfig, input: &Input, xi: Option<&str>) -> CliResult<Output> {
    let w = load(f, input, cfg.seed)?;
    let xi = xi.map(|s| parse_vec(f, s)).transpose()?;
    if xi.as_ref().is_some_and(|x| x.len() != w.n()) {
        return Err(Failure::Input(format!("ξ needs {} coordinates", w.n())));
    }
    let seed = input.tensor.is_none().then_some(cfg.seed);
    let cert = smoothness_certificate(&w, seed, xi.as_deref())?;
    let ok = cert.is_consistent();
    if !ok {
        eprintln!("{}", json!({"error": "invariant", "failures": cert.failures}));
    }
    let payload = serde_json::to_value(&cert).expect("certificate serializes");
    Ok(Output { body: pretty(&envelope(cfg, "certificate", payload)), ok })
}

fn table_coh<F: Field>(f: &F, cfg: &RunConfig, json: bool, input: &Input, dmax: i64) -> CliResult<Output> {
    let w = load(f, input, cfg.seed)?;
    let t = coh_table(&w, dmax)?;
    let ok = t.euler_failures().is_empty();
    let body = if json {
        pretty(&envelope(cfg, "coh_table", serde_json::to_value(&t).expect("table serializes")))
    } else {
        csv_preamble(cfg) + &t.to_csv()
    };
    Ok(Output { body, ok })
}

fn random_point<F: Field>(f: &F, s: &mut rng::Stream) -> Vec<F::Elem> {
    loop {
        let v: Vec<F::Elem> = (0..4).map(|_| f.random(s)).collect();
        if v.iter().any(|c| !f.is_zero(c)) {
            return v;
        }
    }
}

fn table_lines<F: Field>(f: &F, cfg: &RunConfig, json: bool, input: &Input, count: usize, pencil: Option<&str>) -> CliResult<Output> {
    let w = load(f, input, cfg.seed)?;
    let mut s = rng::stream(cfg.seed, rng::task_id("cli_lines", 0));
    if let Some(spec) = pencil {
        let pts = if spec == "random" {
            vec![random_point(f, &mut s), random_point(f, &mut s), random_point(f, &mut s)]
        } else {
            spec.split(';').map(|p| parse_vec(f, p)).collect::<CliResult<Vec<_>>>()?
        };
        if pts.len() != 3 || pts.iter().any(|p| p.len() != 4) {
            return Err(Failure::Input("a pencil needs three points of P3".into()));
        }
        let (l0, l1) = point_plane_pencil(f, &pts[0], &pts[1], &pts[2])?;
        let poly = pencil_jump_poly(&w, &l0, &l1)?;
        let report = pencil_roots(f, &poly)?;
        let coeffs: Vec<String> = poly.coeffs.iter().map(|c| f.format(c)).collect();
        let roots: Vec<Value> = report.roots.iter().map(|(r, m)| json!({"t": f.format(r), "multiplicity": m})).collect();
        let payload = json!({
            "points": pts.iter().map(|p| p.iter().map(|c| f.format(c)).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "coefficients": coeffs,
            "degree": poly.degree(),
            "roots": roots,
            "residual_degree": report.residual.degree(),
        });
        let body = if json {
            pretty(&envelope(cfg, "pencil", payload))
        } else {
            let mut b = csv_preamble(cfg);
            b.push_str(&format!("# coefficients {}\n# degree {}\n", coeffs.join(" "), poly.degree().map_or(-1, |d| d as i64)));
            b.push_str(&format!("# residual degree {}\nt,multiplicity\n", report.residual.degree().unwrap_or(0)));
            for (r, m) in &report.roots {
                b.push_str(&format!("{},{m}\n", f.format(r)));
            }
            b
        };
        return Ok(Output { body, ok: true });
    }
    let mut rows = Vec::with_capacity(count);
    while rows.len() < count {
        let Ok(l) = LineSpec::through(f, &random_point(f, &mut s), &random_point(f, &mut s)) else { continue };
        rows.push(line_report(&w, &l)?);
    }
    // splitting order ≥ 1 exactly on lines where the determinant vanishes
    let ok = rows.iter().all(|r| (r.order >= 1) == (r.det == "0"));
    let body = if json {
        pretty(&envelope(cfg, "lines", serde_json::to_value(&rows).expect("rows serialize")))
    } else {
        csv_preamble(cfg) + &line_reports_csv(&rows)
    };
    Ok(Output { body, ok })
}

fn tensor_output<F: Field>(cfg: &RunConfig, w: &OmegaTensor<F>) -> Output {
    // the tensor sits under "tensor", so the file reads back as input
    let mut v = envelope(cfg, "tensor", serde_json::to_value(w.to_file()).expect("tensor serializes"));
    v["hash"] = json!(w.hash());
    v["rank"] = json!(w.rank());
    Output { body: pretty(&v), ok: true }
}

fn suite<F: Field>(f: &F, cfg: &RunConfig, json: bool, only: Option<&str>) -> CliResult<Output> {
    let report = run_suite(f, cfg.seed, only)?;
    let ok = report.passed();
    let body = if json {
        pretty(&envelope(cfg, "suite", serde_json::to_value(&report).expect("report serializes")))
    } else {
        let mut b = format!("# instanton {VERSION} schema {SCHEMA_VERSION} field {} seed {}\n", cfg.field, cfg.seed);
        for r in &report.results {
            b.push_str(&r.line());
            b.push('\n');
        }
        b
    };
    Ok(Output { body, ok })
}

fn run<F: Field>(f: &F, cli: &Cli) -> CliResult<Output> {
    let mut options = BTreeMap::new();
    let (command, input) = match &cli.cmd {
        Cmd::Certify { input, xi } => {
            if let Some(x) = xi {
                options.insert("xi".into(), x.clone());
            }
            ("certify", Some(input.clone()))
        }
        Cmd::Table { kind: TableKind::Coh { input, dmax } } => {
            options.insert("dmax".into(), dmax.to_string());
            ("table coh", Some(input.clone()))
        }
        Cmd::Table { kind: TableKind::Lines { input, lines, pencil } } => {
            options.insert("lines".into(), lines.to_string());
            if let Some(p) = pencil {
                options.insert("pencil".into(), p.clone());
            }
            ("table lines", Some(input.clone()))
        }
        Cmd::Sample { sample } => ("sample", Some(Input { tensor: None, sample: Some(sample.clone()), example: None })),
        Cmd::Export { example } => ("export", Some(Input { tensor: None, sample: None, example: Some(example.clone()) })),
        Cmd::Suite { only } => {
            if let Some(o) = only {
                options.insert("only".into(), o.clone());
            }
            ("suite", None)
        }
    };
    let cfg = RunConfig { command: command.into(), field: f.spec().to_string(), seed: cli.seed, input, options };
    match &cli.cmd {
        Cmd::Certify { input, xi } => certify(f, &cfg, input, xi.as_deref()),
        Cmd::Table { kind: TableKind::Coh { input, dmax } } => table_coh(f, &cfg, cli.json, input, *dmax),
        Cmd::Table { kind: TableKind::Lines { input, lines, pencil } } => {
            table_lines(f, &cfg, cli.json, input, *lines, pencil.as_deref())
        }
        Cmd::Sample { .. } | Cmd::Export { .. } => {
            let w = load(f, cfg.input.as_ref().expect("set above"), cli.seed)?;
            Ok(tensor_output(&cfg, &w))
        }
        Cmd::Suite { only } => suite(f, &cfg, cli.json, only.as_deref()),
    }
}

fn dispatch(cli: &Cli) -> CliResult<Output> {
    let spec: FieldSpec = cli.field.parse()?;
    match spec {
        FieldSpec::Rational => run(&Rationals, cli),
        FieldSpec::Prime(p) => run(&Fp::new(p), cli),
        FieldSpec::PrimeExt { p, k } => run(&Fq::new(p, k)?, cli),
    }
}

fn write_out(cli: &Cli, body: &str) -> std::io::Result<()> {
    match &cli.out {
        Some(path) => fs::write(path, body),
        None => std::io::stdout().write_all(body.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(out) => {
            if let Err(e) = write_out(&cli, &out.body) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Invariant(msg)) => {
            eprintln!("{}", json!({"error": "invariant", "message": msg}));
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("{}", json!({"error": "input", "message": msg}));
            ExitCode::from(2)
        }
    }
}
