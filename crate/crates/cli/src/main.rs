mod report;

use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coadjoint_core::{
    curve_neighborhood_point, gromov_width_upper, gw_certificate, hasse_diagram, parse_rational,
    to_fundamental, Basis, Error, ParabolicSubset, RootSystem, SimpleType,
};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use report::*;

const MAX_SWEEP_RANK: usize = 8;

#[derive(Parser)]
#[command(name = "coadjoint-width", version, about = "Gromov width upper bounds for coadjoint orbits")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Width upper bound for the orbit through lambda.
    Width {
        #[command(flatten)]
        ty: TypeArgs,
        /// Comma-separated rationals, e.g. `0,1/2,-3`.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, value_enum, default_value = "fundamental")]
        basis: BasisArg,
    },
    /// GW certificates for maximal parabolics.
    Certify {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, conflicts_with = "all_nodes")]
        node: Option<usize>,
        #[arg(long)]
        all_nodes: bool,
    },
    /// Bruhat order on the fixed points of the curve neighborhood.
    Hasse {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        node: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Certify every maximal parabolic of every simple type up to a rank.
    VerifyAll {
        #[arg(long, default_value_t = MAX_SWEEP_RANK)]
        max_rank: usize,
    },
}

#[derive(Args)]
struct TypeArgs {
    /// Cartan type letter, or letter and rank together (`F4`).
    #[arg(long = "type")]
    ty: String,
    #[arg(long)]
    rank: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    Fundamental,
    Euclidean,
    UnDiag,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Self {
        match b {
            BasisArg::Fundamental => Basis::Fundamental,
            BasisArg::Euclidean => Basis::Euclidean,
            BasisArg::UnDiag => Basis::UnDiag,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

enum Failure {
    Usage(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type CmdResult = Result<(String, ExitCode), Failure>;

impl TypeArgs {
    fn resolve(&self) -> Result<SimpleType, Failure> {
        let s = self.ty.trim();
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(|| Failure::Usage("empty --type".into()))?.to_ascii_uppercase();
        let tail = chars.as_str();
        let rank = match (tail.is_empty(), self.rank) {
            (true, Some(r)) => r,
            (true, None) => return Err(Failure::Usage(format!("--type {s} needs --rank"))),
            (false, r) => {
                let n: usize = tail.parse().map_err(|_| Failure::Usage(format!("bad --type {s}")))?;
                if r.is_some_and(|r| r != n) {
                    return Err(Failure::Usage(format!("--type {s} conflicts with --rank {}", r.unwrap())));
                }
                n
            }
        };
        Ok(SimpleType::new(letter, rank)?)
    }
}

fn inputs_of(t: SimpleType, extra: Value) -> Value {
    let mut v = json!({ "type": t.letter.to_string(), "rank": t.rank });
    if let (Value::Object(m), Value::Object(e)) = (&mut v, extra) {
        m.extend(e);
    }
    v
}

fn render<P: Serialize>(command: &'static str, inputs: Value, payload: P) -> String {
    let r = Report { schema_version: SCHEMA_VERSION, command, inputs, payload };
    serde_json::to_string_pretty(&r).expect("report serializes") + "\n"
}

fn node_index(t: SimpleType, node: usize) -> Result<usize, Failure> {
    if node == 0 || node > t.rank {
        return Err(Failure::Usage(format!("node {node} out of range 1..={} for {t}", t.rank)));
    }
    Ok(node - 1)
}

fn cmd_width(ty: &TypeArgs, lambda: &str, basis: BasisArg) -> CmdResult {
    let t = ty.resolve()?;
    let values = lambda
        .split(',')
        .map(|s| parse_rational(s).ok_or_else(|| Failure::Usage(format!("cannot parse rational {s:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    let basis = Basis::from(basis);
    let inputs = inputs_of(
        t,
        json!({ "lambda": values.iter().map(rational).collect::<Vec<_>>(), "basis": basis.to_string() }),
    );
    let rs = RootSystem::from_type(t)?;
    let weight = to_fundamental(t, basis, &values)?;
    match gromov_width_upper(&rs, &weight) {
        Ok(r) => Ok((render("width", inputs, WidthPayload::from(&r)), ExitCode::SUCCESS)),
        Err(Error::ZeroOrbit) => {
            let body = ErrorReport {
                schema_version: SCHEMA_VERSION,
                command: "width",
                inputs,
                error: ErrorBody { kind: "degenerate-orbit", message: Error::ZeroOrbit.to_string() },
            };
            eprintln!("{}", serde_json::to_string_pretty(&body).expect("report serializes"));
            Ok((String::new(), ExitCode::from(2)))
        }
        Err(e) => Err(e.into()),
    }
}

fn certify_row(rs: &Arc<RootSystem>, k: usize) -> Result<CertifyRow, Error> {
    let p = ParabolicSubset::maximal(rs, k)?;
    let cert = gw_certificate(&p, k)?;
    let nbhd = curve_neighborhood_point(&p, k)?;
    Ok(CertifyRow { certificate: (&cert).into(), maximum: word(nbhd.max().elem()) })
}

fn cmd_certify(ty: &TypeArgs, node: Option<usize>, all_nodes: bool) -> CmdResult {
    let t = ty.resolve()?;
    let nodes: Vec<usize> = match node {
        Some(n) if !all_nodes => vec![node_index(t, n)?],
        _ => (0..t.rank).collect(),
    };
    let rs = RootSystem::from_type(t)?;
    let rows = nodes.iter().map(|&k| certify_row(&rs, k)).collect::<Result<Vec<_>, _>>()?;
    let all_certified = rows.iter().all(|r| r.certificate.gw == json!(1));
    let inputs = inputs_of(t, json!({ "nodes": one_based(nodes) }));
    let code = if all_certified { ExitCode::SUCCESS } else { ExitCode::from(3) };
    Ok((render("certify", inputs, CertifyPayload { rows, all_certified }), code))
}

fn cmd_hasse(ty: &TypeArgs, node: usize, format: Format) -> CmdResult {
    let t = ty.resolve()?;
    let k = node_index(t, node)?;
    let rs = RootSystem::from_type(t)?;
    let p = ParabolicSubset::maximal(&rs, k)?;
    let nbhd = curve_neighborhood_point(&p, k)?;
    let h = hasse_diagram(&nbhd.zset)?;
    let roots: Vec<_> = nbhd.zset.iter().map(|x| x.roots.clone()).collect();
    let payload = HassePayload::new(&h, &roots);
    let out = match format {
        Format::Dot => payload.to_dot(&format!("{t} node {node}")),
        Format::Json => render("hasse", inputs_of(t, json!({ "node": node, "format": "json" })), payload),
    };
    Ok((out, ExitCode::SUCCESS))
}

fn cmd_verify_all(max_rank: usize) -> CmdResult {
    if max_rank == 0 || max_rank > MAX_SWEEP_RANK {
        return Err(Failure::Usage(format!("--max-rank must lie in 1..={MAX_SWEEP_RANK}")));
    }
    let types = SimpleType::all_up_to(max_rank);
    let jobs: Vec<(usize, usize)> =
        types.iter().enumerate().flat_map(|(ti, t)| (0..t.rank).map(move |k| (ti, k))).collect();
    let systems = types
        .iter()
        .map(|&t| RootSystem::from_type(t))
        .collect::<Result<Vec<_>, _>>()?;
    let mut results: Vec<((usize, usize), Result<bool, String>)> = jobs
        .par_iter()
        .map(|&(ti, k)| {
            let outcome = ParabolicSubset::maximal(&systems[ti], k)
                .and_then(|p| gw_certificate(&p, k))
                .map(|c| c.is_one())
                .map_err(|e| e.to_string());
            ((ti, k), outcome)
        })
        .collect();
    results.sort_by_key(|(key, _)| *key);

    let mut summaries: Vec<TypeSummary> =
        types.iter().map(|t| TypeSummary { name: t.to_string(), nodes: t.rank, certified: 0 }).collect();
    let mut failures = Vec::new();
    for ((ti, k), outcome) in &results {
        match outcome {
            Ok(true) => summaries[*ti].certified += 1,
            Ok(false) => failures.push(format!("{} node {}: unverified", types[*ti], k + 1)),
            Err(e) => failures.push(format!("{} node {}: {e}", types[*ti], k + 1)),
        }
    }
    let certified = results.len() - failures.len();
    let code = if failures.is_empty() { ExitCode::SUCCESS } else { ExitCode::from(3) };
    let payload = VerifyPayload { max_rank, types: summaries, total: results.len(), certified, failures };
    Ok((render("verify-all", json!({ "max_rank": max_rank }), payload), code))
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::ZeroOrbit | Error::DegenerateClass(_) => 2,
        Error::NoUniqueMaximum { .. } | Error::Uncertified { .. } => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    let result = match &cli.command {
        Command::Width { ty, lambda, basis } => cmd_width(ty, lambda, *basis),
        Command::Certify { ty, node, all_nodes } => cmd_certify(ty, *node, *all_nodes),
        Command::Hasse { ty, node, format } => cmd_hasse(ty, *node, *format),
        Command::VerifyAll { max_rank } => cmd_verify_all(*max_rank),
    };
    match result {
        Ok((out, code)) => {
            print!("{out}");
            code
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
