//! `jcrystal`: crystal graphs, tensor power decompositions, LR queries, cells,
//! KL bases and the symbolic verification suite.

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use jcrystal::cells::left_cells;
use jcrystal::graph::{
    crystal_graph_power, crystal_graph_sst, jcrystal_graph_power, jcrystal_graph_shape, CrystalGraph,
};
use jcrystal::hecke::kl_suite;
use jcrystal::jcrystal::decompose_tensor_power;
use jcrystal::lr::{branching_all, lr_j, lr_j_all, lr_j_oracle_all, LrQuery};
use jcrystal::tableaux::{Bipartition, Partition};
use jcrystal::verify::{default_guard, verify_suite, Family};
use jcrystal::Error;

/// Enumeration cap when neither `--guard` nor `JCRYSTAL_GUARD` is given.
const DEFAULT_GUARD: u64 = 2_000_000;

#[derive(Parser)]
#[command(name = "jcrystal", version, about = "Crystals and iquantum groups of type AIII")]
struct Cli {
    /// Cap on enumeration sizes (words, tableaux, group elements).
    #[arg(long, global = true, env = "JCRYSTAL_GUARD", value_parser = clap::value_parser!(u64).range(1..))]
    guard: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// The type A_{2r} crystal on words of length d, or on SST(λ).
    CrystalGraph(CrystalGraphArgs),
    /// The ȷ-crystal on words of length d, or on SST(λ⁻;λ⁺).
    JcrystalGraph(JGraphArgs),
    /// Components of B^{⊗d} by shape.
    Decompose(RankDegree),
    /// Multiplicities of L(ν) in L(λ) ⊗ L(μ) restricted to Uʲ.
    Lr(LrArgs),
    /// Left cells of W_d and their recording bitableaux.
    Cells(RankOnly),
    /// The Kazhdan–Lusztig basis of H(W_d) with its checks.
    Kl(RankOnly),
    /// Symbolic relation checks on V^{⊗d}.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct RankDegree {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    r: u64,
    #[arg(long)]
    d: usize,
}

#[derive(Args)]
struct RankOnly {
    /// The rank d of W_d.
    #[arg(long, alias = "d")]
    rank: usize,
}

#[derive(Args)]
struct CrystalGraphArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    r: u64,
    #[arg(long, conflicts_with = "shape", required_unless_present = "shape")]
    d: Option<usize>,
    /// A partition such as `2,1`.
    #[arg(long)]
    shape: Option<String>,
}

#[derive(Args)]
struct JGraphArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    r: u64,
    /// A bipartition such as `(2,1;1)`.
    #[arg(long, conflicts_with = "power", required_unless_present = "power")]
    shape: Option<String>,
    #[arg(long, alias = "d")]
    power: Option<usize>,
    /// Also write Graphviz source to this file.
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Args)]
struct LrArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    r: u64,
    /// `(λ⁻;λ⁺)`; `(;)` gives branching from U.
    #[arg(long)]
    lambda: String,
    /// A partition with at most 2r+1 parts.
    #[arg(long)]
    mu: String,
    #[arg(long)]
    nu: Option<String>,
    /// Compare against Yamanouchi-biword counting; exit 1 on a mismatch.
    #[arg(long)]
    check: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    r: u64,
    #[arg(long)]
    d: usize,
    /// Comma-separated check families; all by default.
    #[arg(long, value_delimiter = ',')]
    only: Vec<String>,
}

/// A failure with the exit code it maps to.
struct Fail(u8, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Internal(_) => 1,
            Error::SizeLimit { .. } => {
                return Fail(2, format!("{e} (raise it with --guard or JCRYSTAL_GUARD)"));
            }
            _ => 2,
        };
        Fail(code, e.to_string())
    }
}

type Out = Result<(String, bool), Fail>;

fn usage(flag: &str, msg: impl std::fmt::Display) -> Fail {
    Fail(2, format!("{flag}: {msg}"))
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn no_dot(format: Format, cmd: &str) -> Result<(), Fail> {
    if format == Format::Dot {
        return Err(usage("--format", format!("dot output is only available for graphs, not {cmd}")));
    }
    Ok(())
}

fn render_graph(g: &CrystalGraph, format: Format) -> String {
    match format {
        Format::Json => json(g),
        Format::Dot => g.to_dot(),
        Format::Text => {
            let mut s = format!("{}: {} nodes, {} edges\n", g.kind, g.nodes.len(), g.edges.len());
            for e in &g.edges {
                s += &format!("{} --{}--> {}\n", g.nodes[e.from], e.label, g.nodes[e.to]);
            }
            s
        }
    }
}

fn parse_partition(flag: &str, s: &str) -> Result<Partition, Fail> {
    s.trim_matches(|c| c == '(' || c == ')')
        .parse()
        .map_err(|e: Error| usage(flag, e))
}

fn parse_bipartition(flag: &str, s: &str, r: usize) -> Result<Bipartition, Fail> {
    Bipartition::parse_with_rank(s, r).map_err(|e| usage(flag, e))
}

fn crystal_graph(a: &CrystalGraphArgs, guard: u64, format: Format) -> Out {
    let r = a.r as usize;
    let g = match (&a.shape, a.d) {
        (Some(s), _) => {
            let shape = parse_partition("--shape", s)?;
            if shape.height() > 2 * r + 1 {
                return Err(usage("--shape", format!("{shape} has more than {} rows", 2 * r + 1)));
            }
            crystal_graph_sst(&shape, r, guard)?
        }
        (None, Some(d)) => crystal_graph_power(r, d, guard)?,
        (None, None) => return Err(usage("--d", "one of --d or --shape is required")),
    };
    Ok((render_graph(&g, format), true))
}

fn jcrystal_graph(a: &JGraphArgs, guard: u64, format: Format) -> Out {
    let r = a.r as usize;
    let g = match (&a.shape, a.power) {
        (Some(s), _) => jcrystal_graph_shape(&parse_bipartition("--shape", s, r)?, guard)?,
        (None, Some(d)) => jcrystal_graph_power(r, d, guard)?,
        (None, None) => return Err(usage("--power", "one of --power or --shape is required")),
    };
    if let Some(path) = &a.dot {
        fs::write(path, g.to_dot()).map_err(|e| usage("--dot", format!("{}: {e}", path.display())))?;
    }
    Ok((render_graph(&g, format), true))
}

fn decompose(a: &RankDegree, guard: u64, format: Format) -> Out {
    no_dot(format, "decompose")?;
    let dec = decompose_tensor_power(a.r as usize, a.d, guard)?;
    let total: usize = dec.shapes.iter().map(|s| s.multiplicity * s.sst_count).sum();
    let ok = total == dec.dimension && dec.shapes.iter().all(|s| s.multiplicity as u128 == s.st_count);
    let text = match format {
        Format::Json => json(&dec),
        _ => {
            let mut s = format!("B^{} for r={}: dimension {}\n", dec.d, dec.r, dec.dimension);
            s += &format!("{:<24} {:>6} {:>6} {:>6}\n", "shape", "mult", "|SST|", "#ST");
            for sh in &dec.shapes {
                s += &format!(
                    "{:<24} {:>6} {:>6} {:>6}\n",
                    sh.shape.to_string(),
                    sh.multiplicity,
                    sh.sst_count,
                    sh.st_count
                );
            }
            s += &format!("Σ mult·|SST| = {total}\n");
            s
        }
    };
    Ok((text, ok))
}

#[derive(Serialize)]
struct LrTerm {
    nu: Bipartition,
    multiplicity: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<u64>,
}

#[derive(Serialize)]
struct LrOutput {
    r: usize,
    lambda: Bipartition,
    mu: Partition,
    /// Branching multiplicities from `L(μ)`, present when `λ` is empty.
    #[serde(skip_serializing_if = "Option::is_none")]
    branching: Option<Vec<LrTerm>>,
    terms: Vec<LrTerm>,
    agree: bool,
}

fn lr(a: &LrArgs, guard: u64, format: Format) -> Out {
    no_dot(format, "lr")?;
    let r = a.r as usize;
    let lambda = parse_bipartition("--lambda", &a.lambda, r)?;
    let mu = parse_partition("--mu", &a.mu)?;
    let mu = mu
        .with_len(2 * r + 1)
        .map_err(|_| usage("--mu", format!("{mu} has more than {} rows", 2 * r + 1)))?;
    let mut values: BTreeMap<Bipartition, u64> = match &a.nu {
        Some(s) => {
            let nu = parse_bipartition("--nu", s, r)?;
            let c = lr_j(&LrQuery::new(lambda.clone(), mu.clone(), nu.clone())?)?;
            BTreeMap::from([(nu, c)])
        }
        None => lr_j_all(&lambda, &mu)?,
    };
    let oracle = if a.check { Some(lr_j_oracle_all(&lambda, &mu, guard)?) } else { None };
    let mut agree = true;
    if let Some(o) = &oracle {
        if a.nu.is_none() {
            agree = o.iter().filter(|(_, &v)| v > 0).all(|(k, v)| values.get(k) == Some(v))
                && values.iter().all(|(k, v)| o.get(k) == Some(v));
        } else {
            agree = values.iter().all(|(k, v)| o.get(k).copied().unwrap_or(0) == *v);
        }
    }
    let term = |nu: &Bipartition, c: u64| LrTerm {
        nu: nu.clone(),
        multiplicity: c,
        oracle: oracle.as_ref().map(|o| o.get(nu).copied().unwrap_or(0)),
    };
    let branching = if lambda.size() == 0 {
        let b = branching_all(&mu, r)?;
        agree &= a.nu.is_some() || b == values;
        Some(b.iter().map(|(k, &v)| term(k, v)).collect())
    } else {
        None
    };
    let out = LrOutput {
        r,
        lambda: lambda.clone(),
        mu: mu.clone(),
        branching,
        terms: std::mem::take(&mut values).iter().map(|(k, &v)| term(k, v)).collect(),
        agree,
    };
    let text = match format {
        Format::Json => json(&out),
        _ => {
            let mut s = format!("L{} ⊗ L{} for r={r}\n", out.lambda, out.mu);
            for t in &out.terms {
                s += &format!("{:<24} {}", t.nu.to_string(), t.multiplicity);
                if let Some(o) = t.oracle {
                    s += &format!("  (oracle {o})");
                }
                s.push('\n');
            }
            if let Some(b) = &out.branching {
                s += &format!("branching of L{}: {} terms\n", out.mu, b.len());
            }
            if a.check {
                s += &format!("oracle agreement: {}\n", if agree { "yes" } else { "NO" });
            }
            s
        }
    };
    Ok((text, agree))
}

fn window(w: &[i32]) -> String {
    let s: Vec<String> = w.iter().map(|x| x.to_string()).collect();
    format!("[{}]", s.join(","))
}

fn cells(a: &RankOnly, guard: u64, format: Format) -> Out {
    no_dot(format, "cells")?;
    let rep = left_cells(a.rank, guard)?;
    let text = match format {
        Format::Json => json(&rep),
        _ => {
            let mut s = format!("W_{}: {} left cells\n", rep.d, rep.cells.len());
            for c in &rep.cells {
                let els: Vec<String> = c.elements.iter().map(|w| window(w)).collect();
                s += &format!(
                    "Q = ({}; {}): {}\n",
                    c.recording.minus,
                    c.recording.plus,
                    els.join(" ")
                );
            }
            s += &format!("KL cells = (Q⁻,Q⁺) classes: {}\n", rep.agree);
            s
        }
    };
    Ok((text, rep.agree))
}

fn kl(a: &RankOnly, guard: u64, format: Format) -> Out {
    no_dot(format, "kl")?;
    let rep = kl_suite(a.rank, guard)?;
    let text = match format {
        Format::Json => json(&rep),
        _ => {
            let mut s = String::new();
            for e in &rep.entries {
                let terms: Vec<String> = e.terms.iter().map(|(y, c)| format!("({c}) H{}", window(y))).collect();
                s += &format!("C{} = {}\n", window(&e.w), terms.join(" + "));
            }
            s += &format!(
                "bar-invariant: {}, lattice: {}, parabolic ({} pairs): {}\n",
                rep.bar_invariant, rep.lattice, rep.parabolic_checked, rep.parabolic
            );
            s
        }
    };
    Ok((text, rep.passed()))
}

fn verify(a: &VerifyArgs, guard: Option<u64>, format: Format) -> Out {
    no_dot(format, "verify")?;
    let only = a
        .only
        .iter()
        .map(|s| s.parse::<Family>().map_err(|e| usage("--only", e)))
        .collect::<Result<Vec<_>, _>>()?;
    let rep = verify_suite(a.r as usize, a.d, &only, guard.unwrap_or_else(default_guard))?;
    let text = match format {
        Format::Json => json(&rep),
        _ => format!("{rep}\n"),
    };
    Ok((text, rep.passed()))
}

fn run(cli: &Cli) -> Out {
    let guard = cli.guard.unwrap_or(DEFAULT_GUARD);
    match &cli.cmd {
        Cmd::CrystalGraph(a) => crystal_graph(a, guard, cli.format),
        Cmd::JcrystalGraph(a) => jcrystal_graph(a, guard, cli.format),
        Cmd::Decompose(a) => decompose(a, guard, cli.format),
        Cmd::Lr(a) => lr(a, guard, cli.format),
        Cmd::Cells(a) => cells(a, guard, cli.format),
        Cmd::Kl(a) => kl(a, guard, cli.format),
        Cmd::Verify(a) => verify(a, cli.guard, cli.format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, ok)) => {
            print!("{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Fail(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
