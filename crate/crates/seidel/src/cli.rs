//! Command-line surface. Every subcommand is a thin adapter over the
//! library: graphs travel as graph6 lines on stdin/stdout, results print as
//! tables by default or as line-delimited `key=value` records with
//! `--format records`.
//!
//! Exit codes: 0 success, 1 domain error (precondition failures), 2 usage
//! or parse error, 3 resource or budget error.

use std::io::{BufRead, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::canon::{are_isomorphic, canonical_form_capped};
use crate::catalog::SWITCHABLE_PARAMETERS;
use crate::embedding::{check_design_moments, gram_from_graph, relative_bound};
use crate::error::{Error, Result};
use crate::families::{construct_named, Family};
use crate::graph::{Graph, VertexSet, DEFAULT_VERTEX_CAP};
use crate::graph6;
use crate::search::{
    closure, closure_thm2, find_sets, index_line, write_closure, ClosureLimits, SetStrategy,
};
use crate::srg::{derive_spectrum, verify_srg, SrgClass, SrgParams};
use crate::switching::{seidel_spectrum_check, switch, two_graph};

/// Environment variable overriding the vertex cap.
pub const VERTEX_CAP_ENV: &str = "SEIDEL_VERTEX_CAP";

#[derive(Parser, Debug)]
#[command(
    name = "seidel",
    about = "Seidel switching on strongly regular graphs",
    version
)]
pub struct CliArgs {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub config: ConfigArgs,
}

#[derive(Args, Debug, Clone)]
pub struct ConfigArgs {
    /// Worker threads for closure runs.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Largest brute-force subset size.
    #[arg(long = "max-h", global = true)]
    pub max_h: Option<usize>,
    /// Candidate-subset budget per enumeration.
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Vertex cap for ingesting graphs (also SEIDEL_VERTEX_CAP).
    #[arg(long = "vertex-cap", global = true)]
    pub vertex_cap: Option<usize>,
    /// Output format.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Output path prefix for closure runs (writes PREFIX.g6 and PREFIX.idx).
    #[arg(long, global = true)]
    pub out: Option<String>,
    /// Switching-set strategy.
    #[arg(long, global = true, value_enum)]
    pub strategy: Option<StrategyName>,
    /// Parts cap for the clique-unions strategy.
    #[arg(long = "max-parts", global = true)]
    pub max_parts: Option<usize>,
    /// Stop closure after this many classes.
    #[arg(long = "max-graphs", global = true)]
    pub max_graphs: Option<usize>,
    /// Soft wall-clock limit for closure runs, in seconds.
    #[arg(long = "max-seconds", global = true)]
    pub max_seconds: Option<u64>,
    /// Reduce candidate sets to automorphism orbit representatives.
    #[arg(long = "orbit-reduce", global = true, default_value_t = false)]
    pub orbit_reduce: bool,
    /// File of explicit switching sets (one comma-separated list of vertex
    /// indices per line), for --strategy explicit.
    #[arg(long = "sets", global = true)]
    pub sets: Option<PathBuf>,
    /// Load defaults from a config file (key = value lines).
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Records,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum StrategyName {
    Brute,
    Cliques,
    CliqueUnions,
    Explicit,
    Auto,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Construct a named graph and print its graph6 line.
    Construct { family: String, order: usize },
    /// Classify graph6 lines (stdin or files) by SRG verification.
    Verify { inputs: Vec<String> },
    /// Derived spectrum of graphs or an explicit parameter tuple.
    Spectrum {
        /// v,k,lambda,mu instead of reading graphs.
        #[arg(long)]
        params: Option<String>,
        inputs: Vec<String>,
    },
    /// Switch each input graph by a vertex set.
    Switch {
        /// Comma-separated vertex indices.
        #[arg(long)]
        set: String,
        inputs: Vec<String>,
    },
    /// Emit the qualifying switching sets of each input graph.
    FindSets { inputs: Vec<String> },
    /// Iterated switching closure with isomorph rejection.
    Closure { inputs: Vec<String> },
    /// Search for graphs with the shifted parameter set (half-size sets).
    ClosureThm2 { inputs: Vec<String> },
    /// Canonical graph6 form and digest of each input graph.
    Canon { inputs: Vec<String> },
    /// Isomorphism test between two graphs.
    Iso { g1: String, g2: String },
    /// Spherical-embedding certification report.
    EmbedCheck { inputs: Vec<String> },
    /// Two-graph statistics and Seidel spectrum.
    TwoGraph { inputs: Vec<String> },
    /// Check the switching condition over the parameter catalog.
    CatalogCheck,
}

/// Runtime configuration, merged from defaults, config file, environment,
/// and flags (later sources win).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub threads: usize,
    pub max_h: usize,
    pub subset_budget: u64,
    pub vertex_cap: usize,
    pub format: Format,
    pub strategy: StrategyName,
    pub max_parts: usize,
    pub max_graphs: Option<usize>,
    pub max_seconds: Option<u64>,
    pub orbit_reduce: bool,
    pub sets_file: Option<String>,
    pub seeds: Vec<String>,
    pub out: Option<String>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            threads: 1,
            max_h: 10,
            subset_budget: 100_000_000,
            vertex_cap: DEFAULT_VERTEX_CAP,
            format: Format::Table,
            strategy: StrategyName::Auto,
            max_parts: 8,
            max_graphs: None,
            max_seconds: None,
            orbit_reduce: false,
            sets_file: None,
            seeds: Vec::new(),
            out: None,
        }
    }
}

impl RunConfig {
    /// Serialises as `key = value` lines; `to_text` then `from_text` is the
    /// identity.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut push = |k: &str, v: String| {
            out.push_str(k);
            out.push_str(" = ");
            out.push_str(&v);
            out.push('\n');
        };
        push("threads", self.threads.to_string());
        push("max_h", self.max_h.to_string());
        push("subset_budget", self.subset_budget.to_string());
        push("vertex_cap", self.vertex_cap.to_string());
        push(
            "format",
            match self.format {
                Format::Table => "table".into(),
                Format::Records => "records".into(),
            },
        );
        push("strategy", strategy_name(self.strategy).into());
        push("max_parts", self.max_parts.to_string());
        if let Some(m) = self.max_graphs {
            push("max_graphs", m.to_string());
        }
        if let Some(m) = self.max_seconds {
            push("max_seconds", m.to_string());
        }
        push("orbit_reduce", self.orbit_reduce.to_string());
        if let Some(f) = &self.sets_file {
            push("sets_file", f.clone());
        }
        for seed in &self.seeds {
            push("seed", seed.clone());
        }
        if let Some(o) = &self.out {
            push("out", o.clone());
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut cfg = RunConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Parse(format!("config line {}: expected key = value", lineno + 1))
            })?;
            let (key, value) = (key.trim(), value.trim());
            let bad = |what: &str| Error::Parse(format!("config line {}: bad {what}", lineno + 1));
            match key {
                "threads" => cfg.threads = value.parse().map_err(|_| bad("threads"))?,
                "max_h" => cfg.max_h = value.parse().map_err(|_| bad("max_h"))?,
                "subset_budget" => {
                    cfg.subset_budget = value.parse().map_err(|_| bad("subset_budget"))?
                }
                "vertex_cap" => cfg.vertex_cap = value.parse().map_err(|_| bad("vertex_cap"))?,
                "format" => {
                    cfg.format = match value {
                        "table" => Format::Table,
                        "records" => Format::Records,
                        _ => return Err(bad("format")),
                    }
                }
                "strategy" => cfg.strategy = parse_strategy_name(value)?,
                "max_parts" => cfg.max_parts = value.parse().map_err(|_| bad("max_parts"))?,
                "max_graphs" => {
                    cfg.max_graphs = Some(value.parse().map_err(|_| bad("max_graphs"))?)
                }
                "max_seconds" => {
                    cfg.max_seconds = Some(value.parse().map_err(|_| bad("max_seconds"))?)
                }
                "orbit_reduce" => {
                    cfg.orbit_reduce = value.parse().map_err(|_| bad("orbit_reduce"))?
                }
                "sets_file" => cfg.sets_file = Some(value.to_string()),
                "seed" => cfg.seeds.push(value.to_string()),
                "out" => cfg.out = Some(value.to_string()),
                _ => {
                    return Err(Error::Parse(format!(
                        "config line {}: unknown key '{key}'",
                        lineno + 1
                    )))
                }
            }
        }
        if cfg.threads == 0 || cfg.max_parts == 0 || cfg.vertex_cap == 0 || cfg.subset_budget == 0 {
            return Err(Error::Parse("config caps must be positive".into()));
        }
        Ok(cfg)
    }

    fn apply_env(&mut self) -> Result<()> {
        if let Ok(value) = std::env::var(VERTEX_CAP_ENV) {
            self.vertex_cap = value.parse().map_err(|_| {
                Error::Parse(format!("{VERTEX_CAP_ENV} must be a positive integer"))
            })?;
            if self.vertex_cap == 0 {
                return Err(Error::Parse(format!("{VERTEX_CAP_ENV} must be positive")));
            }
        }
        Ok(())
    }

    fn apply_flags(&mut self, args: &ConfigArgs) {
        if let Some(t) = args.threads {
            self.threads = t;
        }
        if let Some(h) = args.max_h {
            self.max_h = h;
        }
        if let Some(b) = args.budget {
            self.subset_budget = b;
        }
        if let Some(c) = args.vertex_cap {
            self.vertex_cap = c;
        }
        if let Some(f) = args.format {
            self.format = f;
        }
        if let Some(s) = args.strategy {
            self.strategy = s;
        }
        if let Some(p) = args.max_parts {
            self.max_parts = p;
        }
        if args.max_graphs.is_some() {
            self.max_graphs = args.max_graphs;
        }
        if args.max_seconds.is_some() {
            self.max_seconds = args.max_seconds;
        }
        if args.orbit_reduce {
            self.orbit_reduce = true;
        }
        if let Some(f) = &args.sets {
            self.sets_file = Some(f.display().to_string());
        }
        if args.out.is_some() {
            self.out = args.out.clone();
        }
    }

    fn validate(&self) -> Result<()> {
        if self.threads == 0
            || self.max_parts == 0
            || self.vertex_cap == 0
            || self.subset_budget == 0
        {
            return Err(Error::Parse("caps must be positive".into()));
        }
        Ok(())
    }

    fn limits(&self) -> ClosureLimits {
        ClosureLimits {
            max_graphs: self.max_graphs,
            max_seconds: self.max_seconds,
            subset_budget: self.subset_budget,
            threads: self.threads,
            orbit_reduce: self.orbit_reduce,
            vertex_cap: self.vertex_cap,
        }
    }

    /// Builds the strategy for a graph on `n` vertices; the explicit
    /// strategy reads its sets from the --sets file.
    fn set_strategy_for(&self, n: usize) -> Result<SetStrategy> {
        Ok(match self.strategy {
            StrategyName::Brute => SetStrategy::Brute { max_h: self.max_h },
            StrategyName::Cliques => SetStrategy::Cliques,
            StrategyName::CliqueUnions => SetStrategy::CliqueUnions {
                max_parts: self.max_parts,
            },
            StrategyName::Auto => SetStrategy::Auto,
            StrategyName::Explicit => {
                let path = self.sets_file.as_ref().ok_or_else(|| {
                    Error::Parse("the explicit strategy needs --sets <file>".into())
                })?;
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Io(format!("unreadable sets file {path}: {e}")))?;
                let sets = text
                    .lines()
                    .filter(|l| !l.trim().is_empty())
                    .map(|l| parse_vertex_list(l, n))
                    .collect::<Result<Vec<_>>>()?;
                SetStrategy::Explicit(sets)
            }
        })
    }
}

fn strategy_name(s: StrategyName) -> &'static str {
    match s {
        StrategyName::Brute => "brute",
        StrategyName::Cliques => "cliques",
        StrategyName::CliqueUnions => "clique-unions",
        StrategyName::Explicit => "explicit",
        StrategyName::Auto => "auto",
    }
}

fn parse_strategy_name(s: &str) -> Result<StrategyName> {
    Ok(match s {
        "brute" => StrategyName::Brute,
        "cliques" => StrategyName::Cliques,
        "clique-unions" => StrategyName::CliqueUnions,
        "explicit" => StrategyName::Explicit,
        "auto" => StrategyName::Auto,
        _ => return Err(Error::Parse(format!("unknown strategy '{s}'"))),
    })
}

/// Builds the effective configuration for parsed arguments.
pub fn resolve_config(args: &ConfigArgs) -> Result<RunConfig> {
    let mut cfg = match &args.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            RunConfig::from_text(&text)?
        }
        None => RunConfig::default(),
    };
    cfg.apply_env()?;
    cfg.apply_flags(args);
    cfg.validate()?;
    Ok(cfg)
}

/// Maps an error onto the documented exit code.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parameter(_) | Error::Precondition(_) | Error::UnsupportedSpectrum(_) => 1,
        Error::Parse(_) | Error::Io(_) => 2,
        Error::Resource(_) => 3,
    }
}

/// Reads graphs from file paths, or stdin when none are given. Each line is
/// one graph6 graph.
fn read_graphs(inputs: &[String], cap: usize) -> Result<Vec<Graph>> {
    let mut lines: Vec<String> = Vec::new();
    if inputs.is_empty() {
        for line in std::io::stdin().lock().lines() {
            lines.push(line.map_err(|e| Error::Io(format!("stdin: {e}")))?);
        }
    } else {
        for path in inputs {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Io(format!("unreadable input file {path}: {e}")))?;
            lines.extend(text.lines().map(|l| l.to_string()));
        }
    }
    lines
        .iter()
        .filter(|l| !l.trim().is_empty())
        .map(|l| graph6::decode_with_cap(l, cap))
        .collect()
}

fn parse_vertex_list(s: &str, n: usize) -> Result<VertexSet> {
    if s.trim().is_empty() {
        return Ok(VertexSet::empty(n));
    }
    let mut idx = Vec::new();
    for part in s.split(',') {
        let v: usize = part
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex index '{part}' in set list")))?;
        idx.push(v);
    }
    VertexSet::from_indices(n, &idx)
}

fn classification_line(class: &SrgClass) -> String {
    match class {
        SrgClass::NotRegular => "not-regular".into(),
        SrgClass::CompleteOrEmpty => "complete-or-empty".into(),
        SrgClass::RegularNotSrg => "regular-not-srg".into(),
        SrgClass::ImprimitiveSrg(p) => format!("imprimitive-srg{p}"),
        SrgClass::PrimitiveSrg(p) => format!("primitive-srg{p}"),
    }
}

fn parse_params(s: &str) -> Result<SrgParams> {
    let parts: Vec<&str> = s.split(',').map(|p| p.trim()).collect();
    if parts.len() != 4 {
        return Err(Error::Parse(format!("expected v,k,lambda,mu, found '{s}'")));
    }
    let nums: Vec<usize> = parts
        .iter()
        .map(|p| {
            p.parse()
                .map_err(|_| Error::Parse(format!("bad integer '{p}' in parameters")))
        })
        .collect::<Result<_>>()?;
    Ok(SrgParams::new(nums[0], nums[1], nums[2], nums[3]))
}

/// Executes a parsed command, writing to `out`. Returns the exit code.
pub fn run(args: &CliArgs, out: &mut dyn Write) -> i32 {
    match execute(args, out) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("seidel: {e}");
            exit_code(&e)
        }
    }
}

fn execute(args: &CliArgs, out: &mut dyn Write) -> Result<()> {
    let cfg = resolve_config(&args.config)?;
    match &args.command {
        Command::Construct { family, order } => {
            let f: Family = family.parse()?;
            let g = construct_named(&f, *order)?;
            if g.n() > cfg.vertex_cap {
                return Err(Error::Resource(format!(
                    "constructed graph on {} vertices exceeds the vertex cap {}",
                    g.n(),
                    cfg.vertex_cap
                )));
            }
            writeln!(out, "{}", graph6::encode(&g))?;
            Ok(())
        }
        Command::Verify { inputs } => {
            for g in read_graphs(inputs, cfg.vertex_cap)? {
                let class = verify_srg(&g);
                match cfg.format {
                    Format::Table => writeln!(out, "{}", classification_line(&class))?,
                    Format::Records => writeln!(
                        out,
                        "record=verify n={} class={}",
                        g.n(),
                        classification_line(&class)
                    )?,
                }
            }
            Ok(())
        }
        Command::Spectrum { params, inputs } => {
            let tuples: Vec<SrgParams> = match params {
                Some(p) => vec![parse_params(p)?],
                None => read_graphs(inputs, cfg.vertex_cap)?
                    .iter()
                    .map(|g| {
                        verify_srg(g).params().ok_or_else(|| {
                            Error::Precondition("graph is not strongly regular".into())
                        })
                    })
                    .collect::<Result<_>>()?,
            };
            for p in tuples {
                let s = derive_spectrum(&p)?;
                match cfg.format {
                    Format::Table => writeln!(
                        out,
                        "{p} theta1={} theta2={} m1={} m2={} rho={} switchable={}",
                        s.theta1, s.theta2, s.m1, s.m2, s.rho, s.switchable
                    )?,
                    Format::Records => writeln!(
                        out,
                        "record=spectrum v={} k={} lambda={} mu={} theta1={} theta2={} m1={} m2={} rho={} switchable={}",
                        p.v, p.k, p.lambda, p.mu, s.theta1, s.theta2, s.m1, s.m2, s.rho, s.switchable
                    )?,
                }
            }
            Ok(())
        }
        Command::Switch { set, inputs } => {
            for g in read_graphs(inputs, cfg.vertex_cap)? {
                let h = parse_vertex_list(set, g.n())?;
                writeln!(out, "{}", graph6::encode(&switch(&g, &h)?))?;
            }
            Ok(())
        }
        Command::FindSets { inputs } => {
            for g in read_graphs(inputs, cfg.vertex_cap)? {
                let strategy = cfg.set_strategy_for(g.n())?;
                let p = verify_srg(&g)
                    .params()
                    .ok_or_else(|| Error::Precondition("graph is not strongly regular".into()))?;
                let s = derive_spectrum(&p)?;
                for set in find_sets(&g, &s, &strategy, cfg.subset_budget)? {
                    let idx: Vec<String> = set.iter().map(|v| v.to_string()).collect();
                    writeln!(out, "{}", idx.join(","))?;
                }
            }
            Ok(())
        }
        Command::Closure { inputs } => {
            for g in read_graphs(inputs, cfg.vertex_cap)? {
                let strategy = cfg.set_strategy_for(g.n())?;
                let state = closure(&g, &strategy, &cfg.limits())?;
                report_closure(&state, &cfg, out)?;
            }
            Ok(())
        }
        Command::ClosureThm2 { inputs } => {
            for g in read_graphs(inputs, cfg.vertex_cap)? {
                let state = closure_thm2(&g, &cfg.limits())?;
                report_closure(&state, &cfg, out)?;
            }
            Ok(())
        }
        Command::Canon { inputs } => {
            for g in read_graphs(inputs, cfg.vertex_cap)? {
                let form = canonical_form_capped(&g, cfg.vertex_cap)?;
                let canon = form.canonical_graph(&g);
                match cfg.format {
                    Format::Table => writeln!(
                        out,
                        "{} digest={:032x}",
                        graph6::encode(&canon),
                        form.digest
                    )?,
                    Format::Records => writeln!(
                        out,
                        "record=canon g6={} digest={:032x} keybits={}",
                        graph6::encode(&canon),
                        form.digest,
                        form.key.bit_len()
                    )?,
                }
            }
            Ok(())
        }
        Command::Iso { g1, g2 } => {
            let a = graph6::decode_with_cap(g1, cfg.vertex_cap)?;
            let b = graph6::decode_with_cap(g2, cfg.vertex_cap)?;
            match are_isomorphic(&a, &b)? {
                Some(mapping) => {
                    let m: Vec<String> = mapping.iter().map(|v| v.to_string()).collect();
                    writeln!(out, "isomorphic mapping={}", m.join(","))?;
                }
                None => writeln!(out, "non-isomorphic")?,
            }
            Ok(())
        }
        Command::EmbedCheck { inputs } => {
            for g in read_graphs(inputs, cfg.vertex_cap)? {
                let p = verify_srg(&g)
                    .params()
                    .ok_or_else(|| Error::Precondition("graph is not strongly regular".into()))?;
                let s = derive_spectrum(&p)?;
                let gram = gram_from_graph(&g, &s)?;
                let bound = relative_bound(s.m2, s.rho)?;
                let inner: Vec<String> = gram.inner_values.iter().map(|r| r.to_string()).collect();
                writeln!(
                    out,
                    "{p} rank={} design2={} inner=[{}] relative_bound={}",
                    gram.d,
                    check_design_moments(&gram, 2),
                    inner.join(","),
                    bound
                )?;
            }
            Ok(())
        }
        Command::TwoGraph { inputs } => {
            for g in read_graphs(inputs, cfg.vertex_cap)? {
                let tg = two_graph(&g);
                let spectrum = seidel_spectrum_check(&g);
                let reg = tg.regular.map_or("none".to_string(), |a| a.to_string());
                let rho = spectrum.map_or("none".to_string(), |(r1, r2)| format!("({r1},{r2})"));
                writeln!(
                    out,
                    "n={} triples={} regular={} seidel_spectrum={}",
                    tg.n,
                    tg.triples.len(),
                    reg,
                    rho
                )?;
            }
            Ok(())
        }
        Command::CatalogCheck => {
            let mut all_ok = true;
            for p in SWITCHABLE_PARAMETERS {
                let s = derive_spectrum(&p)?;
                let ok = s.switchable
                    && s.theta1 == p.k as i64 - p.v as i64 / 2
                    && s.theta2 == p.k as i64 - 2 * p.mu as i64;
                all_ok &= ok;
                match cfg.format {
                    Format::Table => writeln!(
                        out,
                        "{p} theta1={} theta2={} switchable={ok}",
                        s.theta1, s.theta2
                    )?,
                    Format::Records => writeln!(
                        out,
                        "record=catalog v={} k={} lambda={} mu={} theta1={} theta2={} switchable={ok}",
                        p.v, p.k, p.lambda, p.mu, s.theta1, s.theta2
                    )?,
                }
            }
            if !all_ok {
                return Err(Error::Precondition(
                    "catalog contains a tuple violating v = 2(k - theta1)".into(),
                ));
            }
            writeln!(
                out,
                "all {} tuples satisfy v = 2(k - theta1)",
                SWITCHABLE_PARAMETERS.len()
            )?;
            Ok(())
        }
    }
}

fn report_closure(
    state: &crate::search::ClosureState,
    cfg: &RunConfig,
    out: &mut dyn Write,
) -> Result<()> {
    if let Some(prefix) = &cfg.out {
        write_closure(state, &format!("{prefix}.g6"), &format!("{prefix}.idx"))?;
    }
    match cfg.format {
        Format::Table => {
            for rec in state.sorted_classes() {
                writeln!(out, "{} {}", rec.graph6, rec.params)?;
            }
            writeln!(
                out,
                "classes={} visited={} sets_tried={} truncated={}",
                state.classes.len(),
                state.stats.graphs_visited,
                state.stats.sets_tried,
                state.truncated.as_deref().unwrap_or("no")
            )?;
        }
        Format::Records => {
            for rec in state.sorted_classes() {
                writeln!(out, "record=class g6={} {}", rec.graph6, index_line(rec))?;
            }
            writeln!(
                out,
                "record=closure classes={} visited={} sets_tried={} truncated={}",
                state.classes.len(),
                state.stats.graphs_visited,
                state.stats.sets_tried,
                state.truncated.as_deref().unwrap_or("no")
            )?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_round_trips() {
        let cfg = RunConfig {
            threads: 7,
            max_h: 6,
            max_graphs: Some(3),
            max_seconds: Some(120),
            strategy: StrategyName::CliqueUnions,
            format: Format::Records,
            seeds: vec!["seeds/a.g6".into(), "seeds/b.g6".into()],
            out: Some("runs/chang".into()),
            ..RunConfig::default()
        };
        let text = cfg.to_text();
        assert_eq!(RunConfig::from_text(&text).unwrap(), cfg);
        // Defaults survive too.
        let d = RunConfig::default();
        assert_eq!(RunConfig::from_text(&d.to_text()).unwrap(), d);
    }

    #[test]
    fn config_rejects_bad_lines() {
        assert!(RunConfig::from_text("threads").is_err());
        assert!(RunConfig::from_text("threads = zero").is_err());
        assert!(RunConfig::from_text("unknown_key = 3").is_err());
        assert!(RunConfig::from_text("threads = 0").is_err());
        // Comments and blanks are fine.
        assert!(RunConfig::from_text("# comment\n\nthreads = 2\n").is_ok());
    }

    #[test]
    fn exit_codes_follow_error_class() {
        assert_eq!(exit_code(&Error::Precondition("x".into())), 1);
        assert_eq!(exit_code(&Error::Parameter("x".into())), 1);
        assert_eq!(exit_code(&Error::UnsupportedSpectrum("x".into())), 1);
        assert_eq!(exit_code(&Error::Parse("x".into())), 2);
        assert_eq!(exit_code(&Error::Io("x".into())), 2);
        assert_eq!(exit_code(&Error::Resource("x".into())), 3);
    }

    #[test]
    fn params_parser() {
        assert_eq!(
            parse_params("28, 15, 6, 10").unwrap(),
            SrgParams::new(28, 15, 6, 10)
        );
        assert!(parse_params("1,2,3").is_err());
        assert!(parse_params("a,b,c,d").is_err());
    }
}
