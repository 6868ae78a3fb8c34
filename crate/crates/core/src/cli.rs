//! Command-line front end: one subcommand per computation, JSON or text output.
//!
//! Exit codes: 0 success, 2 invalid input, 3 enumeration cap exceeded,
//! 4 a `check-*` command found a failing check.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::abelian::{FgGroup, VectorList};
use crate::arithmetic::{contraction_representation, deletion_representation, ArithmeticMatroid, Represented};
use crate::error::{Error, Result};
use crate::io::{emit_instance, emit_list, emit_tables, parse_str, parse_target, parse_values, rational_json, Parsed};
use crate::poly::SubsetExpansion;
use crate::potts::{
    chromatic_count, flow_count, flow_multilinear, flow_polynomial, potts_polynomial, potts_sum, tutte_quasi, Edge,
    WeightedDigraph,
};
use crate::suite::{check_theorems, Instance, SuiteOptions};
use crate::tutte::{arithmetic_tutte, crapo_bivariate, crapo_expansion, external_activity_polys, multivariate_z, tutte};
use crate::zonotope::{ehrhart_multivariate, Closure, Zonotope};
use crate::{Limits, Subset};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_CHECK_FAILED: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "arith-tutte", version, about = "Arithmetic matroids, their Tutte polynomials and related counts")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    /// Seed for the random evaluation points used by the checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, clap::Args)]
pub struct Input {
    /// Instance document (JSON); `-` reads standard input.
    pub input: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tutte polynomial T(x, y) of the underlying matroid.
    Tutte(Input),
    /// Arithmetic Tutte polynomial M(x, y).
    ArithTutte(Input),
    /// Multivariate arithmetic Tutte polynomial Z(q, v) as a subset expansion.
    Multivariate(Input),
    /// Tutte quasi-polynomial: period and one constituent per residue.
    Quasi(Input),
    /// Potts partition function over Z_q or a given finite group.
    Potts {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        q: Option<u64>,
        /// Invariants d1,d2,... of a finite target group; overrides --q.
        #[arg(long = "H", visible_alias = "h")]
        h: Option<String>,
        /// Evaluate at v (one value, or one per element).
        #[arg(long, allow_hyphen_values = true)]
        v: Option<String>,
    },
    /// Flow polynomial modulo q.
    Flow {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        q: u64,
        #[arg(long, allow_hyphen_values = true)]
        v: Option<String>,
    },
    /// Number of proper Z_q-colorings (homomorphisms vanishing on no element).
    Chromatic {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        q: u64,
    },
    /// Number of nowhere-zero Z_q-flows.
    FlowCount {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        q: u64,
    },
    /// Multivariate Ehrhart polynomial of the zonotope of the list.
    Ehrhart {
        #[command(flatten)]
        input: Input,
        /// Evaluate at the dilation k1,k2,... and count lattice points directly.
        #[arg(long)]
        at: Option<String>,
    },
    /// Weighted basis expansion with internal and external activities.
    Crapo(Input),
    /// Activities and external activity polynomials of every basis.
    Activities(Input),
    /// Axioms A1, A2 and P.
    CheckAxioms(Input),
    /// The full identity suite.
    CheckTheorems(Input),
    /// Dual arithmetic matroid, as rank and multiplicity tables.
    Dual(Input),
    /// Delete element e (numbered from 1).
    Delete {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        e: usize,
    },
    /// Contract element e (numbered from 1).
    Contract {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        e: usize,
    },
}

/// A computed result in both renderings.
pub struct Output {
    pub json: Value,
    pub text: String,
    pub exit: i32,
}

impl Output {
    fn ok(json: Value, text: String) -> Output {
        Output { json, text, exit: EXIT_OK }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } => EXIT_CAP,
        _ => EXIT_INVALID,
    }
}

fn to_json<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn read_input(path: &PathBuf) -> Result<Parsed> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map_err(|e| Error::Invalid(format!("stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
    }
    parse_str(&text)
}

fn need_list<'a>(instance: &'a Instance, what: &str) -> Result<&'a Represented> {
    instance
        .represented()
        .ok_or_else(|| Error::Invalid(format!("{what} needs a list of vectors or a graph, not tables")))
}

fn element(a: &ArithmeticMatroid, e: usize) -> Result<usize> {
    if e == 0 || e > a.ground_size() {
        return Err(Error::Invalid(format!("--e: element {e} outside 1..={}", a.ground_size())));
    }
    Ok(e - 1)
}

fn parse_dilation(s: &str, n: usize) -> Result<Vec<i64>> {
    let ks = s
        .split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Invalid(format!("--at: `{t}` is not an integer"))))
        .collect::<Result<Vec<_>>>()?;
    let ks = if ks.len() == 1 { vec![ks[0]; n] } else { ks };
    if ks.len() != n {
        return Err(Error::Invalid(format!("--at: {} values for {n} elements", ks.len())));
    }
    if let Some(k) = ks.iter().find(|&&k| k < 0) {
        return Err(Error::Invalid(format!("--at: dilation {k} is negative")));
    }
    Ok(ks)
}

fn expansion_text(z: &SubsetExpansion) -> String {
    let mut lines = Vec::new();
    for mask in 0..1u32 << z.ground_size() {
        let a = Subset(mask);
        let c = z.coefficient(a);
        if c != &BigRational::from_integer(0.into()) {
            lines.push(format!("{a}: {c} q^-{}", z.rank(a)));
        }
    }
    lines.join("\n")
}

fn document_output(doc: crate::io::InputDocument) -> Output {
    let json = to_json(&doc);
    let text = serde_json::to_string_pretty(&json).expect("serializable");
    Output::ok(json, text)
}

fn delete_graph_edge(d: &WeightedDigraph, e: usize) -> Result<WeightedDigraph> {
    let edges: Vec<Edge> = d.edges.iter().enumerate().filter(|&(i, _)| i != e).map(|(_, &x)| x).collect();
    WeightedDigraph::new(d.vertices, edges)
}

fn minor_list(instance: &Instance, e: usize, delete: bool) -> Result<Output> {
    let a = instance.arithmetic();
    let e = element(a, e)?;
    match instance {
        Instance::List { graph: Some(d), .. } if delete => {
            let d = delete_graph_edge(d, e)?;
            let rep = Represented::new(crate::potts::graph_encode(&d)?)?;
            Ok(document_output(emit_instance(&Instance::List { rep, graph: Some(d) })?))
        }
        Instance::List { rep, .. } => {
            let list: VectorList = if delete {
                deletion_representation(rep.list(), e)?
            } else {
                contraction_representation(rep.list(), e)?
            };
            Ok(document_output(emit_list(&list)?))
        }
        Instance::Tables(a) => {
            let m = if delete { a.delete(e)? } else { a.contract(e)? };
            Ok(document_output(emit_tables(&m)))
        }
    }
}

fn execute(command: &Command, seed: u64, limits: Limits) -> Result<(Output, Vec<String>)> {
    let input = match command {
        Command::Tutte(i)
        | Command::ArithTutte(i)
        | Command::Multivariate(i)
        | Command::Quasi(i)
        | Command::Crapo(i)
        | Command::Activities(i)
        | Command::CheckAxioms(i)
        | Command::CheckTheorems(i)
        | Command::Dual(i) => i,
        Command::Potts { input, .. }
        | Command::Flow { input, .. }
        | Command::Chromatic { input, .. }
        | Command::FlowCount { input, .. }
        | Command::Ehrhart { input, .. }
        | Command::Delete { input, .. }
        | Command::Contract { input, .. } => input,
    };
    let Parsed { instance, warnings } = read_input(&input.input)?;
    let a = instance.arithmetic();
    let cap = limits.enumeration_cap;
    let out = match command {
        Command::Tutte(_) => {
            let t = tutte(a.matroid());
            Output::ok(json!({ "polynomial": to_json(&t) }), t.to_string())
        }
        Command::ArithTutte(_) => {
            let m = arithmetic_tutte(a);
            Output::ok(json!({ "polynomial": to_json(&m) }), m.to_string())
        }
        Command::Multivariate(_) => {
            let z = multivariate_z(a);
            Output::ok(json!({ "expansion": to_json(&z) }), expansion_text(&z))
        }
        Command::Quasi(_) => {
            let q = tutte_quasi(need_list(&instance, "quasi")?, cap)?;
            let text = q
                .constituents()
                .iter()
                .enumerate()
                .map(|(r, p)| format!("q = {r} mod {}: {p}", q.period()))
                .collect::<Vec<_>>()
                .join("\n");
            Output::ok(to_json(&q), text)
        }
        Command::Potts { q, h, v, .. } => {
            let rep = need_list(&instance, "potts")?;
            let target = match (h, q) {
                (Some(h), _) => parse_target(h)?,
                (None, Some(0)) => return Err(Error::NonPositiveModulus(0)),
                (None, Some(q)) => FgGroup::cyclic(*q),
                (None, None) => return Err(Error::Invalid("potts needs --q or --H".into())),
            };
            potts_output(rep.list(), &target, v.as_deref(), cap)?
        }
        Command::Flow { q, v, .. } => {
            let rep = need_list(&instance, "flow")?;
            let n = rep.ground_size();
            match v {
                Some(v) => {
                    let val = flow_polynomial(rep.list(), *q, &parse_values(v, n)?, cap)?;
                    Output::ok(json!({ "q": q, "value": rational_json(&val) }), val.to_string())
                }
                None => {
                    let p = flow_multilinear(rep.list(), *q, cap)?;
                    Output::ok(json!({ "q": q, "polynomial": to_json(&p) }), p.to_string())
                }
            }
        }
        Command::Chromatic { q, .. } => {
            let c = chromatic_count(need_list(&instance, "chromatic")?.list(), *q, cap)?;
            Output::ok(json!({ "q": q, "count": c.to_string() }), c.to_string())
        }
        Command::FlowCount { q, .. } => {
            let c = flow_count(need_list(&instance, "flow-count")?.list(), *q, cap)?;
            Output::ok(json!({ "q": q, "count": c.to_string() }), c.to_string())
        }
        Command::Ehrhart { at, .. } => {
            let rep = need_list(&instance, "ehrhart")?;
            let e = ehrhart_multivariate(rep)?;
            match at {
                None => Output::ok(json!({ "polynomial": to_json(&e) }), e.to_string()),
                Some(at) => {
                    let ks = parse_dilation(at, rep.ground_size())?;
                    let kv: Vec<BigRational> = ks.iter().map(|&k| BigRational::from_integer(BigInt::from(k))).collect();
                    let val = e.evaluate(&kv)?;
                    let z = Zonotope::from_list(rep.list(), Closure::Closed)?.scaled(&ks);
                    let count = z.lattice_points(limits.lattice_cap)?.len();
                    let json = json!({ "at": ks, "value": rational_json(&val), "lattice_points": count.to_string() });
                    Output::ok(json, format!("{val} (lattice points: {count})"))
                }
            }
        }
        Command::Crapo(_) => {
            let terms = crapo_expansion(a)?;
            let m = crapo_bivariate(&terms);
            let text = terms
                .iter()
                .map(|t| format!("B={} C={} I={} E={} weight {}", t.basis, t.c, t.internal, t.external, t.weight))
                .chain(std::iter::once(format!("M = {m}")))
                .collect::<Vec<_>>()
                .join("\n");
            Output::ok(json!({ "terms": to_json(&terms), "polynomial": to_json(&m) }), text)
        }
        Command::Activities(_) => activities_output(a)?,
        Command::CheckAxioms(_) => {
            let r = a.axiom_check();
            let kind = a.kind();
            let ok = r.supports(kind);
            let text = format!("kind {kind}\nA1: {:?}\nA2: {:?}\nP: {:?}", r.a1, r.a2, r.p);
            let mut out = Output::ok(json!({ "kind": to_json(&kind), "axioms": to_json(&r), "passed": ok }), text);
            if !ok {
                out.exit = EXIT_CHECK_FAILED;
            }
            out
        }
        Command::CheckTheorems(_) => {
            let r = check_theorems(&instance, seed, limits, SuiteOptions::default())?;
            let failed = r.failures().count();
            let json = json!({ "passed": r.passed(), "checks": r.len(), "failed": failed, "report": to_json(&r) });
            let mut out = Output::ok(json, r.to_string());
            if !r.passed() {
                out.exit = EXIT_CHECK_FAILED;
            }
            out
        }
        Command::Dual(_) => document_output(emit_tables(&a.dual())),
        Command::Delete { e, .. } => minor_list(&instance, *e, true)?,
        Command::Contract { e, .. } => minor_list(&instance, *e, false)?,
    };
    Ok((out, warnings))
}

fn potts_output(list: &VectorList, target: &FgGroup, v: Option<&str>, cap: u64) -> Result<Output> {
    let group = target.to_string();
    match v {
        Some(v) => {
            let val = potts_sum(list, target, &parse_values(v, list.len())?, cap)?;
            Ok(Output::ok(json!({ "group": group, "value": rational_json(&val) }), val.to_string()))
        }
        None => {
            let p = potts_polynomial(list, target, cap)?;
            Ok(Output::ok(json!({ "group": group, "polynomial": to_json(&p) }), p.to_string()))
        }
    }
}

fn activities_output(a: &ArithmeticMatroid) -> Result<Output> {
    let mut rows = Vec::new();
    let mut lines = Vec::new();
    for b in a.matroid().bases() {
        let act = a.matroid().activities(b)?;
        let (e_b, e_star) = external_activity_polys(a, b)?;
        lines.push(format!(
            "B={b} I={} E={}  E_B = {e_b}  E*_B = {e_star}",
            act.internal, act.external
        ));
        rows.push(json!({
            "basis": to_json(&b),
            "internal": to_json(&act.internal),
            "external": to_json(&act.external),
            "external_polynomial": to_json(&e_b),
            "dual_external_polynomial": to_json(&e_star),
        }));
    }
    Ok(Output::ok(json!({ "bases": rows }), lines.join("\n")))
}

/// Parses `args` (including the program name), runs the command and writes
/// the result to `out` and diagnostics to `err`; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match execute(&cli.command, cli.seed, Limits::from_env()) {
        Ok((output, warnings)) => {
            for w in warnings {
                let _ = writeln!(err, "warning: {w}");
            }
            let rendered = match cli.format {
                Format::Json => serde_json::to_string_pretty(&output.json).expect("serializable"),
                Format::Text => output.text,
            };
            let _ = writeln!(out, "{rendered}");
            output.exit
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
