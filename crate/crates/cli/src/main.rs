//! Command-line front end.
//!
//! Every command prints a report `{command, inputs, results, failures}` as
//! canonical JSON or as a plain table. The exit code is 0 when `failures` is
//! empty, 1 otherwise and 2 on malformed input.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use perioddomain::chevalley::{helgason_check, string_identity_check, verify_weyl_basis, verify_weyl_properties, StringIdentity, WeylBasis};
use perioddomain::classify::{classify, Catalog};
use perioddomain::cohomology::{find_pair, flag_dimension, flag_poincare, low_betti, pontryagin_nonvanishing};
use perioddomain::curvature::{
    block_positivity, commuting_pairs, verify_nonnegativity, xi_eval_commuting, xi_eval_direct, PairStrategy,
};
use perioddomain::hodge::{DatumSpec, HodgeDatum};
use perioddomain::rootsys::{invariant_degrees, CartanType, RootSystem};
use perioddomain::scalar::{fmt_q, Scalar};
use perioddomain::suite::{canonical_json, verify_all, SuiteConfig};

#[derive(Parser)]
#[command(name = "perioddomain", version, about = "Exact Lie-theoretic checks for period domains")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    /// Add approximate decimal values next to exact ones (not authoritative).
    #[arg(long, global = true)]
    decimal: bool,
    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Append wall-clock timing to the report.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// List the roots of a simple type.
    Roots {
        #[arg(long = "type")]
        ty: String,
    },
    /// Check the structure constants and, given a marking, the conjugations.
    ChevalleyVerify(DatumArgs),
    /// Describe a Hodge datum: horizontal roots, Levi part, blocks.
    Hodge(DatumArgs),
    /// Nonnegativity and oracle agreement of the curvature form.
    XiCheck {
        #[command(flatten)]
        datum: DatumArgs,
        #[arg(long, default_value_t = 1000)]
        pairs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Poincaré polynomial of a flag manifold or of a symmetric space.
    Poincare {
        #[arg(long)]
        u: Option<String>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        v_marking: Option<Vec<i64>>,
        #[arg(long)]
        input: Option<String>,
        #[arg(long)]
        pair: Option<String>,
    },
    /// Low-degree Betti numbers and p1 of a symmetric space.
    Betti {
        #[arg(long)]
        pair: String,
    },
    /// Hodge type, Hermitian type and lattice verdict of a real form.
    Classify {
        #[arg(long)]
        group: String,
    },
    /// Run every acceptance criterion.
    VerifyAll {
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
        #[arg(long, default_value_t = 1000)]
        pairs: usize,
        #[arg(long, default_value_t = SuiteConfig::default().seed)]
        seed: u64,
    },
}

#[derive(Args, Clone)]
struct DatumArgs {
    /// JSON file `{"type": "A3", "marking": [0,1,0]}`.
    #[arg(long)]
    input: Option<String>,
    #[arg(long = "type")]
    ty: Option<String>,
    /// Marking of the simple roots, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    u: Option<Vec<i64>>,
}

/// Malformed input: exit code 2.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

struct Outcome {
    inputs: Value,
    results: Value,
    failures: Vec<String>,
    table: String,
}

fn parse_type(s: &str) -> Result<CartanType, Usage> {
    Ok(s.parse::<CartanType>()?)
}

impl DatumArgs {
    fn spec(&self) -> Result<Option<DatumSpec>, Usage> {
        if let Some(path) = &self.input {
            let text = std::fs::read_to_string(path).map_err(|e| Usage(format!("{path}: {e}")))?;
            return Ok(Some(serde_json::from_str(&text)?));
        }
        match (&self.ty, &self.u) {
            (Some(t), Some(m)) => Ok(Some(DatumSpec { cartan_type: t.clone(), marking: m.clone() })),
            (Some(_), None) => Ok(None),
            _ => Err(Usage("give --input or --type (with --u)".into())),
        }
    }

    fn datum(&self) -> Result<(Arc<WeylBasis>, HodgeDatum), Usage> {
        let spec = self.spec()?.ok_or_else(|| Usage("a marking is required (--u or --input)".into()))?;
        basis_and_datum(&spec)
    }
}

fn basis_and_datum(spec: &DatumSpec) -> Result<(Arc<WeylBasis>, HodgeDatum), Usage> {
    let t = parse_type(&spec.cartan_type)?;
    let rs = Arc::new(RootSystem::new(t));
    let hd = HodgeDatum::from_marking(Arc::clone(&rs), &spec.marking)?;
    Ok((Arc::new(WeylBasis::new(rs)), hd))
}

fn approx(s: &Scalar) -> String {
    let (re, im) = s.approx();
    if im == 0.0 {
        format!("{re:.6}")
    } else {
        format!("{re:.6}{im:+.6}i")
    }
}

fn roots(ty: &str, decimal: bool) -> Result<Outcome, Usage> {
    let t = parse_type(ty)?;
    let rs = RootSystem::new(t);
    let w = invariant_degrees(t)?;
    let mut rows = Vec::new();
    let mut table = format!("{t}: {} roots, |W| = {}, degrees {:?}\n", rs.num_roots(), w.order, w.degrees);
    for (i, r) in rs.roots().iter().enumerate() {
        let mut row = json!({"root": r, "name": rs.root_name(r), "height": r.height(), "norm": rs.fmt_norm(i)});
        if decimal {
            row["norm_approx"] = json!(approx(&Scalar::from_q(rs.norm(i))));
        }
        table.push_str(&format!("  {:<24} height {:>3}  <a,a> = {}\n", r.to_string(), r.height(), rs.fmt_norm(i)));
        rows.push(row);
    }
    let results = json!({
        "type": t.to_string(),
        "rank": t.rank,
        "num_roots": rs.num_roots(),
        "num_positive": rs.num_positive(),
        "weyl_order": w.order.to_string(),
        "degrees": w.degrees,
        "roots": rows,
    });
    Ok(Outcome { inputs: json!({"type": ty}), results, failures: vec![], table })
}

fn chevalley_verify(args: &DatumArgs) -> Result<Outcome, Usage> {
    let spec = args.spec()?;
    let ty = match (&spec, &args.ty) {
        (Some(s), _) => s.cartan_type.clone(),
        (None, Some(t)) => t.clone(),
        _ => unreachable!(),
    };
    let t = parse_type(&ty)?;
    let wb = WeylBasis::new(Arc::new(RootSystem::new(t)));
    let mut failures = Vec::new();
    let report = match &spec {
        Some(s) => verify_weyl_properties(&wb, &HodgeDatum::from_marking(Arc::clone(wb.root_system()), &s.marking)?),
        None => verify_weyl_basis(&wb),
    };
    let mut table = String::new();
    for c in &report.clauses {
        table.push_str(&format!("{} ({}) {} [{} checked]\n", if c.passed { "ok  " } else { "FAIL" }, c.clause, c.statement, c.checked));
        if !c.passed {
            failures.push(format!("clause ({}): {}", c.clause, c.counterexample.clone().unwrap_or_default()));
        }
    }
    let jacobi = wb.chevalley().algebra().jacobi();
    if !jacobi.passed() {
        failures.push(format!("Jacobi: {}", jacobi.first_failure.clone().unwrap_or_default()));
    }
    let helgason = helgason_check(&wb);
    let k_form = string_identity_check(&wb, StringIdentity::KForm);
    let pq_form = string_identity_check(&wb, StringIdentity::PQForm);
    for r in [&helgason, &k_form, &pq_form] {
        table.push_str(&format!("{} {} [{} checked, {} failed]\n", if r.passed() { "ok  " } else { "FAIL" }, r.identity, r.checked, r.failures));
        if !r.passed() {
            failures.push(format!("{}: {}", r.identity, r.examples.first().cloned().unwrap_or_default()));
        }
    }
    table.insert_str(0, &format!("{ty}: Jacobi on {} triples: {}\n", jacobi.triples, if jacobi.passed() { "ok" } else { "FAIL" }));
    let results = json!({
        "jacobi": jacobi,
        "weyl_basis": report,
        "helgason": helgason,
        "string_identity_k": k_form,
        "string_identity_pq": pq_form,
    });
    Ok(Outcome { inputs: json!({"type": ty, "marking": spec.map(|s| s.marking)}), results, failures, table })
}

fn hodge(args: &DatumArgs) -> Result<Outcome, Usage> {
    let (wb, hd) = args.datum()?;
    let rs = hd.root_system();
    let name = |i: usize| rs.root_name(rs.root(i));
    let horizontal: Vec<String> = hd.horizontal().iter().map(|&i| name(i)).collect();
    let phi: Vec<String> = hd.phi().iter().map(|&i| format!("α{}", i + 1)).collect();
    let blocks: Vec<Value> = hd
        .blocks()
        .iter()
        .map(|b| serde_json::to_value(block_positivity(&wb, &hd, b)).expect("block report"))
        .collect();
    let compact: Vec<String> = hd.compact_positive().iter().map(|&i| name(i)).collect();
    let results = json!({
        "datum": hd.label(),
        "horizontal": horizontal,
        "phi": phi,
        "hermitian_grading": hd.is_hermitian_grading(),
        "max_degree": hd.max_degree(),
        "compact_positive": compact,
        "flag_dimension": flag_dimension(&hd) / 2,
        "blocks": blocks,
    });
    let mut table = format!("{}\n  horizontal: {}\n  Levi simple roots: {}\n  Hermitian grading: {}\n", hd.label(), horizontal.join(", "), phi.join(", "), hd.is_hermitian_grading());
    for b in &blocks {
        table.push_str(&format!("  block {}: {}\n", b["roots"], b["verdict"]));
    }
    Ok(Outcome { inputs: json!(hd.spec()), results, failures: vec![], table })
}

fn xi_check(args: &DatumArgs, pairs: usize, seed: u64, decimal: bool) -> Result<Outcome, Usage> {
    let (wb, hd) = args.datum()?;
    let rep = verify_nonnegativity(&wb, &hd);
    let mut failures: Vec<String> = rep.violations.iter().map(|v| format!("C({}, {}) = {}", v.alpha, v.beta, v.coefficient)).collect();
    let mut mismatches = Vec::new();
    let mut negative = Vec::new();
    let generated = commuting_pairs(&hd, &wb, PairStrategy::Mixed, seed, pairs);
    for (k, (x, y)) in generated.iter().enumerate() {
        let closed = xi_eval_commuting(&wb, &hd, x, y)?;
        let direct = xi_eval_direct(&wb, &hd, x, y)?;
        if closed != direct {
            mismatches.push(json!({"pair": k, "closed_form": closed, "direct": direct}));
        }
        if closed.real_sign() == Some(std::cmp::Ordering::Less) {
            negative.push(json!({"pair": k, "value": closed}));
        }
    }
    if !mismatches.is_empty() {
        failures.push(format!("{} of {} pairs: closed form differs from direct evaluation", mismatches.len(), generated.len()));
    }
    if !negative.is_empty() {
        failures.push(format!("{} negative evaluations", negative.len()));
    }
    let min = rep.min_coefficient.map(|m| fmt_q(&m));
    let mut results = json!({
        "datum": hd.label(),
        "coefficient_pairs_checked": rep.pairs_checked,
        "min_coefficient": min,
        "violations": rep.violations,
        "pairs_checked": generated.len(),
        "oracle_mismatches": mismatches.iter().take(20).collect::<Vec<_>>(),
        "oracle_mismatch_count": mismatches.len(),
        "negative_values": negative,
    });
    if decimal {
        results["min_coefficient_approx"] = json!(rep.min_coefficient.map(|m| approx(&Scalar::from_q(m))));
    }
    let table = format!(
        "{}: {} coefficient pairs, min C = {}, {} violations\n{} commuting pairs: {} oracle mismatches, {} negative\n",
        hd.label(),
        rep.pairs_checked,
        min.clone().unwrap_or_else(|| "-".into()),
        rep.violations.len(),
        generated.len(),
        mismatches.len(),
        negative.len()
    );
    Ok(Outcome { inputs: json!({"datum": hd.spec(), "pairs": pairs, "seed": seed}), results, failures, table })
}

fn poincare(u: &Option<String>, v: &Option<Vec<i64>>, input: &Option<String>, pair: &Option<String>) -> Result<Outcome, Usage> {
    if let Some(name) = pair {
        let p = find_pair(name)?;
        let poly = p.poincare()?;
        let table = format!("{} = {}/{}: P(t) = {}\n", p.name, p.u_type, p.k_type(), poly);
        let results = json!({"space": format!("{}/{}", p.u_type, p.k_type()), "poincare": poly, "dimension": p.dim(), "euler_characteristic": poly.at_one().to_string()});
        return Ok(Outcome { inputs: json!({"pair": name}), results, failures: vec![], table });
    }
    let args = DatumArgs { input: input.clone(), ty: u.clone(), u: v.clone() };
    let (_, hd) = args.datum()?;
    let poly = flag_poincare(&hd)?;
    let table = format!("{}: P(t) = {}\n", hd.label(), poly);
    let results = json!({"datum": hd.label(), "poincare": poly, "dimension": flag_dimension(&hd), "euler_characteristic": poly.at_one().to_string()});
    Ok(Outcome { inputs: json!(hd.spec()), results, failures: vec![], table })
}

fn betti(name: &str) -> Result<Outcome, Usage> {
    let pair = find_pair(name)?;
    let b = low_betti(&pair)?;
    let mut failures = Vec::new();
    if !b.consistent() {
        failures.push(format!("Hirsch {:?} / invariants {:?} disagree with the case split {:?}", b.hirsch, b.invariant, b.branch));
    }
    let p1 = if pair.is_equal_rank() { Some(pontryagin_nonvanishing(&pair)?) } else { None };
    if let Some(r) = &p1 {
        if !r.nonvanishing {
            failures.push(format!("p1 vanishes: {r}"));
        }
    }
    let mut table = format!("{}: h2 = {}, h4 = {} ({:?})\n", pair.name, b.h2, b.h4, b.method);
    if let Some(p) = &b.poincare {
        table.push_str(&format!("  P(t) = {p}\n"));
    }
    if let Some(r) = &p1 {
        table.push_str(&format!("  p1 nonzero: {} ({r})\n", r.nonvanishing));
    }
    let results = json!({"h2": b.h2, "h4": b.h4, "poincare": b.poincare, "betti": b, "p1": p1});
    Ok(Outcome { inputs: json!({"pair": name}), results, failures, table })
}

fn classify_group(name: &str, decimal: bool) -> Result<Outcome, Usage> {
    let cat = Catalog::load()?;
    let c = classify(cat.get(name)?);
    let mut results = serde_json::to_value(&c)?;
    if decimal {
        results["matsushima_bound_approx"] = json!(approx(&Scalar::from_q(perioddomain::classify::matsushima_bound(c.rank))));
    }
    let table = format!(
        "{}: rank {}, K = {}, hodge {}, hermitian {}, m(G) >= {}, verdict {:?}\n",
        c.name,
        c.rank,
        c.maximal_compact,
        c.hodge,
        c.hermitian,
        fmt_q(&c.matsushima_bound),
        c.verdict
    );
    Ok(Outcome { inputs: json!({"group": name}), results, failures: vec![], table })
}

fn verify(cfg: SuiteConfig) -> Outcome {
    let report = verify_all(&cfg);
    let mut table = String::new();
    let mut failures = Vec::new();
    for c in &report.criteria {
        table.push_str(&c.line());
        table.push('\n');
        for f in c.failures.iter().take(3) {
            table.push_str(&format!("    {f}\n"));
        }
        if !c.passed {
            failures.push(format!("criterion {}: {} failures", c.id, c.failure_count));
        }
    }
    Outcome { inputs: json!(cfg), results: json!(report.criteria), failures, table }
}

fn run(cli: &Cli) -> Result<Outcome, Usage> {
    match &cli.command {
        Command::Roots { ty } => roots(ty, cli.decimal),
        Command::ChevalleyVerify(a) => chevalley_verify(a),
        Command::Hodge(a) => hodge(a),
        Command::XiCheck { datum, pairs, seed } => xi_check(datum, *pairs, *seed, cli.decimal),
        Command::Poincare { u, v_marking, input, pair } => poincare(u, v_marking, input, pair),
        Command::Betti { pair } => betti(pair),
        Command::Classify { group } => classify_group(group, cli.decimal),
        Command::VerifyAll { max_rank, pairs, seed } => Ok(verify(SuiteConfig { seed: *seed, max_rank: *max_rank, pairs: *pairs })),
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Roots { .. } => "roots",
        Command::ChevalleyVerify(_) => "chevalley-verify",
        Command::Hodge(_) => "hodge",
        Command::XiCheck { .. } => "xi-check",
        Command::Poincare { .. } => "poincare",
        Command::Betti { .. } => "betti",
        Command::Classify { .. } => "classify",
        Command::VerifyAll { .. } => "verify-all",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if n == 0 || rayon::ThreadPoolBuilder::new().num_threads(n).build_global().is_err() {
            eprintln!("error: invalid --threads {n}");
            return ExitCode::from(2);
        }
    }
    let start = Instant::now();
    let out = match run(&cli) {
        Ok(o) => o,
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let seconds = start.elapsed().as_secs_f64();
    match cli.format {
        Format::Json => {
            let mut report = json!({
                "command": command_name(&cli.command),
                "inputs": out.inputs,
                "results": out.results,
                "failures": out.failures,
            });
            if cli.timing {
                report["timing"] = json!({ "seconds": seconds });
            }
            println!("{}", canonical_json(&report));
        }
        Format::Table => {
            print!("{}", out.table);
            for f in &out.failures {
                println!("failure: {f}");
            }
            if cli.timing {
                println!("time: {seconds:.2}s");
            }
        }
    }
    if out.failures.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
