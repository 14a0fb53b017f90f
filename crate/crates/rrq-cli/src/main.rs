//! `rrq` — command-line harness over the q-series engine.
//!
//! Machine-readable reports go to stdout as line-delimited JSON (one record
//! per line, versioned by a `schema` field); a human summary goes to stderr.
//! The process exits 0 iff every requested check passes.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use rrq::expr::{eval, parse};
use rrq::oracle::{beta_coefficients, count_colored, count_regular, count_t_cores};
use rrq::registry::{
    self, check_claim, claims_catalog, registry_contents, scan_family, verify, CongruenceClaim,
    Relation, Tier, VerificationReport,
};
use rrq::series::ReductionContext;

const SCHEMA: &str = "rrq-report-v1";
const DEFAULT_BUDGET: usize = 50_000;

#[derive(Parser)]
#[command(
    name = "rrq",
    version,
    about = "Exact q-series expansion and verification harness"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand an expression and print its coefficients.
    Expand(ExpandArgs),
    /// Verify identity-registry records (by id, or all of them).
    Verify(VerifyArgs),
    /// Check congruence claims on coefficient progressions.
    Congruence(CongruenceArgs),
    /// Cross-check series coefficients against combinatorial counts.
    Oracle(OracleArgs),
    /// Scan all residue classes of a progression for vanishing candidates.
    Scan(ScanArgs),
    /// Check the power-of-25 progression instances for k = 1..k_max.
    Conjecture(ConjectureArgs),
    /// List registry records, claims, and families.
    List(ListArgs),
}

#[derive(Args)]
struct ExpandArgs {
    /// Expression in the q-series grammar, e.g. "E3^3/E1".
    expr: String,
    /// Number of coefficients to compute.
    #[arg(long, default_value_t = 20)]
    terms: usize,
    /// Reduce coefficients mod M.
    #[arg(long = "mod")]
    modulus: Option<u64>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Record ids (base ids resolve variant groups); "all" for the catalog.
    #[arg(default_value = "all")]
    ids: Vec<String>,
    /// Override the verification depth.
    #[arg(long)]
    terms: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CongruenceArgs {
    /// Claim ids; "all" for the built-in catalog.
    #[arg(default_value = "all")]
    ids: Vec<String>,
    /// Override the number of progression terms checked.
    #[arg(long)]
    count: Option<usize>,
    /// Depth budget (coefficients per series).
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct OracleArgs {
    /// Family name (see `rrq list`).
    #[arg(long)]
    family: String,
    /// Largest n to cross-check.
    #[arg(long, default_value_t = 50)]
    count: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long)]
    family: String,
    /// Progression step A; every residue B < A is tested.
    #[arg(long)]
    step: u64,
    /// Test mod M; omit for exact-zero scanning.
    #[arg(long = "mod")]
    modulus: Option<u64>,
    /// Number of progression terms per residue.
    #[arg(long, default_value_t = 100)]
    count: usize,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ConjectureArgs {
    /// Largest k to test.
    #[arg(long, default_value_t = 3)]
    k_max: usize,
    /// Override the per-instance term count.
    #[arg(long)]
    count: Option<usize>,
    #[arg(long, default_value_t = 50_000_000)]
    budget: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ListArgs {
    #[arg(long)]
    json: bool,
}

#[derive(Serialize)]
struct Witness {
    exponent: usize,
    lhs: String,
    rhs: String,
}

#[derive(Serialize)]
struct Report {
    schema: &'static str,
    id: String,
    n_or_k: usize,
    verdict: String,
    witness: Option<Witness>,
    ms: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
    version: &'static str,
}

impl Report {
    fn passed(&self) -> bool {
        self.verdict == "pass" || self.verdict.starts_with("candidate")
    }

    fn from_verification(rep: VerificationReport, n_or_k: usize) -> Report {
        Report {
            schema: SCHEMA,
            id: rep.id,
            n_or_k,
            verdict: if rep.pass { "pass" } else { "fail" }.to_string(),
            witness: rep.mismatch.map(|m| Witness {
                exponent: m.exponent,
                lhs: m.lhs,
                rhs: m.rhs,
            }),
            ms: rep.elapsed_ms,
            note: rep.note,
            version: env!("CARGO_PKG_VERSION"),
        }
    }

    fn error(id: &str, n_or_k: usize, message: String) -> Report {
        Report {
            schema: SCHEMA,
            id: id.to_string(),
            n_or_k,
            verdict: "error".to_string(),
            witness: None,
            ms: 0,
            note: Some(message),
            version: env!("CARGO_PKG_VERSION"),
        }
    }
}

fn emit(report: &Report, json: bool) {
    if json {
        println!("{}", serde_json::to_string(report).expect("serializable"));
    } else {
        let mut line = format!(
            "{} {} ({}={}, {} ms)",
            match report.verdict.as_str() {
                "pass" => "PASS",
                "fail" => "FAIL",
                "error" => "ERROR",
                other => other,
            },
            report.id,
            if report.verdict.starts_with("candidate") {
                "K"
            } else {
                "n"
            },
            report.n_or_k,
            report.ms
        );
        if let Some(w) = &report.witness {
            line.push_str(&format!(
                " — first mismatch at exponent {}: {} vs {}",
                w.exponent, w.lhs, w.rhs
            ));
        }
        if let Some(n) = &report.note {
            line.push_str(&format!(" [{n}]"));
        }
        println!("{line}");
    }
    if report.verdict != "pass" || report.note.is_some() {
        eprintln!("{}: {}", report.id, report.verdict);
    }
}

fn summarize(reports: &[Report]) -> ExitCode {
    let passed = reports.iter().filter(|r| r.passed()).count();
    let failed = reports.len() - passed;
    eprintln!("{passed} passed, {failed} failed");
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Expand(args) => cmd_expand(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Congruence(args) => cmd_congruence(args),
        Command::Oracle(args) => cmd_oracle(args),
        Command::Scan(args) => cmd_scan(args),
        Command::Conjecture(args) => cmd_conjecture(args),
        Command::List(args) => cmd_list(args),
    }
}

fn cmd_expand(args: ExpandArgs) -> ExitCode {
    if args.terms == 0 {
        eprintln!("--terms must be at least 1");
        return ExitCode::FAILURE;
    }
    let ast = match parse(&args.expr) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::FAILURE;
        }
    };
    let ctx = match args.modulus {
        Some(m) => match ReductionContext::modulo(m) {
            Ok(c) => c,
            Err(e) => {
                eprintln!("{e}");
                return ExitCode::FAILURE;
            }
        },
        None => ReductionContext::exact(),
    };
    let started = Instant::now();
    let series = match eval(&ast, args.terms, &ctx) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::FAILURE;
        }
    };
    if args.json {
        #[derive(Serialize)]
        struct Expansion<'a> {
            schema: &'static str,
            id: &'static str,
            n_or_k: usize,
            verdict: &'static str,
            coefficients: Vec<String>,
            ms: u128,
            version: &'a str,
        }
        let rec = Expansion {
            schema: SCHEMA,
            id: "expand",
            n_or_k: series.order(),
            verdict: "pass",
            coefficients: series.coeffs().iter().map(|c| c.to_string()).collect(),
            ms: started.elapsed().as_millis(),
            version: env!("CARGO_PKG_VERSION"),
        };
        println!("{}", serde_json::to_string(&rec).expect("serializable"));
    } else {
        for (i, c) in series.coeffs().iter().enumerate() {
            println!("q^{i}\t{c}");
        }
    }
    eprintln!(
        "expanded {} coefficients in {} ms",
        series.order(),
        started.elapsed().as_millis()
    );
    ExitCode::SUCCESS
}

fn requested_ids(ids: &[String], all: Vec<String>) -> Vec<String> {
    if ids.len() == 1 && ids[0] == "all" {
        all
    } else {
        ids.to_vec()
    }
}

fn cmd_verify(args: VerifyArgs) -> ExitCode {
    let ids = requested_ids(
        &args.ids,
        registry::base_ids().iter().map(|s| s.to_string()).collect(),
    );
    let mut reports = Vec::new();
    for id in ids {
        let n_or_k = args.terms.unwrap_or_else(|| {
            registry::variants_of(&id)
                .iter()
                .map(|r| r.default_depth)
                .max()
                .unwrap_or(0)
        });
        let report = match verify(&id, args.terms) {
            Ok(rep) => Report::from_verification(rep, n_or_k),
            Err(e) => Report::error(&id, n_or_k, e.to_string()),
        };
        emit(&report, args.json);
        reports.push(report);
    }
    summarize(&reports)
}

fn cmd_congruence(args: CongruenceArgs) -> ExitCode {
    let catalog = claims_catalog();
    let ids = requested_ids(
        &args.ids,
        catalog.iter().map(|c| c.id.clone()).collect(),
    );
    let mut reports = Vec::new();
    for id in ids {
        let report = match catalog.iter().find(|c| c.id == id) {
            Some(claim) => {
                let mut claim = claim.clone();
                let count = args.count.unwrap_or(claim.default_count);
                run_claim(&mut claim, count, args.budget)
            }
            None => Report::error(&id, 0, format!("unknown claim id `{id}`")),
        };
        emit(&report, args.json);
        reports.push(report);
    }
    summarize(&reports)
}

fn run_claim(claim: &mut CongruenceClaim, count: usize, budget: usize) -> Report {
    match check_claim(claim, count, budget) {
        Ok(rep) => {
            let mut report = Report::from_verification(rep, count);
            if report.verdict == "pass" && claim.evidence_only {
                report.verdict = format!("candidate — verified to {count}");
            }
            report
        }
        Err(e) => Report::error(&claim.id, count, e.to_string()),
    }
}

fn cmd_oracle(args: OracleArgs) -> ExitCode {
    let started = Instant::now();
    let report = match oracle_report(&args.family, args.count) {
        Ok(None) => Report {
            schema: SCHEMA,
            id: format!("oracle-{}", args.family),
            n_or_k: args.count,
            verdict: "pass".to_string(),
            witness: None,
            ms: started.elapsed().as_millis(),
            note: None,
            version: env!("CARGO_PKG_VERSION"),
        },
        Ok(Some(w)) => Report {
            schema: SCHEMA,
            id: format!("oracle-{}", args.family),
            n_or_k: args.count,
            verdict: "fail".to_string(),
            witness: Some(w),
            ms: started.elapsed().as_millis(),
            note: None,
            version: env!("CARGO_PKG_VERSION"),
        },
        Err(e) => Report::error(&format!("oracle-{}", args.family), args.count, e),
    };
    emit(&report, args.json);
    summarize(&[report])
}

/// Compare definition-level counts against series coefficients for n <= max_n.
/// Returns the first mismatch, if any.
fn oracle_report(family: &str, max_n: usize) -> Result<Option<Witness>, String> {
    use num_bigint::BigInt;
    let order = max_n + 1;
    if family == "p_beta" {
        // defining sum vs the two eta-quotient windows: 3n+1 and 9n+5
        let b = beta_coefficients(9 * order + 6);
        let ctx = ReductionContext::exact();
        let on_3n1 = eval(&parse("E3^3/E1^2").unwrap(), order, &ctx).map_err(|e| e.to_string())?;
        let on_9n5 =
            eval(&parse("3*E3^6/E1^5").unwrap(), order, &ctx).map_err(|e| e.to_string())?;
        for n in 0..order {
            let direct = b.coeff(3 * n + 1).map_err(|e| e.to_string())?;
            if direct != on_3n1.coeff(n).map_err(|e| e.to_string())? {
                return Ok(Some(Witness {
                    exponent: 3 * n + 1,
                    lhs: direct.to_string(),
                    rhs: on_3n1.coeff(n).unwrap().to_string(),
                }));
            }
            let direct = b.coeff(9 * n + 5).map_err(|e| e.to_string())?;
            if direct != on_9n5.coeff(n).map_err(|e| e.to_string())? {
                return Ok(Some(Witness {
                    exponent: 9 * n + 5,
                    lhs: direct.to_string(),
                    rhs: on_9n5.coeff(n).unwrap().to_string(),
                }));
            }
        }
        return Ok(None);
    }
    let coeffs =
        registry::family_coefficients(family, order, None).map_err(|e| e.to_string())?;
    let count: Box<dyn Fn(usize) -> BigInt> = match family {
        "a3" => Box::new(|n| BigInt::from(count_t_cores(n, 3))),
        "a4" => Box::new(|n| BigInt::from(count_t_cores(n, 4))),
        "b4" => Box::new(|n| count_regular(n, 4)),
        "p_1131" => Box::new(|n| count_colored(n, 3, 1, 1)),
        "p_1232" => Box::new(|n| count_colored(n, 3, 2, 2)),
        "p_1333" => Box::new(|n| count_colored(n, 3, 3, 3)),
        other => return Err(format!("unknown family `{other}`")),
    };
    for (n, c) in coeffs.iter().enumerate() {
        let direct = count(n);
        if &direct != c {
            return Ok(Some(Witness {
                exponent: n,
                lhs: direct.to_string(),
                rhs: c.to_string(),
            }));
        }
    }
    Ok(None)
}

fn cmd_scan(args: ScanArgs) -> ExitCode {
    let started = Instant::now();
    match scan_family(
        &args.family,
        args.step,
        args.modulus,
        args.count,
        args.budget,
    ) {
        Ok(candidates) => {
            let mut reports = Vec::new();
            for c in &candidates {
                let report = Report {
                    schema: SCHEMA,
                    id: c.id.clone(),
                    n_or_k: c.verified_to,
                    verdict: format!("candidate — verified to {}", c.verified_to),
                    witness: None,
                    ms: started.elapsed().as_millis(),
                    note: Some("numerical evidence, not a proof".to_string()),
                    version: env!("CARGO_PKG_VERSION"),
                };
                emit(&report, args.json);
                reports.push(report);
            }
            eprintln!(
                "scan {} step {} ({}): {} candidate(s)",
                args.family,
                args.step,
                match args.modulus {
                    Some(m) => format!("mod {m}"),
                    None => "exact".to_string(),
                },
                candidates.len()
            );
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::FAILURE
        }
    }
}

fn cmd_conjecture(args: ConjectureArgs) -> ExitCode {
    let mut reports = Vec::new();
    for mut claim in registry::conjecture_instances(args.k_max) {
        let count = args.count.unwrap_or(claim.default_count);
        let report = run_claim(&mut claim, count, args.budget);
        emit(&report, args.json);
        reports.push(report);
    }
    summarize(&reports)
}

fn cmd_list(args: ListArgs) -> ExitCode {
    #[derive(Serialize)]
    struct RecordLine<'a> {
        schema: &'static str,
        kind: &'static str,
        id: &'a str,
        tier: &'a str,
        relation: String,
        default_depth: usize,
        anchor: &'a str,
    }
    #[derive(Serialize)]
    struct ClaimLine<'a> {
        schema: &'static str,
        kind: &'static str,
        id: &'a str,
        family: &'a str,
        step: u64,
        offset: u64,
        modulus: Option<u64>,
        default_count: usize,
        evidence_only: bool,
    }
    for r in registry_contents() {
        let relation = match r.relation {
            Relation::Exact => "exact".to_string(),
            Relation::Congruent(m) => format!("mod {m}"),
        };
        if args.json {
            let line = RecordLine {
                schema: SCHEMA,
                kind: "record",
                id: &r.id,
                tier: r.tier.name(),
                relation,
                default_depth: r.default_depth,
                anchor: r.anchor,
            };
            println!("{}", serde_json::to_string(&line).expect("serializable"));
        } else {
            println!(
                "record\t{}\t{}\t{}\tN={}\t{}",
                r.id,
                r.tier.name(),
                relation,
                r.default_depth,
                r.anchor
            );
        }
    }
    for c in claims_catalog() {
        if args.json {
            let line = ClaimLine {
                schema: SCHEMA,
                kind: "claim",
                id: &c.id,
                family: &c.family,
                step: c.step,
                offset: c.offset,
                modulus: c.modulus,
                default_count: c.default_count,
                evidence_only: c.evidence_only,
            };
            println!("{}", serde_json::to_string(&line).expect("serializable"));
        } else {
            println!(
                "claim\t{}\t{}\t{}n+{}\t{}\tK={}{}",
                c.id,
                c.family,
                c.step,
                c.offset,
                match c.modulus {
                    Some(m) => format!("mod {m}"),
                    None => "exact".to_string(),
                },
                c.default_count,
                if c.evidence_only { "\tevidence" } else { "" }
            );
        }
    }
    if !args.json {
        println!("families\t{}", registry::family_names().join(" "));
    }
    let tiers = [Tier::Lemma, Tier::Derived, Tier::Theorem, Tier::ProofStep];
    let counts: Vec<String> = tiers
        .iter()
        .map(|t| {
            format!(
                "{}={}",
                t.name(),
                registry_contents().iter().filter(|r| r.tier == *t).count()
            )
        })
        .collect();
    eprintln!(
        "{} records ({}), {} claims",
        registry_contents().len(),
        counts.join(", "),
        claims_catalog().len()
    );
    ExitCode::SUCCESS
}
