//! Command-line front end. The binary is a thin wrapper around [`run`]; all
//! computation happens in the library so the subcommands stay declarative.
//!
//! Exit codes: 0 when everything holds, 1 when any checked identity fails,
//! 2 on usage errors.

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::checks::{
    check_classic, check_constant_term, check_prop1, check_prop2, check_z2, random_corpus,
    CheckReport,
};
use crate::diagram::{partitions_up_to, YoungDiagram};
use crate::error::Result;
use crate::invariants::{casimir_direct, casimir_formula, dim_polynomial, dim_stable};
use crate::render::{
    poly_render, rational_latex, report_latex, report_text, CasimirPolyJson, CasimirValueJson,
    DimPolyJson, DimValueJson, Format, ReportJson, TableRowJson,
};
use crate::stable::StableRep;

#[derive(Parser)]
#[command(
    name = "negn",
    version,
    about = "Exact SU(N) stable-family dimensions, Casimir eigenvalues, and N <-> -N duality checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension of D(lambda, tau), at a concrete rank or as a polynomial in N
    Dim(EvalArgs),
    /// Second-order Casimir eigenvalue of D(lambda, tau)
    Casimir(EvalArgs),
    /// Verify a duality identity exactly, on one pair or a seeded corpus
    Verify(VerifyArgs),
    /// Tabulate dimensions, Casimirs and checks for all pairs within an area bound
    Table(TableArgs),
}

#[derive(Args)]
#[command(group(ArgGroup::new("eval").required(true).args(["n", "symbolic"])))]
struct EvalArgs {
    /// Partition for lambda, e.g. "4,2,1"; the empty string is the empty diagram
    #[arg(long)]
    lambda: String,
    /// Partition for tau
    #[arg(long)]
    tau: String,
    /// Evaluate at this rank N (must be at least n_min of the family)
    #[arg(long)]
    n: Option<i64>,
    /// Produce the exact polynomial in N instead of a single value
    #[arg(long)]
    symbolic: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IdentityArg {
    Prop1,
    Prop2,
    Z2,
    Classic,
    ConstTerm,
    All,
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity to verify; "all" runs prop1, prop2 and z2 per subject
    #[arg(value_enum)]
    identity: IdentityArg,
    /// Partition for lambda (for classic, the single diagram to check)
    #[arg(long)]
    lambda: Option<String>,
    /// Partition for tau
    #[arg(long)]
    tau: Option<String>,
    /// Check a deterministic random corpus instead of an explicit pair
    #[arg(long)]
    random: bool,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Largest area sampled for each of lambda and tau
    #[arg(long, default_value_t = 6)]
    max_area: usize,
    /// Number of sampled pairs
    #[arg(long, default_value_t = 100)]
    count: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct TableArgs {
    /// Include every pair with area(lambda) and area(tau) up to this bound
    #[arg(long)]
    max_area: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

/// Parses arguments from the environment, runs one subcommand, and returns
/// the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    init_thread_pool();
    match cli.command {
        Command::Dim(args) => cmd_dim(&args),
        Command::Casimir(args) => cmd_casimir(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Table(args) => cmd_table(&args),
    }
}

/// NEGN_THREADS caps the worker count for table and corpus sweeps.
fn init_thread_pool() {
    if let Some(n) = std::env::var("NEGN_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n > 0)
    {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
}

fn usage_error(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    2
}

fn parse_diagram(label: &str, input: &str) -> std::result::Result<YoungDiagram, String> {
    input.parse().map_err(|e| format!("invalid --{label}: {e}"))
}

fn parse_rep(lambda: &str, tau: &str) -> std::result::Result<StableRep, String> {
    Ok(StableRep::new(
        parse_diagram("lambda", lambda)?,
        parse_diagram("tau", tau)?,
    ))
}

fn cmd_dim(args: &EvalArgs) -> i32 {
    let rep = match parse_rep(&args.lambda, &args.tau) {
        Ok(rep) => rep,
        Err(msg) => return usage_error(&msg),
    };
    if let Some(n) = args.n {
        let value = match dim_stable(&rep, n) {
            Ok(v) => v,
            Err(e) => return usage_error(&e.to_string()),
        };
        match args.format {
            Format::Text | Format::Latex => println!("{value}"),
            Format::Json => println!(
                "{}",
                serde_json::to_string(&DimValueJson {
                    lambda: rep.lambda().rows().to_vec(),
                    tau: rep.tau().rows().to_vec(),
                    n,
                    value: value.to_string(),
                })
                .expect("serializable")
            ),
        }
        0
    } else {
        let poly = match dim_polynomial(&rep) {
            Ok(p) => p,
            Err(e) => {
                eprintln!("error: {e}");
                return 1;
            }
        };
        match args.format {
            Format::Json => println!(
                "{}",
                serde_json::to_string(&DimPolyJson {
                    lambda: rep.lambda().rows().to_vec(),
                    tau: rep.tau().rows().to_vec(),
                    poly: poly.to_json_map(),
                })
                .expect("serializable")
            ),
            format => println!("{}", poly_render(&poly, format)),
        }
        0
    }
}

fn cmd_casimir(args: &EvalArgs) -> i32 {
    let rep = match parse_rep(&args.lambda, &args.tau) {
        Ok(rep) => rep,
        Err(msg) => return usage_error(&msg),
    };
    let poly = casimir_formula(&rep);
    if let Some(n) = args.n {
        let labels = match rep.realize(n) {
            Ok(l) => l,
            Err(e) => return usage_error(&e.to_string()),
        };
        let value = poly.evaluate_int(n).expect("stable rank is nonzero");
        let direct = casimir_direct(&labels);
        let agree = value == direct;
        match args.format {
            Format::Text => {
                let flag = if agree { "agree" } else { "DISAGREE" };
                println!("{value} (direct: {direct}, {flag})");
            }
            Format::Latex => println!("{}", rational_latex(&value)),
            Format::Json => println!(
                "{}",
                serde_json::to_string(&CasimirValueJson {
                    lambda: rep.lambda().rows().to_vec(),
                    tau: rep.tau().rows().to_vec(),
                    n,
                    value: value.to_string(),
                    direct: direct.to_string(),
                    agree,
                })
                .expect("serializable")
            ),
        }
        if agree {
            0
        } else {
            1
        }
    } else {
        match args.format {
            Format::Json => println!(
                "{}",
                serde_json::to_string(&CasimirPolyJson {
                    lambda: rep.lambda().rows().to_vec(),
                    tau: rep.tau().rows().to_vec(),
                    poly: poly.to_json_map(),
                })
                .expect("serializable")
            ),
            format => println!("{}", poly_render(&poly, format)),
        }
        0
    }
}

fn checks_for(identity: IdentityArg, rep: &StableRep) -> Result<Vec<CheckReport>> {
    Ok(match identity {
        IdentityArg::Prop1 => vec![check_prop1(rep)?],
        IdentityArg::Prop2 => vec![check_prop2(rep)?],
        IdentityArg::Z2 => vec![check_z2(rep)?],
        IdentityArg::ConstTerm => vec![check_constant_term(rep)?],
        IdentityArg::All => vec![check_prop1(rep)?, check_prop2(rep)?, check_z2(rep)?],
        IdentityArg::Classic => unreachable!("classic runs on single diagrams"),
    })
}

fn cmd_verify(args: &VerifyArgs) -> i32 {
    if args.random && (args.lambda.is_some() || args.tau.is_some()) {
        return usage_error("--random excludes --lambda/--tau");
    }
    if !args.random && args.lambda.is_none() {
        return usage_error("provide --lambda (and optionally --tau), or --random");
    }

    let reports: Result<Vec<CheckReport>> = if args.identity == IdentityArg::Classic {
        let diagrams: Vec<YoungDiagram> = if args.random {
            random_corpus(args.seed, args.max_area, args.count)
                .into_iter()
                .map(|r| r.lambda().clone())
                .collect()
        } else {
            if args.tau.as_deref().is_some_and(|t| !t.trim().is_empty()) {
                return usage_error("classic checks a single diagram; omit --tau");
            }
            match parse_diagram("lambda", args.lambda.as_deref().unwrap_or("")) {
                Ok(d) => vec![d],
                Err(msg) => return usage_error(&msg),
            }
        };
        diagrams.par_iter().map(check_classic).collect()
    } else {
        let reps: Vec<StableRep> = if args.random {
            random_corpus(args.seed, args.max_area, args.count)
        } else {
            match parse_rep(
                args.lambda.as_deref().unwrap_or(""),
                args.tau.as_deref().unwrap_or(""),
            ) {
                Ok(rep) => vec![rep],
                Err(msg) => return usage_error(&msg),
            }
        };
        reps.par_iter()
            .map(|rep| checks_for(args.identity, rep))
            .collect::<Result<Vec<_>>>()
            .map(|nested| nested.into_iter().flatten().collect())
    };

    let reports = match reports {
        Ok(reports) => reports,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };

    let held = reports.iter().filter(|r| r.holds).count();
    let failed = reports.len() - held;
    match args.format {
        Format::Text => {
            for report in &reports {
                println!("{}", report_text(report));
            }
            println!(
                "summary: {} checked, {held} hold, {failed} fail",
                reports.len()
            );
        }
        Format::Json => {
            let rendered: Vec<ReportJson> = reports.iter().map(ReportJson::from_report).collect();
            if rendered.len() == 1 {
                println!(
                    "{}",
                    serde_json::to_string(&rendered[0]).expect("serializable")
                );
            } else {
                println!(
                    "{}",
                    serde_json::to_string(&rendered).expect("serializable")
                );
            }
        }
        Format::Latex => {
            for report in &reports {
                println!("{}", report_latex(report));
            }
            println!(
                "% summary: {} checked, {held} hold, {failed} fail",
                reports.len()
            );
        }
    }
    if failed == 0 {
        0
    } else {
        1
    }
}

struct TableRow {
    rep: StableRep,
    dim: crate::poly::LaurentPoly,
    casimir: crate::poly::LaurentPoly,
    prop1: bool,
    prop2: bool,
    z2: bool,
}

fn table_row(rep: StableRep) -> Result<TableRow> {
    Ok(TableRow {
        dim: dim_polynomial(&rep)?,
        casimir: casimir_formula(&rep),
        prop1: check_prop1(&rep)?.holds,
        prop2: check_prop2(&rep)?.holds,
        z2: check_z2(&rep)?.holds,
        rep,
    })
}

fn partition_latex(y: &YoungDiagram) -> String {
    if y.is_empty() {
        "\\varnothing".into()
    } else {
        format!("({})", y)
    }
}

fn cmd_table(args: &TableArgs) -> i32 {
    let parts = partitions_up_to(args.max_area);
    let pairs: Vec<StableRep> = parts
        .iter()
        .flat_map(|lam| {
            parts
                .iter()
                .map(move |tau| StableRep::new(lam.clone(), tau.clone()))
        })
        .collect();

    let rows: Result<Vec<TableRow>> = pairs.into_par_iter().map(table_row).collect();
    let rows = match rows {
        Ok(rows) => rows,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };

    let all_hold = rows.iter().all(|r| r.prop1 && r.prop2 && r.z2);
    match args.format {
        Format::Text => {
            for row in &rows {
                let ok = |b: bool| if b { "ok" } else { "FAIL" };
                println!(
                    "{} dim=[{}] casimir=[{}] prop1={} prop2={} z2={}",
                    row.rep,
                    row.dim,
                    row.casimir,
                    ok(row.prop1),
                    ok(row.prop2),
                    ok(row.z2)
                );
            }
        }
        Format::Json => {
            let rendered: Vec<TableRowJson> = rows
                .iter()
                .map(|row| TableRowJson {
                    lambda: row.rep.lambda().rows().to_vec(),
                    tau: row.rep.tau().rows().to_vec(),
                    dim: row.dim.to_json_map(),
                    casimir: row.casimir.to_json_map(),
                    prop1: row.prop1,
                    prop2: row.prop2,
                    z2: row.z2,
                })
                .collect();
            println!(
                "{}",
                serde_json::to_string(&rendered).expect("serializable")
            );
        }
        Format::Latex => {
            println!("\\begin{{tabular}}{{llccc}}");
            println!("$\\lambda,\\tau$ & $\\dim$ & $C$ & P1 & P2 & $Z_2$ \\\\");
            for row in &rows {
                let mark = |b: bool| if b { "+" } else { "-" };
                println!(
                    "${},{}$ & ${}$ & ${}$ & {} & {} & {} \\\\",
                    partition_latex(row.rep.lambda()),
                    partition_latex(row.rep.tau()),
                    row.dim.to_latex(),
                    row.casimir.to_latex(),
                    mark(row.prop1),
                    mark(row.prop2),
                    mark(row.z2)
                );
            }
            println!("\\end{{tabular}}");
        }
    }
    if all_hold {
        0
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_row_for_adjoint() {
        let rep = parse_rep("1", "1").unwrap();
        let row = table_row(rep).unwrap();
        assert_eq!(row.dim.to_string(), "N^2 - 1");
        assert_eq!(row.casimir.to_string(), "2N");
        assert!(row.prop1 && row.prop2 && row.z2);
    }

    #[test]
    fn rep_parsing_rejects_garbage() {
        assert!(parse_rep("4,2,1", "3,1").is_ok());
        assert!(parse_rep("1,2", "").is_err());
        assert!(parse_rep("x", "").is_err());
    }
}
