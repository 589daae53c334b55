use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use quartic_bounds::cohomology::BoundFamily;
use quartic_bounds::genus::{CaseResidue, VanishingAssumption, DEFAULT_MU_CAP};
use quartic_bounds::rational::Rational;
use quartic_bounds::reports::{
    cmd_bounds, cmd_chars, cmd_genus, cmd_poly, cmd_verify, render_text, CaseSelection,
    ReportDocument, Tamper, REPORT_SCHEMA, TOOL_VERSION,
};

/// Degree bounds for a smooth surface in P^4 contained in a quartic threefold
/// with finitely many singular points.
#[derive(Debug, Parser)]
#[command(name = "quartic-bounds", version)]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Connected numerical characters of a given degree and length.
    Chars {
        #[arg(long, short)]
        degree: i64,
        #[arg(long, short, default_value_t = 4)]
        sigma: i64,
    },
    /// Maximal genus of curves on a surface of degree s, by every route.
    Genus {
        #[arg(long, short)]
        degree: i64,
        /// Last degree of the table (defaults to --degree).
        #[arg(long)]
        to: Option<i64>,
        #[arg(long, short, default_value_t = 4)]
        surface_degree: i64,
    },
    /// Evaluate a lower-bound polynomial for h^2(I_S(k)).
    Poly {
        /// rho, lambda, phi or full.
        #[arg(long, short)]
        family: String,
        #[arg(long, short)]
        k: i64,
        #[arg(long)]
        delta: i64,
        #[arg(long, short, default_value_t = 0)]
        r: u8,
        /// Geometric genus, only used by `full`; accepts `a` or `a/b`.
        #[arg(long, default_value = "0")]
        pg: String,
    },
    /// Run the derivation and print its trace.
    Bounds(BoundsArgs),
    /// Recompute every golden value.
    Verify {
        /// Corrupt one polynomial (`family:r`) to check the harness fails.
        #[arg(long, hide = true)]
        tamper: Option<String>,
    },
    /// Print the JSON schema of the reports.
    Schema,
}

#[derive(Debug, Args)]
struct BoundsArgs {
    /// Residue class d mod 4.
    #[arg(long, short, conflicts_with = "all", required_unless_present = "all")]
    r: Option<u8>,
    /// All four residue classes and the overall bound.
    #[arg(long)]
    all: bool,
    /// pg0 or omega.
    #[arg(long, short, default_value = "pg0")]
    assumption: String,
    /// Upper bound for the total Milnor number.
    #[arg(long, default_value_t = DEFAULT_MU_CAP)]
    mu_cap: i64,
    /// Worker threads for --all.
    #[arg(long, short, default_value_t = 1)]
    jobs: usize,
}

fn parse_rational(s: &str) -> Option<Rational> {
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let (n, d): (i64, i64) = (n.trim().parse().ok()?, d.trim().parse().ok()?);
    (d != 0).then(|| Rational::new(n, d))
}

fn run(command: Command) -> ReportDocument {
    match command {
        Command::Chars { degree, sigma } => cmd_chars(degree, sigma),
        Command::Genus {
            degree,
            to,
            surface_degree,
        } => cmd_genus(degree, to.unwrap_or(degree), surface_degree),
        Command::Poly {
            family,
            k,
            delta,
            r,
            pg,
        } => {
            let params = json!({ "family": family, "k": k, "delta": delta, "r": r, "pg": pg });
            let parsed = family
                .parse::<BoundFamily>()
                .and_then(|f| Ok((f, CaseResidue::new(r)?)));
            match (parsed, parse_rational(&pg)) {
                (Err(e), _) => ReportDocument::from_error("poly", params, &e),
                (Ok(_), None) => usage("poly", params, format!("cannot parse --pg {pg:?}")),
                (Ok((family, residue)), Some(pg)) => cmd_poly(family, k, delta, residue, pg),
            }
        }
        Command::Bounds(args) => {
            let params = json!({ "r": args.r, "all": args.all, "assumption": args.assumption, "mu_cap": args.mu_cap, "jobs": args.jobs });
            let assumption = match args.assumption.parse::<VanishingAssumption>() {
                Ok(a) => a,
                Err(e) => return ReportDocument::from_error("bounds", params, &e),
            };
            if args.jobs == 0 {
                return usage("bounds", params, "--jobs must be at least 1".to_string());
            }
            let selection = match args.r {
                None => CaseSelection::All,
                Some(r) => match CaseResidue::new(r) {
                    Ok(r) => CaseSelection::One(r),
                    Err(e) => return ReportDocument::from_error("bounds", params, &e),
                },
            };
            cmd_bounds(selection, assumption, args.mu_cap, args.jobs)
        }
        Command::Verify { tamper } => match tamper.as_deref().map(str::parse::<Tamper>).transpose()
        {
            Ok(t) => cmd_verify(t),
            Err(e) => ReportDocument::from_error("verify", json!({ "tamper": tamper }), &e),
        },
        Command::Schema => unreachable!("handled before dispatch"),
    }
}

fn usage(command: &str, params: serde_json::Value, message: String) -> ReportDocument {
    ReportDocument::usage_error(command, params, message)
}

fn main() -> ExitCode {
    let wants_json = std::env::args().any(|a| a == "--json");
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() && wants_json => {
            let doc = usage("usage", json!({}), e.kind().to_string());
            println!("{}", doc.to_json());
            return ExitCode::from(2);
        }
        // clap exits with 2 on usage errors and 0 for --help/--version.
        Err(e) => e.exit(),
    };

    if matches!(cli.command, Command::Schema) {
        print!("{REPORT_SCHEMA}");
        return ExitCode::SUCCESS;
    }

    let doc = run(cli.command);
    if cli.json {
        println!("{}", doc.to_json());
    } else {
        print!("{}", render_text(&doc));
        if doc.exit_code() != 0 {
            eprintln!("quartic-bounds {TOOL_VERSION}: {}", doc.verdict.summary);
        }
    }
    ExitCode::from(doc.exit_code() as u8)
}
