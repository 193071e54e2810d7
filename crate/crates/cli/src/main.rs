use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::Parser;
use coxeter_ls::verify::ReportConfig;
use coxeter_ls::{Budget, Check, Family, Group, Shape, Status, VerificationReport, Verifier};

/// Exact verification of induced-character decompositions of the regular
/// and Orlik–Solomon characters of Coxeter groups of types A, B, D.
#[derive(Parser, Debug)]
#[command(name = "ls-verify", version)]
struct Args {
    /// Coxeter family: A, B or D (E, F, H are reported as skipped).
    #[arg(long)]
    family: String,

    /// Rank of the group.
    #[arg(long)]
    rank: usize,

    /// regular, os, graded, shape, poincare or all.
    #[arg(long, default_value = "all")]
    check: String,

    /// Restrict the shape check to one shape, e.g. "2+1", "()" or "2+2^-".
    #[arg(long)]
    shape: Option<String>,

    /// Worker threads (default: all cores).
    #[arg(long)]
    threads: Option<usize>,

    /// Write the JSON report(s) to this path ("-" for stdout).
    #[arg(long)]
    json: Option<PathBuf>,

    /// Largest number of group elements that may be enumerated.
    #[arg(long)]
    budget_elements: Option<u64>,

    /// Largest intersection lattice that may be built.
    #[arg(long)]
    budget_flats: Option<u64>,
}

const FAIL: u8 = 1;
const USAGE: u8 = 2;

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { 0 });
        }
    };
    match run(&args) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(USAGE)
        }
    }
}

fn budget(args: &Args) -> Budget {
    let mut b = Budget::DESK;
    if let Some(m) = args.budget_elements {
        b = b.with_elements(m);
    }
    if let Some(f) = args.budget_flats {
        b = b.with_flats(f);
    }
    b
}

fn checks(name: &str) -> anyhow::Result<Vec<Check>> {
    if name == "all" {
        return Ok(Check::ALL.to_vec());
    }
    Ok(vec![name.parse()?])
}

fn run(args: &Args) -> anyhow::Result<u8> {
    if let Some(k) = args.threads {
        if k == 0 {
            bail!("--threads must be positive");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
            .context("configuring the thread pool")?;
    }
    let checks = checks(&args.check)?;
    let budget = budget(args);

    let family = args.family.trim();
    if matches!(family, "E" | "e" | "F" | "f" | "H" | "h") {
        let group = format!("{}{}", family.to_uppercase(), args.rank);
        let config = ReportConfig {
            threads: rayon::current_num_threads(),
            budget,
            shape: args.shape.clone(),
        };
        let reports: Vec<VerificationReport> = checks
            .iter()
            .map(|c| {
                VerificationReport::skipped(&group, c.name(), "out of desk scale", config.clone())
            })
            .collect();
        println!("{group}: skipped: out of desk scale");
        emit_json(args, &reports)?;
        return Ok(USAGE);
    }

    let family: Family = family.parse()?;
    let group = Group::new(family, args.rank)?;
    let shape = args
        .shape
        .as_deref()
        .map(|s| -> anyhow::Result<Shape> {
            let shape: Shape = s.parse()?;
            shape.validate(&group)?;
            Ok(shape)
        })
        .transpose()?;
    if shape.is_some() && !checks.contains(&Check::Shape) {
        bail!("--shape only applies to the shape check");
    }

    let verifier = Verifier::new(group, budget)?;
    let mut reports = Vec::new();
    for check in checks {
        for report in verifier.run(check, shape.as_ref())? {
            if check == Check::Poincare {
                for line in report.table.iter().flatten() {
                    println!("{line}");
                }
            }
            println!("{report}");
            reports.push(report);
        }
    }
    emit_json(args, &reports)?;
    Ok(if reports.iter().all(|r| r.status == Status::Pass) {
        0
    } else {
        FAIL
    })
}

fn emit_json(args: &Args, reports: &[VerificationReport]) -> anyhow::Result<()> {
    let Some(path) = &args.json else {
        return Ok(());
    };
    let text = if let [single] = reports {
        serde_json::to_string_pretty(single)?
    } else {
        serde_json::to_string_pretty(reports)?
    };
    if path.as_os_str() == "-" {
        println!("{text}");
    } else {
        std::fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}
