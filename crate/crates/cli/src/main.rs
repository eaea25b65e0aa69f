//! Command-line front end for the analyzer: stability verdicts with the
//! verdict encoded in the exit code, destabilizing witness tables for
//! unstable specs, conjugate computation, stable-side convergence stress
//! trials, and the fixed two-variable gap table. Identical inputs produce
//! byte-identical output.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use infstab::{
    check, conjugate, continuity_at_zero, doubling_schedule, generate_witness, min_table,
    parse_spec, run_convergence_trial, ConvexFnSpec, PerturbationFamily, PerturbationKind,
    SpecGen, StabilityVerdict,
};

#[derive(Parser)]
#[command(
    name = "infstab",
    version,
    about = "Exact stability analysis for the infimum of convex functions on intervals"
)]
struct Cli {
    /// Machine-readable JSON output (the default).
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Human-readable text output.
    #[arg(long, global = true)]
    text: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide infimum-stability of a spec; exit 0 stable, 1 unstable.
    Check {
        /// Path to a spec JSON file.
        spec: PathBuf,
    },
    /// Build the destabilizing sequence for an unstable spec and tabulate
    /// the member infima.
    Witness {
        /// Path to a spec JSON file.
        spec: PathBuf,
        /// Largest member index to tabulate.
        #[arg(long, default_value_t = 8)]
        n_max: u32,
    },
    /// Compute the conjugate of a spec (extended to the whole line first)
    /// and write it as a spec file.
    Conjugate {
        /// Path to a spec JSON file.
        spec: PathBuf,
        /// Output path for the conjugate spec.
        out: PathBuf,
    },
    /// Run seeded convergence trials against a stable spec.
    Stress {
        /// Path to a spec JSON file.
        spec: PathBuf,
        /// Seed for the perturbation families.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest member index in the doubling schedule.
        #[arg(long, default_value_t = 1 << 20)]
        n_max: u32,
        /// Families to run, comma-separated.
        #[arg(
            long,
            value_delimiter = ',',
            default_values_t = [FamilyArg::AdditiveShrink, FamilyArg::BreakpointJitter, FamilyArg::TailSteepen]
        )]
        families: Vec<FamilyArg>,
    },
    /// Tabulate the two-variable sequence whose minima over a compact
    /// segment stay at 0 while its pointwise limit is +∞ there.
    R2gap {
        /// Largest member index to tabulate.
        #[arg(long, default_value_t = 10)]
        n_max: u32,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    #[value(name = "additive_shrink")]
    AdditiveShrink,
    #[value(name = "breakpoint_jitter")]
    BreakpointJitter,
    #[value(name = "tail_steepen")]
    TailSteepen,
}

impl std::fmt::Display for FamilyArg {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            FamilyArg::AdditiveShrink => "additive_shrink",
            FamilyArg::BreakpointJitter => "breakpoint_jitter",
            FamilyArg::TailSteepen => "tail_steepen",
        };
        f.write_str(name)
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum OutputMode {
    Json,
    Text,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mode = if cli.text { OutputMode::Text } else { OutputMode::Json };
    match run(cli.command, mode) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn load_spec(path: &PathBuf) -> Result<ConvexFnSpec, String> {
    let text =
        fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_spec(&text).map_err(|e| e.to_string())
}

fn json_line<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize cleanly")
}

fn print_verdict(verdict: &StabilityVerdict, mode: OutputMode) {
    match mode {
        OutputMode::Json => println!("{}", json_line(verdict)),
        OutputMode::Text => {
            let v = serde_json::to_value(verdict).expect("verdict serializes cleanly");
            println!("stable: {}", v["stable"]);
            println!("reason: {}", v["reason"].as_str().unwrap_or("?"));
            println!("specialization: {}", v["specialization"].as_str().unwrap_or("?"));
        }
    }
}

fn run(command: Command, mode: OutputMode) -> Result<u8, String> {
    match command {
        Command::Check { spec } => {
            let spec = load_spec(&spec)?;
            let verdict = check(&spec);
            print_verdict(&verdict, mode);
            Ok(if verdict.stable { 0 } else { 1 })
        }
        Command::Witness { spec, n_max } => {
            if n_max < 1 {
                return Err("--n-max must be at least 1".into());
            }
            let spec = load_spec(&spec)?;
            let verdict = check(&spec);
            let family = generate_witness(&spec, &verdict).map_err(|e| e.to_string())?;
            let schedule: Vec<u32> = (1..=n_max).collect();
            let report = family.inf_gap(&schedule);
            match mode {
                OutputMode::Json => println!("{}", json_line(&report)),
                OutputMode::Text => {
                    let r = serde_json::to_value(&report).expect("report serializes cleanly");
                    println!("family: {}", r["kind"].as_str().unwrap_or("?"));
                    println!("claim: {}", r["claim"].as_str().unwrap_or("?"));
                    println!("base inf: {}", report.base_inf);
                    println!("claim holds from n = {}", report.n_min);
                    for row in &report.rows {
                        println!("n = {:<6} inf = {}", row.n, row.inf);
                    }
                }
            }
            if !report.pass {
                return Err("witness family failed its own certification".into());
            }
            Ok(0)
        }
        Command::Conjugate { spec, out } => {
            let spec = load_spec(&spec)?;
            let conj = conjugate(&spec.extend_to_line()).map_err(|e| e.to_string())?;
            let continuous = continuity_at_zero(&conj);
            let rendered =
                serde_json::to_string_pretty(&conj).expect("conjugate serializes cleanly");
            fs::write(&out, rendered).map_err(|e| format!("{}: {e}", out.display()))?;
            match mode {
                OutputMode::Json => {
                    println!(
                        "{}",
                        json_line(&serde_json::json!({
                            "written": out.display().to_string(),
                            "variable": conj.variable,
                            "continuous_at_zero": continuous,
                        }))
                    );
                }
                OutputMode::Text => {
                    println!("wrote conjugate to {}", out.display());
                    println!("continuous at 0: {continuous}");
                }
            }
            Ok(0)
        }
        Command::Stress { spec, seed, n_max, families } => {
            if n_max < 1 {
                return Err("--n-max must be at least 1".into());
            }
            let spec = load_spec(&spec)?;
            let schedule = doubling_schedule(n_max);
            let mut reports = Vec::new();
            for family_arg in families {
                let kind = match family_arg {
                    FamilyArg::AdditiveShrink => {
                        PerturbationKind::AdditiveShrink(SpecGen::new(seed).finite_plf_line())
                    }
                    FamilyArg::BreakpointJitter => PerturbationKind::BreakpointJitter,
                    FamilyArg::TailSteepen => PerturbationKind::TailSteepen,
                };
                let family = PerturbationFamily::new(kind, seed, spec.clone())
                    .map_err(|e| e.to_string())?;
                let report =
                    run_convergence_trial(&family, &schedule).map_err(|e| e.to_string())?;
                reports.push(report);
            }
            match mode {
                OutputMode::Json => println!("{}", json_line(&reports)),
                OutputMode::Text => {
                    for report in &reports {
                        println!(
                            "family {} (seed {}), base inf {}, settles at n = {}",
                            report.family, report.seed, report.base_inf, report.settle_n
                        );
                        for row in &report.rows {
                            println!(
                                "  n = {:<8} inf = {:<12} gap = {}",
                                row.n,
                                row.inf.to_string(),
                                row.gap
                            );
                        }
                    }
                }
            }
            Ok(0)
        }
        Command::R2gap { n_max } => {
            if n_max < 1 {
                return Err("--n-max must be at least 1".into());
            }
            let table = min_table(n_max);
            match mode {
                OutputMode::Json => println!("{}", json_line(&table)),
                OutputMode::Text => {
                    for row in &table {
                        println!("n = {:<6} min on K = {}", row.n, row.min_on_k);
                    }
                }
            }
            Ok(0)
        }
    }
}
