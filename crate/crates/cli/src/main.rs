use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, ensure, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use rectpack::compactor::{self, CompactorParams};
use rectpack::par::{with_jobs, Execution};
use rectpack::render::{self, RenderOptions};
use rectpack::results::{write_jsonl, ResultRecord};
use rectpack::search::{self, Classification};
use rectpack::{tables, theory};

#[derive(Parser)]
#[command(name = "rectpack", version, about = "Minimum-area rectangles for n unit circles")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Largest number of monovacancies considered.
    #[arg(long = "dmax", global = true, default_value_t = search::DEFAULT_D_MAX)]
    d_max: u32,
    /// Worker threads; defaults to the number of logical CPUs.
    #[arg(long, global = true, env = "PACK_JOBS")]
    jobs: Option<usize>,
    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// Optimum for a single n.
    Search {
        #[arg(long)]
        n: u64,
    },
    /// Optima for a range of n, one JSON object per line.
    Range {
        #[arg(long, default_value_t = 1)]
        from: u64,
        #[arg(long)]
        to: u64,
    },
    /// Compare the engine against a published table (1 or 2).
    Table {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
    },
    /// Values of n whose optimum involves monovacancies.
    Irregular {
        #[arg(long, default_value_t = 1)]
        from: u64,
        #[arg(long)]
        to: u64,
    },
    /// First n needing holes, by minimum hole count.
    Milestones {
        #[arg(long)]
        to: u64,
    },
    /// Aspect ratios of hexagonal optima as CSV.
    Aspect {
        #[arg(long, default_value_t = 1)]
        from: u64,
        #[arg(long)]
        to: u64,
    },
    /// Closed-form constants, thresholds and convergents.
    Theory {
        #[arg(long, default_value_t = 3)]
        kmax: u32,
    },
    /// Best of several stochastic compactor runs.
    Compact {
        #[arg(long)]
        n: u64,
        /// First seed; runs use seed, seed+1, ...
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        seeds: usize,
        #[arg(long)]
        max_moves: Option<usize>,
    },
    /// SVG of an optimal class packing.
    Render {
        #[arg(long)]
        n: u64,
        /// Index into the sorted argmin set.
        #[arg(long, default_value_t = 0)]
        variant: usize,
        #[arg(long)]
        labels: bool,
    },
}

fn format_or(g: &Global, default: Format, allowed: &[Format]) -> Result<Format> {
    let f = g.format.unwrap_or(default);
    ensure!(allowed.contains(&f), "format {f:?} is not supported by this command");
    Ok(f)
}

fn emit(g: &Global, text: &str) -> Result<()> {
    match &g.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn check_range(from: u64, to: u64) -> Result<()> {
    ensure!(from >= 1, "--from must be at least 1");
    ensure!(from <= to, "empty range {from}..{to}");
    Ok(())
}

fn to_json_line<T: serde::Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string(v)? + "\n")
}

fn run(cli: Cli) -> Result<ExitCode> {
    let g = &cli.global;
    let jobs = match g.jobs {
        Some(0) => bail!("--jobs must be at least 1"),
        Some(j) => j,
        None => std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    let exec = if jobs == 1 { Execution::Serial } else { Execution::available() };
    let d_max = g.d_max;

    match cli.command {
        Command::Search { n } => {
            format_or(g, Format::Json, &[Format::Json])?;
            ensure!(n >= 1, "n must be at least 1");
            let r = search::best(n, d_max);
            emit(g, &to_json_line(&ResultRecord::from_result(&r))?)?;
        }
        Command::Range { from, to } => {
            format_or(g, Format::Json, &[Format::Json])?;
            check_range(from, to)?;
            let results = with_jobs(jobs, || search::scan(from, to, d_max, exec));
            let mut buf = Vec::new();
            write_jsonl(&results, &mut buf)?;
            emit(g, std::str::from_utf8(&buf)?)?;
            let count = |c: Classification| results.iter().filter(|r| r.classification == c).count();
            eprintln!(
                "{from}..{to}: {} results, regular {}, may_hole {}, must_hole {}, non-regular {}",
                results.len(),
                count(Classification::Regular),
                count(Classification::MayHaveHole),
                count(Classification::MustHaveHole),
                results.len() - count(Classification::Regular)
            );
        }
        Command::Table { which } => {
            let f = format_or(g, Format::Csv, &[Format::Csv, Format::Json])?;
            let report = with_jobs(jobs, || tables::reproduce(which, d_max)).context("unknown table")?;
            let text = if f == Format::Json {
                serde_json::to_string_pretty(&report)? + "\n"
            } else {
                let mut s = String::from("n,w,h,h_minus,s,stars,status,stars_match,engine_argmin\n");
                for row in &report.rows {
                    let e = &row.entry;
                    let argmin: Vec<String> = row.engine_argmin.iter().map(|c| c.to_string()).collect();
                    s.push_str(&format!(
                        "{},{},{},{},{},{},{},{},\"{}\"\n",
                        e.n,
                        e.w,
                        e.h,
                        e.h_minus,
                        e.s,
                        e.stars,
                        serde_json::to_value(row.status)?.as_str().unwrap_or("?"),
                        row.stars_match,
                        argmin.join("; ")
                    ));
                }
                s
            };
            emit(g, &text)?;
            eprintln!(
                "table {which}: {} rows, {} match, {} tie-equivalent, {} errata, {} mismatches, {} star mismatches",
                report.rows.len(),
                report.matches,
                report.tie_equivalents,
                report.errata,
                report.mismatches,
                report.star_mismatches
            );
            if !report.passed() {
                eprintln!("table {which}: reproduction FAILED");
                return Ok(ExitCode::from(2));
            }
        }
        Command::Irregular { from, to } => {
            let f = format_or(g, Format::Csv, &[Format::Csv, Format::Json])?;
            check_range(from, to)?;
            let list = with_jobs(jobs, || search::irregular_scan(from, to, d_max, exec));
            let text = match f {
                Format::Json => to_json_line(&list)?,
                _ => list.iter().map(|n| format!("{n}\n")).collect(),
            };
            emit(g, &text)?;
            eprintln!("{from}..{to}: {} irregular values", list.len());
        }
        Command::Milestones { to } => {
            format_or(g, Format::Json, &[Format::Json])?;
            check_range(1, to)?;
            let m = with_jobs(jobs, || search::milestones(to, d_max, exec));
            emit(g, &(serde_json::to_string_pretty(&m)? + "\n"))?;
        }
        Command::Aspect { from, to } => {
            format_or(g, Format::Csv, &[Format::Csv])?;
            check_range(from, to)?;
            let results = with_jobs(jobs, || search::scan(from, to, d_max, exec));
            emit(g, &render::aspect_scatter_csv(&results))?;
        }
        Command::Theory { kmax } => {
            format_or(g, Format::Json, &[Format::Json])?;
            ensure!(kmax >= 1, "--kmax must be at least 1");
            let checks: Vec<_> = (2..=kmax)
                .filter_map(|k| theory::verify_convergent_regularity(k).ok())
                .map(|c| json!({"k": c.entry.k, "n": c.entry.n_k, "holds": c.holds(), "expected": c.expected}))
                .collect();
            let limit = theory::limit_ratio_exact();
            let v = json!({
                "smallest_two_row_m": theory::smallest_two_row_m(),
                "waste": theory::waste_constants(),
                "limit_ratio_exact": limit,
                "reference_densities": theory::reference_densities(),
                "convergents": theory::convergents(kmax),
                "regularity_checks": checks,
            });
            emit(g, &(serde_json::to_string_pretty(&v)? + "\n"))?;
        }
        Command::Compact { n, seed, seeds, max_moves } => {
            let f = format_or(g, Format::Json, &[Format::Json, Format::Csv, Format::Svg])?;
            ensure!(n >= 1, "n must be at least 1");
            let mut template = CompactorParams::new(n, seed);
            if let Some(m) = max_moves {
                template.max_moves = m;
            }
            let b = with_jobs(jobs, || compactor::best_of(n, seeds, &template, exec))?;
            let text = match f {
                Format::Csv => b.best.trace_csv(),
                Format::Svg => render::to_svg(&b.best.realization, &RenderOptions::default())?,
                Format::Json => serde_json::to_string_pretty(&json!({
                    "n": n,
                    "seeds": seeds,
                    "best_seed": b.best.seed,
                    "density": b.best.density,
                    "class_density": b.class_density,
                    "gap": b.gap,
                    "anomaly": b.anomaly,
                    "moves_accepted": b.best.moves_accepted,
                    "terminated": b.best.terminated,
                    "realization": b.best.realization,
                }))? + "\n",
            };
            emit(g, &text)?;
            eprintln!(
                "n={n}: best density {:.6} (seed {}), class optimum {:.6}, gap {:.4}%",
                b.best.density,
                b.best.seed,
                b.class_density,
                100.0 * b.gap
            );
            if b.anomaly {
                eprintln!("warning: compactor beat the class optimum by more than 1e-6");
            }
        }
        Command::Render { n, variant, labels } => {
            format_or(g, Format::Svg, &[Format::Svg])?;
            ensure!(n >= 1, "n must be at least 1");
            let r = search::best(n, d_max);
            let Some(c) = r.argmin.get(variant) else {
                bail!("variant {variant} out of range: n = {n} has {} optimal configs", r.argmin.len());
            };
            let opts = RenderOptions { show_labels: labels, ..Default::default() };
            emit(g, &render::to_svg(&c.coordinates()?, &opts)?)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
