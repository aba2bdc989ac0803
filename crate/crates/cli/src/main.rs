use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use mrc_core::betti::{self, render, render_json, Format};
use mrc_core::experiment::{graded_betti, run_trials, BatchSummary, PointSet, TrialOptions};
use mrc_core::liaison::{coverage_check, lemma_checks, link_type1, link_type2, GorensteinKind};
use mrc_core::{FamilyParams, PrimeField, DEFAULT_PRIME};

/// Betti tables of points on surfaces in P^3: predictions, Gorenstein links
/// and random experiments over finite fields.
#[derive(Parser)]
#[command(name = "mrc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Predicted Betti table of X_{e,t} on a degree-d surface.
    Predict {
        #[command(flatten)]
        family: Family,
        #[arg(long, default_value = "text")]
        format: Format,
    },
    /// Link X_{e-2,t} (type 1) or X_{e-1,t} (type 2) into socle degree e.
    Link {
        #[command(flatten)]
        family: Family,
        #[arg(long = "type", default_value = "1")]
        kind: GorensteinKind,
        #[arg(long, default_value = "text")]
        format: Format,
    },
    /// Check that type 1 and type 2 links cover every critical surplus.
    Coverage {
        #[arg(long, default_value_t = 4)]
        d: i64,
        #[arg(long, default_value_t = 100)]
        e_max: i64,
        #[arg(long, default_value = "text")]
        format: Format,
    },
    /// Evaluate the surplus-overlap and top-critical-value inequalities.
    Lemmas {
        #[arg(long, default_value_t = 4)]
        d: i64,
        /// Check every degree from --d up to this one.
        #[arg(long)]
        d_max: Option<i64>,
        #[arg(long, default_value_t = 100)]
        e_max: i64,
        #[arg(long, default_value = "text")]
        format: Format,
    },
    /// Compare random point sets on random quartics with the prediction.
    Experiment {
        #[command(flatten)]
        family: Family,
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        /// Master seed; the MRC_SEED environment variable takes precedence.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Record per-trial wall-clock times (makes output non-reproducible).
        #[arg(long)]
        timings: bool,
    },
    /// Graded Betti numbers of the points in a JSON point-set file.
    Betti {
        #[arg(long)]
        points: PathBuf,
        /// Highest degree of the coordinate ring to compute; defaults to the
        /// degree where the Hilbert function stabilises plus 3.
        #[arg(long)]
        window: Option<usize>,
        #[arg(long, default_value = "text")]
        format: Format,
    },
}

#[derive(Args)]
struct Family {
    #[arg(long)]
    d: i64,
    #[arg(long)]
    e: i64,
    #[arg(long)]
    t: i64,
}

#[derive(Args)]
struct FieldArg {
    #[arg(long, default_value_t = DEFAULT_PRIME)]
    p: u64,
}

/// Rendered output plus whether every check it reports passed.
struct Output {
    text: String,
    ok: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, ok: true }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serialisable")
}

fn predict(family: &Family, format: Format) -> anyhow::Result<Output> {
    let params = FamilyParams::new(family.d, family.e, family.t)?;
    let tbl = betti::predict(params)?;
    let text = match format {
        Format::Json => render_json(&tbl, Some(&params)),
        other => render(&tbl, other),
    };
    Ok(Output::ok(text))
}

fn link(family: &Family, kind: GorensteinKind, format: Format) -> anyhow::Result<Output> {
    let Family { d, e, t } = *family;
    let (input_socle, run): (i64, fn(i64, i64, &_) -> _) = match kind {
        GorensteinKind::Type1 => (e - 2, link_type1),
        GorensteinKind::Type2 => (e - 1, link_type2),
        GorensteinKind::Sporadic => bail!("sporadic links are fixed; see the liaison library"),
    };
    let input = FamilyParams::new(d, input_socle, t)?;
    let result = run(d, e, &betti::predict(input)?)?;
    let text = match format {
        Format::Json => to_json(&result),
        other => format!(
            "input X{input}, residual surplus {} (within printed bound: {}, within sharp bound: {})\n\
             residual h-vector {}\n{}",
            result.surplus,
            result.closed_form_bound,
            result.sharp_bound,
            result.residual_hvec,
            render(&result.residual_table, other)
        ),
    };
    Ok(Output::ok(text))
}

fn coverage(d: i64, e_max: i64, format: Format) -> anyhow::Result<Output> {
    let reports = (d + 1..=e_max)
        .map(|e| coverage_check(d, e))
        .collect::<Result<Vec<_>, _>>()?;
    let ok = reports.iter().all(|r| r.covered);
    let text = if format == Format::Json {
        to_json(&reports)
    } else {
        let mut s = String::from("  d    e  type1        type2        target       covered\n");
        for r in &reports {
            s += &format!(
                "{:>3} {:>4}  {:<12} {:<12} {:<12} {}\n",
                r.d,
                r.e,
                format!("[{},{}]", r.type1.0, r.type1.1),
                format!("[{},{}]", r.type2.0, r.type2.1),
                format!("[{},{}]", r.target.0, r.target.1),
                if r.covered { "yes" } else { "NO" }
            );
        }
        s
    };
    Ok(Output { text, ok })
}

fn lemmas(d: i64, d_max: Option<i64>, e_max: i64, format: Format) -> anyhow::Result<Output> {
    let mut reports = Vec::new();
    for d in d..=d_max.unwrap_or(d) {
        for e in d + 1..=e_max {
            reports.push(lemma_checks(d, e)?);
        }
    }
    let ok = reports
        .iter()
        .all(|r| (r.bounds_overlap.holds || r.excluded) && r.reaches_m4.holds);
    let text = if format == Format::Json {
        to_json(&reports)
    } else {
        let mut s = String::from("  d    e  overlap (lhs >= rhs)       m4 reach (lhs >= rhs)\n");
        for r in &reports {
            let verdict = |holds: bool| if holds { "holds" } else { "FAILS" };
            s += &format!(
                "{:>3} {:>4}  {:<5} {:>7} {:>7}{:<9} {:<5} {:>7} {:>7}\n",
                r.d,
                r.e,
                verdict(r.bounds_overlap.holds),
                r.bounds_overlap.lhs,
                r.bounds_overlap.rhs,
                if r.excluded { " excluded" } else { "" },
                verdict(r.reaches_m4.holds),
                r.reaches_m4.lhs,
                r.reaches_m4.rhs,
            );
        }
        s
    };
    Ok(Output { text, ok })
}

#[derive(Serialize)]
struct Batch<'a> {
    summary: BatchSummary,
    reports: &'a [mrc_core::TrialReport],
}

fn experiment(
    family: &Family,
    p: u64,
    trials: usize,
    seed: u64,
    timings: bool,
) -> anyhow::Result<Output> {
    if trials == 0 {
        bail!("--trials must be at least 1");
    }
    let params = FamilyParams::new(family.d, family.e, family.t)?;
    let field = PrimeField::new(p)?;
    let opts = TrialOptions {
        record_timings: timings,
        ..TrialOptions::default()
    };
    let reports = run_trials(params, field, trials, seed, opts)?;
    let summary = BatchSummary::from_reports(params, &reports);
    let ok = summary.passed;
    let text = to_json(&Batch {
        summary,
        reports: &reports,
    });
    Ok(Output { text, ok })
}

fn betti_of_file(path: &PathBuf, window: Option<usize>, format: Format) -> anyhow::Result<Output> {
    let raw = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let ps = PointSet::from_json(&raw)?;
    let window = match window {
        Some(w) => w,
        None => {
            let n = ps.len();
            let stable = (0..)
                .find(|&m| ps.evaluation_matrix(m as u32).rank() >= n)
                .expect("the Hilbert function of a finite set stabilises");
            stable + 3
        }
    };
    let tbl = graded_betti(&ps, window)?;
    Ok(Output::ok(render(&tbl, format)))
}

fn seed_override() -> Result<Option<u64>, String> {
    match std::env::var("MRC_SEED") {
        Ok(s) => s
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| format!("MRC_SEED must be an unsigned integer, got {s:?}")),
        Err(_) => Ok(None),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let seed_env = match seed_override() {
        Ok(s) => s,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let result = match &cli.command {
        Command::Predict { family, format } => predict(family, *format),
        Command::Link {
            family,
            kind,
            format,
        } => link(family, *kind, *format),
        Command::Coverage { d, e_max, format } => coverage(*d, *e_max, *format),
        Command::Lemmas {
            d,
            d_max,
            e_max,
            format,
        } => lemmas(*d, *d_max, *e_max, *format),
        Command::Experiment {
            family,
            field,
            trials,
            seed,
            timings,
        } => experiment(
            family,
            field.p,
            *trials,
            seed_env.unwrap_or(*seed),
            *timings,
        ),
        Command::Betti {
            points,
            window,
            format,
        } => betti_of_file(points, *window, *format),
    };
    let out = match result {
        Ok(out) => out,
        Err(err) => {
            eprintln!("error: {err:#}");
            return ExitCode::from(1);
        }
    };
    let mut text = out.text;
    if !text.ends_with('\n') {
        text.push('\n');
    }
    let written = match &cli.out {
        Some(path) => fs::write(path, &text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    };
    if let Err(err) = written {
        eprintln!("error: {err:#}");
        return ExitCode::from(1);
    }
    if out.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
