//! `lctkit <command> --config <path> [--out <dir>] [--log-level <lvl>]`

mod config;
mod error;
mod io;
mod logger;
mod run;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use serde_json::json;

use config::{CommandName, RunConfig};
use error::{CliError, Result};

#[derive(Debug, Parser)]
#[command(name = "lctkit", version, about = "Linear canonical transforms and convergence experiments")]
struct Cli {
    command: CommandName,
    #[arg(long)]
    config: PathBuf,
    /// Output directory; overrides `LCTKIT_OUT` and the config's `out`.
    #[arg(long)]
    out: Option<PathBuf>,
    /// error, warn, info, debug or trace; overrides `LCTKIT_LOG`.
    #[arg(long = "log-level")]
    log_level: Option<String>,
}

fn out_dir(cli: &Cli, cfg: &RunConfig) -> PathBuf {
    cli.out
        .clone()
        .or_else(|| std::env::var_os("LCTKIT_OUT").map(PathBuf::from))
        .or_else(|| cfg.out.as_ref().map(|p| cfg.base_dir.join(p)))
        .unwrap_or_else(|| PathBuf::from("lctkit-out"))
}

fn write_outputs(dir: &Path, cfg: &RunConfig, outcome: &run::Outcome) -> Result<Vec<String>> {
    let name = cfg.command.as_str();
    let rep = &outcome.report;
    let mut written = vec![format!("{name}.csv")];
    let csv = match &outcome.signal {
        Some(s) => io::signal_to_csv(s),
        None => io::report_csv(rep),
    };
    io::write(&dir.join(format!("{name}.csv")), &csv)?;
    if let Some(s) = &outcome.signal {
        let file = format!("{name}.signal.json");
        io::write(&dir.join(&file), &io::signal_to_json(s))?;
        written.push(file);
    }
    for c in &rep.curves {
        let file = format!("{name}.{}.dat", c.name);
        io::write(&dir.join(&file), &io::curve_dat(&c.x_label, &c.y_label, &c.points))?;
        written.push(file);
    }
    let sidecar = json!({
        "command": name,
        "config": cfg,
        "experiment": rep.experiment,
        "columns": rep.columns,
        "fits": rep.fits,
        "flags": rep.flags,
        "scalars": rep.scalars,
        "notes": rep.notes,
        "passed": rep.passed(),
        "outputs": written,
    });
    let mut text = serde_json::to_string_pretty(&sidecar).map_err(CliError::schema)?;
    text.push('\n');
    io::write(&dir.join(format!("{name}.json")), &text)?;
    Ok(written)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match RunConfig::load(&cli.config, cli.command) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("lctkit: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let dir = out_dir(&cli, &cfg);
    if let Err(e) = fs::create_dir_all(&dir) {
        eprintln!("lctkit: {}: {e}", dir.display());
        return ExitCode::from(1);
    }
    let level = cli.log_level.clone().or_else(|| std::env::var("LCTKIT_LOG").ok()).unwrap_or_else(|| "info".into());
    let started = logger::parse_level(&level).and_then(|l| logger::init(&dir, l));
    if let Err(e) = started {
        eprintln!("lctkit: {e}");
        return ExitCode::from(e.exit_code() as u8);
    }
    log::info!("{} with config {}", cfg.command.as_str(), cli.config.display());
    let t0 = Instant::now();
    let result = run::execute(&cfg).and_then(|o| {
        let files = write_outputs(&dir, &cfg, &o)?;
        Ok((o, files))
    });
    match result {
        Ok((o, files)) => {
            for (k, v) in &o.report.flags {
                log::info!("flag {k}: {v}");
            }
            log::info!("wrote {} in {:.3} s", files.join(", "), t0.elapsed().as_secs_f64());
            log::logger().flush();
            ExitCode::SUCCESS
        }
        Err(e) => {
            log::error!("{e}");
            log::logger().flush();
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
