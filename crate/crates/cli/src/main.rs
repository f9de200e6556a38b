use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use fracctl_cli::{run, Config, RunError, Subcommand};

/// Spectral simulation and exterior control of space-time fractional diffusion.
#[derive(Parser, Debug)]
#[command(name = "fracctl", version)]
struct Cli {
    /// What to run.
    #[arg(value_enum, required_unless_present = "print_defaults")]
    command: Option<Subcommand>,

    /// TOML config; defaults apply to every missing key.
    #[arg(long)]
    config: Option<PathBuf>,

    /// Output directory (overrides `run.out`).
    #[arg(long)]
    out: Option<PathBuf>,

    /// Worker threads for mode-parallel work.
    #[arg(long)]
    threads: Option<usize>,

    /// Print the documented default config and exit.
    #[arg(long)]
    print_defaults: bool,

    /// Cache directory for eigenbases and trace tables (overrides `run.cache`).
    #[arg(long)]
    cache: Option<PathBuf>,
}

fn load(cli: &Cli) -> Result<Config, RunError> {
    let mut cfg = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| RunError::Config(vec![format!("{}: {e}", path.display())]))?;
            Config::from_toml(&text).map_err(|e| RunError::Config(vec![e]))?
        }
        None => Config::default(),
    };
    if let Some(out) = &cli.out {
        cfg.run.out = out.to_string_lossy().into_owned();
    }
    if let Some(cache) = &cli.cache {
        cfg.run.cache = cache.to_string_lossy().into_owned();
    }
    Ok(cfg)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.print_defaults {
        print!("{}", Config::defaults_dump());
        return ExitCode::SUCCESS;
    }
    if let Some(n) = cli.threads {
        if n == 0 || rayon::ThreadPoolBuilder::new().num_threads(n).build_global().is_err() {
            eprintln!("invalid --threads {n}");
            return ExitCode::from(2);
        }
    }
    let cmd = cli.command.expect("clap enforces a command");
    let result = load(&cli).and_then(|cfg| run(cmd, &cfg));
    match result {
        Ok(summary) => {
            for (name, c) in &summary.checks {
                let mark = if c.passed { "ok  " } else { "FAIL" };
                println!("{mark} [{name}] {}: {:.3e} (tolerance {:.1e})", c.name, c.value, c.tolerance);
            }
            println!("artifacts in {}", summary.out_dir.display());
            ExitCode::from(summary.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
