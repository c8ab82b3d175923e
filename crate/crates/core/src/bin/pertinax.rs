use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use pertinax::frontend::{check_source, run_source, RunOptions};

#[derive(Parser)]
#[command(name = "pertinax", version, about = "Radicals of finite group actions on graded algebras")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run every task in a script.
    Run {
        script: PathBuf,
        /// Truncation degree for tasks without their own `maxdeg`.
        #[arg(long)]
        maxdeg: Option<u32>,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Print a human-readable summary to stdout.
        #[arg(long)]
        text: bool,
        #[arg(long)]
        threads: Option<usize>,
        /// Seed for randomized task modes.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Parse and validate only.
    Check { script: PathBuf },
}

fn read(path: &PathBuf) -> Result<String, ExitCode> {
    std::fs::read_to_string(path).map_err(|e| {
        eprintln!("pertinax: {}: {e}", path.display());
        ExitCode::from(1)
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match cli.cmd {
        Cmd::Check { script } => {
            let src = match read(&script) {
                Ok(s) => s,
                Err(c) => return c,
            };
            match check_source(&src) {
                Ok(s) => {
                    println!("{}: ok, {} tasks", script.display(), s.tasks().count());
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("{}:{e}", script.display());
                    ExitCode::from(1)
                }
            }
        }
        Cmd::Run { script, maxdeg, json, text, threads, seed } => {
            if let Some(n) = threads {
                if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
                    eprintln!("pertinax: {e}");
                    return ExitCode::from(1);
                }
            }
            let src = match read(&script) {
                Ok(s) => s,
                Err(c) => return c,
            };
            let report = match run_source(&src, &RunOptions { maxdeg, seed }) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("{}:{e}", script.display());
                    return ExitCode::from(1);
                }
            };
            let body = report.to_json_string(true);
            match &json {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, &body) {
                        eprintln!("pertinax: {}: {e}", path.display());
                        return ExitCode::from(1);
                    }
                }
                None if !text => print!("{body}"),
                None => {}
            }
            if text {
                print!("{}", report.to_text());
            }
            for t in &report.tasks {
                if let Err(f) = &t.outcome {
                    eprintln!("{}: task {} ({}, line {}): {}", script.display(), t.index, t.task, t.line, f.message);
                }
            }
            ExitCode::from(report.exit_code() as u8)
        }
    }
}
