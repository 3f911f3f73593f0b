use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use weylbn_cli::args::Cli;
use weylbn_cli::{max_group_from_env, run, Failure, Output, MAX_GROUP_ENV};

fn execute(cli: &Cli) -> Result<Output, Failure> {
    let cap = max_group_from_env(std::env::var(MAX_GROUP_ENV).ok().as_deref())?;
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cli.jobs {
        pool = pool.num_threads(j as usize);
    }
    let pool = pool.build().map_err(|e| Failure { message: e.to_string(), code: 1 })?;
    pool.install(|| run(cli, cap))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(out) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, &out.text),
                None => std::io::stdout().lock().write_all(out.text.as_bytes()),
            };
            if let Err(e) = written {
                if e.kind() == std::io::ErrorKind::BrokenPipe {
                    return ExitCode::from(out.code);
                }
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            ExitCode::from(out.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
