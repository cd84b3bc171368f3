use std::process::ExitCode;

use clap::Parser;
use florentine_qcss::cli::{run, RunConfig};

fn main() -> ExitCode {
    if let Some(workers) = std::env::var("FQCSS_WORKERS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global();
    }
    let cfg = RunConfig::parse();
    match run(&cfg) {
        Ok(outcome) => {
            let written = match &cfg.out {
                Some(path) => std::fs::write(path, &outcome.output),
                None => {
                    print!("{}", outcome.output);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if outcome.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
