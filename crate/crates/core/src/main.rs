use std::process::ExitCode;

use bezout_core::cli::{run, JobConfig};
use clap::Parser;

fn main() -> ExitCode {
    let config = JobConfig::parse();
    match run(&config) {
        Ok(text) => {
            let written = match &config.output {
                Some(path) => std::fs::write(path, format!("{text}\n")),
                None => {
                    println!("{text}");
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!(
                    "{}",
                    serde_json::json!({"error": "Io", "detail": e.to_string()})
                );
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
