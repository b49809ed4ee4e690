use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use foldcheck_cli::{run, write_atomic, Cli, EXIT_INPUT};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => e.exit(),
        Err(e) => {
            let text = e.to_string();
            let first = text.lines().next().unwrap_or("invalid arguments");
            eprintln!("error: usage: {}", first.trim_start_matches("error: "));
            return ExitCode::from(EXIT_INPUT);
        }
    };

    let mut report = run(&cli);
    let batch = cli.command.is_batch();

    if let Some(doc) = &report.document {
        let text = doc.render();
        match cli.command.common().out.as_deref() {
            Some(path) if !batch => {
                if let Err(e) = write_atomic(path, &text) {
                    report.diagnostics.push(format!("error: io: {}: {e}", path.display()));
                    report.exit = EXIT_INPUT;
                }
            }
            _ => {
                let mut stdout = std::io::stdout().lock();
                let _ = stdout.write_all(text.as_bytes());
                let _ = stdout.flush();
            }
        }
    }
    for line in &report.diagnostics {
        eprintln!("{line}");
    }
    ExitCode::from(report.exit)
}
