use std::process::ExitCode;

use clap::Parser;

use siginf_cli::{render_text, run, Cli, State};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = run(&cli);
    if cli.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serializes")
        );
    } else {
        print!("{}", render_text(&report, cli.quiet));
    }
    if report.status.state == State::Error {
        if let Some(msg) = &report.status.message {
            eprintln!("error: {msg}");
        }
    }
    ExitCode::from(report.exit_code() as u8)
}
