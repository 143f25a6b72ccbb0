use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use hyperquat_cli::{run, usage_error, Cli, OutputMode};

/// Best-effort output mode for errors raised before parsing completes.
fn requested_mode(args: &[String]) -> OutputMode {
    let json = args.windows(2).any(|w| w[0] == "--format" && w[1] == "json") || args.iter().any(|a| a == "--format=json");
    if json {
        OutputMode::Json
    } else {
        OutputMode::Text
    }
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let (response, mode) = match Cli::try_parse_from(&args) {
        Ok(cli) => (run(&cli.command, cli.format), cli.format),
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => e.exit(),
        Err(e) => {
            let mode = requested_mode(&args);
            (usage_error(&e.render().to_string(), mode), mode)
        }
    };
    // JSON is always written to stdout; text errors go to stderr
    if mode == OutputMode::Json || response.code == 0 || response.code == 3 {
        print!("{}", response.output);
    } else {
        eprint!("{}", response.output);
    }
    ExitCode::from(response.code as u8)
}
