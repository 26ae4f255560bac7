use clap::error::ErrorKind;
use clap::Parser;
use sloop_cli::commands::{run, Cli};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return;
        }
        Err(e) => {
            // Usage problems are input errors (exit 1); exit 2 is reserved
            // for search-bound refusals.
            eprint!("{e}");
            std::process::exit(1);
        }
    };
    match run(cli) {
        Ok(output) => print!("{output}"),
        Err(e) => {
            eprintln!("error: {}", e.message);
            std::process::exit(e.code);
        }
    }
}
