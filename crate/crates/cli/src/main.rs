use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use seifert_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(&cli, &mut std::io::stdin().lock());
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(outcome.code as u8)
}
