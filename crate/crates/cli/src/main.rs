use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use qden_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let env = match run(&cli) {
        Ok(env) => env,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let mut stdout = std::io::stdout().lock();
    if let Err(e) = stdout.write_all(env.render(cli.format).as_bytes()) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return ExitCode::SUCCESS;
        }
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    ExitCode::SUCCESS
}
