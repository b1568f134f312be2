use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(nm34::cli::run(
        std::env::args_os(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    ))
}
