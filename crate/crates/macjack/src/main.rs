use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(macjack::cli::run(std::env::args()) as u8)
}
