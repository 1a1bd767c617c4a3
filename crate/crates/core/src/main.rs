use std::process::ExitCode;

fn main() -> ExitCode {
    casimir_core::cli::run(std::env::args_os())
}
