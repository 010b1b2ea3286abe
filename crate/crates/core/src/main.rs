use std::process::ExitCode;

fn main() -> ExitCode {
    stieltjes::cli::main()
}
