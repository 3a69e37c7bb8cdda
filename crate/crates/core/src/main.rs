use std::process::ExitCode;

use paving_ehrhart::cli::{run, EXIT_USAGE};

fn main() -> ExitCode {
    let (code, out) = run(std::env::args_os());
    if code == EXIT_USAGE {
        eprint!("{out}");
    } else {
        print!("{out}");
    }
    ExitCode::from(code as u8)
}
