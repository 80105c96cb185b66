use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let code = gf_condorcet::cli::run(
        std::env::args_os(),
        io::stdin(),
        &mut io::stdout(),
        &mut io::stderr(),
    );
    ExitCode::from(code as u8)
}
