use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, report) = quadloc_cli::run(std::env::args_os());
    if code == quadloc_cli::EXIT_MALFORMED {
        eprint!("{report}");
    } else {
        print!("{report}");
    }
    ExitCode::from(code as u8)
}
