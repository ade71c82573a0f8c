use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let out = horadam_cli::run(std::env::args_os(), horadam_cli::Config::from_env());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(out.code as u8)
}
