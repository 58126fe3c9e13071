use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let o = ogz::cli::run_args(std::env::args_os());
    std::io::stdout().write_all(o.stdout.as_bytes()).expect("stdout");
    std::io::stderr().write_all(o.stderr.as_bytes()).expect("stderr");
    ExitCode::from(o.code as u8)
}
