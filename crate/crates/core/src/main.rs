use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, out) = principal_yangian::cli::run(std::env::args_os());
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
        return ExitCode::from(1);
    }
    ExitCode::from(code as u8)
}
