use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = expratio_cli::run(std::env::args_os());
    eprint!("{}", outcome.stderr);
    let mut out = std::io::stdout().lock();
    match out
        .write_all(outcome.stdout.as_bytes())
        .and_then(|_| out.flush())
    {
        Ok(()) => ExitCode::from(outcome.code),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::from(outcome.code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
