use std::io::Write;
use std::process::ExitCode;

use reflect_vertex_cli::{parse_args, run, CliError};

fn main() -> ExitCode {
    let result = parse_args(std::env::args_os().skip(1)).and_then(|config| {
        let stdout = std::io::stdout();
        let mut lock = stdout.lock();
        let code = run(&config, &mut lock)?;
        lock.flush()?;
        Ok(code)
    });
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(CliError::Clap(e)) => {
            let code = e.exit_code();
            let _ = e.print();
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
