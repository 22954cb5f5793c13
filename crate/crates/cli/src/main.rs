use anyhow::Result;
use curvecross_cli::{run, CliError};
use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    match run(std::env::args()) {
        Ok(out) => match write_out(&out) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e:#}");
                ExitCode::from(1)
            }
        },
        Err(e @ CliError::Usage(_)) => {
            let code = e.exit_code();
            if let CliError::Usage(inner) = e {
                let _ = inner.print();
            }
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {:#}", anyhow::Error::new(e));
            ExitCode::from(1)
        }
    }
}

fn write_out(text: &str) -> Result<()> {
    let mut stdout = std::io::stdout().lock();
    stdout.write_all(text.as_bytes())?;
    stdout.flush()?;
    Ok(())
}
