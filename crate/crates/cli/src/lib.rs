//! Command-line front end for `polymix`: body files in, JSON reports out.
//!
//! Exit codes: 0 success, 2 usage or parse error, 3 geometric error (the
//! message starts with the error name), 4 inequality violation.

pub mod args;
pub mod bodyfile;
pub mod commands;
pub mod error;

pub use error::CliError;

use clap::Parser;

/// Runs one invocation and returns `(exit code, stdout, stderr)`.
pub fn run<I, T>(argv: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match args::Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { (0, text, String::new()) } else { (2, String::new(), text) };
        }
    };
    match commands::execute(&cli) {
        Ok(out) => match &cli.out {
            Some(path) => match std::fs::write(path, &out) {
                Ok(()) => (0, String::new(), String::new()),
                Err(e) => (2, String::new(), format!("error: {}: {e}\n", path.display())),
            },
            None => (0, out, String::new()),
        },
        Err(CliError::Violation(bundle)) => {
            let text = serde_json::to_string_pretty(&bundle).expect("serializable");
            (4, String::new(), format!("error: inequality violated\n{text}\n"))
        }
        Err(e) => (e.exit_code(), String::new(), format!("error: {e}\n")),
    }
}
