//! The `codebounds` command line.
//!
//! [`run`] parses arguments, dispatches and renders, but never touches the
//! process: the caller prints [`Outcome::stdout`] and [`Outcome::stderr`] and exits
//! with [`Outcome::code`].
//!
//! Exit codes: 0 ok, 1 usage, 2 domain or input error, 3 size cap, timeout or
//! non-convergence, 4 a failed audit or verification under `--strict`.

mod args;
mod commands;

use std::ffi::OsString;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;

use crate::bounds::Table;
use crate::error::Error;

pub use args::{Cli, Command, Family, Format};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;
pub const EXIT_STRICT: i32 = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
pub(crate) enum CliError {
    Usage(String),
    Lib(Error),
    Io(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Io(_) => EXIT_DOMAIN,
            CliError::Lib(e) => match e {
                Error::VertexCap { .. }
                | Error::Timeout(_)
                | Error::GridTooLarge { .. }
                | Error::NonConvergence { .. } => EXIT_LIMIT,
                _ => EXIT_DOMAIN,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Usage(m) | CliError::Io(m) => m.clone(),
            CliError::Lib(e) => e.to_string(),
        }
    }
}

/// What a subcommand produced, before formatting.
pub(crate) struct Output {
    pub json: serde_json::Value,
    pub table: Table,
    /// Printed above the table in text output.
    pub header: Option<String>,
    /// Emitted verbatim regardless of `--format`.
    pub raw: Option<String>,
    pub notes: Vec<String>,
    pub code: i32,
}

impl Output {
    pub fn new(json: serde_json::Value, table: Table) -> Self {
        Output {
            json,
            table,
            header: None,
            raw: None,
            notes: Vec::new(),
            code: EXIT_OK,
        }
    }

    pub fn header(mut self, h: impl Into<String>) -> Self {
        self.header = Some(h.into());
        self
    }

    fn render(&self, format: Format) -> String {
        if let Some(raw) = &self.raw {
            return raw.clone();
        }
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("JSON values serialize");
                s.push('\n');
                s
            }
            Format::Csv => self.table.to_csv(),
            Format::Md => self.table.to_markdown(),
            Format::Text => match &self.header {
                Some(h) if self.table.rows.is_empty() => format!("{h}\n"),
                Some(h) => format!("{h}\n\n{}", self.table.to_text()),
                None => self.table.to_text(),
            },
        }
    }
}

/// Runs one command line. The first item is the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                },
                ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                },
                _ => Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: format!("{}\n", text.lines().next().unwrap_or("error: invalid arguments")),
                },
            };
        }
    };
    let start = Instant::now();
    let result = commands::dispatch(&cli.command);
    let mut outcome = match result {
        Ok(out) => {
            let mut stderr = String::new();
            for n in &out.notes {
                stderr.push_str(&format!("note: {n}\n"));
            }
            Outcome {
                code: out.code,
                stdout: out.render(cli.format),
                stderr,
            }
        }
        Err(e) => Outcome {
            code: e.code(),
            stdout: String::new(),
            stderr: format!("error: {}\n", e.message()),
        },
    };
    if cli.timing {
        outcome
            .stderr
            .push_str(&format!("elapsed: {:.3} s\n", start.elapsed().as_secs_f64()));
    }
    outcome
}
