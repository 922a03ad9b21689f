//! `key=value` output and exit codes.

use std::fmt::Display;
use std::process::ExitCode;

use intlin_core::matrix::format_vector;
use intlin_core::{Certificate, Decision, Error, Verdict, VerdictState};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_UNKNOWN: u8 = 2;
pub const EXIT_PRECONDITION: u8 = 3;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Core(e) if e.is_usage() => EXIT_USAGE,
            CliError::Core(_) => EXIT_PRECONDITION,
        }
    }

    pub fn message(&self) -> String {
        match self {
            CliError::Usage(m) => m.clone(),
            CliError::Core(e) => e.to_string(),
        }
    }
}

pub type CliResult = Result<Report, CliError>;

#[derive(Debug, Default)]
pub struct Report {
    lines: Vec<(String, String)>,
    raw: String,
    unknown: bool,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut r = Report::default();
        r.put("command", command);
        r
    }

    pub fn put(&mut self, key: &str, value: impl Display) -> &mut Self {
        self.lines.push((key.to_string(), value.to_string()));
        self
    }

    pub fn verdict(&mut self, v: &Verdict) -> &mut Self {
        self.put("verdict", v.state);
        if !v.note.is_empty() {
            self.put("note", &v.note);
        }
        self.unknown |= v.state == VerdictState::Unknown;
        self
    }

    pub fn decision(&mut self, d: &Decision) -> &mut Self {
        self.put("verdict", d.answer);
        if let Some(c) = &d.certificate {
            self.certificate(c);
        }
        self
    }

    pub fn certificate(&mut self, c: &Certificate) -> &mut Self {
        match c {
            Certificate::Member(m) => {
                self.put("member", m);
            }
            Certificate::Witness(x) => {
                self.put("witness", format_vector(x));
            }
            Certificate::Orthant { sign, x } => {
                self.put("sign", sign).put("witness", format_vector(x));
            }
            Certificate::SingularMember { sign, x, member } => {
                self.put("sign", sign).put("witness", format_vector(x)).put("member", member);
            }
            Certificate::MemberSystem { matrix, rhs, x } => {
                self.put("member", matrix)
                    .put("rhs", format_vector(rhs))
                    .put("witness", format_vector(x));
            }
            Certificate::Farkas { p, matrix, rhs } => {
                self.put("farkas", format_vector(p))
                    .put("member", matrix)
                    .put("rhs", format_vector(rhs));
            }
            Certificate::EigenPair { member, lambda, vector } => {
                self.put("member", member)
                    .put("lambda", lambda)
                    .put("vector", format_vector(vector));
            }
        }
        self
    }

    /// Verbatim text printed before the `key=value` lines.
    pub fn raw(&mut self, text: String) -> &mut Self {
        self.raw.push_str(&text);
        self
    }

    pub fn render(&self) -> String {
        let mut out = self.raw.clone();
        out.extend(self.lines.iter().map(|(k, v)| format!("{k}={v}\n")));
        out
    }

    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(if self.unknown { EXIT_UNKNOWN } else { EXIT_OK })
    }
}
