//! Error plumbing: every library error is surfaced with the module that owns
//! it and its variant name, and the exit code separates domain failures (1)
//! from usage mistakes (2).

use std::fmt;
use tambara::burnside::BurnsideError;
use tambara::groups::GroupError;
use tambara::ideals::IdealError;
use tambara::io::IoError;
use tambara::rings::RingError;
use tambara::spectra::SpectraError;
use tambara::tambara::TambaraError;

#[derive(Debug)]
pub enum CliError {
    Io(IoError),
    Group(GroupError),
    Ring(RingError),
    Burnside(BurnsideError),
    Tambara(TambaraError),
    Ideal(IdealError),
    Spectra(SpectraError),
    /// A cross-validation performed by the CLI itself came out wrong.
    Check { name: &'static str, message: String },
    /// Bad invocation: flags, missing files, unknown names.
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }

    fn module(&self) -> &'static str {
        match self {
            CliError::Io(_) => "io",
            CliError::Group(_) => "groups",
            CliError::Ring(_) => "rings",
            CliError::Burnside(_) => "burnside",
            CliError::Tambara(_) => "tambara",
            CliError::Ideal(_) => "ideals",
            CliError::Spectra(_) => "spectra",
            CliError::Check { .. } => "check",
            CliError::Usage(_) => "usage",
        }
    }

    fn name(&self) -> String {
        match self {
            CliError::Io(e) => variant_name(&format!("{e:?}")),
            CliError::Group(e) => variant_name(&format!("{e:?}")),
            CliError::Ring(e) => variant_name(&format!("{e:?}")),
            CliError::Burnside(e) => variant_name(&format!("{e:?}")),
            CliError::Tambara(e) => variant_name(&format!("{e:?}")),
            CliError::Ideal(e) => variant_name(&format!("{e:?}")),
            CliError::Spectra(e) => variant_name(&format!("{e:?}")),
            CliError::Check { name, .. } => (*name).to_string(),
            CliError::Usage(_) => "Usage".to_string(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: String = match self {
            CliError::Io(e) => e.to_string(),
            CliError::Group(e) => e.to_string(),
            CliError::Ring(e) => e.to_string(),
            CliError::Burnside(e) => e.to_string(),
            CliError::Tambara(e) => e.to_string(),
            CliError::Ideal(e) => e.to_string(),
            CliError::Spectra(e) => e.to_string(),
            CliError::Check { message, .. } => message.clone(),
            CliError::Usage(m) => m.clone(),
        };
        write!(f, "error [{}::{}]: {}", self.module(), self.name(), body)
    }
}

macro_rules! from_error {
    ($variant:ident, $ty:ty) => {
        impl From<$ty> for CliError {
            fn from(e: $ty) -> CliError {
                CliError::$variant(e)
            }
        }
    };
}

from_error!(Io, IoError);
from_error!(Group, GroupError);
from_error!(Ring, RingError);
from_error!(Burnside, BurnsideError);
from_error!(Tambara, TambaraError);
from_error!(Ideal, IdealError);
from_error!(Spectra, SpectraError);

/// The innermost enum variant name of a `Debug` rendering, so transparent
/// wrappers report the error that actually happened.  Foreign `Error`
/// wrappers (e.g. the JSON parser's) are skipped in favor of the variant
/// that wraps them.
fn variant_name(debug: &str) -> String {
    let idents: Vec<String> = debug
        .split('(')
        .map(|seg| {
            seg.trim_start()
                .chars()
                .take_while(|c| c.is_ascii_alphanumeric() || *c == '_')
                .collect::<String>()
        })
        .filter(|s| !s.is_empty() && s.chars().next().is_some_and(|c| c.is_ascii_uppercase()))
        .collect();
    match idents.iter().rev().find(|s| *s != "Error") {
        Some(s) => s.clone(),
        None => idents.last().cloned().unwrap_or_else(|| "Unknown".to_string()),
    }
}
