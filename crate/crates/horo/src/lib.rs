//! Support library for the `horo` binary: spinor-token parsing, JSON views
//! of the geometric types, and the SVG emitters. Split from the binary so
//! integration tests can drive the same serialization paths byte-for-byte.

pub mod json;
pub mod parse;
pub mod svg;

/// CLI failure taxonomy: parse errors exit 2, everything else exits 1.
#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Domain(horolib::Error),
    Io(std::io::Error),
}

impl From<horolib::Error> for CliError {
    fn from(e: horolib::Error) -> Self {
        Self::Domain(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        Self::Io(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Parse(m) => write!(f, "{m}"),
            Self::Domain(e) => write!(f, "{e}"),
            Self::Io(e) => write!(f, "{e}"),
        }
    }
}
