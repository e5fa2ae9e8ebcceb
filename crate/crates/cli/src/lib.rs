//! Library side of the `eigencurve` command: input parsing, analysis and
//! report rendering.

pub mod analysis;
pub mod input;
pub mod text;

use std::path::Path;

pub use analysis::{
    analyze, AnalysisRequest, Format, Report, Status, Subcommand, UsageError, EXIT_CHECK_FAILED, EXIT_DEGENERATE,
    EXIT_OK, EXIT_USAGE,
};
pub use input::{parse_document, parse_input, InputDocument, ParseError};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Usage(#[from] UsageError),
}

/// Reads `path` (`-` for stdin), runs the analysis and renders it.
pub fn run(req: &AnalysisRequest) -> Result<(String, u8), CliError> {
    let bytes = read_input(&req.input)?;
    let l = parse_input(&bytes)?;
    let report = analyze(&l, req)?;
    Ok((render(&report, req.format), report.exit_code()))
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Text => text::render(report),
        Format::Structured => {
            let mut s = serde_json::to_string_pretty(report).expect("reports always serialize");
            s.push('\n');
            s
        }
    }
}

fn read_input(path: &Path) -> Result<Vec<u8>, CliError> {
    let result = if path.as_os_str() == "-" {
        let mut buf = Vec::new();
        std::io::Read::read_to_end(&mut std::io::stdin(), &mut buf).map(|_| buf)
    } else {
        std::fs::read(path)
    };
    result.map_err(|source| CliError::Io { path: path.display().to_string(), source })
}
