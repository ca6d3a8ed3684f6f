//! Input language, runner and report output for the `dissect` tool.
//!
//! An input script binds algebras and involutions by name and then issues
//! commands:
//!
//! ```text
//! algebra g = so(2,3)
//! involution t on g = reflect 1
//! involution s on g = reflect 5
//! check dissecting t s
//! dual cartan g with t with s
//! classify so(1,3)
//! verify paper 4
//! ```

pub mod ast;
pub mod error;
pub mod lexer;
pub mod parser;
pub mod printer;
pub mod report;
pub mod run;

pub use ast::SpecFile;
pub use error::Diagnostic;
pub use parser::parse_spec;
pub use printer::print_spec;
pub use report::{emit, Format, ReportDocument};
pub use run::{run, RunOptions};

/// Parses, validates and runs `text`, digesting the raw input.
pub fn run_text(text: &str, opts: &RunOptions) -> Result<ReportDocument, Diagnostic> {
    let spec = parse_spec(text)?;
    Ok(run::run_with_digest(&spec, opts, run::sha256_hex(text)))
}
