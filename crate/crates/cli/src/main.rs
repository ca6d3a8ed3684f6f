use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use dissect_cli::ast::{Command, Stmt};
use dissect_cli::{emit, run, run_text, Format, RunOptions, SpecFile};

#[derive(Parser)]
#[command(name = "dissect", version, about = "Dissecting involution pairs on real Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for pair evaluation (0 = all cores, 1 = sequential).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run an input script.
    Run { file: PathBuf },
    /// Classify signature-involution pairs on so(p,q).
    Classify {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
    },
    /// Run the full battery of checks up to p + q = max-n.
    VerifyPaper {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
}

fn single(c: Command) -> SpecFile {
    SpecFile {
        stmts: vec![Stmt::Command(c)],
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = RunOptions { jobs: cli.jobs };
    let doc = match cli.command {
        Cmd::Run { file } => {
            let text = match std::fs::read_to_string(&file) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: cannot read {}: {e}", file.display());
                    return ExitCode::from(2);
                }
            };
            match run_text(&text, &opts) {
                Ok(doc) => doc,
                Err(d) => {
                    match d.pos {
                        Some(_) => eprintln!("{}:{d}", file.display()),
                        None => eprintln!("{}: {d}", file.display()),
                    }
                    return ExitCode::from(2);
                }
            }
        }
        Cmd::Classify { p, q } => {
            if p + q < 2 {
                eprintln!("error: classify needs p + q >= 2");
                return ExitCode::from(2);
            }
            run(&single(Command::Classify { p, q }), &opts)
        }
        Cmd::VerifyPaper { max_n } => run(&single(Command::VerifyPaper { max_n }), &opts),
    };
    let out = emit(&doc, cli.format);
    match cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, out) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{out}"),
    }
    ExitCode::from(doc.exit_status as u8)
}
