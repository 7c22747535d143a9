//! Command-line front end. Exit codes: 0 success, 1 a check failed or an
//! audit rule was violated, 2 bad input or usage.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::catalog::{self, CatalogItem};
use crate::error::Error;
use crate::identities::{audit, classify, classify_with, IdentityId};
use crate::io::{self, Document, IoError};
use crate::linear::{LinearMap, Rational};
use crate::structures::{self, BiHomAkivisAlgebra, Structure};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "bihom", version, about = "Exact checks and constructions for BiHom-algebras and BiHom-Akivis algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse a structure file and report its basic properties.
    Validate { file: PathBuf },
    /// Run identity checks and print a report.
    Classify {
        file: PathBuf,
        /// Comma-separated identity names or codes (default: all).
        #[arg(long, value_delimiter = ',')]
        identities: Option<Vec<String>>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Build a derived structure.
    Construct {
        #[command(subcommand)]
        which: Construction,
    },
    /// Yau twist of an untwisted algebra, or the BiHom twist of an Akivis algebra.
    Twist {
        file: PathBuf,
        #[arg(long)]
        alpha: PathBuf,
        #[arg(long)]
        beta: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Twist a BiHom-Akivis algebra by two commuting self-morphisms.
    TwistAkivis {
        file: PathBuf,
        #[arg(long)]
        phi: PathBuf,
        #[arg(long)]
        psi: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write a catalog structure or map.
    Example {
        /// Catalog entry name; omit with --list.
        name: Option<String>,
        /// Parameter assignment such as lambda=1/2 (repeatable).
        #[arg(long = "param", value_name = "KEY=VALUE")]
        params: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// List catalog entries.
        #[arg(long)]
        list: bool,
    },
    /// Classify and check the result against the implication rules.
    Audit {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Subcommand, Debug)]
enum Construction {
    /// Commutator-associator BiHom-Akivis algebra of a BiHom-algebra.
    AssociatedAkivis {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Write { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: IoError },
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn cli_main<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Read { path: path.display().to_string(), source })
}

fn load(path: &Path) -> Result<Document, CliError> {
    io::parse_document(&read(path)?).map_err(|source| CliError::Parse { path: path.display().to_string(), source })
}

fn load_structure(path: &Path) -> Result<Structure, CliError> {
    match load(path)? {
        Document::Structure(s) => Ok(s),
        Document::Map(_) => Err(CliError::Usage(format!("{}: expected an algebra, found a linear map", path.display()))),
    }
}

fn load_map(path: &Path) -> Result<LinearMap, CliError> {
    match load(path)? {
        Document::Map(m) => Ok(m),
        Document::Structure(_) => Err(CliError::Usage(format!("{}: expected a linear-map document", path.display()))),
    }
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), CliError> {
    match output {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Write { path: path.display().to_string(), source }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn run(command: Command) -> Result<i32, CliError> {
    match command {
        Command::Validate { file } => {
            let s = load_structure(&file)?;
            println!("{} (dim {}): valid", s.kind(), s.dim());
            println!("regular: {}", yes_no(s.is_regular()));
            println!("multiplicative: {}", yes_no(s.is_multiplicative()));
            Ok(EXIT_OK)
        }
        Command::Classify { file, identities, format } => {
            let s = load_structure(&file)?;
            let c = match identities {
                Some(names) => {
                    let ids = names.iter().map(|n| IdentityId::from_name(n)).collect::<Result<Vec<_>, _>>()?;
                    classify_with(&s, &ids)
                }
                None => classify(&s),
            };
            let text = match format {
                Format::Text => io::render_report_text(&c, None),
                Format::Json => io::serialize_report(&c, None),
            };
            print!("{text}");
            Ok(if c.any_failure() { EXIT_FAIL } else { EXIT_OK })
        }
        Command::Construct { which: Construction::AssociatedAkivis { file, output } } => {
            let s = load_structure(&file)?;
            let Structure::BiHom(a) = s else {
                return Err(CliError::Usage(format!("associated-akivis needs a bihom-algebra, found {}", s.kind())));
            };
            let k = structures::associated_akivis(&a)?;
            emit(&io::serialize_algebra(&Structure::BiHomAkivis(k)), output.as_deref())?;
            Ok(EXIT_OK)
        }
        Command::Twist { file, alpha, beta, output } => {
            let s = load_structure(&file)?;
            let (alpha, beta) = (load_map(&alpha)?, load_map(&beta)?);
            let result = match &s {
                Structure::BiHom(a) => {
                    if !(a.alpha().is_identity() && a.beta().is_identity()) {
                        return Err(CliError::Usage("twist needs an untwisted algebra (identity maps)".into()));
                    }
                    Structure::BiHom(structures::yau_twist(a.mu(), &alpha, &beta)?)
                }
                Structure::Akivis(k) => Structure::BiHomAkivis(structures::akivis_to_bihom(k, &alpha, &beta)?),
                Structure::BiHomAkivis(_) => {
                    return Err(CliError::Usage("use twist-akivis for bihom-akivis-algebra input".into()));
                }
            };
            emit(&io::serialize_algebra(&result), output.as_deref())?;
            Ok(EXIT_OK)
        }
        Command::TwistAkivis { file, phi, psi, output } => {
            let s = load_structure(&file)?;
            let k = match s {
                Structure::BiHomAkivis(k) => k,
                Structure::Akivis(k) => BiHomAkivisAlgebra::from_akivis(&k),
                Structure::BiHom(_) => {
                    return Err(CliError::Usage("twist-akivis needs an akivis or bihom-akivis algebra".into()));
                }
            };
            let (phi, psi) = (load_map(&phi)?, load_map(&psi)?);
            let result = structures::twist_bihom_akivis(&k, &phi, &psi)?;
            emit(&io::serialize_algebra(&Structure::BiHomAkivis(result)), output.as_deref())?;
            Ok(EXIT_OK)
        }
        Command::Example { name, params, output, list } => {
            if list {
                for e in catalog::ENTRIES {
                    let ps: Vec<String> = e.params.iter().map(|p| format!("{}={}", p.name, p.default)).collect();
                    println!("{:<22} {}{}", e.name, e.description, if ps.is_empty() { String::new() } else { format!(" [{}]", ps.join(", ")) });
                }
                return Ok(EXIT_OK);
            }
            let name = name.ok_or_else(|| CliError::Usage("example needs a name (or --list)".into()))?;
            let mut values = BTreeMap::new();
            for p in &params {
                let (k, v) = p
                    .split_once('=')
                    .ok_or_else(|| CliError::Usage(format!("--param expects KEY=VALUE, got {p:?}")))?;
                let v: Rational = v.trim().parse()?;
                values.insert(k.trim().to_string(), v);
            }
            let doc = match catalog::build(&name, &values)? {
                CatalogItem::Structure(s) => Document::Structure(s),
                CatalogItem::Map(m) => Document::Map(m),
            };
            emit(&io::serialize_document(&doc), output.as_deref())?;
            Ok(EXIT_OK)
        }
        Command::Audit { file, format } => {
            let s = load_structure(&file)?;
            let c = classify(&s);
            let violations = audit(&c, &s);
            let text = match format {
                Format::Text => io::render_report_text(&c, Some(&violations)),
                Format::Json => io::serialize_report(&c, Some(&violations)),
            };
            print!("{text}");
            Ok(if violations.is_empty() { EXIT_OK } else { EXIT_FAIL })
        }
    }
}
