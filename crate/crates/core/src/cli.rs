//! Command-line front end. The binary only parses arguments and calls [`run`].

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::contextuality::Verdict;
use crate::io::{
    render_pentad, render_verification, verify, write_census_csv, write_table, ContextFile, Error, Format, Pipeline,
    TableKind, View,
};
use crate::taxonomy::{compare_with_table1, structural_laws, TYPE_COUNT};
use crate::Geometry;

/// Process exit status: 0 success, 1 failed check, 2 usage or input error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    CheckFailed = 1,
    UsageError = 2,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "fano-pentad",
    version,
    about = "Fano pentads, Mermin pentagrams and 10_6 15_2 - 30_3 configurations of W(5,2)"
)]
pub struct Cli {
    /// Worker threads for enumeration and census (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the points, lines, planes or pentads table.
    Enumerate {
        #[arg(value_enum)]
        object: TableKind,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Add GF(2)^6 coordinates next to the Pauli words.
        #[arg(long)]
        coords: bool,
    },
    /// Classify every pentad and write the per-type summary CSV.
    Census {
        #[arg(long)]
        cache: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Store only plane ids in a newly written cache.
        #[arg(long)]
        no_derived: bool,
    },
    /// Compare the census against the 47-row reference table.
    Table1 {
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Check the structural laws over the whole census.
    Laws {
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Check a context file as a Kochen-Specker parity proof.
    Verify {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
    /// Print one pentad.
    Show {
        #[arg(long)]
        pentad: usize,
        #[arg(long = "as", value_enum, default_value = "planes")]
        view: View,
        #[arg(long)]
        cache: Option<PathBuf>,
        #[arg(long)]
        coords: bool,
    },
}

/// Runs a parsed command, writing results to `out` and diagnostics to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> ExitStatus {
    match dispatch(cli, out, err) {
        Ok(status) => status,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            ExitStatus::UsageError
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<ExitStatus, Error> {
    let threads = cli.threads;
    match cli.command {
        Command::Enumerate { object, format, out: path, coords } => {
            let (geometry, pentads) = if object == TableKind::Pentads {
                let run = Pipeline::compute(threads)?;
                (run.geometry, run.pentads)
            } else {
                (Geometry::new()?, Vec::new())
            };
            let n = match &path {
                Some(p) => write_table(&geometry, &pentads, object, format, coords, BufWriter::new(File::create(p)?))?,
                None => write_table(&geometry, &pentads, object, format, coords, &mut *out)?,
            };
            if path.is_some() {
                writeln!(out, "{n}")?;
            } else {
                writeln!(err, "{n}")?;
            }
            Ok(ExitStatus::Success)
        }
        Command::Census { cache, out: path, no_derived } => {
            let run = Pipeline::load_or_build(cache.as_deref(), threads, !no_derived)?;
            let census = run.census();
            match &path {
                Some(p) => write_census_csv(&census, BufWriter::new(File::create(p)?))?,
                None => write_census_csv(&census, &mut *out)?,
            }
            let families: Vec<String> = census.family_sizes.iter().rev().map(|(c, n)| format!("{c}:{n}")).collect();
            writeln!(
                err,
                "{} pentads, {} types, families {{{}}}",
                census.total(),
                census.records.len(),
                families.join(", ")
            )?;
            if census.records.len() == TYPE_COUNT {
                Ok(ExitStatus::Success)
            } else {
                writeln!(err, "expected {TYPE_COUNT} types")?;
                Ok(ExitStatus::CheckFailed)
            }
        }
        Command::Table1 { cache } => {
            let run = Pipeline::load_or_build(cache.as_deref(), threads, true)?;
            let diff = compare_with_table1(&run.census());
            write!(out, "{diff}")?;
            Ok(if diff.is_empty() { ExitStatus::Success } else { ExitStatus::CheckFailed })
        }
        Command::Laws { cache } => {
            let run = Pipeline::load_or_build(cache.as_deref(), threads, true)?;
            let report = structural_laws(&run.signatures);
            write!(out, "{report}")?;
            Ok(if report.all_hold() { ExitStatus::Success } else { ExitStatus::CheckFailed })
        }
        Command::Verify { file, format } => {
            let cs = ContextFile::parse(&std::fs::read_to_string(&file)?)?;
            let v = verify(&cs);
            match format {
                ReportFormat::Text => write!(out, "{}", render_verification(&cs, &v))?,
                ReportFormat::Json => {
                    serde_json::to_writer_pretty(&mut *out, &v)?;
                    writeln!(out)?;
                }
            }
            Ok(if v.report.verdict == Verdict::ValidParityProof {
                ExitStatus::Success
            } else {
                ExitStatus::CheckFailed
            })
        }
        Command::Show { pentad, view, cache, coords } => {
            let run = Pipeline::load_or_build(cache.as_deref(), threads, true)?;
            let p = run.pentad(pentad)?;
            write!(out, "{}", render_pentad(&run.geometry, pentad, p, view, coords)?)?;
            Ok(ExitStatus::Success)
        }
    }
}
