//! `gia`: JSON graph documents in, JSON reports and DOT diagrams out.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use gia_core::cycles::{condition_k, loops_have_exits_within};
use gia_core::hereditary::{
    enumerate_saturated_hereditary, h_fin_inf, hereditary_saturated_closure,
};
use gia_core::ideals::{enumerate_ideals, hasse_dot, quotient_graph_spec};
use gia_core::ktheory::{k_groups, k_groups_of_ideal, k_groups_of_quotient};
use gia_core::primitive::{
    breaking_vertices, is_primitive_algebra, is_simple_algebra, maximal_tails,
    primitive_ideals_with_sources,
};
use gia_core::{EGraph, IdealSpec, VertexSet, DEFAULT_ENUMERATION_LIMIT};
use serde::Serialize;

pub mod document;
pub mod report;

pub use document::{emit_graph, parse_graph, GraphDocument, ParseError};
use report::*;

#[derive(Debug, Parser)]
#[command(
    name = "gia",
    version,
    about = "Ideal structure and K-theory of graph C*-algebras"
)]
pub struct Cli {
    /// Refuse subset enumeration on graphs with more vertices than this.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUMERATION_LIMIT)]
    pub max_vertices: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Row-finiteness, Conditions (K) and (L), simplicity, primitivity.
    Check(FileArg),
    /// Saturated hereditary vertex sets.
    Hereditary {
        #[command(flatten)]
        file: FileArg,
        /// Also report the saturated hereditary closure of these vertices.
        #[arg(long, value_delimiter = ',')]
        closure: Option<Vec<String>>,
    },
    /// Gauge-invariant ideals J(H, B).
    Ideals {
        #[command(flatten)]
        file: FileArg,
        /// Write the Hasse diagram of the ideal lattice here.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// Maximal tails, breaking vertices and gauge-invariant primitive ideals.
    Primitive(FileArg),
    /// The quotient graph (E/H) minus beta(B), as a graph document.
    Quotient {
        #[command(flatten)]
        file: FileArg,
        #[arg(long, value_delimiter = ',', required = true)]
        h: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        b: Vec<String>,
    },
    /// K0 and K1 of the algebra, of an ideal I_H, or of a quotient.
    Ktheory {
        #[command(flatten)]
        file: FileArg,
        #[arg(long, value_delimiter = ',', conflicts_with = "quotient_h")]
        ideal_h: Option<Vec<String>>,
        #[arg(long, value_delimiter = ',')]
        quotient_h: Option<Vec<String>>,
        #[arg(long, value_delimiter = ',', requires = "quotient_h")]
        quotient_b: Option<Vec<String>>,
    },
}

#[derive(Debug, Args)]
pub struct FileArg {
    /// Graph document (JSON).
    pub file: PathBuf,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error(transparent)]
    Core(#[from] gia_core::Error),
}

impl CliError {
    /// 2 for an exceeded enumeration limit, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(gia_core::Error::LimitExceeded { .. }) => 2,
            _ => 1,
        }
    }
}

fn load(path: &PathBuf) -> Result<EGraph, CliError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: shown.clone(),
        source,
    })?;
    parse_graph(&text).map_err(|source| CliError::Parse {
        path: shown,
        source,
    })
}

fn vertex_set(g: &EGraph, names: &[String]) -> Result<VertexSet, CliError> {
    Ok(g.set(names.iter().map(String::as_str).filter(|n| !n.is_empty()))?)
}

fn emit<T: Serialize>(out: &mut dyn Write, value: &T) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

/// Runs one command, writing the report to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let limit = cli.max_vertices;
    let stdout_err = |source| CliError::Io {
        path: "<stdout>".into(),
        source,
    };
    match &cli.command {
        Command::Check(f) => {
            let g = load(&f.file)?;
            let report = CheckReport {
                row_finite: g.is_row_finite(),
                condition_k: condition_k(&g),
                condition_l: loops_have_exits_within(&g, &g.all())?,
                simple: is_simple_algebra(&g),
                primitive: is_primitive_algebra(&g),
            };
            emit(out, &report).map_err(stdout_err)
        }
        Command::Hereditary { file, closure } => {
            let g = load(&file.file)?;
            let sets = enumerate_saturated_hereditary(&g, limit)?
                .iter()
                .map(|h| {
                    Ok(HereditaryEntry {
                        h: names(&g, h),
                        fin_inf: names(&g, &h_fin_inf(&g, h)?),
                    })
                })
                .collect::<Result<Vec<_>, gia_core::Error>>()?;
            let closure = match closure {
                Some(c) => {
                    let x = vertex_set(&g, c)?;
                    let cl = hereditary_saturated_closure(&g, &x);
                    Some(Closure {
                        of: names(&g, &x),
                        closure: names(&g, &cl),
                    })
                }
                None => None,
            };
            emit(
                out,
                &HereditaryReport {
                    count: sets.len(),
                    sets,
                    closure,
                },
            )
            .map_err(stdout_err)
        }
        Command::Ideals { file, dot } => {
            let g = load(&file.file)?;
            let ideals = enumerate_ideals(&g, limit)?;
            if let Some(path) = dot {
                std::fs::write(path, hasse_dot(&g, &ideals)).map_err(|source| CliError::Io {
                    path: path.display().to_string(),
                    source,
                })?;
            }
            let complete = condition_k(&g);
            let report = IdealsReport {
                banner: complete.then_some(K_BANNER),
                complete,
                count: ideals.len(),
                ideals: ideals.iter().map(|j| IdealEntry::new(&g, j)).collect(),
                dot_file: dot.as_ref().map(|p| p.display().to_string()),
            };
            emit(out, &report).map_err(stdout_err)
        }
        Command::Primitive(f) => {
            let g = load(&f.file)?;
            let tails = maximal_tails(&g, limit)?
                .iter()
                .map(|m| {
                    Ok(TailEntry {
                        vertices: names(&g, m),
                        loops_have_exits: loops_have_exits_within(&g, m)?,
                    })
                })
                .collect::<Result<Vec<_>, gia_core::Error>>()?;
            let complete = condition_k(&g);
            let report = PrimitiveReport {
                tails,
                breaking_vertices: names(&g, &breaking_vertices(&g)),
                label: if complete {
                    COMPLETE_LABEL
                } else {
                    PRIMITIVE_LABEL
                },
                complete,
                primitive_ideals: primitive_ideals_with_sources(&g, limit)?
                    .iter()
                    .map(|p| PrimitiveEntry::new(&g, p))
                    .collect(),
            };
            emit(out, &report).map_err(stdout_err)
        }
        Command::Quotient { file, h, b } => {
            let g = load(&file.file)?;
            let j = IdealSpec::new(&g, vertex_set(&g, h)?, vertex_set(&g, b)?)?;
            let q = quotient_graph_spec(&g, &j)?;
            out.write_all(emit_graph(&q).as_bytes()).map_err(stdout_err)
        }
        Command::Ktheory {
            file,
            ideal_h,
            quotient_h,
            quotient_b,
        } => {
            let g = load(&file.file)?;
            let report = if let Some(h) = ideal_h {
                let h = vertex_set(&g, h)?;
                let mut r = KTheoryReport::new("ideal", &k_groups_of_ideal(&g, &h)?);
                r.h = Some(names(&g, &h));
                r
            } else if let Some(h) = quotient_h {
                let b = quotient_b.as_deref().unwrap_or_default();
                let j = IdealSpec::new(&g, vertex_set(&g, h)?, vertex_set(&g, b)?)?;
                let mut r = KTheoryReport::new("quotient", &k_groups_of_quotient(&g, &j)?);
                r.h = Some(names(&g, j.h()));
                r.b = Some(names(&g, j.b()));
                r
            } else {
                KTheoryReport::new("algebra", &k_groups(&g))
            };
            emit(out, &report).map_err(stdout_err)
        }
    }
}
