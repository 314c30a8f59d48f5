use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use cklein_cli::export::{self, ExportFormat};
use cklein_cli::render::{render_svg, RenderSpec, DEFAULT_CELL_SIZE};
use cklein_cli::report::{
    run_audit, AuditOptions, LanguageKind, ModelKind, MoveReport, OrbitReport, DEFAULT_SEED,
};
use cklein_cli::CliError;
use cklein_core::element::{evaluate, Element};
use cklein_core::geodesic;
use cklein_core::model::{CkModel, GroupModel, KleinModel, Z2Model};
use cklein_core::moves;
use cklein_core::oracle::{BallIndex, DEFAULT_GEODESIC_CAP, DEFAULT_MAX_STATES};
use cklein_core::word::{format_word, parse_word, Word};

/// Words use `a`, `b`, their inverses `A`, `B` (or `a^-1`, `b^-1`) and
/// integer exponents, e.g. "b^-2 a b^-4 a^3". Elements are written "(k,m,n)".
#[derive(Parser)]
#[command(name = "cklein", version, about = "Geodesics in the central extension of the Klein bottle group")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form of a word
    Eval {
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Word length of an element
    Len { element: String },
    /// Standard geodesic representative of an element
    Std { element: String },
    /// Letters that lengthen an element
    Continuations { element: String },
    /// Whether a word is geodesic
    IsGeodesic { word: String },
    /// Closure of a geodesic word under the basic moves
    Orbit {
        word: String,
        #[arg(long, default_value_t = 100_000)]
        cap: usize,
        #[arg(long)]
        json: bool,
    },
    /// Compare the move orbit of an element's standard word with all its geodesics
    #[command(name = "check-theorem2")]
    CheckConnectivity {
        element: String,
        #[arg(long, default_value_t = DEFAULT_GEODESIC_CAP)]
        cap: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_STATES)]
        max_states: usize,
        #[arg(long)]
        json: bool,
    },
    /// Build the Cayley ball of a radius
    Ball {
        radius: u32,
        #[arg(long, value_enum, default_value_t = ModelKind::Ck)]
        model: ModelKind,
        #[arg(long, value_enum)]
        export: Option<ExportFormat>,
        /// Export destination; stdout when absent
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MAX_STATES)]
        max_states: usize,
    },
    /// Run the dead-end, standard-language, continuation and last-letter audits
    Audit {
        #[arg(long, default_value_t = 12)]
        radius: u32,
        #[arg(long, value_enum, default_value_t = ModelKind::Ck)]
        model: ModelKind,
        #[arg(long, value_enum, default_value_t = LanguageKind::Standard)]
        language: LanguageKind,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_MAX_STATES)]
        max_states: usize,
        #[arg(long, default_value_t = DEFAULT_GEODESIC_CAP)]
        cap: usize,
    },
    /// Draw the lattice path of a word as SVG
    Render {
        word: String,
        #[arg(long)]
        out: PathBuf,
        /// Orientation glyph in every cell
        #[arg(long)]
        cells: bool,
        /// Shade the Young decomposition (word must be a geodesic with m, n >= 0)
        #[arg(long)]
        young: bool,
        #[arg(long, default_value_t = DEFAULT_CELL_SIZE)]
        cell_size: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli.command, &mut out).and_then(|()| out.flush().map_err(CliError::from)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn element(text: &str) -> Result<Element, CliError> {
    Ok(text.parse::<Element>()?)
}

fn word(text: &str) -> Result<Word, CliError> {
    Ok(parse_word(text)?)
}

fn json_line<T: serde::Serialize>(out: &mut impl Write, value: &T) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn run(command: Command, out: &mut impl Write) -> Result<(), CliError> {
    match command {
        Command::Eval { word: w, json } => {
            let g = evaluate(&word(&w)?)?;
            if json {
                serde_json::to_writer(&mut *out, &g)?;
                writeln!(out)?;
            } else {
                writeln!(out, "{g}")?;
            }
        }
        Command::Len { element: e } => writeln!(out, "{}", geodesic::length(&element(&e)?)?)?,
        Command::Std { element: e } => {
            writeln!(out, "{}", format_word(&geodesic::std_rep(&element(&e)?)?))?
        }
        Command::Continuations { element: e } => {
            writeln!(out, "{}", geodesic::continuations(&element(&e)?)?)?
        }
        Command::IsGeodesic { word: w } => writeln!(out, "{}", geodesic::is_geodesic(&word(&w)?)?)?,
        Command::Orbit { word: w, cap, json } => {
            let w = word(&w)?;
            if !geodesic::is_geodesic(&w)? {
                return Err(CliError::Parse(format!("{} is not geodesic", format_word(&w))));
            }
            let report = OrbitReport::new(&w, &moves::orbit(&w, cap)?)?;
            if json {
                json_line(out, &report)?;
            } else {
                write!(out, "{}", report.to_text())?;
            }
        }
        Command::CheckConnectivity {
            element: e,
            cap,
            max_states,
            json,
        } => {
            let report = MoveReport::check(&element(&e)?, max_states, cap)?;
            if json {
                json_line(out, &report)?;
            } else {
                write!(out, "{}", report.to_text())?;
            }
            if !report.connected {
                return Err(CliError::AuditFailed(format!(
                    "geodesics of {} are not connected by basic moves",
                    report.element
                )));
            }
        }
        Command::Ball {
            radius,
            model,
            export,
            out: path,
            max_states,
        } => match model {
            ModelKind::Ck => ball(BallIndex::build_with_budget(CkModel, radius, max_states)?, export, path, out)?,
            ModelKind::Klein => {
                ball(BallIndex::build_with_budget(KleinModel, radius, max_states)?, export, path, out)?
            }
            ModelKind::Z2 => ball(BallIndex::build_with_budget(Z2Model, radius, max_states)?, export, path, out)?,
        },
        Command::Audit {
            radius,
            model,
            language,
            seed,
            max_states,
            cap,
        } => {
            let summary = run_audit(&AuditOptions {
                model,
                radius,
                language,
                seed,
                max_states,
                geodesic_cap: cap,
            })?;
            json_line(out, &summary)?;
            if !summary.passed() {
                return Err(CliError::AuditFailed("audit verdict: fail".to_string()));
            }
        }
        Command::Render {
            word: w,
            out: path,
            cells,
            young,
            cell_size,
        } => {
            let svg = render_svg(&RenderSpec {
                word: word(&w)?,
                cell_size,
                cells,
                young,
            })?;
            std::fs::write(&path, svg)?;
        }
    }
    Ok(())
}

fn ball<M: GroupModel>(
    ball: BallIndex<M>,
    format: Option<ExportFormat>,
    path: Option<PathBuf>,
    out: &mut impl Write,
) -> Result<(), CliError> {
    let format = format.or(path.as_ref().map(|_| ExportFormat::Csv));
    match (format, path) {
        (None, _) => {
            writeln!(out, "model {} radius {} states {}", ball.model().name(), ball.radius(), ball.len())?;
            let sizes: Vec<String> = ball.level_sizes().iter().map(usize::to_string).collect();
            writeln!(out, "levels {}", sizes.join(" "))?;
        }
        (Some(format), None) => export::write_rows(&export::rows(&ball), format, &mut *out)?,
        (Some(format), Some(path)) => {
            let file = BufWriter::new(File::create(path)?);
            export::write_rows(&export::rows(&ball), format, file)?;
            writeln!(out, "model {} radius {} states {}", ball.model().name(), ball.radius(), ball.len())?;
        }
    }
    Ok(())
}
