mod commands;

use clap::{Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "veerkit",
    version,
    about = "Taut and veering ideal triangulations and their mutations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a .vrt file and check gluings, tautness and the veering structure.
    Validate { file: PathBuf },
    /// Canonical signature of a triangulation.
    Signature {
        file: PathBuf,
        /// Ignore coorientations.
        #[arg(long)]
        plain: bool,
    },
    /// Enumerate weight systems with bounded face weights.
    Weights {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        cap: u64,
        /// Keep only systems whose carried surface is connected.
        #[arg(long)]
        connected: bool,
        /// Print `.wts` lines instead of the summary.
        #[arg(long)]
        emit_wts: bool,
    },
    /// Assemble the carried surface of a weight system.
    Surface {
        file: PathBuf,
        #[arg(long)]
        weights: PathBuf,
        /// Which `w` line of the weights file to use.
        #[arg(long, default_value_t = 0)]
        index: usize,
        /// Dump the surface in `.srf` form.
        #[arg(long)]
        emit_srf: bool,
    },
    /// Orientation-preserving automorphisms of a carried surface.
    Auts {
        file: PathBuf,
        #[arg(long)]
        weights: PathBuf,
        #[arg(long, default_value_t = 0)]
        index: usize,
        /// Include automorphisms that do not preserve the stable track.
        #[arg(long)]
        all: bool,
        /// Print the group in `.aut` form.
        #[arg(long)]
        emit_aut: bool,
    },
    /// Edge product disks and whether automorphisms misalign them.
    Disks {
        file: PathBuf,
        #[arg(long)]
        weights: PathBuf,
        #[arg(long, default_value_t = 0)]
        index: usize,
    },
    /// Mutate along a carried surface by a named automorphism.
    Mutate {
        file: PathBuf,
        #[arg(long)]
        weights: PathBuf,
        #[arg(long, default_value_t = 0)]
        index: usize,
        /// Name of an automorphism in the `.aut` file.
        #[arg(long)]
        aut: String,
        /// Defaults to the weights file with extension `.aut`.
        #[arg(long)]
        aut_file: Option<PathBuf>,
        /// Write the mutant as a `.vrt` file.
        #[arg(long)]
        emit_vrt: Option<PathBuf>,
    },
    /// Shortest path of 2-3 and 3-2 moves between two triangulations.
    PachnerConnect {
        from: PathBuf,
        to: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_depth: usize,
        #[arg(long, default_value_t = veerkit::trimesh::DEFAULT_NODE_BUDGET)]
        budget: usize,
    },
    /// First homology of the underlying manifold.
    Homology { file: PathBuf },
    /// Edge-orientability of the stable branched surface.
    EdgeOrient { file: PathBuf },
    /// Layered, measurable or nonmeasurable.
    Classify { file: PathBuf },
    /// The mutant square of the figure-eight sibling.
    ReportFigure7,
    /// Rebuild the transcribed triangulations and the files derived from them.
    Reconstruct {
        /// Write the generated data files into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Compare the generated data files with those in this directory.
        #[arg(long)]
        check: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
