//! `matroid-lab`: command-line front end.
//!
//! Exit status: 0 when the command succeeds or the checked property holds,
//! 1 when the property fails, 2 on unreadable or malformed input (including
//! questions the library refuses to decide).

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use matroid_lab::infinite::DEFAULT_SEED;

const FORMATS: &str = "\
FORMATS
  matroid   `matroid <n>`, `elements: <labels>`, then a section `independents:`,
            `bases:` or `circuits:` with one subset per line (`-` = empty set),
            `closure:` with lines `X -> cl(X)`, or `rank:` with `A | B = r`.
  graph     `graph`, `vertices: <labels>`, then `edge <label> <u> <v>` lines.
  sgraph    `sgraph`, a core block as in the graph format, `tail <name>`,
            `cross <t> <t'> <delta> <start> <period> <residues>`,
            `coretail <u> <t> <start> <period> <residues>`,
            `patch + <label> <u> <v>` and `patch - <edge>`. Tail vertices are
            written `t:i`, family edges `@rail:t:i`, `@cross:k:i`, `@coretail:k:i`.
  edgeset   `finite: <labels>` and per family `word <family> <start> <pre> <period>`
            with bit strings (`-` = empty preperiod).
  thinfam   `thinfam p=<prime> [dim=<n>|dim=nat]`, `vec <name> <coord:value ...>`,
            `pvec <name> <start> <preperiod> <period>` (comma-separated values).

EXIT STATUS
  0 success or property holds, 1 property fails, 2 input error or refusal";

#[derive(Parser)]
#[command(name = "matroid-lab", version, about = "Matroid axiom systems, graph matroids and thin sums", after_help = FORMATS)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a matroid file against the axioms of its own system.
    Verify {
        /// Expected system (independents, bases, circuits, closure, rank).
        #[arg(long)]
        system: Option<String>,
        /// For circuits: use the classical strong elimination axiom.
        #[arg(long)]
        classic: bool,
        file: PathBuf,
    },
    /// Rewrite a matroid in another axiom system.
    Convert {
        #[arg(long)]
        to: String,
        file: PathBuf,
    },
    /// Print the dual matroid.
    Dual {
        #[arg(long, default_value = "independents")]
        to: String,
        file: PathBuf,
    },
    /// Print the minor `M / contract \ delete`.
    Minor {
        /// Comma-separated labels to delete.
        #[arg(long, default_value = "")]
        delete: String,
        /// Comma-separated labels to contract.
        #[arg(long, default_value = "")]
        contract: String,
        #[arg(long, default_value = "independents")]
        to: String,
        file: PathBuf,
    },
    /// Matroids of a finite multigraph.
    Graph {
        #[command(subcommand)]
        op: GraphOp,
    },
    /// Structured infinite graphs.
    Sgraph {
        #[command(subcommand)]
        op: SgraphOp,
    },
    /// Thin families of functions into a prime field.
    Thinsum {
        #[command(subcommand)]
        op: ThinOp,
    },
    /// Enumerate all matroids on n labelled elements (n <= 4).
    Enumerate {
        n: usize,
        /// Print every matroid, not only the count.
        #[arg(long)]
        list: bool,
        /// Also count with the independent down-closed filter.
        #[arg(long)]
        cross_check: bool,
        #[arg(long)]
        sequential: bool,
    },
    /// The regression catalog of named graphs.
    Catalog {
        #[command(subcommand)]
        op: CatalogOp,
    },
}

#[derive(Subcommand)]
enum GraphOp {
    /// Circuits of the cycle matroid.
    Cycle { file: PathBuf },
    /// All bonds.
    Bonds { file: PathBuf },
    /// Circuits of the bond matroid.
    BondMatroid { file: PathBuf },
    /// Dual circuits and spanning-tree transversals both equal the bonds.
    Theorem1 { file: PathBuf },
    /// Thin independence of incidence vectors equals acyclicity.
    Thin { file: PathBuf },
}

#[derive(Args)]
struct SetArgs {
    graph: PathBuf,
    /// Edge-set file.
    set: PathBuf,
}

#[derive(Subcommand)]
enum SgraphOp {
    /// Parse and print in canonical form.
    Show { graph: PathBuf },
    /// List the ends with their tails and dominating vertices.
    Ends { graph: PathBuf },
    /// Does a core vertex dominate an end (infinitely many edges into a tail)?
    Bean { graph: PathBuf },
    Independent {
        #[arg(long)]
        kind: String,
        #[command(flatten)]
        s: SetArgs,
    },
    Circuit {
        #[arg(long)]
        kind: String,
        #[command(flatten)]
        s: SetArgs,
    },
    Base {
        #[arg(long)]
        kind: String,
        #[command(flatten)]
        s: SetArgs,
    },
    /// Is the edge set a circle?
    Circle {
        #[command(flatten)]
        s: SetArgs,
    },
    /// Is the edge set a topological spanning tree?
    Tree {
        #[command(flatten)]
        s: SetArgs,
    },
    /// Extend an acirclic edge set to a topological spanning tree.
    Extend {
        #[command(flatten)]
        s: SetArgs,
    },
    /// Thin independence of the incidence vectors of the edge set.
    Thin {
        #[command(flatten)]
        s: SetArgs,
    },
    /// Algebraic-cycle circuits against skew-cut cocircuits on a seeded sample.
    Duality {
        graph: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 24)]
        count: usize,
    },
}

#[derive(Subcommand)]
enum ThinOp {
    /// Run the independence axioms on the thinly independent subsets.
    Verify { file: PathBuf },
    /// Is the listed sub-family thinly independent?
    Independent {
        file: PathBuf,
        #[arg(long, default_value = "")]
        members: String,
    },
    /// Does the target lie in the span of the listed members?
    Span {
        file: PathBuf,
        #[arg(long)]
        target: String,
        #[arg(long, default_value = "")]
        members: String,
    },
    /// Extend an independent sub-family to one spanning the given members.
    Extend {
        file: PathBuf,
        /// Independent starting members.
        #[arg(long, default_value = "")]
        base: String,
        /// Members to span (default: all).
        #[arg(long)]
        within: Option<String>,
        /// Enumeration of the members outside the base.
        #[arg(long)]
        order: Option<String>,
    },
    /// Random thin families over F2 and F3 against the axioms and brute force.
    Sweep {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long)]
        sequential: bool,
    },
    /// Augmentation counterexample on the truncation {1..n}.
    Demo {
        #[arg(long, default_value_t = 10)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum CatalogOp {
    List,
    /// Replay the facts of one entry, or of all.
    Run { name: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(if out.holds { 0 } else { 1 })
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
