//! Command-line front end: argument definitions and dispatch.
//!
//! [`run`] takes the argument vector and the three standard streams, so the
//! binary and the tests drive exactly the same code.

mod commands;
mod input;
mod report;

use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use input::{named_graph, read_graph_arg};
pub use report::Report;

#[derive(Debug, Parser)]
#[command(name = "combkit", version, about = "Exact combinatorics, generating functions and graph algorithms")]
pub struct Cli {
    /// Print one JSON document `{"command": ..., "result": ...}` instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Selection counts, factorials, multinomials, inclusion-exclusion.
    Count {
        #[command(subcommand)]
        what: CountCmd,
    },
    /// Rows 0..=ROWS of Pascal's triangle, optionally reduced mod M.
    Pascal {
        rows: usize,
        #[arg(long = "mod")]
        modulus: Option<u64>,
    },
    /// Number of derangements of N objects.
    Derange {
        n: u64,
        #[arg(long, value_enum, default_value_t = DerangeMethod::Product)]
        method: DerangeMethod,
    },
    /// Catalan number C_N, or the table C_0..C_N.
    Catalan {
        n: u64,
        #[arg(long)]
        table: bool,
    },
    /// Divisors, divisor count and sum, Mobius value.
    Divisors { n: u64 },
    /// Five-card poker hand counts.
    Poker {
        /// e.g. full_house; all ten hands when omitted.
        hand: Option<String>,
    },
    /// Classic sequences: Fibonacci, stairs, Hanoi, regions.
    Seq {
        #[command(subcommand)]
        what: SeqCmd,
    },
    /// Closed form of a linear recurrence with constant coefficients.
    SolveRec {
        #[command(flatten)]
        rec: RecArgs,
        /// Also list terms up to this index.
        #[arg(long)]
        terms: Option<u64>,
    },
    /// Truncated power series arithmetic.
    Series {
        #[command(subcommand)]
        what: SeriesCmd,
    },
    /// Ways to pay with a limited (or unlimited) bag of coins.
    Change {
        /// Comma list of VALUExCOUNT, COUNT may be `inf`.
        #[arg(long)]
        coins: String,
        #[arg(long)]
        amount: Option<usize>,
        /// Truncation order, required with unlimited coins.
        #[arg(long)]
        order: Option<usize>,
    },
    /// Integer partition counts.
    Partitions {
        n: usize,
        #[arg(long, value_enum, default_value_t = PartitionKind::All)]
        kind: PartitionKind,
    },
    /// Graph queries.
    Graph {
        #[command(subcommand)]
        what: GraphCmd,
    },
    /// Walk counts from powers of the adjacency matrix.
    Walks {
        /// Graph file, `-` for stdin, or `@name`.
        graph: String,
        #[arg(long)]
        len: u64,
        #[arg(long)]
        from: Option<usize>,
        #[arg(long)]
        to: Option<usize>,
    },
    /// Tree counts and tree constructions.
    Tree {
        #[command(subcommand)]
        what: TreeCmd,
    },
    /// Minimum spanning tree of a weighted graph (Kruskal).
    Mst { graph: String },
    /// Traveling salesman tour on a complete weighted graph.
    Tsp {
        graph: String,
        /// Start vertex of the tree-shortcut tour.
        #[arg(long, default_value_t = 0)]
        start: usize,
        /// Exhaustive optimum instead of the tree shortcut.
        #[arg(long)]
        exact: bool,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Matchings in a graph.
    Match {
        graph: String,
        /// Greedy maximal matching instead of a maximum one.
        #[arg(long)]
        greedy: bool,
        /// Comma list of left vertices: report a Hall violator.
        #[arg(long)]
        hall: Option<String>,
    },
    /// Two-color Ramsey numbers by brute force.
    Ramsey {
        m0: usize,
        m1: usize,
        /// Largest n to try.
        #[arg(long, default_value_t = 7)]
        cap: usize,
        /// Only test this n and show a witness coloring if one exists.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Vertex coloring, or the color of a point in a circle arrangement.
    Color {
        /// Graph file, `-` or `@name`.
        #[arg(required_unless_present = "circles")]
        graph: Option<String>,
        /// Find a K-coloring instead of the chromatic number.
        #[arg(long)]
        k: Option<usize>,
        /// Greedy coloring along a degeneracy order.
        #[arg(long)]
        degeneracy: bool,
        /// Semicolon list of circles `x,y,r`.
        #[arg(long, requires = "point", conflicts_with = "graph")]
        circles: Option<String>,
        /// Point `x,y`.
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
    },
    /// Chromatic polynomial by deletion-contraction.
    Chrompoly {
        graph: String,
        /// Evaluate at K colors and compare with a brute-force count.
        #[arg(long)]
        at: Option<u64>,
    },
    /// Edge-count tests that can rule out planarity.
    Planarity { graph: String },
    /// Euler characteristic v - e + f of built-in or given polyhedra.
    Euler {
        /// Built-in polyhedron name; all of them when omitted.
        name: Option<String>,
        #[arg(long, requires_all = ["e", "f"], conflicts_with = "name")]
        v: Option<u64>,
        #[arg(long, requires_all = ["v", "f"])]
        e: Option<u64>,
        #[arg(long, requires_all = ["v", "e"])]
        f: Option<u64>,
    },
}

#[derive(Debug, Subcommand)]
pub enum CountCmd {
    /// Unordered, no repeats: C(n, k).
    Choose { n: u64, k: u64 },
    /// Ordered, repeats: n^k.
    Sequences { n: u64, k: u64 },
    /// Ordered, no repeats: n!/(n-k)!.
    Ordered { n: u64, k: u64 },
    /// Unordered, repeats: C(n+k-1, k).
    Multisets { n: u64, k: u64 },
    /// The four cells of the selection table.
    Table { n: u64, k: u64 },
    Factorial { n: u64 },
    /// (k1+...+km)!/(k1!...km!)
    Multinomial {
        #[arg(required = true)]
        parts: Vec<u64>,
    },
    /// Distinct rearrangements of a word.
    Anagrams { word: String },
    /// Subsets of an n-set (with --even: of even size).
    Subsets {
        n: u64,
        #[arg(long)]
        even: bool,
    },
    /// Lattice paths with RIGHT unit steps right and UP unit steps up.
    Lattice { right: u64, up: u64 },
    /// |A ∪ B| from a b ab, or |A ∪ B ∪ C| from a b c ab ac bc abc.
    Union {
        #[arg(required = true)]
        sizes: Vec<u64>,
    },
    /// Integers 1..=n divisible by none of the given primes.
    Coprime {
        n: u64,
        #[arg(required = true)]
        primes: Vec<u64>,
    },
}

#[derive(Debug, Subcommand)]
pub enum SeqCmd {
    Fib { n: u64 },
    Lucas { n: u64 },
    /// Fibonacci by Binet's formula in floating point.
    Binet { n: u64 },
    /// Ways to climb N stairs with the given step sizes.
    Stairs {
        n: u64,
        #[arg(long, default_value = "1,2")]
        steps: String,
    },
    /// Tower of Hanoi move count, with --moves the move list.
    Hanoi {
        n: u64,
        #[arg(long)]
        moves: bool,
    },
    /// Regions of the plane cut by N lines in general position.
    Plane { n: u64 },
    /// Regions of a disk cut by chords between N points in general position.
    Circles { n: u64 },
}

#[derive(Debug, Args)]
pub struct RecArgs {
    /// c1,...,cd in a_n = c1 a_{n-1} + ... + cd a_{n-d}.
    #[arg(long, allow_hyphen_values = true)]
    pub coeffs: String,
    /// Seed values a_start .. a_{start+d-1}.
    #[arg(long, allow_hyphen_values = true)]
    pub init: String,
    #[arg(long, default_value_t = 1)]
    pub start: u64,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    /// Coefficient list a0,a1,... (rationals allowed).
    #[arg(long, allow_hyphen_values = true)]
    pub coeffs: String,
    #[arg(long, default_value_t = 10)]
    pub order: usize,
}

#[derive(Debug, Args)]
pub struct FractionArgs {
    /// Numerator coefficients, lowest degree first.
    #[arg(long, allow_hyphen_values = true)]
    pub num: String,
    /// Denominator coefficients, lowest degree first.
    #[arg(long, allow_hyphen_values = true)]
    pub den: String,
    #[arg(long, default_value_t = 10)]
    pub order: usize,
}

#[derive(Debug, Subcommand)]
pub enum SeriesCmd {
    Show(SeriesArgs),
    Inverse(SeriesArgs),
    Sqrt(SeriesArgs),
    Derivative(SeriesArgs),
    /// Replace x by C*x^M.
    Subst {
        #[command(flatten)]
        series: SeriesArgs,
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        c: String,
        #[arg(long, default_value_t = 1)]
        m: usize,
    },
    Add {
        #[command(flatten)]
        a: SeriesArgs,
        #[arg(long, allow_hyphen_values = true)]
        with: String,
    },
    Sub {
        #[command(flatten)]
        a: SeriesArgs,
        #[arg(long, allow_hyphen_values = true)]
        with: String,
    },
    Mul {
        #[command(flatten)]
        a: SeriesArgs,
        #[arg(long, allow_hyphen_values = true)]
        with: String,
    },
    /// Catalan generating function from sqrt(1 - 4x).
    Catalan {
        #[arg(long, default_value_t = 10)]
        order: usize,
    },
    /// Expansion of (1 + x)^ALPHA.
    Binomial {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, default_value_t = 10)]
        order: usize,
    },
    /// Expansion of NUM/DEN.
    Rational(FractionArgs),
    /// NUM/DEN as a sum of z/(1 - r x).
    Partial(FractionArgs),
    /// Generating function of a linear recurrence.
    FromRec {
        #[command(flatten)]
        rec: RecArgs,
        #[arg(long, default_value_t = 10)]
        order: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum GraphCmd {
    /// Size, degrees, connectivity, bipartiteness, Euler class.
    Info { graph: String },
    /// Print a graph in the canonical text format.
    Show { graph: String },
    /// Print a built-in graph in the text format.
    Named { name: String },
    /// Eulerian walk, if any.
    Euler { graph: String },
    /// Hamiltonian cycle, if any.
    Hamilton { graph: String },
    Complement { graph: String },
    /// Adjacency matrix.
    Matrix { graph: String },
    /// Graph from whitespace-separated adjacency matrix rows.
    FromMatrix { input: String },
    /// Two-coloring or an odd cycle.
    TwoColor { graph: String },
}

#[derive(Debug, Subcommand)]
pub enum TreeCmd {
    /// Labeled trees on N vertices, n^(n-2).
    Cayley { n: u64 },
    /// List every labeled tree on N <= 5 vertices.
    List { n: usize },
    /// Full binary trees with LEAVES leaves.
    Binary { leaves: u64 },
    /// Rooted trees on N vertices with at most two ordered children.
    AtMostBinary { n: u64 },
    /// Single-elimination brackets for N players.
    Tournament { n: u64 },
    /// Binary search tree from inserting keys in order.
    Bst {
        #[arg(allow_negative_numbers = true, required = true)]
        keys: Vec<i64>,
    },
    /// Increasing binary tree of a permutation, and back.
    Increasing {
        #[arg(allow_negative_numbers = true, required = true)]
        perm: Vec<i64>,
    },
    /// Whether a graph is a tree; a spanning tree if connected.
    Check { graph: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DerangeMethod {
    Product,
    Affine,
    Closed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PartitionKind {
    All,
    Distinct,
    Odd,
}

/// Why a command failed; decides the exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] combkit::Error),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) | CliError::Io(_) => 1,
        }
    }
}

/// Parses `args` (program name first), runs the command and writes its
/// output. Returns the exit code: 0 success, 1 domain error, 2 usage error.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match commands::dispatch(&cli.command, stdin) {
        Ok(report) => {
            let text = if cli.json { report.json_document(cli.command.name()) } else { report.text };
            let _ = writeln!(out, "{}", text.trim_end_matches('\n'));
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Count { .. } => "count",
            Command::Pascal { .. } => "pascal",
            Command::Derange { .. } => "derange",
            Command::Catalan { .. } => "catalan",
            Command::Divisors { .. } => "divisors",
            Command::Poker { .. } => "poker",
            Command::Seq { .. } => "seq",
            Command::SolveRec { .. } => "solve-rec",
            Command::Series { .. } => "series",
            Command::Change { .. } => "change",
            Command::Partitions { .. } => "partitions",
            Command::Graph { .. } => "graph",
            Command::Walks { .. } => "walks",
            Command::Tree { .. } => "tree",
            Command::Mst { .. } => "mst",
            Command::Tsp { .. } => "tsp",
            Command::Match { .. } => "match",
            Command::Ramsey { .. } => "ramsey",
            Command::Color { .. } => "color",
            Command::Chrompoly { .. } => "chrompoly",
            Command::Planarity { .. } => "planarity",
            Command::Euler { .. } => "euler",
        }
    }
}
