use std::io::Read;

use combkit::graph::{self, Graph, GraphKind, Platonic};
use combkit::graphopt::{parse_weighted_graph, WeightedGraph};

use crate::CliError;

/// Contents of a file, or of stdin for `-`.
pub fn read_text(arg: &str, stdin: &mut dyn Read) -> Result<String, CliError> {
    if arg == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s).map_err(|e| CliError::Io(format!("reading stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(arg).map_err(|e| CliError::Io(format!("{arg}: {e}")))
    }
}

/// `@name` for a built-in graph, `-` for stdin, anything else is a path.
pub fn read_graph_arg(arg: &str, stdin: &mut dyn Read) -> Result<Graph, CliError> {
    match arg.strip_prefix('@') {
        Some(name) => named_graph(name),
        None => Ok(graph::parse_graph(&read_text(arg, stdin)?)?),
    }
}

pub fn read_weighted_arg(arg: &str, stdin: &mut dyn Read) -> Result<WeightedGraph, CliError> {
    if arg.starts_with('@') {
        return Err(CliError::Usage("weighted graphs must come from a file or stdin".into()));
    }
    Ok(parse_weighted_graph(&read_text(arg, stdin)?)?)
}

/// Built-in graphs: `K5`, `K3,4`, `C7`, `P4`, `E3` (edgeless), `petersen`,
/// `konigsberg`, `fib` (loop at 0 plus edge 0-1), and the Platonic solids by name.
pub fn named_graph(name: &str) -> Result<Graph, CliError> {
    let unknown = || CliError::Usage(format!("unknown graph name @{name}"));
    let size = |s: &str| s.parse::<usize>().map_err(|_| unknown());
    let g = match name {
        "petersen" => graph::petersen(),
        "konigsberg" => graph::konigsberg(),
        "fib" => Graph::new(2, [(0, 0), (0, 1)], GraphKind::PSEUDO)?,
        _ => {
            if let Ok(solid) = name.parse::<Platonic>() {
                return Ok(graph::platonic(solid));
            }
            let (head, rest) = name.split_at(name.chars().next().map_or(0, char::len_utf8));
            match head {
                "K" => match rest.split_once(',') {
                    Some((a, b)) => graph::complete_bipartite(size(a)?, size(b)?),
                    None => graph::complete(size(rest)?),
                },
                "C" => graph::cycle(size(rest)?)?,
                "P" => graph::path(size(rest)?),
                "E" => graph::empty(size(rest)?),
                _ => return Err(unknown()),
            }
        }
    };
    Ok(g)
}
