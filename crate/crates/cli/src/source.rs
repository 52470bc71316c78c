use std::io::Read;
use std::path::Path;

use mdl_core::graph::parse_edge_list;
use mdl_core::{FamilySpec, Graph};

use crate::error::{CliError, CliResult};

/// A loaded graph and where it came from.
pub struct Loaded {
    pub graph: Graph,
    pub spec: Option<FamilySpec>,
    pub name: String,
}

fn looks_like_spec(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some('J' | 'K' | 'j' | 'k')) && chars.next() == Some(':')
}

/// Family spec strings are tried first, then `-` (standard input), then a
/// file path.
pub fn load(source: &str) -> CliResult<Loaded> {
    if looks_like_spec(source) {
        let spec: FamilySpec = source.parse()?;
        let graph = spec.build()?;
        return Ok(Loaded {
            graph,
            spec: Some(spec),
            name: spec.to_string(),
        });
    }
    let text = if source == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::io("<stdin>", e))?;
        s
    } else {
        std::fs::read_to_string(Path::new(source)).map_err(|e| CliError::io(source, e))?
    };
    Ok(Loaded {
        graph: parse_edge_list(&text)?,
        spec: None,
        name: source.to_string(),
    })
}

/// Vertices in 1-indexed subset notation when labeled, else 1-indexed ids.
pub fn format_vertices(g: &Graph, vertices: &[usize]) -> String {
    vertices
        .iter()
        .map(|&v| g.display_vertex(v))
        .collect::<Vec<_>>()
        .join(" ")
}
