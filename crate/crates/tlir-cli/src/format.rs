//! Line-oriented text formats for graphs and colorings, plus DOT export.
//!
//! A graph file holds `v <id> full|empty` and `e <u> <v>` lines; a coloring
//! file holds `vc <id> <color>` and `ec <u> <v> <color>` lines.  `#` starts
//! a comment and blank lines are skipped.  Serialization is canonical:
//! vertex lines sorted by id, then edge lines sorted by endpoint pair, with
//! the smaller endpoint first.

use std::fmt::Write as _;

use tlir_core::coloring::TotalColoring;
use tlir_core::graph::{TotalGraph, VertexId};

/// A parse failure with the 1-based line it happened on.
#[derive(Debug)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

fn fail<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

/// Content lines with their original 1-based numbers, comments and blanks
/// dropped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
}

fn parse_id(token: &str, line: usize) -> Result<VertexId, ParseError> {
    token
        .parse()
        .or_else(|_| fail(line, format!("`{token}` is not a vertex id")))
}

/// Reads a graph file.  Vertices may be declared in any order relative to
/// the edges that use them, but every endpoint must be declared somewhere.
pub fn parse_graph(text: &str) -> Result<TotalGraph, ParseError> {
    let mut g = TotalGraph::new();
    for (line, content) in content_lines(text) {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            ["v", id, slot] => {
                let v = parse_id(id, line)?;
                let full = match *slot {
                    "full" => true,
                    "empty" => false,
                    other => return fail(line, format!("`{other}` is neither full nor empty")),
                };
                if g.has_vertex(v) {
                    return fail(line, format!("vertex {v} is declared twice"));
                }
                g.add_vertex(v, full);
            }
            ["e", ..] => {}
            _ => return fail(line, format!("expected a v or e line, got `{content}`")),
        }
    }
    for (line, content) in content_lines(text) {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if let ["e", a, b] = tokens.as_slice() {
            let u = parse_id(a, line)?;
            let v = parse_id(b, line)?;
            for w in [u, v] {
                if !g.has_vertex(w) {
                    return fail(line, format!("edge endpoint {w} is not declared"));
                }
            }
            if g.has_edge(u, v) {
                return fail(line, format!("edge ({u}, {v}) is declared twice"));
            }
            g.add_edge(u, v)
                .map_err(|e| ParseError {
                    line,
                    message: e.to_string(),
                })?;
        } else if tokens.first() == Some(&"e") {
            return fail(line, format!("an edge line takes two endpoints, got `{content}`"));
        }
    }
    Ok(g)
}

/// Reads a coloring file against the graph it colors.  Every referenced
/// element must exist, vertex colors may only land on full vertices, and
/// colors are positive.
pub fn parse_coloring(text: &str, g: &TotalGraph) -> Result<TotalColoring, ParseError> {
    let mut c = TotalColoring::new();
    for (line, content) in content_lines(text) {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            ["vc", id, color] => {
                let v = parse_id(id, line)?;
                let k = parse_color(color, line)?;
                if !g.has_vertex(v) {
                    return fail(line, format!("vertex {v} does not exist"));
                }
                if !g.is_full(v) {
                    return fail(line, format!("vertex {v} is empty and cannot hold a color"));
                }
                if c.vertex_color(v).is_some() {
                    return fail(line, format!("vertex {v} is colored twice"));
                }
                c.set_vertex(v, k);
            }
            ["ec", a, b, color] => {
                let u = parse_id(a, line)?;
                let v = parse_id(b, line)?;
                let k = parse_color(color, line)?;
                if !g.has_edge(u, v) {
                    return fail(line, format!("edge ({u}, {v}) does not exist"));
                }
                if c.edge_color(u, v).is_some() {
                    return fail(line, format!("edge ({u}, {v}) is colored twice"));
                }
                c.set_edge(u, v, k);
            }
            _ => return fail(line, format!("expected a vc or ec line, got `{content}`")),
        }
    }
    Ok(c)
}

fn parse_color(token: &str, line: usize) -> Result<u32, ParseError> {
    match token.parse() {
        Ok(k) if k >= 1 => Ok(k),
        _ => fail(line, format!("`{token}` is not a color (colors are integers >= 1)")),
    }
}

/// Canonical text for a graph: sorted vertex lines, then sorted edge lines.
pub fn serialize_graph(g: &TotalGraph) -> String {
    let mut out = String::new();
    for v in g.vertices() {
        let slot = if g.is_full(v) { "full" } else { "empty" };
        writeln!(out, "v {v} {slot}").expect("string write");
    }
    let mut edges = g.edges();
    edges.sort_unstable();
    for (u, v) in edges {
        writeln!(out, "e {u} {v}").expect("string write");
    }
    out
}

/// Canonical text for a coloring: sorted vertex lines, then sorted edge
/// lines, endpoints ascending.
pub fn serialize_coloring(c: &TotalColoring) -> String {
    let mut out = String::new();
    for (v, k) in c.vertex_colors() {
        writeln!(out, "vc {v} {k}").expect("string write");
    }
    for ((u, v), k) in c.edge_colors() {
        writeln!(out, "ec {u} {v} {k}").expect("string write");
    }
    out
}

/// Display colors for DOT export: 1 is red and 2 is blue to match the
/// two-color algorithms, then the palette cycles.
const PALETTE: [&str; 10] = [
    "red",
    "blue",
    "green",
    "orange",
    "purple",
    "turquoise",
    "brown",
    "magenta",
    "gold",
    "navy",
];

fn color_name(k: u32) -> &'static str {
    PALETTE[(k as usize - 1) % PALETTE.len()]
}

/// Graphviz text: vertices carry their color as a fill, edges as a stroke.
/// Uncolored elements render plain.
pub fn to_dot(g: &TotalGraph, c: &TotalColoring) -> String {
    let mut out = String::from("graph coloring {\n");
    for v in g.vertices() {
        match c.vertex_color(v) {
            Some(k) => writeln!(
                out,
                "  {v} [style=filled, fillcolor=\"{}\"];",
                color_name(k)
            )
            .expect("string write"),
            None => writeln!(out, "  {v};").expect("string write"),
        }
    }
    let mut edges = g.edges();
    edges.sort_unstable();
    for (u, v) in edges {
        match c.edge_color(u, v) {
            Some(k) => writeln!(out, "  {u} -- {v} [color=\"{}\"];", color_name(k))
                .expect("string write"),
            None => writeln!(out, "  {u} -- {v};").expect("string write"),
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> TotalGraph {
        TotalGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)])
    }

    #[test]
    fn graphs_round_trip_through_text() {
        let mut g = p4();
        g.add_vertex(9, false);
        let text = serialize_graph(&g);
        assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let text = "# a path\n\nv 0 full\nv 1 full\n\n# the only edge\ne 0 1\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn edges_may_precede_their_vertex_declarations() {
        let g = parse_graph("e 0 1\nv 0 full\nv 1 full\n").unwrap();
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn undeclared_endpoints_are_rejected() {
        let err = parse_graph("v 0 full\ne 0 1\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.message.contains("not declared"));
    }

    #[test]
    fn malformed_lines_are_rejected_with_their_number() {
        assert_eq!(parse_graph("v 0 full\nv 1 fullish\n").unwrap_err().line, 2);
        assert_eq!(parse_graph("w 0 full\n").unwrap_err().line, 1);
        assert_eq!(parse_graph("v 0 full\ne 0\n").unwrap_err().line, 2);
        assert_eq!(parse_graph("v -3 full\n").unwrap_err().line, 1);
    }

    #[test]
    fn duplicate_declarations_are_rejected() {
        assert!(parse_graph("v 0 full\nv 0 empty\n").is_err());
        assert!(parse_graph("v 0 full\nv 1 full\ne 0 1\ne 1 0\n").is_err());
    }

    #[test]
    fn colorings_round_trip_through_text() {
        let g = p4();
        let mut c = TotalColoring::new();
        c.set_vertex(0, 2);
        c.set_vertex(3, 1);
        c.set_edge(1, 2, 7);
        let text = serialize_coloring(&c);
        assert_eq!(parse_coloring(&text, &g).unwrap(), c);
    }

    #[test]
    fn coloring_references_are_checked() {
        let g = p4();
        assert!(parse_coloring("ec 0 3 1\n", &g).is_err());
        assert!(parse_coloring("vc 7 1\n", &g).is_err());
        assert!(parse_coloring("vc 0 0\n", &g).is_err());
        let mut with_empty = p4();
        with_empty.add_vertex(9, false);
        assert!(parse_coloring("vc 9 1\n", &with_empty).is_err());
    }

    #[test]
    fn serialized_edges_put_the_smaller_endpoint_first() {
        let g = p4();
        let mut c = TotalColoring::new();
        c.set_edge(2, 1, 3);
        assert!(serialize_coloring(&c).contains("ec 1 2 3"));
        assert!(serialize_graph(&g).contains("e 1 2"));
    }

    #[test]
    fn dot_export_names_the_first_three_colors() {
        let g = TotalGraph::from_edges(3, &[(0, 1), (1, 2)]);
        let mut c = TotalColoring::new();
        c.set_vertex(0, 1);
        c.set_vertex(1, 2);
        c.set_vertex(2, 3);
        c.set_edge(0, 1, 1);
        c.set_edge(1, 2, 11);
        let dot = to_dot(&g, &c);
        assert!(dot.contains("0 [style=filled, fillcolor=\"red\"];"));
        assert!(dot.contains("1 [style=filled, fillcolor=\"blue\"];"));
        assert!(dot.contains("2 [style=filled, fillcolor=\"green\"];"));
        assert!(dot.contains("0 -- 1 [color=\"red\"];"));
        // Color 11 wraps around the ten-name palette.
        assert!(dot.contains("1 -- 2 [color=\"red\"];"));
    }
}
