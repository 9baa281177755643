//! Text documents: edge lists (`n m` then `u v` lines) and colourings
//! (`n m k` then `u v c` lines). Lines starting with `#` are comments.

use std::collections::BTreeMap;
use std::fmt::Write;

use rainbow_core::{Color, Edge, EdgeColoring, Graph};

use crate::CliError;

/// Non-empty, non-comment lines, each split on whitespace, with 1-based
/// line numbers.
fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.trim();
        (!line.is_empty() && !line.starts_with('#')).then(|| (i + 1, line.split_whitespace().collect()))
    })
}

fn numbers<const N: usize>(line: usize, fields: &[&str]) -> Result<[usize; N], CliError> {
    if fields.len() != N {
        return Err(CliError::Parse(format!("line {line}: expected {N} fields, found {}", fields.len())));
    }
    let mut out = [0; N];
    for (slot, f) in out.iter_mut().zip(fields) {
        *slot = f.parse().map_err(|_| CliError::Parse(format!("line {line}: {f:?} is not a non-negative integer")))?;
    }
    Ok(out)
}

fn check_edge(line: usize, n: usize, u: usize, v: usize) -> Result<(), CliError> {
    if u >= n || v >= n {
        return Err(CliError::Parse(format!("line {line}: vertex id out of range 0..{n}")));
    }
    if u == v {
        return Err(CliError::Parse(format!("line {line}: self-loop at {u}")));
    }
    Ok(())
}

pub fn parse_edge_list(text: &str) -> Result<Graph, CliError> {
    let mut lines = records(text);
    let (hl, header) = lines.next().ok_or_else(|| CliError::Parse("empty document".into()))?;
    let [n, m] = numbers::<2>(hl, &header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, fields) in lines {
        let [u, v] = numbers::<2>(line, &fields)?;
        check_edge(line, n, u, v)?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(CliError::Parse(format!("header declares {m} edges, found {}", edges.len())));
    }
    let g = Graph::new(n, edges).map_err(|e| CliError::Parse(e.to_string()))?;
    if g.edge_count() != m {
        return Err(CliError::Parse("duplicate edges".into()));
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// A parsed colouring document, not yet checked against a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringDocument {
    pub n: usize,
    pub palette: Color,
    pub colors: BTreeMap<Edge, Color>,
}

impl ColoringDocument {
    /// Bind to `g`; the document must describe exactly `g`'s edges.
    pub fn to_coloring(&self, g: &Graph) -> Result<EdgeColoring, CliError> {
        if self.n != g.vertex_count() || self.colors.len() != g.edge_count() {
            return Err(CliError::Parse(format!(
                "colouring is for n = {}, m = {} but the graph has n = {}, m = {}",
                self.n,
                self.colors.len(),
                g.vertex_count(),
                g.edge_count()
            )));
        }
        Ok(EdgeColoring::from_map(g, &self.colors, self.palette)?)
    }
}

pub fn parse_coloring(text: &str) -> Result<ColoringDocument, CliError> {
    let mut lines = records(text);
    let (hl, header) = lines.next().ok_or_else(|| CliError::Parse("empty document".into()))?;
    let [n, m, k] = numbers::<3>(hl, &header)?;
    let palette = Color::try_from(k).map_err(|_| CliError::Parse(format!("line {hl}: palette {k} too large")))?;
    let mut colors = BTreeMap::new();
    for (line, fields) in lines {
        let [u, v, c] = numbers::<3>(line, &fields)?;
        check_edge(line, n, u, v)?;
        if c == 0 || c > k {
            return Err(CliError::Parse(format!("line {line}: colour {c} outside 1..={k}")));
        }
        if colors.insert(rainbow_core::graph::edge(u, v), c as Color).is_some() {
            return Err(CliError::Parse(format!("line {line}: edge {u} {v} coloured twice")));
        }
    }
    if colors.len() != m {
        return Err(CliError::Parse(format!("header declares {m} edges, found {}", colors.len())));
    }
    Ok(ColoringDocument { n, palette, colors })
}

pub fn write_coloring(g: &Graph, c: &EdgeColoring) -> String {
    let mut out = format!("{} {} {}\n", g.vertex_count(), g.edge_count(), c.palette_size());
    for (&(u, v), &col) in g.edges().iter().zip(c.colors()) {
        writeln!(out, "{u} {v} {col}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_round_trip_strips_comments() {
        let g = parse_edge_list("# square\n4 4\n0 1\n2 1\n\n2 3 \n3 0\n").unwrap();
        assert_eq!(write_edge_list(&g), "4 4\n0 1\n0 3\n1 2\n2 3\n");
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn edge_list_errors() {
        for bad in
            ["", "4\n", "x 1\n0 1\n", "3 2\n0 1\n", "3 1\n0 3\n", "3 1\n1 1\n", "3 2\n0 1\n1 0\n", "3 1\n0 1 2\n"]
        {
            assert!(matches!(parse_edge_list(bad), Err(CliError::Parse(_))), "{bad:?}");
        }
    }

    #[test]
    fn coloring_round_trip_and_binding() {
        let g = parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
        let doc = parse_coloring("4 4 2\n0 1 1\n1 2 2\n2 3 1\n0 3 2\n").unwrap();
        let c = doc.to_coloring(&g).unwrap();
        assert_eq!(parse_coloring(&write_coloring(&g, &c)).unwrap(), doc);
        let other = parse_edge_list("5 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
        assert!(doc.to_coloring(&other).is_err());
        for bad in ["4 1 2\n0 1 3\n", "4 1 2\n0 1 0\n", "4 2 2\n0 1 1\n1 0 2\n", "4 1\n0 1\n"] {
            assert!(matches!(parse_coloring(bad), Err(CliError::Parse(_))), "{bad:?}");
        }
    }
}
