use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::VerifyError;
use crate::graph::{edge, Edge, Graph, Vertex};

/// Colour id. Valid colours are `1..=palette`.
pub type Color = u8;

/// A total edge colouring, indexed by the edge ids of the graph it was
/// built for.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeColoring {
    colors: Vec<Color>,
    palette: Color,
}

impl EdgeColoring {
    pub fn new(g: &Graph, colors: Vec<Color>, palette: Color) -> Result<Self, VerifyError> {
        if colors.len() != g.edge_count() {
            return Err(VerifyError::InvalidColoring(format!("{} colours for {} edges", colors.len(), g.edge_count())));
        }
        if let Some((id, &c)) = colors.iter().enumerate().find(|(_, &c)| c == 0 || c > palette) {
            let (a, b) = g.edges()[id];
            return Err(VerifyError::InvalidColoring(format!("edge ({a}, {b}) has colour {c} outside 1..={palette}")));
        }
        Ok(EdgeColoring { colors, palette })
    }

    /// Every edge gets colour `c`; the palette is `c`.
    pub fn uniform(g: &Graph, c: Color) -> Self {
        assert!(c >= 1);
        EdgeColoring { colors: vec![c; g.edge_count()], palette: c }
    }

    /// Every edge gets its own colour.
    pub fn all_distinct(g: &Graph) -> Self {
        let m = g.edge_count();
        assert!(m <= Color::MAX as usize, "too many edges for distinct colours");
        EdgeColoring { colors: (1..=m as Color).collect(), palette: m.max(1) as Color }
    }

    pub fn from_map(g: &Graph, map: &BTreeMap<Edge, Color>, palette: Color) -> Result<Self, VerifyError> {
        let mut colors = Vec::with_capacity(g.edge_count());
        for &e in g.edges() {
            match map.get(&e) {
                Some(&c) => colors.push(c),
                None => return Err(VerifyError::InvalidColoring(format!("edge ({}, {}) has no colour", e.0, e.1))),
            }
        }
        if let Some(extra) = map.keys().find(|&&(a, b)| !g.has_edge(a, b)) {
            return Err(VerifyError::InvalidColoring(format!(
                "({}, {}) is coloured but is not an edge",
                extra.0, extra.1
            )));
        }
        Self::new(g, colors, palette)
    }

    /// Colour of edge id `id`.
    pub fn color(&self, id: usize) -> Color {
        self.colors[id]
    }

    pub fn color_of(&self, g: &Graph, u: Vertex, v: Vertex) -> Option<Color> {
        g.edge_id(u, v).map(|id| self.colors[id])
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn palette_size(&self) -> Color {
        self.palette
    }

    /// Number of distinct colours that actually appear.
    pub fn colors_used(&self) -> usize {
        self.colors.iter().collect::<BTreeSet<_>>().len()
    }

    pub fn max_color(&self) -> Color {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    pub fn to_map(&self, g: &Graph) -> BTreeMap<Edge, Color> {
        g.edges().iter().copied().zip(self.colors.iter().copied()).collect()
    }

    /// Set edge `id` to `c`, growing the palette if needed.
    pub fn set(&mut self, id: usize, c: Color) {
        assert!(c >= 1);
        self.colors[id] = c;
        self.palette = self.palette.max(c);
    }
}

/// Witness paths, one per unordered pair `(s, t)` with `s < t`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RainbowCertificate {
    pub witnesses: BTreeMap<(Vertex, Vertex), Vec<Vertex>>,
}

impl RainbowCertificate {
    pub fn longest_witness(&self) -> usize {
        self.witnesses.values().map(|p| p.len().saturating_sub(1)).max().unwrap_or(0)
    }

    /// Re-check every witness against `g` and `c` without using the search
    /// code that produced it.
    pub fn check(&self, g: &Graph, c: &EdgeColoring) -> Result<(), String> {
        let n = g.vertex_count();
        for s in 0..n {
            for t in s + 1..n {
                let path = self.witnesses.get(&(s, t)).ok_or_else(|| format!("no witness for ({s}, {t})"))?;
                if path.first() != Some(&s) || path.last() != Some(&t) {
                    return Err(format!("witness for ({s}, {t}) has endpoints {path:?}"));
                }
                let mut seen = BTreeSet::new();
                for w in path.windows(2) {
                    let col = c
                        .color_of(g, w[0], w[1])
                        .ok_or_else(|| format!("witness for ({s}, {t}) uses non-edge {:?}", edge(w[0], w[1])))?;
                    if !seen.insert(col) {
                        return Err(format!("witness for ({s}, {t}) repeats colour {col}"));
                    }
                }
            }
        }
        if self.witnesses.len() != n * n.saturating_sub(1) / 2 {
            return Err("certificate has witnesses for non-pairs".into());
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn validates_totality_and_palette() {
        let g = cycle(4);
        assert!(EdgeColoring::new(&g, vec![1, 2, 1], 2).is_err());
        assert!(EdgeColoring::new(&g, vec![1, 2, 3, 1], 2).is_err());
        assert!(EdgeColoring::new(&g, vec![1, 0, 1, 1], 2).is_err());
        let c = EdgeColoring::new(&g, vec![1, 2, 2, 1], 3).unwrap();
        assert_eq!(c.colors_used(), 2);
        assert_eq!(c.palette_size(), 3);
    }

    #[test]
    fn from_map_requires_exact_edge_set() {
        let g = path(3);
        let mut map: BTreeMap<Edge, Color> = [((0, 1), 1)].into_iter().collect();
        assert!(EdgeColoring::from_map(&g, &map, 2).is_err());
        map.insert((1, 2), 2);
        let c = EdgeColoring::from_map(&g, &map, 2).unwrap();
        assert_eq!(c.color_of(&g, 2, 1), Some(2));
        map.insert((0, 2), 1);
        assert!(EdgeColoring::from_map(&g, &map, 2).is_err());
    }
}
