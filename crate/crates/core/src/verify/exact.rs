//! Exact rainbow connection number by exhaustive search.
//!
//! Colourings are enumerated as restricted growth strings over the sorted
//! edge list, so each colouring is visited once per colour permutation
//! class. A partial colouring is abandoned as soon as some pair cannot be
//! rainbow connected even when every uncoloured edge may take any colour.

use super::{Color, EdgeColoring, VerifyError};
use crate::graph::{metrics, Graph, GraphError};

pub const DEFAULT_MAX_EDGES: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RcValue {
    Exact(usize),
    /// No colouring with at most `k_max` colours exists.
    ExceedsKMax(usize),
}

/// `rc(g)` if it is at most `k_max`, with the default edge cap.
pub fn rc_exact(g: &Graph, k_max: usize) -> Result<RcValue, VerifyError> {
    rc_exact_with_cap(g, k_max, DEFAULT_MAX_EDGES)
}

pub fn rc_exact_with_cap(g: &Graph, k_max: usize, max_edges: usize) -> Result<RcValue, VerifyError> {
    if g.edge_count() > max_edges {
        return Err(VerifyError::InstanceTooLarge(format!(
            "exact rc is limited to {max_edges} edges, got {}",
            g.edge_count()
        )));
    }
    if k_max > 16 {
        return Err(VerifyError::InstanceTooLarge(format!("k_max {k_max} exceeds 16")));
    }
    let diameter = match metrics(g) {
        Ok(m) => m.diameter as usize,
        Err(GraphError::Disconnected) => return Err(VerifyError::Disconnected),
        Err(e) => return Err(VerifyError::InvalidColoring(e.to_string())),
    };
    if g.vertex_count() == 1 {
        return Ok(RcValue::Exact(0));
    }
    for k in diameter..=k_max {
        let mut search = Search::new(g, k);
        if search.run() {
            return Ok(RcValue::Exact(k));
        }
    }
    Ok(RcValue::ExceedsKMax(k_max))
}

/// A colouring with `k` colours witnessing `rc(g) <= k`, if one exists.
pub fn find_rainbow_coloring(g: &Graph, k: usize) -> Option<EdgeColoring> {
    let mut search = Search::new(g, k);
    search.run().then(|| EdgeColoring::new(g, search.colors.clone(), k as Color).unwrap())
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    // 0 marks an uncoloured edge.
    colors: Vec<Color>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, k: usize) -> Self {
        Search { g, k, colors: vec![0; g.edge_count()] }
    }

    fn run(&mut self) -> bool {
        if self.k == 0 {
            return self.g.vertex_count() <= 1;
        }
        self.assign(0, 0)
    }

    fn assign(&mut self, next: usize, max_used: usize) -> bool {
        if !self.optimistic_ok() {
            return false;
        }
        if next == self.colors.len() {
            return true;
        }
        for col in 1..=(max_used + 1).min(self.k) {
            self.colors[next] = col as Color;
            if self.assign(next + 1, max_used.max(col)) {
                return true;
            }
        }
        self.colors[next] = 0;
        false
    }

    /// Every pair is reachable by a walk whose coloured edges are distinct
    /// and whose uncoloured edges pick unused colours.
    fn optimistic_ok(&self) -> bool {
        let n = self.g.vertex_count();
        let full = (1u32 << self.k) - 1;
        for s in 0..n {
            let mut reached = vec![false; n];
            let mut stored: Vec<Vec<u32>> = vec![Vec::new(); n];
            reached[s] = true;
            stored[s].push(0);
            let mut frontier = vec![(s, 0u32)];
            while !frontier.is_empty() {
                let mut next = Vec::new();
                for &(v, mask) in &frontier {
                    for (w, id) in self.g.incident(v) {
                        let options = match self.colors[id] {
                            0 => full & !mask,
                            c => (1u32 << (c - 1)) & !mask,
                        };
                        let mut bits = options;
                        while bits != 0 {
                            let bit = bits & bits.wrapping_neg();
                            bits &= bits - 1;
                            let grown = mask | bit;
                            let sets = &mut stored[w];
                            if sets.iter().any(|&a| a & !grown == 0) {
                                continue;
                            }
                            sets.retain(|&a| grown & !a != 0);
                            sets.push(grown);
                            reached[w] = true;
                            next.push((w, grown));
                        }
                    }
                }
                frontier = next;
            }
            if reached.iter().any(|&r| !r) {
                return false;
            }
        }
        true
    }
}

/// Diameter of a connected graph: a rainbow path between a diametral pair
/// needs that many distinct colours.
pub fn lower_bound_diameter(g: &Graph) -> Result<usize, VerifyError> {
    match metrics(g) {
        Ok(m) => Ok(m.diameter as usize),
        Err(GraphError::Disconnected) => Err(VerifyError::Disconnected),
        Err(e) => Err(VerifyError::InvalidColoring(e.to_string())),
    }
}
