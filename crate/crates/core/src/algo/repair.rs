use crate::graph::{Graph, Vertex};
use crate::verify::{failing_pairs, Color, EdgeColoring};

/// Recolouring attempts allowed per edge of the graph.
pub const REPAIR_ATTEMPTS_PER_EDGE: usize = 50;

pub(crate) struct RepairReport {
    pub iterations: usize,
    /// `None` if the colouring is rainbow connected.
    pub unresolved: Option<(Vertex, Vertex)>,
}

/// Bounded local search over colours `1..=max_color`. Each round takes the
/// smallest failing pair, tries every recolouring of every edge on its
/// shortest path, and commits the one leaving the fewest failing pairs.
pub(crate) fn repair(g: &Graph, c: &mut EdgeColoring, max_color: Color) -> RepairReport {
    let cap = REPAIR_ATTEMPTS_PER_EDGE * g.edge_count();
    let mut attempts = 0;
    let mut iterations = 0;
    let mut failing = failing_pairs(g, c).expect("palette within cap");
    loop {
        let Some(&pair) = failing.first() else {
            return RepairReport { iterations, unresolved: None };
        };
        let path = g.shortest_path(pair.0, pair.1).expect("connected graph");
        let mut candidates = Vec::new();
        for w in path.windows(2) {
            let id = g.edge_id(w[0], w[1]).unwrap();
            let current = c.color(id);
            for step in 1..max_color {
                candidates.push((id, (current - 1 + step) % max_color + 1));
            }
        }

        // (candidate index, failing pairs after the move)
        let mut best: Option<(usize, Vec<(Vertex, Vertex)>)> = None;
        for (idx, &(id, col)) in candidates.iter().enumerate() {
            if attempts >= cap {
                return RepairReport { iterations, unresolved: Some(pair) };
            }
            attempts += 1;
            let old = c.color(id);
            c.set(id, col);
            let after = failing_pairs(g, c).expect("palette within cap");
            c.set(id, old);
            if best.as_ref().is_none_or(|b| after.len() < b.1.len()) {
                best = Some((idx, after));
            }
        }
        let (idx, after) = best.expect("a path has at least one edge");
        let count = after.len();
        // No strict improvement: rotate through the candidates instead of
        // committing the same move every round.
        let (idx, after) = if count < failing.len() {
            (idx, after)
        } else {
            let idx = iterations % candidates.len();
            let (id, col) = candidates[idx];
            let old = c.color(id);
            c.set(id, col);
            let after = failing_pairs(g, c).expect("palette within cap");
            c.set(id, old);
            (idx, after)
        };
        let (id, col) = candidates[idx];
        c.set(id, col);
        failing = after;
        iterations += 1;
    }
}
