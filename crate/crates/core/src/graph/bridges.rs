use std::collections::BTreeSet;

use super::{edge, is_connected, Edge, Graph, GraphError};

/// Bridges of a connected graph via one iterative DFS with low-link values.
pub fn bridges(g: &Graph) -> Result<BTreeSet<Edge>, GraphError> {
    if !is_connected(g) {
        return Err(GraphError::Disconnected);
    }
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut found = BTreeSet::new();
    let mut clock = 0;

    // Frame: (vertex, edge id used to enter it, next adjacency index).
    let mut stack: Vec<(usize, usize, usize)> = vec![(0, usize::MAX, 0)];
    disc[0] = clock;
    low[0] = clock;
    clock += 1;

    while let Some(frame) = stack.last_mut() {
        let (v, parent_edge, next) = *frame;
        if next < g.adj[v].len() {
            let (w, eid) = (g.adj[v][next], g.adj_edges[v][next]);
            frame.2 += 1;
            if eid == parent_edge {
                continue;
            }
            if disc[w] == usize::MAX {
                disc[w] = clock;
                low[w] = clock;
                clock += 1;
                stack.push((w, eid, 0));
            } else {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if let Some(&(p, _, _)) = stack.last() {
                low[p] = low[p].min(low[v]);
                if low[v] > disc[p] {
                    found.insert(edge(p, v));
                }
            }
        }
    }
    Ok(found)
}

pub fn is_bridgeless(g: &Graph) -> Result<bool, GraphError> {
    bridges(g).map(|b| b.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use proptest::prelude::*;

    fn brute_force_bridges(g: &Graph) -> BTreeSet<Edge> {
        g.edges()
            .iter()
            .copied()
            .filter(|&e| {
                let rest = g.edges().iter().copied().filter(|&f| f != e);
                !is_connected(&Graph::new(g.vertex_count(), rest).unwrap())
            })
            .collect()
    }

    #[test]
    fn named_cases() {
        assert!(bridges(&cycle(4)).unwrap().is_empty());
        assert_eq!(bridges(&path(3)).unwrap(), [(0, 1), (1, 2)].into_iter().collect());

        let mut edges = wheel(5).edges().to_vec();
        edges.push((0, 6));
        let g = Graph::new(7, edges).unwrap();
        assert_eq!(bridges(&g).unwrap(), [(0, 6)].into_iter().collect());
    }

    #[test]
    fn disconnected() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(bridges(&g), Err(GraphError::Disconnected));
    }

    #[test]
    fn long_path_does_not_overflow_stack() {
        let g = path(200_000);
        assert_eq!(bridges(&g).unwrap().len(), 199_999);
    }

    proptest! {
        #[test]
        fn matches_brute_force(n in 1usize..=8, mask in any::<u32>()) {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
            let g = Graph::new(
                n,
                pairs.iter().enumerate().filter(|(i, _)| mask >> (i % 32) & 1 == 1).map(|(_, &p)| p),
            ).unwrap();
            prop_assume!(is_connected(&g));
            prop_assert_eq!(bridges(&g).unwrap(), brute_force_bridges(&g));
        }
    }
}
