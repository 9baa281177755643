use std::collections::{BTreeSet, VecDeque};

use super::ColorError;
use crate::graph::{Graph, Vertex};

/// Shortest cycle through edge `uv`, returned as `[u, v, ..., w]` with `wu`
/// closing it. Among shortest cycles, the one with the most vertices outside
/// `covered`; remaining ties go to the lexicographically smallest sequence.
pub fn shortest_cycle_through(
    g: &Graph,
    u: Vertex,
    v: Vertex,
    covered: &BTreeSet<Vertex>,
) -> Result<Vec<Vertex>, ColorError> {
    let mut mask = vec![false; g.vertex_count()];
    for &c in covered {
        mask[c] = true;
    }
    shortest_cycle_masked(g, u, v, &mask)
}

pub(crate) fn shortest_cycle_masked(
    g: &Graph,
    u: Vertex,
    v: Vertex,
    covered: &[bool],
) -> Result<Vec<Vertex>, ColorError> {
    let skipped = g.edge_id(u, v).ok_or(ColorError::NoCycle((u.min(v), u.max(v))))?;
    let n = g.vertex_count();

    // Hop distance to u in g - uv, in BFS order.
    let mut dist = vec![u32::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::from([u]);
    dist[u] = 0;
    while let Some(a) = queue.pop_front() {
        order.push(a);
        for (b, id) in g.incident(a) {
            if id != skipped && dist[b] == u32::MAX {
                dist[b] = dist[a] + 1;
                queue.push_back(b);
            }
        }
    }
    if dist[v] == u32::MAX {
        return Err(ColorError::NoCycle((u.min(v), u.max(v))));
    }

    let gain = |a: Vertex| u32::from(!covered[a]);
    // best[a]: most uncovered vertices on a shortest a→u path (u included).
    let mut best = vec![0u32; n];
    for &a in &order {
        best[a] = gain(a)
            + g.neighbors(a)
                .iter()
                .filter(|&&b| dist[b] < dist[a] && dist[b] + 1 == dist[a])
                .map(|&b| best[b])
                .max()
                .unwrap_or(0);
    }

    let mut cycle = vec![u, v];
    let mut cur = v;
    while dist[cur] > 1 {
        let want = best[cur] - gain(cur);
        cur = *g
            .neighbors(cur)
            .iter()
            .find(|&&b| dist[b] < dist[cur] && dist[b] + 1 == dist[cur] && best[b] == want)
            .expect("a predecessor attains the optimum");
        cycle.push(cur);
    }
    Ok(cycle)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn c4_is_its_own_cycle() {
        assert_eq!(shortest_cycle_through(&cycle(4), 0, 1, &set(&[0])).unwrap(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn k4_picks_a_triangle() {
        assert_eq!(shortest_cycle_through(&complete(4), 0, 1, &set(&[0])).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn k4_prefers_uncovered_vertices() {
        // Triangles through 01: 0-1-2 (2 covered) and 0-1-3 (3 uncovered).
        assert_eq!(shortest_cycle_through(&complete(4), 0, 1, &set(&[0, 2])).unwrap(), vec![0, 1, 3]);
    }

    #[test]
    fn prefers_uncovered_over_lexicographic_order() {
        // Two 5-cycles through 0-1: via 2-3-4 and via 5-6-4.
        let g = Graph::new(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 5), (5, 6), (6, 4)]).unwrap();
        assert_eq!(shortest_cycle_through(&g, 0, 1, &set(&[0])).unwrap(), vec![0, 1, 2, 3, 4]);
        assert_eq!(shortest_cycle_through(&g, 0, 1, &set(&[0, 3])).unwrap(), vec![0, 1, 5, 6, 4]);
    }

    #[test]
    fn bridge_has_no_cycle() {
        assert!(matches!(shortest_cycle_through(&path(3), 0, 1, &set(&[])), Err(ColorError::NoCycle((0, 1)))));
        assert!(matches!(shortest_cycle_through(&cycle(4), 0, 2, &set(&[])), Err(ColorError::NoCycle(_))));
    }
}
