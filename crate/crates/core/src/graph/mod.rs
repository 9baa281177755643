//! Simple undirected graphs on dense vertex ids `0..n` and the structural
//! primitives the colouring algorithm is built from.

mod bridges;
mod metrics;

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

pub use bridges::{bridges, is_bridgeless};
pub use metrics::{center, is_connected, metrics, CenterMetrics};

/// Vertex id. Always in `0..n` for the graph it belongs to.
pub type Vertex = usize;

/// Unordered edge, normalised so that `.0 < .1`.
pub type Edge = (Vertex, Vertex);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("graph is disconnected")]
    Disconnected,
}

/// Normalise an unordered pair.
#[inline]
pub fn edge(u: Vertex, v: Vertex) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Immutable simple undirected graph.
///
/// Edges are stored sorted; an edge's position in [`Graph::edges`] is its
/// edge id, which colourings use as their index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<Vertex>>,
    // Parallel to `adj`: the edge id of `(v, adj[v][i])`.
    adj_edges: Vec<Vec<usize>>,
}

impl Graph {
    /// Build a graph from an edge list. Duplicate and reversed pairs collapse
    /// into a single edge.
    pub fn new<I>(n: usize, edge_list: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut edges = Vec::new();
        for (u, v) in edge_list {
            if u >= n || v >= n {
                return Err(GraphError::InvalidGraph(format!("edge ({u}, {v}) has an endpoint outside 0..{n}")));
            }
            if u == v {
                return Err(GraphError::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            edges.push(edge(u, v));
        }
        edges.sort_unstable();
        edges.dedup();

        let mut adj = vec![Vec::new(); n];
        let mut adj_edges = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            adj[u].push(v);
            adj_edges[u].push(id);
            adj[v].push(u);
            adj_edges[v].push(id);
        }
        // Sorted edges put every (a, v) with a < v before any (v, b), so each
        // adjacency list comes out ascending.
        debug_assert!(adj.iter().all(|l| l.windows(2).all(|w| w[0] < w[1])));

        Ok(Graph { n, edges, adj, adj_edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// All edges in ascending order. The index of an edge is its id.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    /// Neighbours of `v` in ascending order.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    /// `(neighbour, edge id)` pairs of `v`, neighbours ascending.
    pub fn incident(&self, v: Vertex) -> impl Iterator<Item = (Vertex, usize)> + '_ {
        self.adj[v].iter().copied().zip(self.adj_edges[v].iter().copied())
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn edge_id(&self, u: Vertex, v: Vertex) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() { (u, v) } else { (v, u) };
        self.adj[a].binary_search(&b).ok().map(|i| self.adj_edges[a][i])
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Hop distances from `source`; `None` for unreachable vertices.
    pub fn bfs(&self, source: Vertex) -> Vec<Option<u32>> {
        self.bfs_from_set(std::iter::once(source))
    }

    /// Multi-source BFS: `d(v, X) = min_{x in X} d(v, x)`.
    pub fn bfs_from_set<I>(&self, sources: I) -> Vec<Option<u32>>
    where
        I: IntoIterator<Item = Vertex>,
    {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        for s in sources {
            if dist[s].is_none() {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(v) = queue.pop_front() {
            let dv = dist[v].unwrap();
            for &w in &self.adj[v] {
                if dist[w].is_none() {
                    dist[w] = Some(dv + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Lexicographically smallest shortest path from `s` to `t`, if any.
    pub fn shortest_path(&self, s: Vertex, t: Vertex) -> Option<Vec<Vertex>> {
        let to_t = self.bfs(t);
        to_t[s]?;
        let mut path = vec![s];
        let mut cur = s;
        while cur != t {
            let d = to_t[cur].unwrap();
            cur = *self.adj[cur].iter().find(|&&w| to_t[w] == Some(d - 1))?;
            path.push(cur);
        }
        Some(path)
    }

    /// The graph with vertex `v` and its edges removed; ids above `v` shift
    /// down by one. Returns the graph and the new→old id map.
    pub fn without_vertex(&self, v: Vertex) -> (Graph, Vec<Vertex>) {
        let keep: BTreeSet<Vertex> = self.vertices().filter(|&x| x != v).collect();
        induced_subgraph(self, &keep)
    }
}

/// Convenience constructor matching the edge-list ingestion contract.
pub fn build_graph(n: usize, edge_list: &[(Vertex, Vertex)]) -> Result<Graph, GraphError> {
    Graph::new(n, edge_list.iter().copied())
}

/// `N^k(X)`: vertices at distance exactly `k` from the set `X`.
pub fn k_neighborhood(g: &Graph, x: &BTreeSet<Vertex>, k: u32) -> BTreeSet<Vertex> {
    if k == 0 {
        return x.clone();
    }
    let dist = g.bfs_from_set(x.iter().copied());
    g.vertices().filter(|&v| dist[v] == Some(k)).collect()
}

/// `E[X, Y]`: edges with one end in `X` and the other in `Y`.
pub fn edge_cut(g: &Graph, x: &BTreeSet<Vertex>, y: &BTreeSet<Vertex>) -> BTreeSet<Edge> {
    let mut cut = BTreeSet::new();
    for &a in x {
        for &b in g.neighbors(a) {
            if y.contains(&b) {
                cut.insert(edge(a, b));
            }
        }
    }
    cut
}

/// Induced subgraph on `x`. Vertex `i` of the result is `map[i]` in `g`.
pub fn induced_subgraph(g: &Graph, x: &BTreeSet<Vertex>) -> (Graph, Vec<Vertex>) {
    let map: Vec<Vertex> = x.iter().copied().collect();
    let mut index = vec![usize::MAX; g.vertex_count()];
    for (new, &old) in map.iter().enumerate() {
        index[old] = new;
    }
    let edges = g
        .edges()
        .iter()
        .filter(|&&(a, b)| index[a] != usize::MAX && index[b] != usize::MAX)
        .map(|&(a, b)| (index[a], index[b]));
    let sub = Graph::new(map.len(), edges).expect("induced edges are valid");
    (sub, map)
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    /// Hub 0 joined to the cycle 1..=k.
    pub fn wheel(k: usize) -> Graph {
        let rim = (0..k).map(|i| (1 + i, 1 + (i + 1) % k));
        Graph::new(k + 1, (1..=k).map(|i| (0, i)).chain(rim)).unwrap()
    }

    pub fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        Graph::new(10, outer.chain(inner).chain(spokes)).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn builds_c4() {
        let g = build_graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.neighbors(0), &[1, 3]);
    }

    #[test]
    fn duplicates_collapse() {
        let g = build_graph(3, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn rejects_self_loop_and_range() {
        assert!(matches!(build_graph(2, &[(0, 0)]), Err(GraphError::InvalidGraph(_))));
        assert!(matches!(build_graph(2, &[(0, 2)]), Err(GraphError::InvalidGraph(_))));
    }

    #[test]
    fn edge_ids_match_positions() {
        let g = petersen();
        for (id, &(a, b)) in g.edges().iter().enumerate() {
            assert_eq!(g.edge_id(a, b), Some(id));
            assert_eq!(g.edge_id(b, a), Some(id));
        }
        assert_eq!(g.edge_id(0, 2), None);
        let degree_sum: usize = g.vertices().map(|v| g.degree(v)).sum();
        assert_eq!(degree_sum, 2 * g.edge_count());
    }

    #[test]
    fn k_neighborhoods_of_c4() {
        let g = cycle(4);
        assert_eq!(k_neighborhood(&g, &set(&[0]), 1), set(&[1, 3]));
        assert_eq!(k_neighborhood(&g, &set(&[0]), 2), set(&[2]));
        assert_eq!(k_neighborhood(&g, &set(&[0, 2]), 0), set(&[0, 2]));
        assert_eq!(k_neighborhood(&g, &set(&[0]), 3), set(&[]));
    }

    #[test]
    fn edge_cuts() {
        let c4 = cycle(4);
        assert_eq!(edge_cut(&c4, &set(&[0]), &set(&[1, 3])), [(0, 1), (0, 3)].into_iter().collect());
        assert!(edge_cut(&c4, &set(&[0]), &set(&[2])).is_empty());
        assert_eq!(edge_cut(&complete(4), &set(&[0, 1]), &set(&[2, 3])).len(), 4);
    }

    #[test]
    fn induced_subgraphs() {
        let (k3, map) = induced_subgraph(&complete(4), &set(&[0, 1, 2]));
        assert_eq!((k3.vertex_count(), k3.edge_count()), (3, 3));
        assert_eq!(map, vec![0, 1, 2]);

        let (e, _) = induced_subgraph(&cycle(4), &set(&[0, 1]));
        assert_eq!(e.edges(), &[(0, 1)]);

        let (iso, map) = induced_subgraph(&cycle(4), &set(&[0, 2]));
        assert_eq!(iso.edge_count(), 0);
        assert_eq!(map, vec![0, 2]);
    }

    #[test]
    fn shortest_path_is_lexicographically_smallest() {
        let g = cycle(4);
        assert_eq!(g.shortest_path(0, 2), Some(vec![0, 1, 2]));
        assert_eq!(g.shortest_path(2, 0), Some(vec![2, 1, 0]));
        let two = Graph::new(2, []).unwrap();
        assert_eq!(two.shortest_path(0, 1), None);
    }
}
