//! Rainbow path search over `(vertex, used colour set)` states.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;

use super::{EdgeColoring, RainbowCertificate, VerifyError};
use crate::graph::{Graph, Vertex};

/// Largest palette the colour-set search accepts; the state space grows as
/// `n · 2^k`.
pub const DEFAULT_PALETTE_CAP: u8 = 16;

/// Outcome of a whole-graph check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Connected(RainbowCertificate),
    /// The lexicographically smallest pair with no rainbow path.
    Failing((Vertex, Vertex)),
}

impl Verdict {
    pub fn is_connected(&self) -> bool {
        matches!(self, Verdict::Connected(_))
    }
}

/// Adjacency annotated with one-hot colour masks.
struct MaskedAdjacency {
    adj: Vec<Vec<(Vertex, u32)>>,
}

impl MaskedAdjacency {
    fn new(g: &Graph, c: &EdgeColoring) -> Self {
        let adj = g.vertices().map(|v| g.incident(v).map(|(w, id)| (w, 1u32 << (c.color(id) - 1))).collect()).collect();
        MaskedAdjacency { adj }
    }

    /// Length of the shortest rainbow path from `s` to every vertex.
    ///
    /// Each vertex keeps an antichain of colour sets; a state whose set is a
    /// superset of a stored one cannot reach anything the stored one can't,
    /// so it is dropped.
    fn rainbow_distances(&self, s: Vertex) -> Vec<Option<u32>> {
        let n = self.adj.len();
        let mut dist = vec![None; n];
        let mut stored: Vec<Vec<u32>> = vec![Vec::new(); n];
        dist[s] = Some(0);
        stored[s].push(0);
        let mut frontier = vec![(s, 0u32)];
        let mut layer = 0;
        while !frontier.is_empty() {
            layer += 1;
            let mut next = Vec::new();
            for &(v, mask) in &frontier {
                for &(w, bit) in &self.adj[v] {
                    if mask & bit != 0 {
                        continue;
                    }
                    let grown = mask | bit;
                    let sets = &mut stored[w];
                    if sets.iter().any(|&a| a & !grown == 0) {
                        continue;
                    }
                    sets.retain(|&a| grown & !a != 0);
                    sets.push(grown);
                    if dist[w].is_none() {
                        dist[w] = Some(layer);
                    }
                    next.push((w, grown));
                }
            }
            frontier = next;
        }
        dist
    }

    /// Lexicographically smallest rainbow `s`–`t` path with exactly `len`
    /// edges. `to_t` holds plain hop distances to `t` for pruning.
    fn extract(&self, s: Vertex, t: Vertex, len: u32, to_t: &[Option<u32>]) -> Option<Vec<Vertex>> {
        let mut path = vec![s];
        let mut dead = HashSet::new();
        if self.extend(t, 0, len, to_t, &mut path, &mut dead) {
            Some(path)
        } else {
            None
        }
    }

    fn extend(
        &self,
        t: Vertex,
        mask: u32,
        remaining: u32,
        to_t: &[Option<u32>],
        path: &mut Vec<Vertex>,
        dead: &mut HashSet<(Vertex, u32, u32)>,
    ) -> bool {
        let v = *path.last().unwrap();
        if remaining == 0 {
            return v == t;
        }
        if dead.contains(&(v, mask, remaining)) {
            return false;
        }
        for &(w, bit) in &self.adj[v] {
            if mask & bit != 0 || to_t[w].is_none_or(|d| d > remaining - 1) {
                continue;
            }
            path.push(w);
            if self.extend(t, mask | bit, remaining - 1, to_t, path, dead) {
                return true;
            }
            path.pop();
        }
        dead.insert((v, mask, remaining));
        false
    }
}

fn check_palette(c: &EdgeColoring, cap: u8) -> Result<(), VerifyError> {
    if c.palette_size() > cap {
        return Err(VerifyError::PaletteTooLarge { palette: c.palette_size(), cap });
    }
    Ok(())
}

fn check_pair(g: &Graph, s: Vertex, t: Vertex) -> Result<(), VerifyError> {
    let n = g.vertex_count();
    if s >= n || t >= n || s == t {
        return Err(VerifyError::InvalidQuery(format!("pair ({s}, {t}) on {n} vertices")));
    }
    Ok(())
}

/// Shortest rainbow `s`–`t` path; among equally short ones the
/// lexicographically smallest vertex sequence.
pub fn rainbow_path(g: &Graph, c: &EdgeColoring, s: Vertex, t: Vertex) -> Result<Option<Vec<Vertex>>, VerifyError> {
    rainbow_path_capped(g, c, s, t, DEFAULT_PALETTE_CAP)
}

pub fn rainbow_path_capped(
    g: &Graph,
    c: &EdgeColoring,
    s: Vertex,
    t: Vertex,
    cap: u8,
) -> Result<Option<Vec<Vertex>>, VerifyError> {
    check_palette(c, cap)?;
    check_pair(g, s, t)?;
    let masked = MaskedAdjacency::new(g, c);
    let Some(len) = masked.rainbow_distances(s)[t] else {
        return Ok(None);
    };
    Ok(masked.extract(s, t, len, &g.bfs(t)))
}

/// Rainbow distance from every source to every vertex (`None` if no
/// rainbow path exists).
pub fn rainbow_distance_matrix(g: &Graph, c: &EdgeColoring) -> Result<Vec<Vec<Option<u32>>>, VerifyError> {
    check_palette(c, DEFAULT_PALETTE_CAP)?;
    let masked = MaskedAdjacency::new(g, c);
    Ok(g.vertices().into_par_iter().map(|s| masked.rainbow_distances(s)).collect())
}

/// All pairs `(s, t)`, `s < t`, with no rainbow path, in ascending order.
pub fn failing_pairs(g: &Graph, c: &EdgeColoring) -> Result<Vec<(Vertex, Vertex)>, VerifyError> {
    let dist = rainbow_distance_matrix(g, c)?;
    Ok(dist
        .iter()
        .enumerate()
        .flat_map(|(s, row)| row.iter().enumerate().skip(s + 1).filter(|(_, d)| d.is_none()).map(move |(t, _)| (s, t)))
        .collect())
}

/// Decide rainbow connectivity. On success every pair carries its shortest,
/// lexicographically smallest rainbow path as witness.
pub fn is_rainbow_connected(g: &Graph, c: &EdgeColoring) -> Result<Verdict, VerifyError> {
    let dist = rainbow_distance_matrix(g, c)?;
    let n = g.vertex_count();
    for (s, row) in dist.iter().enumerate() {
        if let Some(t) = (s + 1..n).find(|&t| row[t].is_none()) {
            return Ok(Verdict::Failing((s, t)));
        }
    }
    let masked = MaskedAdjacency::new(g, c);
    let witnesses: Vec<((Vertex, Vertex), Vec<Vertex>)> = (0..n)
        .into_par_iter()
        .flat_map_iter(|t| {
            let to_t = g.bfs(t);
            let masked = &masked;
            let dist = &dist;
            (0..t).map(move |s| {
                let len = dist[s][t].unwrap();
                let path = masked.extract(s, t, len, &to_t).expect("rainbow distance implies a path");
                ((s, t), path)
            })
        })
        .collect();
    Ok(Verdict::Connected(RainbowCertificate { witnesses: witnesses.into_iter().collect::<BTreeMap<_, _>>() }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn single_edge_is_rainbow() {
        let g = path(2);
        let c = EdgeColoring::uniform(&g, 3);
        assert_eq!(rainbow_path(&g, &c, 0, 1).unwrap(), Some(vec![0, 1]));
    }

    #[test]
    fn monochrome_c4_has_no_antipodal_path() {
        let g = cycle(4);
        let c = EdgeColoring::uniform(&g, 1);
        assert_eq!(rainbow_path(&g, &c, 0, 2).unwrap(), None);
        assert_eq!(is_rainbow_connected(&g, &c).unwrap(), Verdict::Failing((0, 2)));
    }

    #[test]
    fn alternating_c4() {
        // Edges sorted: (0,1) (0,3) (1,2) (2,3); around the cycle 0-1-2-3-0
        // the colours are 1,2,1,2.
        let g = cycle(4);
        let c = EdgeColoring::new(&g, vec![1, 2, 2, 1], 2).unwrap();
        // Simple 0–2 paths: 0-1-2 with colours (1,2), 0-3-2 with (2,1).
        assert_eq!(rainbow_path(&g, &c, 0, 2).unwrap(), Some(vec![0, 1, 2]));
        let Verdict::Connected(cert) = is_rainbow_connected(&g, &c).unwrap() else {
            panic!("alternating C4 is rainbow connected");
        };
        cert.check(&g, &c).unwrap();
        assert_eq!(cert.longest_witness(), 2);
    }

    #[test]
    fn complete_graph_with_one_colour() {
        let g = complete(4);
        let c = EdgeColoring::uniform(&g, 1);
        assert!(is_rainbow_connected(&g, &c).unwrap().is_connected());
    }

    #[test]
    fn palette_cap_and_bad_pairs() {
        let g = path(3);
        let c = EdgeColoring::new(&g, vec![1, 17], 17).unwrap();
        assert!(matches!(rainbow_path(&g, &c, 0, 2), Err(VerifyError::PaletteTooLarge { .. })));
        let c = EdgeColoring::uniform(&g, 1);
        assert!(matches!(rainbow_path(&g, &c, 1, 1), Err(VerifyError::InvalidQuery(_))));
        assert!(matches!(rainbow_path(&g, &c, 0, 3), Err(VerifyError::InvalidQuery(_))));
    }

    #[test]
    fn shortest_rainbow_path_may_be_longer_than_distance() {
        // C5 with colours forcing the long way round between 0 and 2:
        // 0-1 (1), 1-2 (1), 2-3 (2), 3-4 (3), 4-0 (4).
        let g = cycle(5);
        let map = [((0, 1), 1), ((1, 2), 1), ((2, 3), 2), ((3, 4), 3), ((0, 4), 4)].into_iter().collect();
        let c = EdgeColoring::from_map(&g, &map, 4).unwrap();
        assert_eq!(rainbow_path(&g, &c, 0, 2).unwrap(), Some(vec![0, 4, 3, 2]));
        assert_eq!(failing_pairs(&g, &c).unwrap(), vec![]);
    }

    #[test]
    fn disconnected_graph_fails_on_first_split_pair() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let c = EdgeColoring::uniform(&g, 1);
        assert_eq!(is_rainbow_connected(&g, &c).unwrap(), Verdict::Failing((0, 2)));
        assert_eq!(failing_pairs(&g, &c).unwrap(), vec![(0, 2), (0, 3), (1, 2), (1, 3)]);
    }
}
