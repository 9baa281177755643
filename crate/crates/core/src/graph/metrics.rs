use super::{Graph, GraphError, Vertex};

/// All-pairs hop distances plus the derived eccentricity summary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterMetrics {
    /// `dist[v][x]` is `d_G(v, x)`.
    pub dist: Vec<Vec<u32>>,
    pub ecc: Vec<u32>,
    pub radius: u32,
    pub diameter: u32,
    /// Vertices with eccentricity equal to the radius, ascending.
    pub centers: Vec<Vertex>,
}

impl CenterMetrics {
    pub fn distance(&self, a: Vertex, b: Vertex) -> u32 {
        self.dist[a][b]
    }
}

/// BFS from every vertex, O(n·m) in total.
pub fn metrics(g: &Graph) -> Result<CenterMetrics, GraphError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(GraphError::InvalidGraph("empty graph has no metrics".into()));
    }
    let mut dist = Vec::with_capacity(n);
    for v in g.vertices() {
        let row: Option<Vec<u32>> = g.bfs(v).into_iter().collect();
        dist.push(row.ok_or(GraphError::Disconnected)?);
    }
    let ecc: Vec<u32> = dist.iter().map(|row| *row.iter().max().unwrap()).collect();
    let radius = *ecc.iter().min().unwrap();
    let diameter = *ecc.iter().max().unwrap();
    let centers = g.vertices().filter(|&v| ecc[v] == radius).collect();
    Ok(CenterMetrics { dist, ecc, radius, diameter, centers })
}

/// The minimum-eccentricity vertex with the smallest id.
pub fn center(g: &Graph) -> Result<Vertex, GraphError> {
    Ok(metrics(g)?.centers[0])
}

pub fn is_connected(g: &Graph) -> bool {
    g.vertex_count() > 0 && g.bfs(0).iter().all(Option::is_some)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn wheel_has_hub_center() {
        let m = metrics(&wheel(5)).unwrap();
        assert_eq!((m.radius, m.diameter), (1, 2));
        assert_eq!(m.centers, vec![0]);
        assert_eq!(center(&wheel(5)).unwrap(), 0);
    }

    #[test]
    fn c4_and_k4_tie_break_to_zero() {
        let m = metrics(&cycle(4)).unwrap();
        assert_eq!((m.radius, m.diameter), (2, 2));
        assert_eq!(m.centers, vec![0, 1, 2, 3]);
        assert_eq!(center(&cycle(4)).unwrap(), 0);
        assert_eq!(center(&complete(4)).unwrap(), 0);
    }

    #[test]
    fn petersen_is_vertex_transitive_in_eccentricity() {
        // Oracle: Floyd–Warshall, independent of the BFS path.
        let g = petersen();
        let n = g.vertex_count();
        let inf = u32::MAX / 4;
        let mut d = vec![vec![inf; n]; n];
        for (v, row) in d.iter_mut().enumerate() {
            row[v] = 0;
        }
        for &(a, b) in g.edges() {
            d[a][b] = 1;
            d[b][a] = 1;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
                }
            }
        }
        let m = metrics(&g).unwrap();
        assert_eq!(m.dist, d);
        assert_eq!((m.radius, m.diameter), (2, 2));
        assert_eq!(m.centers, (0..10).collect::<Vec<_>>());
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = Graph::new(3, [(0, 1)]).unwrap();
        assert_eq!(metrics(&g), Err(GraphError::Disconnected));
        assert_eq!(center(&g), Err(GraphError::Disconnected));
        assert!(!is_connected(&g));
    }

    #[test]
    fn single_vertex() {
        let g = Graph::new(1, []).unwrap();
        let m = metrics(&g).unwrap();
        assert_eq!((m.radius, m.diameter, m.centers.clone()), (0, 0, vec![0]));
    }
}
