use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::appropriate::CycleVariant;
use crate::graph::{Edge, Graph, Vertex};

/// Where the colouring procedure stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CompletionCase {
    /// K2 or P3, coloured directly.
    Degenerate,
    Step2,
    Step3,
    Step5,
    Step8,
    Step10,
    Step11,
    Step12,
    Step13,
}

impl CompletionCase {
    pub fn as_str(self) -> &'static str {
        match self {
            CompletionCase::Degenerate => "degenerate",
            CompletionCase::Step2 => "step2",
            CompletionCase::Step3 => "step3",
            CompletionCase::Step5 => "step5",
            CompletionCase::Step8 => "step8",
            CompletionCase::Step10 => "step10",
            CompletionCase::Step11 => "step11",
            CompletionCase::Step12 => "step12",
            CompletionCase::Step13 => "step13",
        }
    }
}

/// A block of vertices around a chosen center vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub center: Vertex,
    /// Includes `center`, ascending.
    pub members: Vec<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleRecord {
    /// `[u, v1, ..., vk]` in the orientation the pattern was applied.
    pub vertices: Vec<Vertex>,
    pub variant: CycleVariant,
}

/// Every choice the colouring procedure made. All vertex sets are sorted.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ColoringTrace {
    pub center: Vertex,
    /// `B_1..B_b`.
    pub blocks: Vec<Block>,
    /// `B_{b+1}`.
    pub extension_block: Vec<Vertex>,
    /// `B_{b+2}`, as first computed.
    pub residual_block: Vec<Vertex>,
    /// Running cover of the cycle loop, after the loop.
    pub covered_s: Vec<Vertex>,
    pub cycles: Vec<CycleRecord>,
    pub x: Vec<Vertex>,
    pub y: Vec<Vertex>,
    pub s: Vec<Vertex>,
    pub t: Vec<Vertex>,
    pub q: Vec<Vertex>,
    pub p1: Vec<Vertex>,
    pub p2: Vec<Vertex>,
    /// Second-layer vertices left after S, T, Q with no neighbour in X.
    pub p0: Vec<Vertex>,
    pub d_blocks: Vec<Block>,
    pub d_residual: Vec<Vertex>,
    pub x1: Vec<Vertex>,
    pub x2: Vec<Vertex>,
    pub p1_prime: Vec<Vertex>,
    pub p2_prime: Vec<Vertex>,
    /// The bridge, on the pendant-edge branch.
    pub pendant_edge: Option<Edge>,
    pub completion_case: Option<CompletionCase>,
    pub repair_iterations: usize,
}

impl ColoringTrace {
    /// Check the structural invariants against the graph the trace was
    /// produced for. Returns the first violation.
    pub fn check(&self, g: &Graph) -> Result<(), String> {
        if self.completion_case == Some(CompletionCase::Degenerate) {
            return Ok(());
        }
        let u = self.center;
        // The pendant vertex is not part of G'.
        let pendant = self.pendant_edge.map(|(a, b)| if a == u { b } else { a });
        let n1: BTreeSet<Vertex> = g.neighbors(u).iter().copied().filter(|&v| Some(v) != pendant).collect();
        let dist = g.bfs(u);
        let n2: BTreeSet<Vertex> = g.vertices().filter(|&v| dist[v] == Some(2)).collect();

        let mut taken = BTreeSet::new();
        for b in &self.blocks {
            if b.members.len() < 2 {
                return Err(format!("block around {} has fewer than 2 vertices", b.center));
            }
            if !b.members.contains(&b.center) {
                return Err(format!("block around {} misses its center", b.center));
            }
            for &m in &b.members {
                if !n1.contains(&m) {
                    return Err(format!("block member {m} is not a neighbour of the center"));
                }
                if m != b.center && !g.has_edge(m, b.center) {
                    return Err(format!("block member {m} is not adjacent to {}", b.center));
                }
                if !taken.insert(m) {
                    return Err(format!("vertex {m} is in two blocks"));
                }
            }
        }
        for &w in &self.extension_block {
            if taken.contains(&w) || !n1.contains(&w) {
                return Err(format!("extension vertex {w} is misplaced"));
            }
            if self.blocks.iter().any(|b| g.has_edge(w, b.center)) {
                return Err(format!("extension vertex {w} is adjacent to a block center"));
            }
        }

        if !self.x.is_empty() || !self.y.is_empty() {
            let xs: BTreeSet<_> = self.x.iter().copied().collect();
            let ys: BTreeSet<_> = self.y.iter().copied().collect();
            if !xs.is_disjoint(&ys) || xs.union(&ys).copied().collect::<BTreeSet<_>>() != n1 {
                return Err("X and Y do not partition the first layer".into());
            }
            let classes = [&self.s, &self.t, &self.q, &self.p1, &self.p2, &self.p0];
            let mut seen = BTreeSet::new();
            for class in classes {
                for &w in class.iter() {
                    if !n2.contains(&w) {
                        return Err(format!("vertex {w} in a second-layer class is not at distance 2"));
                    }
                    if !seen.insert(w) {
                        return Err(format!("vertex {w} is in two second-layer classes"));
                    }
                }
            }
            let x_edges = |w: Vertex| g.neighbors(w).iter().filter(|a| xs.contains(a)).count();
            if let Some(&p) = self.p1.iter().find(|&&p| x_edges(p) != 1) {
                return Err(format!("P1 vertex {p} has {} edges to X", x_edges(p)));
            }
            if let Some(&p) = self.p2.iter().find(|&&p| x_edges(p) < 2) {
                return Err(format!("P2 vertex {p} has {} edges to X", x_edges(p)));
            }
        }
        Ok(())
    }
}
