//! The layered colouring procedure around a center vertex `u`.
//!
//! Colour roles: spokes `u–N^1(u)` take 1 (set X) or 2 (set Y); edges from X
//! down to `N^2(u)` take 3, edges from Y take 4; edges inside `N^1(u)` take 3
//! and edges inside `N^2(u)` take 5. Each edge is coloured at most once: the
//! first step to reach an edge decides its colour.

use std::collections::BTreeSet;

use super::appropriate::{appropriate_coloring, CycleVariant};
use super::cycle::shortest_cycle_masked;
use super::trace::{Block, ColoringTrace, CompletionCase, CycleRecord};
use super::ColorError;
use crate::graph::{Graph, Vertex};
use crate::verify::Color;

/// Partial colouring indexed by edge id.
pub(crate) struct Painter<'g> {
    g: &'g Graph,
    colors: Vec<Option<Color>>,
}

impl<'g> Painter<'g> {
    pub(crate) fn new(g: &'g Graph) -> Self {
        Painter { g, colors: vec![None; g.edge_count()] }
    }

    /// Colour `ab` unless it already has a colour.
    pub(crate) fn paint(&mut self, a: Vertex, b: Vertex, c: Color) -> bool {
        let id = self.g.edge_id(a, b).expect("painting a non-edge");
        if self.colors[id].is_some() {
            return false;
        }
        self.colors[id] = Some(c);
        true
    }

    pub(crate) fn get(&self, a: Vertex, b: Vertex) -> Option<Color> {
        self.g.edge_id(a, b).and_then(|id| self.colors[id])
    }

    pub(crate) fn into_colors(self) -> Vec<Option<Color>> {
        self.colors
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Layer {
    Center,
    First,
    Second,
    /// Outside the part of the graph being coloured (the pendant vertex).
    Outside,
}

/// One run of the procedure. `exclude` removes a vertex from consideration
/// entirely, which the pendant-edge branch uses to work on `G' = G - p`.
pub(crate) struct LayeredColoring<'g> {
    g: &'g Graph,
    u: Vertex,
    layer: Vec<Layer>,
    n1: Vec<Vertex>,
    n2: Vec<Vertex>,
    pub(crate) painter: Painter<'g>,
    pub(crate) trace: ColoringTrace,
}

impl<'g> LayeredColoring<'g> {
    pub(crate) fn new(g: &'g Graph, u: Vertex, exclude: Option<Vertex>) -> Self {
        let dist = g.bfs(u);
        let layer: Vec<Layer> = g
            .vertices()
            .map(|v| match (Some(v) == exclude, dist[v]) {
                (true, _) => Layer::Outside,
                (_, Some(0)) => Layer::Center,
                (_, Some(1)) => Layer::First,
                (_, Some(2)) => Layer::Second,
                _ => Layer::Outside,
            })
            .collect();
        let n1 = g.vertices().filter(|&v| layer[v] == Layer::First).collect();
        let n2 = g.vertices().filter(|&v| layer[v] == Layer::Second).collect();
        LayeredColoring {
            g,
            u,
            layer,
            n1,
            n2,
            painter: Painter::new(g),
            trace: ColoringTrace { center: u, ..Default::default() },
        }
    }

    fn in_first(&self, v: Vertex) -> bool {
        self.layer[v] == Layer::First
    }

    fn color_first_layer_edges(&mut self, c: Color) {
        for &a in &self.n1 {
            for &b in self.g.neighbors(a) {
                if a < b && self.layer[b] == Layer::First {
                    self.painter.paint(a, b, c);
                }
            }
        }
    }

    /// Steps 1–13. Leaves every edge of the considered part coloured and
    /// records the completion case in the trace.
    pub(crate) fn run(&mut self) -> Result<(), ColorError> {
        if self.cover_first_layer() {
            return Ok(());
        }
        self.cycle_cover()?;
        if self.n2.iter().all(|&w| self.trace.covered_s.binary_search(&w).is_ok()) {
            // Step 5
            self.color_first_layer_edges(3);
            self.fill_by_role();
            self.trace.completion_case = Some(CompletionCase::Step5);
            return Ok(());
        }
        self.split_spokes();
        self.second_layer_classes();
        self.complete();
        Ok(())
    }

    /// Steps 2 and 3. Colours the spokes of the blocks and returns true if
    /// the procedure stops here (blocks cover `N^1(u)` and there is no
    /// second layer).
    pub(crate) fn cover_first_layer(&mut self) -> bool {
        let g = self.g;
        let u = self.u;
        let mut taken = vec![false; g.vertex_count()];

        // Step 2: greedy disjoint closed neighbourhoods inside N^1(u).
        for &b in &self.n1 {
            if taken[b] {
                continue;
            }
            let members: Vec<Vertex> = std::iter::once(b)
                .chain(g.neighbors(b).iter().copied().filter(|&w| self.in_first(w) && !taken[w]))
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
            if members.len() < 2 {
                continue;
            }
            for &w in &members {
                taken[w] = true;
                self.painter.paint(u, w, if w == b { 1 } else { 2 });
            }
            self.trace.blocks.push(Block { center: b, members });
        }
        let mut covered = self.n1.iter().all(|&v| taken[v]);
        if covered && self.n2.is_empty() {
            self.color_first_layer_edges(3);
            self.trace.completion_case = Some(CompletionCase::Step2);
            return true;
        }

        // Step 3: every untaken vertex that sees a non-center block vertex
        // but no block center.
        let centers: BTreeSet<Vertex> = self.trace.blocks.iter().map(|b| b.center).collect();
        let extension: Vec<Vertex> = self
            .n1
            .iter()
            .copied()
            .filter(|&w| {
                !taken[w]
                    && g.neighbors(w).iter().all(|z| !centers.contains(z))
                    && g.neighbors(w).iter().any(|&z| taken[z] && !centers.contains(&z))
            })
            .collect();
        for &w in &extension {
            self.painter.paint(u, w, 1);
        }
        let residual: Vec<Vertex> =
            self.n1.iter().copied().filter(|&v| !taken[v] && extension.binary_search(&v).is_err()).collect();
        self.trace.extension_block = extension;
        covered = residual.is_empty();
        if covered && self.n2.is_empty() {
            self.color_first_layer_edges(3);
            self.trace.completion_case = Some(CompletionCase::Step3);
            return true;
        }
        self.trace.residual_block = residual;
        false
    }

    /// Step 4: cover the residual first-layer vertices with short cycles
    /// through `u`, coloured by the fixed patterns.
    fn cycle_cover(&mut self) -> Result<(), ColorError> {
        let g = self.g;
        let u = self.u;
        let mut covered = vec![false; g.vertex_count()];
        covered[u] = true;
        for b in &self.trace.blocks {
            for &m in &b.members {
                covered[m] = true;
            }
        }
        for &w in &self.trace.extension_block {
            covered[w] = true;
        }
        // The pendant vertex never joins a cycle.
        for v in g.vertices() {
            if self.layer[v] == Layer::Outside {
                covered[v] = true;
            }
        }

        for v in self.trace.residual_block.clone() {
            if covered[v] {
                continue;
            }
            let mut cycle = shortest_cycle_masked(g, u, v, &covered)?;
            // Keep spokes consistent with colours already present: if the
            // closing spoke already carries 1, walk the cycle the other way,
            // which swaps 1↔2 and 3↔4 in the pattern.
            let last = *cycle.last().unwrap();
            if self.painter.get(u, last) == Some(1) {
                cycle[1..].reverse();
            }
            let layers: Vec<u32> = cycle
                .iter()
                .map(|&a| match self.layer[a] {
                    Layer::Center => 0,
                    Layer::First => 1,
                    Layer::Second => 2,
                    Layer::Outside => 3,
                })
                .collect();
            for ((a, b), c) in appropriate_coloring(&cycle, &layers)? {
                self.painter.paint(a, b, c);
            }
            for &a in &cycle {
                covered[a] = true;
            }
            let variant = CycleVariant::classify(&layers).expect("classified by appropriate_coloring");
            self.trace.cycles.push(CycleRecord { vertices: cycle, variant });
        }
        self.trace.covered_s = g.vertices().filter(|&v| covered[v] && self.layer[v] != Layer::Outside).collect();
        Ok(())
    }

    /// Step 6.
    fn split_spokes(&mut self) {
        let u = self.u;
        for &v in &self.n1 {
            match self.painter.get(u, v) {
                Some(2) => self.trace.y.push(v),
                Some(1) => self.trace.x.push(v),
                // Every first-layer vertex is covered by now; an uncoloured
                // spoke would be a bug upstream, so make it an X spoke.
                _ => {
                    self.painter.paint(u, v, 1);
                    self.trace.x.push(v);
                }
            }
        }
    }

    /// Step 7: the classes S, T, Q of `N^2(u)` and their downward edges.
    fn second_layer_classes(&mut self) {
        let g = self.g;
        let n = g.vertex_count();
        let mut in_x = vec![false; n];
        let mut in_y = vec![false; n];
        self.trace.x.iter().for_each(|&v| in_x[v] = true);
        self.trace.y.iter().for_each(|&v| in_y[v] = true);
        let sees = |w: Vertex, side: &[bool]| g.neighbors(w).iter().any(|&a| side[a]);

        let mut in_s = vec![false; n];
        let mut in_t = vec![false; n];
        let mut in_q = vec![false; n];
        for &w in &self.n2 {
            match (sees(w, &in_x), sees(w, &in_y)) {
                (true, true) => in_q[w] = true,
                (true, false) => in_s[w] = true,
                (false, true) => in_t[w] = true,
                (false, false) => {}
            }
        }
        // Largest S, T: shrink to the greatest fixpoint of the mutual
        // neighbourhood conditions.
        loop {
            let drop_s: Vec<Vertex> = self
                .n2
                .iter()
                .copied()
                .filter(|&s| in_s[s] && !g.neighbors(s).iter().any(|&a| in_t[a] || in_q[a]))
                .collect();
            let drop_t: Vec<Vertex> = self
                .n2
                .iter()
                .copied()
                .filter(|&t| in_t[t] && !g.neighbors(t).iter().any(|&a| in_s[a] || in_q[a]))
                .collect();
            if drop_s.is_empty() && drop_t.is_empty() {
                break;
            }
            drop_s.iter().for_each(|&s| in_s[s] = false);
            drop_t.iter().for_each(|&t| in_t[t] = false);
        }
        let pick = |flags: &[bool]| -> Vec<Vertex> { self.n2.iter().copied().filter(|&w| flags[w]).collect() };
        self.trace.s = pick(&in_s);
        self.trace.t = pick(&in_t);
        self.trace.q = pick(&in_q);

        for &s in &self.trace.s {
            for &x in g.neighbors(s).iter().filter(|&&a| in_x[a]) {
                self.painter.paint(s, x, 3);
            }
        }
        for &t in &self.trace.t {
            for &y in g.neighbors(t).iter().filter(|&&a| in_y[a]) {
                self.painter.paint(t, y, 4);
            }
        }
        for q in self.trace.q.clone() {
            self.designate(q, &in_x, 3);
            self.designate(q, &in_y, 4);
            for &a in g.neighbors(q) {
                if self.in_first(a) {
                    self.painter.paint(q, a, 3);
                }
            }
        }
    }

    /// Make sure `w` has at least one edge of colour `c` into `side`,
    /// colouring the lowest-id uncoloured one if needed.
    fn designate(&mut self, w: Vertex, side: &[bool], c: Color) {
        let nbrs: Vec<Vertex> = self.g.neighbors(w).iter().copied().filter(|&a| side[a]).collect();
        if nbrs.iter().any(|&a| self.painter.get(w, a) == Some(c)) {
            return;
        }
        if let Some(&a) = nbrs.iter().find(|&&a| self.painter.get(w, a).is_none()) {
            self.painter.paint(w, a, c);
        }
    }

    /// Steps 8–13.
    fn complete(&mut self) {
        let g = self.g;
        let n = g.vertex_count();
        let classified: BTreeSet<Vertex> =
            self.trace.s.iter().chain(&self.trace.t).chain(&self.trace.q).copied().collect();

        if self.n2.iter().all(|w| classified.contains(w)) {
            // Step 8
            self.color_first_layer_edges(3);
            let tq: BTreeSet<Vertex> = self.trace.t.iter().chain(&self.trace.q).copied().collect();
            for &s in &self.trace.s {
                for &a in g.neighbors(s) {
                    if tq.contains(&a) {
                        self.painter.paint(s, a, 5);
                    }
                }
            }
            self.fill_by_role();
            self.trace.completion_case = Some(CompletionCase::Step8);
            return;
        }

        // Step 9
        let mut in_x = vec![false; n];
        self.trace.x.iter().for_each(|&v| in_x[v] = true);
        let x_degree = |w: Vertex| g.neighbors(w).iter().filter(|&&a| in_x[a]).count();
        for &w in &self.n2 {
            if classified.contains(&w) {
                continue;
            }
            match x_degree(w) {
                0 => self.trace.p0.push(w),
                1 => self.trace.p1.push(w),
                _ => self.trace.p2.push(w),
            }
        }
        let p: Vec<Vertex> =
            self.trace.p1.iter().chain(&self.trace.p2).copied().collect::<BTreeSet<_>>().into_iter().collect();
        let mut in_p = vec![false; n];
        p.iter().for_each(|&v| in_p[v] = true);

        // Step 10
        let case = if self.trace.p1.is_empty() {
            CompletionCase::Step10
        } else if self.trace.x.len() == 1 {
            self.step11(&p, &in_p);
            CompletionCase::Step11
        } else {
            let mut in_p1 = vec![false; n];
            self.trace.p1.iter().for_each(|&v| in_p1[v] = true);
            let residual: BTreeSet<Vertex> = self.trace.residual_block.iter().copied().collect();
            let sees_p1 = |x: Vertex| g.neighbors(x).iter().any(|&a| in_p1[a]);
            if self.trace.x.iter().any(|&x| !residual.contains(&x) && !sees_p1(x)) {
                // Step 12
                let x1: Vec<Vertex> = self.trace.x.iter().copied().filter(|&x| sees_p1(x)).collect();
                let x2: Vec<Vertex> = self
                    .trace
                    .x
                    .iter()
                    .copied()
                    .filter(|x| x1.binary_search(x).is_err() && !residual.contains(x))
                    .collect();
                let p1_prime: Vec<Vertex> =
                    p.iter().copied().filter(|&w| g.neighbors(w).iter().any(|a| x1.binary_search(a).is_ok())).collect();
                let p2_prime: Vec<Vertex> = p.iter().copied().filter(|w| p1_prime.binary_search(w).is_err()).collect();
                self.trace.x1 = x1;
                self.trace.x2 = x2;
                self.trace.p1_prime = p1_prime;
                self.trace.p2_prime = p2_prime;
                CompletionCase::Step12
            } else {
                CompletionCase::Step13
            }
        };
        self.generic_completion(&in_x);
        self.trace.completion_case = Some(case);
    }

    /// Step 11 (|X| = 1): blocks of closed neighbourhoods inside P, coloured
    /// from the single X vertex like Step 2 shifted to {3, 4}.
    fn step11(&mut self, p: &[Vertex], in_p: &[bool]) {
        let g = self.g;
        let x = self.trace.x[0];
        let mut taken = vec![false; g.vertex_count()];
        for &d in p {
            if taken[d] {
                continue;
            }
            let members: Vec<Vertex> = std::iter::once(d)
                .chain(g.neighbors(d).iter().copied().filter(|&w| in_p[w] && !taken[w]))
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
            if members.len() < 2 {
                continue;
            }
            for &w in &members {
                taken[w] = true;
                if g.has_edge(x, w) {
                    self.painter.paint(x, w, if w == d { 3 } else { 4 });
                }
            }
            self.trace.d_blocks.push(Block { center: d, members });
        }
        self.trace.d_residual = p.iter().copied().filter(|&w| !taken[w]).collect();
    }

    fn generic_completion(&mut self, in_x: &[bool]) {
        let g = self.g;
        self.color_first_layer_edges(3);
        // One X edge per P2 vertex carries 4.
        for &w in &self.trace.p2.clone() {
            if let Some(&a) = g.neighbors(w).iter().find(|&&a| in_x[a] && self.painter.get(w, a).is_none()) {
                self.painter.paint(w, a, 4);
            }
        }
        self.fill_by_role();
    }

    /// Colour every remaining edge by its position: down from a spoke of
    /// colour 1 gets 3, down from a spoke of colour 2 gets 4, inside
    /// `N^2(u)` gets 5, anything else 3.
    fn fill_by_role(&mut self) {
        let g = self.g;
        let u = self.u;
        for &(a, b) in g.edges() {
            let c = match (self.layer[a], self.layer[b]) {
                (Layer::Second, Layer::Second) => 5,
                (Layer::First, Layer::Second) | (Layer::Second, Layer::First) => {
                    let top = if self.in_first(a) { a } else { b };
                    if self.painter.get(u, top) == Some(2) {
                        4
                    } else {
                        3
                    }
                }
                _ => 3,
            };
            self.painter.paint(a, b, c);
        }
    }
}
