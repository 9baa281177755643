use serde::{Deserialize, Serialize};

use super::rainbow_color::{LayeredColoring, Painter};
use super::repair::repair;
use super::trace::{ColoringTrace, CompletionCase};
use super::{ColorError, ColorResult};
use crate::graph::{bridges, edge, metrics, Graph, GraphError};
use crate::verify::{is_rainbow_connected, Color, EdgeColoring, Verdict};

/// Which construction produced a colouring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    /// Bridgeless, diameter at most 2: at most 5 colours.
    BridgelessDiam2,
    /// Bridgeless radius-1 graph plus a pendant edge at its center: at most 4.
    Radius1Pendant,
    /// K2 or P3.
    Degenerate,
}

impl Branch {
    pub fn color_bound(self) -> usize {
        match self {
            Branch::BridgelessDiam2 => 5,
            Branch::Radius1Pendant => 4,
            Branch::Degenerate => 2,
        }
    }
}

/// Colour a bridgeless graph of diameter at most 2 with at most 5 colours.
pub fn color_bridgeless_diam2(g: &Graph) -> Result<ColorResult, ColorError> {
    if g.vertex_count() < 3 {
        // K1 has nothing to colour through a center; K2 is a bridge.
        return match g.edges().first() {
            Some(&e) => Err(ColorError::HasBridge(e)),
            None => Err(ColorError::InvalidInput("need at least 3 vertices".into())),
        };
    }
    let m = metrics(g)?;
    if let Some(&b) = bridges(g)?.iter().next() {
        return Err(ColorError::HasBridge(b));
    }
    if m.diameter > 2 {
        return Err(ColorError::NotDiameter2(m.diameter));
    }
    let mut run = LayeredColoring::new(g, m.centers[0], None);
    run.run()?;
    finish(g, run.painter, run.trace, Branch::BridgelessDiam2)
}

/// Colour a graph made of a bridgeless radius-1 graph `G'` and a pendant edge
/// at a center of `G'`, with at most 4 colours: Steps 1–3 on `G'`, then a
/// fresh colour on the pendant edge.
pub fn color_radius1_pendant(g: &Graph) -> Result<ColorResult, ColorError> {
    let structure = |msg: &str| ColorError::NotPendantStructure(msg.to_string());
    let found = match bridges(g) {
        Ok(b) => b,
        Err(GraphError::Disconnected) => return Err(ColorError::Disconnected),
        Err(e) => return Err(e.into()),
    };
    if found.len() != 1 {
        return Err(structure(&format!("expected exactly one bridge, found {}", found.len())));
    }
    let (a, b) = *found.iter().next().unwrap();
    let (hub, pendant) = match (g.degree(a), g.degree(b)) {
        (_, 1) if g.degree(a) > 1 => (a, b),
        (1, _) => (b, a),
        _ => return Err(structure("the bridge is not a pendant edge")),
    };
    if g.vertex_count() < 4 {
        return Err(structure("G' needs at least 3 vertices"));
    }
    let (rest, map) = g.without_vertex(pendant);
    let hub_in_rest = map.iter().position(|&v| v == hub).unwrap();
    let rest_metrics = metrics(&rest).map_err(|_| structure("G' is disconnected"))?;
    if rest_metrics.ecc[hub_in_rest] != 1 {
        return Err(structure("the pendant edge is not attached at a center of radius 1"));
    }

    let mut run = LayeredColoring::new(g, hub, Some(pendant));
    run.painter.paint(hub, pendant, 4);
    run.trace.pendant_edge = Some(edge(hub, pendant));
    if !run.cover_first_layer() {
        return Err(ColorError::CompletionFailed {
            failing: (hub, run.trace.residual_block[0]),
            trace: Box::new(run.trace),
        });
    }
    finish(g, run.painter, run.trace, Branch::Radius1Pendant)
}

/// Colour a graph with rainbow connection number 2 using at most 5 colours,
/// dispatching on its structure.
pub fn color_rc2(g: &Graph) -> Result<ColorResult, ColorError> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(ColorError::NotRc2Structure("fewer than 2 vertices".into()));
    }
    let found = match bridges(g) {
        Ok(b) => b,
        Err(GraphError::Disconnected) => return Err(ColorError::Disconnected),
        Err(e) => return Err(e.into()),
    };
    match (n, g.edge_count()) {
        (2, 1) => return degenerate(g, vec![1]),
        (3, 2) => return degenerate(g, vec![1, 2]),
        _ => {}
    }
    match found.len() {
        0 => match color_bridgeless_diam2(g) {
            Err(ColorError::NotDiameter2(d)) => {
                Err(ColorError::NotRc2Structure(format!("bridgeless but diameter {d}")))
            }
            other => other,
        },
        1 => match color_radius1_pendant(g) {
            Err(ColorError::NotPendantStructure(msg)) => Err(ColorError::NotRc2Structure(msg)),
            other => other,
        },
        k => Err(ColorError::NotRc2Structure(format!("{k} bridges"))),
    }
}

fn degenerate(g: &Graph, colors: Vec<Color>) -> Result<ColorResult, ColorError> {
    let trace = ColoringTrace { completion_case: Some(CompletionCase::Degenerate), ..Default::default() };
    let mut painter = Painter::new(g);
    for (&(a, b), c) in g.edges().iter().zip(colors) {
        painter.paint(a, b, c);
    }
    finish(g, painter, trace, Branch::Degenerate)
}

/// Verify, repair if needed, and package.
fn finish(
    g: &Graph,
    painter: Painter<'_>,
    mut trace: ColoringTrace,
    branch: Branch,
) -> Result<ColorResult, ColorError> {
    let colors: Vec<Color> = painter.into_colors().into_iter().map(|c| c.unwrap_or(3)).collect();
    let palette = colors.iter().copied().max().unwrap_or(1);
    let mut coloring = EdgeColoring::new(g, colors, palette)?;

    let report = repair(g, &mut coloring, branch.color_bound().max(2) as Color);
    trace.repair_iterations = report.iterations;
    if let Some(failing) = report.unresolved {
        return Err(ColorError::CompletionFailed { failing, trace: Box::new(trace) });
    }
    let coloring = EdgeColoring::new(g, coloring.colors().to_vec(), coloring.max_color().max(1))?;
    match is_rainbow_connected(g, &coloring)? {
        Verdict::Connected(certificate) => {
            Ok(ColorResult { colors_used: coloring.colors_used(), coloring, branch, trace, certificate })
        }
        Verdict::Failing(failing) => Err(ColorError::CompletionFailed { failing, trace: Box::new(trace) }),
    }
}
