//! Fixed colour patterns for the short cycles through the center `u`.

use serde::{Deserialize, Serialize};

use super::ColorError;
use crate::graph::{edge, Edge, Vertex};
use crate::verify::Color;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CycleVariant {
    C3,
    C4,
    C5,
}

impl CycleVariant {
    /// Layer of each cycle position (0 = `u`, 1 = `N^1(u)`, 2 = `N^2(u)`).
    pub fn layer_profile(self) -> &'static [u32] {
        match self {
            CycleVariant::C3 => &[0, 1, 1],
            CycleVariant::C4 => &[0, 1, 2, 1],
            CycleVariant::C5 => &[0, 1, 2, 2, 1],
        }
    }

    /// Colours of the cycle edges `u v1, v1 v2, ..., v_last u` in order.
    pub fn pattern(self) -> &'static [Color] {
        match self {
            CycleVariant::C3 => &[1, 3, 2],
            CycleVariant::C4 => &[1, 3, 4, 2],
            CycleVariant::C5 => &[1, 3, 5, 4, 2],
        }
    }

    pub fn classify(layers: &[u32]) -> Option<CycleVariant> {
        [CycleVariant::C3, CycleVariant::C4, CycleVariant::C5].into_iter().find(|v| v.layer_profile() == layers)
    }
}

/// The appropriate colouring of `cycle = [u, v1, ..., vk]` (closing edge
/// `vk u` implied), given the layer of every cycle vertex.
///
/// * C3 `u v1 v2`: `uv1 = 1, uv2 = 2, v1v2 = 3`
/// * C4 `u v1 v2 v3`: `uv1 = 1, v1v2 = 3, v3v2 = 4, uv3 = 2`
/// * C5 `u v1 v2 v3 v4`: `uv1 = 1, v1v2 = 3, v2v3 = 5, v3v4 = 4, uv4 = 2`
pub fn appropriate_coloring(cycle: &[Vertex], layers: &[u32]) -> Result<Vec<(Edge, Color)>, ColorError> {
    if cycle.len() != layers.len() {
        return Err(ColorError::BadCyclePattern(format!(
            "{} vertices but {} layer entries",
            cycle.len(),
            layers.len()
        )));
    }
    let variant = CycleVariant::classify(layers)
        .ok_or_else(|| ColorError::BadCyclePattern(format!("cycle {cycle:?} with layer profile {layers:?}")))?;
    let k = cycle.len();
    Ok(variant.pattern().iter().enumerate().map(|(i, &c)| (edge(cycle[i], cycle[(i + 1) % k]), c)).collect())
}
