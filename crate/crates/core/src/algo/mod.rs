//! Constructive rainbow colouring.
//!
//! [`color_bridgeless_diam2`] colours a bridgeless graph of diameter at most
//! 2 with at most 5 colours; [`color_radius1_pendant`] colours a bridgeless
//! radius-1 graph with a pendant edge at its center with at most 4;
//! [`color_rc2`] picks the branch from the graph's structure. Every result is
//! checked by [`crate::verify::is_rainbow_connected`] before it is returned.

mod appropriate;
mod cycle;
mod dispatch;
mod rainbow_color;
mod repair;
mod trace;

use thiserror::Error;

pub use appropriate::{appropriate_coloring, CycleVariant};
pub use cycle::shortest_cycle_through;
pub use dispatch::{color_bridgeless_diam2, color_radius1_pendant, color_rc2, Branch};
pub use repair::REPAIR_ATTEMPTS_PER_EDGE;
pub use trace::{Block, ColoringTrace, CompletionCase, CycleRecord};

use crate::graph::{Edge, GraphError, Vertex};
use crate::verify::{EdgeColoring, RainbowCertificate, VerifyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColorError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has diameter {0}, expected at most 2")]
    NotDiameter2(u32),
    #[error("graph has a bridge {0:?}")]
    HasBridge(Edge),
    #[error("not a bridgeless radius-1 graph with a pendant edge at its center: {0}")]
    NotPendantStructure(String),
    #[error("graph matches neither rc = 2 structure: {0}")]
    NotRc2Structure(String),
    #[error("colouring still fails for pair {failing:?} after {} repair iterations", trace.repair_iterations)]
    CompletionFailed { failing: (Vertex, Vertex), trace: Box<ColoringTrace> },
    #[error("no appropriate pattern for {0}")]
    BadCyclePattern(String),
    #[error("edge {0:?} lies on no cycle")]
    NoCycle(Edge),
    #[error("invalid input graph: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}

impl From<GraphError> for ColorError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::Disconnected => ColorError::Disconnected,
            GraphError::InvalidGraph(msg) => ColorError::InvalidInput(msg),
        }
    }
}

impl ColorError {
    /// Errors that say the input lacks the required structure, as opposed to
    /// the procedure failing on a valid input.
    pub fn is_structural(&self) -> bool {
        matches!(
            self,
            ColorError::Disconnected
                | ColorError::NotDiameter2(_)
                | ColorError::HasBridge(_)
                | ColorError::NotPendantStructure(_)
                | ColorError::NotRc2Structure(_)
                | ColorError::InvalidInput(_)
        )
    }
}

/// A verified colouring together with how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorResult {
    pub coloring: EdgeColoring,
    pub colors_used: usize,
    pub branch: Branch,
    pub trace: ColoringTrace,
    pub certificate: RainbowCertificate,
}
