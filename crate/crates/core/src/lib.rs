//! Rainbow colouring for graphs with rainbow connection number 2.
//!
//! * [`graph`]: graph type, distances, centers, bridges, neighbourhoods.
//! * [`verify`]: rainbow path search, certificates, exact `rc(G)`.
//! * [`algo`]: the constructive colouring (at most 5 colours for bridgeless
//!   diameter-2 graphs, at most 4 for the pendant-edge family).
//! * [`gen`]: seeded generators for the graph families above.

pub mod algo;
pub mod gen;
pub mod graph;
pub mod verify;

pub use algo::{color_bridgeless_diam2, color_radius1_pendant, color_rc2, ColorError, ColorResult, ColoringTrace};
pub use graph::{Edge, Graph, GraphError, Vertex};
pub use verify::{is_rainbow_connected, Color, EdgeColoring, RainbowCertificate, Verdict};
