//! Independent checks for edge colourings: rainbow path search, whole-graph
//! certificates, a brute-force path oracle and exact `rc(G)` on small graphs.

mod brute;
mod coloring;
mod exact;
mod search;

use thiserror::Error;

pub use brute::{rainbow_path_bruteforce, BRUTE_FORCE_MAX_VERTICES};
pub use coloring::{Color, EdgeColoring, RainbowCertificate};
pub use exact::{find_rainbow_coloring, lower_bound_diameter, rc_exact, rc_exact_with_cap, RcValue, DEFAULT_MAX_EDGES};
pub use search::{
    failing_pairs, is_rainbow_connected, rainbow_distance_matrix, rainbow_path, rainbow_path_capped, Verdict,
    DEFAULT_PALETTE_CAP,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("invalid colouring: {0}")]
    InvalidColoring(String),
    #[error("invalid query: {0}")]
    InvalidQuery(String),
    #[error("palette of {palette} colours exceeds the search cap of {cap}")]
    PaletteTooLarge { palette: u8, cap: u8 },
    #[error("instance too large: {0}")]
    InstanceTooLarge(String),
    #[error("graph is disconnected")]
    Disconnected,
}
