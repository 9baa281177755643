//! Seeded generators for the graph families the colouring needs.
//!
//! Randomness comes from ChaCha8 seeded with `seed_from_u64`; an edge
//! `{i, j}` (pairs in lexicographic order) is present iff the top 53 bits of
//! the next `u64`, read as a fraction of 2^53, are below `p`. The output is a
//! pure function of the spec on every platform.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{bridges, is_connected, metrics, Graph, Vertex};

pub const MAX_ATTEMPTS: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    RandomDiam2Bridgeless,
    Radius1Pendant,
    Named,
}

impl std::str::FromStr for Family {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "random_diam2_bridgeless" | "random-diam2" | "random-diam2-bridgeless" | "diam2" => {
                Ok(Family::RandomDiam2Bridgeless)
            }
            "radius1_pendant" | "radius1-pendant" | "pendant" => Ok(Family::Radius1Pendant),
            "named" => Ok(Family::Named),
            other => Err(GenError::InvalidSpec(format!("unknown family {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub family: Family,
    #[serde(default = "default_n")]
    pub n: usize,
    #[serde(default = "default_p")]
    pub p: f64,
    #[serde(default)]
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

fn default_n() -> usize {
    10
}

fn default_p() -> f64 {
    0.5
}

impl GeneratorSpec {
    pub fn random_diam2(n: usize, p: f64, seed: u64) -> Self {
        GeneratorSpec { family: Family::RandomDiam2Bridgeless, n, p, seed, name: None }
    }

    pub fn radius1_pendant(n: usize, p: f64, seed: u64) -> Self {
        GeneratorSpec { family: Family::Radius1Pendant, n, p, seed, name: None }
    }

    pub fn named(name: &str) -> Self {
        GeneratorSpec { family: Family::Named, n: default_n(), p: default_p(), seed: 0, name: Some(name.into()) }
    }

    fn validate(&self) -> Result<(), GenError> {
        if self.n < 1 {
            return Err(GenError::InvalidSpec("n must be at least 1".into()));
        }
        if !(0.0..=1.0).contains(&self.p) {
            return Err(GenError::InvalidSpec(format!("p = {} is outside [0, 1]", self.p)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("no valid graph after {attempts} attempts (n = {n})")]
    GenerationExhausted { attempts: usize, n: usize },
    #[error("unknown named graph {0:?}")]
    UnknownName(String),
    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),
}

pub fn generate(spec: &GeneratorSpec) -> Result<Graph, GenError> {
    spec.validate()?;
    match spec.family {
        Family::RandomDiam2Bridgeless => random_diam2_bridgeless(spec.n, spec.p, spec.seed),
        Family::Radius1Pendant => radius1_pendant(spec.n, spec.p, spec.seed),
        Family::Named => named(spec.name.as_deref().ok_or_else(|| GenError::UnknownName(String::new()))?),
    }
}

/// Re-check a family's defining predicate.
pub fn validate_family(g: &Graph, family: Family) -> bool {
    match family {
        Family::RandomDiam2Bridgeless => {
            is_connected(g) && bridges(g).is_ok_and(|b| b.is_empty()) && metrics(g).is_ok_and(|m| m.diameter == 2)
        }
        Family::Radius1Pendant => is_radius1_pendant(g),
        Family::Named => true,
    }
}

fn is_radius1_pendant(g: &Graph) -> bool {
    let Ok(found) = bridges(g) else { return false };
    if found.len() != 1 {
        return false;
    }
    let (a, b) = *found.iter().next().unwrap();
    let (hub, pendant) = if g.degree(b) == 1 && g.degree(a) > 1 {
        (a, b)
    } else if g.degree(a) == 1 && g.degree(b) > 1 {
        (b, a)
    } else {
        return false;
    };
    let (rest, map) = g.without_vertex(pendant);
    let hub = map.iter().position(|&v| v == hub).unwrap();
    rest.vertex_count() >= 3
        && bridges(&rest).is_ok_and(|b| b.is_empty())
        && metrics(&rest).is_ok_and(|m| m.ecc[hub] == 1)
}

/// Independent edge sampler over pairs of `vertices` in lexicographic order.
fn sample_edges(rng: &mut ChaCha8Rng, vertices: &[Vertex], p: f64) -> Vec<(Vertex, Vertex)> {
    let mut out = Vec::new();
    for (i, &a) in vertices.iter().enumerate() {
        for &b in &vertices[i + 1..] {
            let unit = (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64;
            if unit < p {
                out.push((a, b));
            }
        }
    }
    out
}

fn random_diam2_bridgeless(n: usize, p: f64, seed: u64) -> Result<Graph, GenError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vertices: Vec<Vertex> = (0..n).collect();
    for _ in 0..MAX_ATTEMPTS {
        let g = Graph::new(n, sample_edges(&mut rng, &vertices, p)).expect("sampled edges are valid");
        if validate_family(&g, Family::RandomDiam2Bridgeless) {
            return Ok(g);
        }
    }
    Err(GenError::GenerationExhausted { attempts: MAX_ATTEMPTS, n })
}

/// A connected bridgeless graph on `1..n-1`, a universal vertex 0 and a
/// pendant vertex `n - 1` hanging off vertex 0.
fn radius1_pendant(n: usize, p: f64, seed: u64) -> Result<Graph, GenError> {
    if n < 5 {
        return Err(GenError::InvalidSpec("radius1_pendant needs n >= 5".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let inner: Vec<Vertex> = (1..n - 1).collect();
    for _ in 0..MAX_ATTEMPTS {
        let edges = sample_edges(&mut rng, &inner, p);
        let h = Graph::new(n - 2, edges.iter().map(|&(a, b)| (a - 1, b - 1))).expect("sampled edges are valid");
        if !is_connected(&h) || !bridges(&h).is_ok_and(|b| b.is_empty()) {
            continue;
        }
        let hub = inner.iter().map(|&v| (0, v));
        let g = Graph::new(n, edges.into_iter().chain(hub).chain(std::iter::once((0, n - 1)))).expect("valid edges");
        return Ok(g);
    }
    Err(GenError::GenerationExhausted { attempts: MAX_ATTEMPTS, n })
}

fn named(name: &str) -> Result<Graph, GenError> {
    let unknown = || GenError::UnknownName(name.to_string());
    let params: Vec<&str> = name.split('_').collect();
    let num = |s: &str| s.parse::<usize>().map_err(|_| unknown());
    let edges: (usize, Vec<(Vertex, Vertex)>) = match params.as_slice() {
        ["petersen"] => {
            let outer = (0..5).map(|i| (i, (i + 1) % 5));
            let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
            let spokes = (0..5).map(|i| (i, i + 5));
            (10, outer.chain(inner).chain(spokes).collect())
        }
        ["wheel", k] => {
            let k = num(k)?;
            if k < 3 {
                return Err(unknown());
            }
            let rim = (0..k).map(|i| (1 + i, 1 + (i + 1) % k));
            (k + 1, (1..=k).map(|i| (0, i)).chain(rim).collect())
        }
        ["cycle", k] => {
            let k = num(k)?;
            if k < 3 {
                return Err(unknown());
            }
            (k, (0..k).map(|i| (i, (i + 1) % k)).collect())
        }
        ["complete", k] => {
            let k = num(k)?;
            if k < 1 {
                return Err(unknown());
            }
            (k, (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect())
        }
        ["complete", "bipartite", s, t] => {
            let (s, t) = (num(s)?, num(t)?);
            if s < 1 || t < 1 {
                return Err(unknown());
            }
            (s + t, (0..s).flat_map(|i| (s..s + t).map(move |j| (i, j))).collect())
        }
        ["path", k] => {
            let k = num(k)?;
            if k < 1 {
                return Err(unknown());
            }
            (k, (1..k).map(|i| (i - 1, i)).collect())
        }
        _ => return Err(unknown()),
    };
    Ok(Graph::new(edges.0, edges.1).expect("named constructions are valid"))
}

/// Edge probability that makes diameter-2 bridgeless graphs common at size
/// `n`, spread over a band by `jitter` in `[0, 1]`.
pub fn suggested_edge_probability(n: usize, jitter: f64) -> f64 {
    let n = n.max(4) as f64;
    let low = (2.2 * n.ln() / n).sqrt().clamp(0.3, 0.75);
    (low + jitter.clamp(0.0, 1.0) * (0.9 - low).max(0.0)).min(0.9)
}
