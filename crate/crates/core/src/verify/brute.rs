//! Exhaustive simple-path enumeration. Exponential; used as a test oracle
//! for the colour-set search.

use super::{EdgeColoring, VerifyError};
use crate::graph::{Graph, Vertex};

pub const BRUTE_FORCE_MAX_VERTICES: usize = 12;

/// First rainbow simple path from `s` to `t`, enumerating paths by
/// increasing length and, within a length, in lexicographic order.
pub fn rainbow_path_bruteforce(
    g: &Graph,
    c: &EdgeColoring,
    s: Vertex,
    t: Vertex,
) -> Result<Option<Vec<Vertex>>, VerifyError> {
    let n = g.vertex_count();
    if n > BRUTE_FORCE_MAX_VERTICES {
        return Err(VerifyError::InstanceTooLarge(format!(
            "brute-force path search is limited to {BRUTE_FORCE_MAX_VERTICES} vertices, got {n}"
        )));
    }
    if s >= n || t >= n || s == t {
        return Err(VerifyError::InvalidQuery(format!("pair ({s}, {t}) on {n} vertices")));
    }
    for len in 1..n {
        let mut path = vec![s];
        let mut on_path = vec![false; n];
        on_path[s] = true;
        if let Some(p) = walk(g, c, t, len, &mut path, &mut on_path) {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

fn walk(
    g: &Graph,
    c: &EdgeColoring,
    t: Vertex,
    len: usize,
    path: &mut Vec<Vertex>,
    on_path: &mut [bool],
) -> Option<Vec<Vertex>> {
    let v = *path.last().unwrap();
    if path.len() == len + 1 {
        return (v == t && all_colors_distinct(g, c, path)).then(|| path.clone());
    }
    if v == t {
        return None;
    }
    for &w in g.neighbors(v) {
        if on_path[w] {
            continue;
        }
        path.push(w);
        on_path[w] = true;
        let found = walk(g, c, t, len, path, on_path);
        on_path[w] = false;
        path.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

fn all_colors_distinct(g: &Graph, c: &EdgeColoring, path: &[Vertex]) -> bool {
    let mut colors: Vec<_> = path.windows(2).map(|w| c.color_of(g, w[0], w[1]).unwrap()).collect();
    colors.sort_unstable();
    colors.windows(2).all(|w| w[0] != w[1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn same_verdicts_as_the_worked_examples() {
        let g = path(2);
        assert_eq!(rainbow_path_bruteforce(&g, &EdgeColoring::uniform(&g, 1), 0, 1).unwrap(), Some(vec![0, 1]));

        let c4 = cycle(4);
        assert_eq!(rainbow_path_bruteforce(&c4, &EdgeColoring::uniform(&c4, 1), 0, 2).unwrap(), None);
        let alt = EdgeColoring::new(&c4, vec![1, 2, 2, 1], 2).unwrap();
        assert_eq!(rainbow_path_bruteforce(&c4, &alt, 0, 2).unwrap(), Some(vec![0, 1, 2]));
    }

    #[test]
    fn distinct_colours_on_c5() {
        let g = cycle(5);
        let c = EdgeColoring::all_distinct(&g);
        for s in 0..5 {
            for t in 0..5 {
                if s != t {
                    assert!(rainbow_path_bruteforce(&g, &c, s, t).unwrap().is_some());
                }
            }
        }
    }

    #[test]
    fn size_cap() {
        let g = cycle(13);
        let c = EdgeColoring::uniform(&g, 1);
        assert!(matches!(rainbow_path_bruteforce(&g, &c, 0, 1), Err(VerifyError::InstanceTooLarge(_))));
    }
}
