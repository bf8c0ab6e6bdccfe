//! Small named graphs shared by unit tests.

use crate::graph::{Graph, SubgraphSpec};

pub(crate) fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, edges).unwrap()
}

pub(crate) fn cycle_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n).map(|i| (i, (i + 1) % n)).collect()
}

pub(crate) fn cube_edges() -> Vec<(usize, usize)> {
    // bottom 0-1-2-3, top 4-5-6-7, verticals i -- i+4
    let mut e = Vec::new();
    for i in 0..4 {
        e.push((i, (i + 1) % 4));
        e.push((4 + i, 4 + (i + 1) % 4));
        e.push((i, i + 4));
    }
    e
}

pub(crate) fn octahedron_edges() -> Vec<(usize, usize)> {
    // antipodal pairs (0,5), (1,3), (2,4)
    let mut e = Vec::new();
    for u in 0..6 {
        for v in u + 1..6 {
            if !matches!((u, v), (0, 5) | (1, 3) | (2, 4)) {
                e.push((u, v));
            }
        }
    }
    e
}

pub(crate) fn prism_edges() -> Vec<(usize, usize)> {
    vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
}

/// `G` = `base` plus `extra`, with `S` = `base`.
pub(crate) fn with_extras(
    n: usize,
    base: &[(usize, usize)],
    extra: &[(usize, usize)],
) -> (Graph, SubgraphSpec) {
    let mut all = base.to_vec();
    all.extend_from_slice(extra);
    let g = Graph::new(n, all).unwrap();
    let s = SubgraphSpec::new(&g, (0..base.len()).collect(), None).unwrap();
    (g, s)
}
