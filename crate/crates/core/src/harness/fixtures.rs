use serde::{Deserialize, Serialize};

use crate::graph::{Graph, SubgraphSpec};

/// Trees with no straight-line drawing compatible with the complete graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Fixture {
    /// K13 with the complete rooted ternary tree: root 0, children 1-3,
    /// grandchildren 4-12 (three per child, in order).
    K13Ternary,
    /// K22 with the complete unrooted binary tree: center 0, neighbors 1-3,
    /// then 4-9 and leaves 10-21, two children per vertex in BFS order.
    K22Binary,
}

impl Fixture {
    pub fn name(self) -> &'static str {
        match self {
            Fixture::K13Ternary => "K13_TERNARY",
            Fixture::K22Binary => "K22_BINARY",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "K13_TERNARY" => Some(Fixture::K13Ternary),
            "K22_BINARY" => Some(Fixture::K22Binary),
            _ => None,
        }
    }
}

/// The fixture's complete graph (edges in lexicographic order) and its tree, rooted at 0.
pub fn fixture(f: Fixture) -> (Graph, SubgraphSpec) {
    let (n, tree): (usize, Vec<(usize, usize)>) = match f {
        Fixture::K13Ternary => (13, (1..13).map(|v| (if v <= 3 { 0 } else { (v - 4) / 3 + 1 }, v)).collect()),
        Fixture::K22Binary => {
            let parent = |v: usize| if v <= 3 { 0 } else { (v - 4) / 2 + 1 };
            (22, (1..22).map(|v| (parent(v), v)).collect())
        }
    };
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    let g = Graph::new(n, edges).expect("complete graphs are simple and connected");
    let w = tree.iter().map(|&(u, v)| g.edge_between(u, v).unwrap()).collect();
    let s = SubgraphSpec::new(&g, w, Some(0)).expect("fixture tree spans");
    (g, s)
}
