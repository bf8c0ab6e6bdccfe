//! Drawers for spanning trees: straight-line spider, caterpillar and
//! BFS-tree constructions, and the 1-, 3- and 4-bend drawers for any tree.

mod bfs;
mod caterpillar;
mod four_bend;
mod one_bend;
mod spider;
mod three_bend;

pub use bfs::{draw_bfs_tree, draw_bfs_tree_layout, BfsLayout};
pub use caterpillar::{draw_caterpillar, draw_caterpillar_layout, CaterpillarLayout};
pub use four_bend::{draw_tree_4bend, subtree_weights};
pub use one_bend::draw_tree_1bend;
pub use spider::draw_spider;
pub use three_bend::draw_tree_3bend;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TreeDrawError {
    #[error("subgraph is not a spider")]
    NotASpider,
    #[error("subgraph is not a caterpillar")]
    NotACaterpillar,
    #[error("subgraph is not a BFS-tree rooted at vertex {root}")]
    NotABfsTree { root: usize },
    #[error("subgraph is not a spanning tree")]
    NotATree,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A spanning tree hung from a root, children in ascending vertex order.
#[derive(Debug, Clone)]
pub(crate) struct RootedTree {
    pub root: usize,
    pub children: Vec<Vec<usize>>,
    pub depth: Vec<usize>,
    /// Vertices in depth-first preorder.
    pub preorder: Vec<usize>,
}

impl RootedTree {
    pub fn new(t: &Graph, root: usize) -> Self {
        let n = t.vertex_count();
        let mut parent = vec![usize::MAX; n];
        let mut children = vec![Vec::new(); n];
        let mut depth = vec![0; n];
        let mut preorder = Vec::with_capacity(n);
        let mut stack = vec![root];
        parent[root] = root;
        while let Some(u) = stack.pop() {
            preorder.push(u);
            let kids: Vec<usize> = t.neighbors(u).filter(|&w| parent[w] == usize::MAX).collect();
            for &w in &kids {
                parent[w] = u;
                depth[w] = depth[u] + 1;
            }
            stack.extend(kids.iter().rev());
            children[u] = kids;
        }
        RootedTree { root, children, depth, preorder }
    }
}

pub(crate) fn tree_root(s: &crate::graph::SubgraphSpec) -> usize {
    s.root().unwrap_or(0)
}
