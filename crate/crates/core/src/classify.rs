//! Classification of the spanning subgraph into the families handled by the drawers.

use serde::{Deserialize, Serialize};

use crate::embedding::planar_embed;
use crate::graph::{connectivity_level, Graph, GraphError, SubgraphSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SubgraphClass {
    Path,
    Spider,
    Caterpillar,
    BfsTree(usize),
    GeneralTree,
    Triconnected,
    Biconnected,
    OtherConnected,
}

impl SubgraphClass {
    pub fn is_tree(self) -> bool {
        matches!(
            self,
            SubgraphClass::Path
                | SubgraphClass::Spider
                | SubgraphClass::Caterpillar
                | SubgraphClass::BfsTree(_)
                | SubgraphClass::GeneralTree
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            SubgraphClass::Path => "path",
            SubgraphClass::Spider => "spider",
            SubgraphClass::Caterpillar => "caterpillar",
            SubgraphClass::BfsTree(_) => "bfs_tree",
            SubgraphClass::GeneralTree => "general_tree",
            SubgraphClass::Triconnected => "triconnected",
            SubgraphClass::Biconnected => "biconnected",
            SubgraphClass::OtherConnected => "other_connected",
        }
    }
}

/// Returns the most specific family of `S` within `G`.
///
/// Trees are tested in the order path, spider, caterpillar, BFS-tree; for the
/// BFS test the root stored in `s` is tried first, then every vertex by index.
pub fn classify(g: &Graph, s: &SubgraphSpec) -> Result<SubgraphClass, GraphError> {
    check_spec(g, s)?;
    let t = s.graph(g);
    if t.is_tree() {
        if is_path(&t) {
            return Ok(SubgraphClass::Path);
        }
        if spider_center(&t).is_some() {
            return Ok(SubgraphClass::Spider);
        }
        if caterpillar_spine(&t).is_some() {
            return Ok(SubgraphClass::Caterpillar);
        }
        if let Some(r) = find_bfs_root(g, s) {
            return Ok(SubgraphClass::BfsTree(r));
        }
        return Ok(SubgraphClass::GeneralTree);
    }
    let planar = planar_embed(&t).is_some();
    Ok(match connectivity_level(&t) {
        3 if planar => SubgraphClass::Triconnected,
        2 | 3 if planar => SubgraphClass::Biconnected,
        _ => SubgraphClass::OtherConnected,
    })
}

/// Rejects a subgraph spec that was built for a different graph.
pub(crate) fn check_spec(g: &Graph, s: &SubgraphSpec) -> Result<(), GraphError> {
    if s.edges().iter().any(|&e| e >= g.edge_count()) {
        return Err(GraphError::InvalidSubgraph("edge index out of range".into()));
    }
    SubgraphSpec::new(g, s.edges().to_vec(), s.root()).map(|_| ())
}

pub fn is_path(t: &Graph) -> bool {
    t.is_tree() && (0..t.vertex_count()).all(|v| t.degree(v) <= 2)
}

/// The center of a spider: the unique vertex of degree ≥ 3, or an end of a path.
pub fn spider_center(t: &Graph) -> Option<usize> {
    if !t.is_tree() {
        return None;
    }
    let mut high = (0..t.vertex_count()).filter(|&v| t.degree(v) >= 3);
    match (high.next(), high.next()) {
        (Some(c), None) => Some(c),
        (None, _) => (0..t.vertex_count()).find(|&v| t.degree(v) <= 1),
        _ => None,
    }
}

/// The spine of a caterpillar as a vertex path (non-leaf vertices in order).
///
/// For trees with at most two vertices the spine is a single vertex.
pub fn caterpillar_spine(t: &Graph) -> Option<Vec<usize>> {
    if !t.is_tree() {
        return None;
    }
    let n = t.vertex_count();
    if n <= 2 {
        return Some(vec![0]);
    }
    let inner: Vec<bool> = (0..n).map(|v| t.degree(v) >= 2).collect();
    let inner_deg = |v: usize| t.neighbors(v).filter(|&w| inner[w]).count();
    if (0..n).any(|v| inner[v] && inner_deg(v) > 2) {
        return None;
    }
    let start = (0..n).find(|&v| inner[v] && inner_deg(v) <= 1)?;
    let mut spine = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(next) = t.neighbors(cur).find(|&w| inner[w] && w != prev) {
        spine.push(next);
        prev = cur;
        cur = next;
    }
    Some(spine)
}

/// Whether every edge of `G` joins equal or consecutive BFS levels of the tree `S` rooted at `root`.
pub fn is_bfs_root(g: &Graph, s: &SubgraphSpec, root: usize) -> bool {
    let levels = s.graph(g).bfs_levels(root);
    g.edges().iter().all(|&(u, v)| levels[u].abs_diff(levels[v]) <= 1)
}

pub fn find_bfs_root(g: &Graph, s: &SubgraphSpec) -> Option<usize> {
    let t = s.graph(g);
    let ok = |r: usize| {
        let levels = t.bfs_levels(r);
        g.edges().iter().all(|&(u, v)| levels[u].abs_diff(levels[v]) <= 1)
    };
    s.root().filter(|&r| ok(r)).or_else(|| (0..g.vertex_count()).find(|&r| ok(r)))
}
