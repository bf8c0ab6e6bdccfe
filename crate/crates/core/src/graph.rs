//! Simple undirected graphs, spanning subgraphs and connectivity queries.

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("edge {index} references vertex {vertex} but the graph has {n} vertices")]
    VertexOutOfRange { index: usize, vertex: usize, n: usize },
    #[error("edge {index} is a self-loop at vertex {vertex}")]
    SelfLoop { index: usize, vertex: usize },
    #[error("edge {index} duplicates edge {first} ({u}, {v})")]
    ParallelEdge { index: usize, first: usize, u: usize, v: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("invalid subgraph: {0}")]
    InvalidSubgraph(String),
}

/// A simple, undirected, connected graph with stable vertex and edge indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    // (neighbor, edge index), sorted by neighbor
    adj: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    /// Builds and validates a graph. Edges are stored with the smaller endpoint first.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        let g = Self::new_unchecked_connectivity(n, edges)?;
        if !g.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(g)
    }

    /// Like [`Graph::new`] but accepts disconnected graphs. Used for intermediate
    /// graphs (vertex deletions, partial structures).
    pub fn new_unchecked_connectivity(
        n: usize,
        edges: Vec<(usize, usize)>,
    ) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut adj = vec![Vec::new(); n];
        let mut normalized = Vec::with_capacity(edges.len());
        for (index, &(a, b)) in edges.iter().enumerate() {
            for v in [a, b] {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { index, vertex: v, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop { index, vertex: a });
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            normalized.push((u, v));
            adj[u].push((v, index));
            adj[v].push((u, index));
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
        }
        for list in &adj {
            for w in list.windows(2) {
                if w[0].0 == w[1].0 {
                    let (first, index) = (w[0].1.min(w[1].1), w[0].1.max(w[1].1));
                    let (u, v) = normalized[index];
                    return Err(GraphError::ParallelEdge { index, first, u, v });
                }
            }
        }
        Ok(Graph { n, edges: normalized, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// Neighbors of `v` paired with the connecting edge index, sorted by neighbor.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.adj[u]
            .binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| self.adj[u][i].1)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_between(u, v).is_some()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count_without(&[]) == 1
    }

    /// Number of connected components after deleting `removed` vertices.
    pub fn component_count_without(&self, removed: &[usize]) -> usize {
        let mut seen = vec![false; self.n];
        for &r in removed {
            seen[r] = true;
        }
        let mut components = 0;
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            components += 1;
            seen[s] = true;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for &(w, _) in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        components
    }

    /// Breadth-first distances from `root`; `usize::MAX` marks unreachable vertices.
    pub fn bfs_levels(&self, root: usize) -> Vec<usize> {
        let mut level = vec![usize::MAX; self.n];
        level[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &(w, _) in &self.adj[v] {
                if level[w] == usize::MAX {
                    level[w] = level[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        level
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.n && self.is_connected()
    }

    /// Articulation points, sorted.
    pub fn articulation_points(&self) -> Vec<usize> {
        let dfs = self.lowpoint_dfs();
        let mut cut = BTreeSet::new();
        for v in 0..self.n {
            let parent = dfs.parent[v];
            if parent == usize::MAX {
                if dfs.children[v] > 1 {
                    cut.insert(v);
                }
            } else if dfs.parent[parent] != usize::MAX && dfs.low[v] >= dfs.disc[parent] {
                cut.insert(parent);
            }
        }
        cut.into_iter().collect()
    }

    /// Biconnected components as sorted lists of edge indices (bridges are singleton blocks).
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut time = 0;
        let mut edge_stack: Vec<usize> = Vec::new();
        let mut blocks = Vec::new();
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // (vertex, parent edge, next adjacency position)
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            disc[root] = time;
            low[root] = time;
            time += 1;
            while let Some(&mut (v, pe, ref mut pos)) = stack.last_mut() {
                if *pos < self.adj[v].len() {
                    let (w, e) = self.adj[v][*pos];
                    *pos += 1;
                    if e == pe {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        edge_stack.push(e);
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        stack.push((w, e, 0));
                    } else if disc[w] < disc[v] {
                        edge_stack.push(e);
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(u, _, _)) = stack.last() {
                        low[u] = low[u].min(low[v]);
                        if low[v] >= disc[u] {
                            let mut block = Vec::new();
                            while let Some(e) = edge_stack.pop() {
                                block.push(e);
                                if e == pe {
                                    break;
                                }
                            }
                            block.sort_unstable();
                            blocks.push(block);
                        }
                    }
                }
            }
        }
        blocks
    }

    fn lowpoint_dfs(&self) -> LowpointDfs {
        let n = self.n;
        let mut out = LowpointDfs {
            disc: vec![usize::MAX; n],
            low: vec![0; n],
            parent: vec![usize::MAX; n],
            children: vec![0; n],
        };
        let mut time = 0;
        for root in 0..n {
            if out.disc[root] != usize::MAX {
                continue;
            }
            let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
            out.disc[root] = time;
            out.low[root] = time;
            time += 1;
            while let Some(&mut (v, ref mut pos)) = stack.last_mut() {
                if *pos < self.adj[v].len() {
                    let (w, _) = self.adj[v][*pos];
                    *pos += 1;
                    if out.disc[w] == usize::MAX {
                        out.parent[w] = v;
                        out.children[v] += 1;
                        out.disc[w] = time;
                        out.low[w] = time;
                        time += 1;
                        stack.push((w, 0));
                    } else if w != out.parent[v] {
                        out.low[v] = out.low[v].min(out.disc[w]);
                    }
                } else {
                    stack.pop();
                    let p = out.parent[v];
                    if p != usize::MAX {
                        out.low[p] = out.low[p].min(out.low[v]);
                    }
                }
            }
        }
        out
    }

    /// The subgraph induced by deleting `removed`, with vertices renumbered
    /// densely. Returns the graph and the old-index of each new vertex.
    pub fn without_vertices(&self, removed: &[usize]) -> Option<(Graph, Vec<usize>)> {
        let mut keep = vec![true; self.n];
        for &r in removed {
            keep[r] = false;
        }
        let old: Vec<usize> = (0..self.n).filter(|&v| keep[v]).collect();
        if old.is_empty() {
            return None;
        }
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in old.iter().enumerate() {
            new_id[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| keep[u] && keep[v])
            .map(|&(u, v)| (new_id[u], new_id[v]))
            .collect();
        let g = Graph::new_unchecked_connectivity(old.len(), edges).ok()?;
        Some((g, old))
    }
}

struct LowpointDfs {
    disc: Vec<usize>,
    low: Vec<usize>,
    parent: Vec<usize>,
    children: Vec<usize>,
}

/// 3 if triconnected, 2 if biconnected, 1 otherwise.
///
/// A graph is k-connected here when it has more than k vertices and stays
/// connected after deleting any k-1 of them.
pub fn connectivity_level(g: &Graph) -> u8 {
    let n = g.vertex_count();
    if n < 3 || !g.articulation_points().is_empty() {
        return 1;
    }
    if n < 4 {
        return 2;
    }
    for v in 0..n {
        let (h, _) = g.without_vertices(&[v]).expect("n >= 4");
        if !h.articulation_points().is_empty() || !h.is_connected() {
            return 2;
        }
    }
    3
}

/// The edge set W of a spanning subgraph S(V, W) of a parent graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgraphSpec {
    edges: Vec<usize>,
    mask: Vec<bool>,
    root: Option<usize>,
}

impl SubgraphSpec {
    /// Validates that `edges` selects a connected spanning subgraph of `g`.
    pub fn new(g: &Graph, edges: Vec<usize>, root: Option<usize>) -> Result<Self, GraphError> {
        let mut mask = vec![false; g.edge_count()];
        for &e in &edges {
            if e >= g.edge_count() {
                return Err(GraphError::InvalidSubgraph(format!(
                    "edge index {e} out of range"
                )));
            }
            if mask[e] {
                return Err(GraphError::InvalidSubgraph(format!("edge index {e} repeated")));
            }
            mask[e] = true;
        }
        if let Some(r) = root {
            if r >= g.vertex_count() {
                return Err(GraphError::InvalidSubgraph(format!("root {r} out of range")));
            }
        }
        let mut sorted = edges;
        sorted.sort_unstable();
        let spec = SubgraphSpec { edges: sorted, mask, root };
        let mut touched = vec![false; g.vertex_count()];
        for &e in &spec.edges {
            let (u, v) = g.edge(e);
            touched[u] = true;
            touched[v] = true;
        }
        if g.vertex_count() > 1 && touched.iter().any(|t| !t) {
            return Err(GraphError::InvalidSubgraph("subgraph not spanning".into()));
        }
        if !spec.graph(g).is_connected() {
            return Err(GraphError::InvalidSubgraph("subgraph not connected".into()));
        }
        Ok(spec)
    }

    /// Edge indices of W into the parent graph, sorted.
    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn contains(&self, e: usize) -> bool {
        self.mask[e]
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn with_root(mut self, root: Option<usize>) -> Self {
        self.root = root;
        self
    }

    /// Edges of the parent graph outside W, in index order.
    pub fn complement(&self) -> Vec<usize> {
        (0..self.mask.len()).filter(|&e| !self.mask[e]).collect()
    }

    /// S as a standalone graph on the same vertex set. Edge `i` of the result
    /// is edge `self.edges()[i]` of the parent.
    pub fn graph(&self, g: &Graph) -> Graph {
        let edges = self.edges.iter().map(|&e| g.edge(e)).collect();
        Graph::new_unchecked_connectivity(g.vertex_count(), edges)
            .expect("subset of a simple graph is simple")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).unwrap()
    }

    fn octahedron() -> Graph {
        let mut edges = Vec::new();
        for u in 0..6 {
            for v in u + 1..6 {
                if v != u + 3 {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(6, edges).unwrap()
    }

    #[test]
    fn rejects_malformed_graphs() {
        assert_eq!(Graph::new(0, vec![]), Err(GraphError::Empty));
        assert!(matches!(Graph::new(2, vec![(0, 0)]), Err(GraphError::SelfLoop { .. })));
        assert!(matches!(
            Graph::new(2, vec![(0, 1), (1, 0)]),
            Err(GraphError::ParallelEdge { .. })
        ));
        assert!(matches!(
            Graph::new(2, vec![(0, 2)]),
            Err(GraphError::VertexOutOfRange { .. })
        ));
        assert_eq!(Graph::new(3, vec![(0, 1)]), Err(GraphError::Disconnected));
    }

    #[test]
    fn connectivity_levels() {
        let path = Graph::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(connectivity_level(&path), 1);
        assert_eq!(connectivity_level(&cycle(5)), 2);
        assert_eq!(connectivity_level(&cycle(3)), 2);
        assert_eq!(connectivity_level(&complete(4)), 3);
        assert_eq!(octahedron().edge_count(), 12);
        assert_eq!(connectivity_level(&octahedron()), 3);
        assert_eq!(connectivity_level(&Graph::new(1, vec![]).unwrap()), 1);
    }

    #[test]
    fn blocks_of_two_triangles_and_a_bridge() {
        let g = Graph::new(
            7,
            vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3), (5, 6)],
        )
        .unwrap();
        let mut blocks = g.blocks();
        blocks.sort();
        assert_eq!(blocks, vec![vec![0, 1, 2], vec![3], vec![4, 5, 6], vec![7]]);
        assert_eq!(g.articulation_points(), vec![2, 3, 5]);
    }

    #[test]
    fn subgraph_validation() {
        let g = complete(4);
        assert!(SubgraphSpec::new(&g, vec![0, 1, 2], None).is_ok());
        let err = SubgraphSpec::new(&g, vec![0, 1], None).unwrap_err();
        assert_eq!(err, GraphError::InvalidSubgraph("subgraph not spanning".into()));
        // (0,1) and (2,3) span but are disconnected
        let e23 = g.edge_between(2, 3).unwrap();
        let err = SubgraphSpec::new(&g, vec![0, e23], None).unwrap_err();
        assert_eq!(err, GraphError::InvalidSubgraph("subgraph not connected".into()));
    }
}
