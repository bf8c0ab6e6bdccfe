use super::{tree_root, RootedTree, TreeDrawError};
use crate::classify::check_spec;
use crate::geometry::{Coord, Drawing, Polyline};
use crate::graph::{Graph, SubgraphSpec};

/// 1-bend drawing for any spanning tree.
///
/// The `i`-th vertex of a depth-first preorder (1-based) goes to `(i², i)`,
/// which puts the tree in convex position. Each non-tree edge `(v_i, v_j)`,
/// `i < j`, taken in lexicographic `(i, j)` order, bends once at
/// `(i² + 1, n + c)` for a counter `c` starting at 1.
pub fn draw_tree_1bend(g: &Graph, s: &SubgraphSpec) -> Result<Drawing, TreeDrawError> {
    check_spec(g, s)?;
    let t = s.graph(g);
    if !t.is_tree() {
        return Err(TreeDrawError::NotATree);
    }
    let n = g.vertex_count();
    let tree = RootedTree::new(&t, tree_root(s));
    let mut pos = vec![0i64; n];
    for (i, &v) in tree.preorder.iter().enumerate() {
        pos[v] = i as i64 + 1;
    }
    let positions = (0..n).map(|v| Coord::exact(pos[v] * pos[v], pos[v])).collect();
    let mut curves: Vec<Polyline> = g.edges().iter().map(|&(u, v)| Polyline::straight(u, v)).collect();
    let mut extra: Vec<(i64, i64, usize)> = s
        .complement()
        .into_iter()
        .map(|e| {
            let (u, v) = g.edge(e);
            (pos[u].min(pos[v]), pos[u].max(pos[v]), e)
        })
        .collect();
    extra.sort_unstable();
    for (c, &(i, _, e)) in extra.iter().enumerate() {
        curves[e].bends.push(Coord::exact(i * i + 1, n as i64 + c as i64 + 1));
    }
    Ok(Drawing::exact(positions, curves))
}
