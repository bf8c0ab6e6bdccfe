use super::{tree_root, RootedTree, TreeDrawError};
use crate::classify::check_spec;
use crate::geometry::{Coord, Drawing, Polyline};
use crate::graph::{Graph, SubgraphSpec};

/// Column weights of a rooted tree given by ordered children lists:
/// 0 for a leaf, otherwise `Σ (ω(child) + 1) − 1`.
///
/// A subtree rooted at `u` occupies exactly the columns `x(u) ..= x(u) + ω(u)`.
pub fn subtree_weights(children: &[Vec<usize>], root: usize) -> Vec<usize> {
    let mut order = Vec::with_capacity(children.len());
    let mut stack = vec![root];
    while let Some(u) = stack.pop() {
        order.push(u);
        stack.extend(children[u].iter().copied());
    }
    let mut omega = vec![0usize; children.len()];
    for &u in order.iter().rev() {
        if !children[u].is_empty() {
            omega[u] = children[u].iter().map(|&c| omega[c] + 1).sum::<usize>() - 1;
        }
    }
    omega
}

/// 4-bend drawing for any spanning tree in which every crossing is a right angle.
///
/// Each non-tree edge `e = (u, v)` gets dummy leaves `u_e` under `u` and
/// `v_e` under `v`, placed before the real children. The extended tree is
/// drawn downwards one unit per level with columns assigned by subtree
/// weight, so every dummy owns a column nobody else uses below it. The edge
/// runs `u → u_e`, straight down to row `y_min − c`, across, and up to `v_e`
/// and `v`; crossings are therefore always between a vertical and a
/// horizontal segment.
pub fn draw_tree_4bend(g: &Graph, s: &SubgraphSpec) -> Result<Drawing, TreeDrawError> {
    check_spec(g, s)?;
    let t = s.graph(g);
    if !t.is_tree() {
        return Err(TreeDrawError::NotATree);
    }
    let n = g.vertex_count();
    let tree = RootedTree::new(&t, tree_root(s));
    let extra = s.complement();

    let total = n + 2 * extra.len();
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); total];
    let mut dummy_target = vec![usize::MAX; total];
    for (k, &e) in extra.iter().enumerate() {
        let (u, v) = g.edge(e);
        children[u].push(n + 2 * k);
        children[v].push(n + 2 * k + 1);
        dummy_target[n + 2 * k] = v;
        dummy_target[n + 2 * k + 1] = u;
    }
    for u in 0..n {
        children[u].sort_by_key(|&d| (dummy_target[d], d));
        children[u].extend(tree.children[u].iter().copied());
    }
    let omega = subtree_weights(&children, tree.root);

    let mut x = vec![0i64; total];
    let mut y = vec![0i64; total];
    let mut stack = vec![tree.root];
    while let Some(u) = stack.pop() {
        let mut next_x = x[u];
        for &c in &children[u] {
            x[c] = next_x;
            y[c] = y[u] - 1;
            next_x += omega[c] as i64 + 1;
            stack.push(c);
        }
    }
    let y_min = y.iter().copied().min().unwrap_or(0);

    let positions = (0..n).map(|v| Coord::exact(x[v], y[v])).collect();
    let mut curves: Vec<Polyline> = g.edges().iter().map(|&(u, v)| Polyline::straight(u, v)).collect();
    for (k, &e) in extra.iter().enumerate() {
        let (du, dv) = (n + 2 * k, n + 2 * k + 1);
        let row = y_min - k as i64 - 1;
        curves[e].bends = vec![
            Coord::exact(x[du], y[du]),
            Coord::exact(x[du], row),
            Coord::exact(x[dv], row),
            Coord::exact(x[dv], y[dv]),
        ];
    }
    Ok(Drawing::exact(positions, curves))
}
