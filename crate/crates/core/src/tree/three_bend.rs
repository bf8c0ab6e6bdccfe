use super::{tree_root, RootedTree, TreeDrawError};
use crate::classify::check_spec;
use crate::geometry::{Coord, Drawing, Polyline};
use crate::graph::{Graph, SubgraphSpec};

/// 3-bend drawing for any spanning tree.
///
/// Every non-tree edge `(u, v)` gets two dummy leaves, one hanging from `u`
/// and one from `v`. The extended tree is laid out with all of its leaves on
/// `y = 0` and everything else above; the edge then runs
/// `u → d_u → (c, -1) → d_v → v` with `c` a counter starting at 0.
///
/// The layout puts each vertex `w` at `(L(w), K(w) - L(w))`, where `L` and
/// `R` are the x-coordinates of the leftmost and rightmost leaf below `w`,
/// `h` is its height and `K = R + h`. Each subtree then lies in the triangle
/// `x ≥ L, y ≥ 0, x + y ≤ K`; consecutive siblings keep `L(next) > K(prev)`,
/// which makes sibling triangles disjoint and the drawing planar. Children
/// are ordered by height so the tallest comes last, which bounds the width
/// by the number of vertices plus the number of leaves.
pub fn draw_tree_3bend(g: &Graph, s: &SubgraphSpec) -> Result<Drawing, TreeDrawError> {
    check_spec(g, s)?;
    let t = s.graph(g);
    if !t.is_tree() {
        return Err(TreeDrawError::NotATree);
    }
    let n = g.vertex_count();
    let tree = RootedTree::new(&t, tree_root(s));
    let extra = s.complement();

    // extended tree: dummy for (edge k, endpoint side) is vertex n + 2k + side
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

    let mut order = Vec::with_capacity(total);
    let mut stack = vec![tree.root];
    while let Some(u) = stack.pop() {
        order.push(u);
        stack.extend(children[u].iter().copied());
    }
    let mut height = vec![0usize; total];
    for &u in order.iter().rev() {
        height[u] = children[u].iter().map(|&c| height[c] + 1).max().unwrap_or(0);
    }
    for list in children.iter_mut() {
        list.sort_by_key(|&c| height[c]);
    }

    let mut left = vec![0i64; total];
    let mut right = vec![0i64; total];
    let mut cursor = 0i64;
    // explicit post-order: (vertex, index of next child)
    let mut frames = vec![(tree.root, 0usize)];
    while let Some((u, i)) = frames.pop() {
        if children[u].is_empty() {
            left[u] = cursor;
            right[u] = cursor;
            cursor += 1;
            continue;
        }
        if i > 0 {
            let c = children[u][i - 1];
            cursor = cursor.max(right[c] + height[c] as i64 + 1);
        }
        if i < children[u].len() {
            frames.push((u, i + 1));
            frames.push((children[u][i], 0));
        } else {
            left[u] = left[children[u][0]];
            right[u] = right[*children[u].last().unwrap()];
        }
    }
    let place = |w: usize| {
        let k = right[w] + height[w] as i64;
        Coord::exact(left[w], k - left[w])
    };

    let positions = (0..n).map(place).collect();
    let mut curves: Vec<Polyline> = g.edges().iter().map(|&(u, v)| Polyline::straight(u, v)).collect();
    for (k, &e) in extra.iter().enumerate() {
        curves[e].bends = vec![place(n + 2 * k), Coord::exact(k as i64, -1), place(n + 2 * k + 1)];
    }
    Ok(Drawing::exact(positions, curves))
}
