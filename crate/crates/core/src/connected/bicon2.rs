//! 2-bend drawings for biconnected spanning subgraphs with co-facial edges.

use super::bicon1::{assign_faces, check_biconnected, draw_augmented};
use super::ConnectedError;
use crate::embedding::Embedding;
use crate::geometry::{Coord, Drawing, Polyline};
use crate::graph::{Graph, SubgraphSpec};

/// A drawing together with the polygon of every cycle gadget.
#[derive(Debug, Clone)]
pub struct GadgetDrawing {
    pub drawing: Drawing,
    /// Positions of the gadget cycle of each face with at least two edges to route.
    pub gadgets: Vec<Vec<Coord>>,
}

/// Draws `G` with `S` planar in embedding `emb` and two bends per other edge.
///
/// Each face with `k` edges to route gets a cycle of `2k` gadget vertices
/// (a single edge when `k = 1`), one per edge end, joined to the face
/// boundary in walk order. Faces without edges of length at least four get
/// a hub. The result is certified triconnected and drawn convex; every edge
/// then runs from its endpoint to its two gadget vertices and on.
pub fn draw_bicon_2bend(g: &Graph, s: &SubgraphSpec, emb: &Embedding) -> Result<Drawing, ConnectedError> {
    draw_bicon_2bend_with_gadgets(g, s, emb).map(|d| d.drawing)
}

pub fn draw_bicon_2bend_with_gadgets(
    g: &Graph,
    s: &SubgraphSpec,
    emb: &Embedding,
) -> Result<GadgetDrawing, ConnectedError> {
    let t = check_biconnected(g, s, emb)?;
    let per_face = assign_faces(g, s, emb)?;
    let n = g.vertex_count();
    let mut edges = t.edges().to_vec();
    let mut next = n;
    // gadget vertex of each end of each routed edge: (at u, at v)
    let mut anchors = vec![(usize::MAX, usize::MAX); g.edge_count()];
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    for (walk, list) in emb.faces().iter().zip(&per_face) {
        let k = walk.len();
        if list.is_empty() {
            // a lone triangle needs hubs too, since K3 is not triconnected
            if k >= 4 || n == 3 {
                edges.extend(walk.iter().map(|&v| (v, next)));
                next += 1;
            }
            continue;
        }
        let pos = super::face_positions(walk);
        // ends at one vertex are ordered so that nested edges get nested anchors
        let mut ends: Vec<(usize, usize, usize, bool)> = Vec::new();
        for &e in list {
            let (u, v) = g.edge(e);
            let (pu, pv) = (pos[&u], pos[&v]);
            ends.push((pu, k - (pv + k - pu) % k, e, true));
            ends.push((pv, k - (pu + k - pv) % k, e, false));
        }
        ends.sort_unstable();
        let len = ends.len();
        let ids: Vec<usize> = (next..next + len).collect();
        next += len;
        for (j, &(p, _, e, at_u)) in ends.iter().enumerate() {
            if at_u {
                anchors[e].0 = ids[j];
            } else {
                anchors[e].1 = ids[j];
            }
            let q = ends[(j + 1) % len].0;
            let span = (q + k - p) % k;
            edges.extend((0..=span).map(|s| (walk[(p + s) % k], ids[j])));
        }
        if len == 2 {
            edges.push((ids[0], ids[1]));
        } else {
            edges.extend((0..len).map(|j| (ids[j], ids[(j + 1) % len])));
            cycles.push(ids);
        }
    }
    let aug = Graph::new(next, edges)?;
    let (positions, _) = draw_augmented(&aug, |_| true)?;
    let mut curves: Vec<Polyline> = g.edges().iter().map(|&(u, v)| Polyline::straight(u, v)).collect();
    for e in s.complement() {
        let (a, b) = anchors[e];
        curves[e].bends = vec![positions[a].clone(), positions[b].clone()];
    }
    let gadgets = cycles
        .iter()
        .map(|c| c.iter().map(|&x| positions[x].clone()).collect())
        .collect();
    Ok(GadgetDrawing { drawing: Drawing::exact(positions[..n].to_vec(), curves), gadgets })
}
