//! Straight-line compatible drawings for triconnected spanning subgraphs.

use serde::{Deserialize, Serialize};

use super::convex::convex_draw;
use super::{face_positions, interleave, ConnectedError};
use crate::classify::check_spec;
use crate::embedding::{planar_embed, Embedding};
use crate::geometry::{Coord, Drawing};
use crate::graph::{connectivity_level, Graph, SubgraphSpec};

/// Three vertices of face `face` of the canonical embedding of `S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceTriple {
    pub face: usize,
    pub vertices: [usize; 3],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Rejection {
    /// The endpoints of this edge of `G` share no face of `S`.
    Condition1 { edge: usize },
    /// Every face ends with no empty region left.
    Condition2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TriconDecision {
    Accept(FaceTriple),
    Reject(Rejection),
}

/// The embedding of a triconnected `S`, or an error when `S` is not planar and triconnected.
pub(crate) fn tricon_embedding(g: &Graph, s: &SubgraphSpec) -> Result<Embedding, ConnectedError> {
    check_spec(g, s)?;
    let t = s.graph(g);
    if connectivity_level(&t) < 3 {
        return Err(ConnectedError::NotTriconnected);
    }
    planar_embed(&t).ok_or(ConnectedError::NotTriconnected)
}

/// Decides whether `G` has a straight-line drawing in which `S` is crossing-free.
///
/// Co-facial edges are checked with per-vertex face sets. Each face is then
/// processed with an outerplane partition of its polygon into Full and Empty
/// regions, inserting the chords of that face in lexicographic endpoint order.
pub fn tricon_decide(g: &Graph, s: &SubgraphSpec) -> Result<TriconDecision, ConnectedError> {
    let emb = tricon_embedding(g, s)?;
    let faces = emb.faces();
    let mut faces_of: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
    for (i, f) in faces.iter().enumerate() {
        for &v in f {
            faces_of[v].push(i);
        }
    }
    let mut chords: Vec<Vec<(usize, usize)>> = vec![Vec::new(); faces.len()];
    for e in s.complement() {
        let (u, v) = g.edge(e);
        let shared: Vec<usize> =
            faces_of[u].iter().copied().filter(|f| faces_of[v].contains(f)).collect();
        if shared.is_empty() {
            return Ok(TriconDecision::Reject(Rejection::Condition1 { edge: e }));
        }
        for f in shared {
            chords[f].push((u.min(v), u.max(v)));
        }
    }
    for (i, f) in faces.iter().enumerate() {
        chords[i].sort_unstable();
        let pos = face_positions(f);
        let mut state = Outerplane::new(f.len());
        for &(u, v) in &chords[i] {
            state.insert(pos[&u], pos[&v]);
        }
        if let Some(region) = state.empty_region() {
            let vertices = [f[region[0]], f[region[1]], f[region[2]]];
            return Ok(TriconDecision::Accept(FaceTriple { face: i, vertices }));
        }
    }
    Ok(TriconDecision::Reject(Rejection::Condition2))
}

/// Internal faces of an outerplane graph on the polygon 0..k, each as a
/// sorted position set, marked Full or Empty.
#[derive(Debug, Clone)]
pub(crate) struct Outerplane {
    k: usize,
    regions: Vec<(Vec<usize>, bool)>,
}

impl Outerplane {
    pub(crate) fn new(k: usize) -> Self {
        Outerplane { k, regions: vec![((0..k).collect(), false)] }
    }

    fn boundary(&self, a: usize, b: usize) -> bool {
        let d = a.abs_diff(b);
        d == 1 || d == self.k - 1
    }

    fn cyclic_pairs(r: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..r.len()).map(move |i| (r[i], r[(i + 1) % r.len()]))
    }

    fn has_edge(&self, a: usize, b: usize) -> bool {
        self.boundary(a, b)
            || self.regions.iter().any(|(r, _)| {
                Self::cyclic_pairs(r).any(|(x, y)| (x, y) == (a, b) || (x, y) == (b, a))
            })
    }

    pub(crate) fn insert(&mut self, a: usize, b: usize) {
        if self.has_edge(a, b) {
            return;
        }
        if let Some(i) = self.regions.iter().position(|(r, _)| r.contains(&a) && r.contains(&b)) {
            if !self.regions[i].1 {
                let (r, _) = self.regions.swap_remove(i);
                let (lo, hi) = (a.min(b), a.max(b));
                let inner: Vec<usize> = r.iter().copied().filter(|&x| lo <= x && x <= hi).collect();
                let outer: Vec<usize> =
                    r.iter().copied().filter(|&x| x <= lo || x >= hi).collect();
                self.regions.push((inner, false));
                self.regions.push((outer, false));
            }
            return;
        }
        let mut crossed: Vec<(usize, usize)> = Vec::new();
        let mut traversed = vec![false; self.regions.len()];
        for (i, (r, _)) in self.regions.iter().enumerate() {
            for (x, y) in Self::cyclic_pairs(r) {
                if !self.boundary(x, y) && interleave(a, b, x, y) {
                    traversed[i] = true;
                    crossed.push((x.min(y), x.max(y)));
                }
            }
        }
        crossed.sort_unstable();
        crossed.dedup();
        let mut chi = vec![a, b];
        for &(x, y) in &crossed {
            let both_empty = self
                .regions
                .iter()
                .filter(|(r, _)| Self::cyclic_pairs(r).any(|p| p == (x, y) || p == (y, x)))
                .all(|(_, full)| !full);
            if both_empty {
                chi.extend([x, y]);
            }
        }
        let mut merged = Vec::new();
        let mut kept = Vec::new();
        for (i, (r, full)) in std::mem::take(&mut self.regions).into_iter().enumerate() {
            if traversed[i] {
                if full {
                    chi.extend(r.iter().copied());
                }
                merged.extend(r);
            } else {
                kept.push((r, full));
            }
        }
        merged.sort_unstable();
        merged.dedup();
        chi.sort_unstable();
        chi.dedup();
        for i in 0..chi.len() {
            let (p, q) = (chi[i], chi[(i + 1) % chi.len()]);
            let pocket: Vec<usize> = if p < q {
                merged.iter().copied().filter(|&x| p <= x && x <= q).collect()
            } else {
                merged.iter().copied().filter(|&x| x >= p || x <= q).collect()
            };
            if pocket.len() >= 3 {
                kept.push((sorted(pocket), false));
            }
        }
        kept.push((chi, true));
        self.regions = kept;
    }

    /// Some Empty region, by smallest position set.
    pub(crate) fn empty_region(&self) -> Option<&[usize]> {
        self.regions.iter().filter(|(_, full)| !full).map(|(r, _)| r.as_slice()).min()
    }

    #[cfg(test)]
    pub(crate) fn regions(&self) -> &[(Vec<usize>, bool)] {
        &self.regions
    }
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

/// Draws `G` straight-line with `S` crossing-free, given an accepted face triple.
///
/// The triangle on the triple is added to `S`, the result is drawn convex with
/// that triangle as the outer face, and every edge of `G` is drawn straight.
pub fn tricon_draw(g: &Graph, s: &SubgraphSpec, t: FaceTriple) -> Result<Drawing, ConnectedError> {
    let emb = tricon_embedding(g, s)?;
    let face = emb.faces().get(t.face).ok_or(ConnectedError::InvalidTriple)?;
    let [a, b, c] = t.vertices;
    if a == b || b == c || a == c || !t.vertices.iter().all(|v| face.contains(v)) {
        return Err(ConnectedError::InvalidTriple);
    }
    let base = s.graph(g);
    let mut edges = base.edges().to_vec();
    for (u, v) in [(a, b), (b, c), (a, c)] {
        if !base.has_edge(u, v) {
            edges.push((u, v));
        }
    }
    let star = Graph::new(g.vertex_count(), edges)?;
    let star_emb = planar_embed(&star).ok_or(ConnectedError::InvalidTriple)?;
    let mut want = t.vertices;
    want.sort_unstable();
    let outer = star_emb
        .faces()
        .iter()
        .find(|f| f.len() == 3 && sorted(f.to_vec()) == want)
        .ok_or(ConnectedError::InvalidTriple)?;
    // the outer walk runs clockwise so bounded faces come out counter-clockwise
    let fixed = [Coord::exact(0, 0), Coord::exact(1, 2), Coord::exact(2, 0)];
    let star_drawing = convex_draw(&star, outer, &fixed)?;
    Ok(Drawing::straight_line(g, star_drawing.positions))
}
