//! 1-bend drawings for biconnected spanning subgraphs with co-facial edges.

use num_rational::BigRational;
use num_traits::Signed;

use super::convex::convex_draw;
use super::kernel::{kernel_of_polygon, twice_area};
use super::ConnectedError;
use crate::classify::check_spec;
use crate::embedding::{planar_embed, Embedding};
use crate::geometry::{orient, Coord, Drawing, Polyline};
use crate::graph::{connectivity_level, Graph, SubgraphSpec};

/// A drawing together with one polygon per face of the embedding of `S`.
#[derive(Debug, Clone)]
pub struct RegionDrawing {
    pub drawing: Drawing,
    /// The region of each face in which its edges are routed.
    pub regions: Vec<Vec<Coord>>,
}

/// Validates a biconnected `S` against the given embedding and returns `S` as a graph.
pub(crate) fn check_biconnected(
    g: &Graph,
    s: &SubgraphSpec,
    emb: &Embedding,
) -> Result<Graph, ConnectedError> {
    check_spec(g, s)?;
    let t = s.graph(g);
    if connectivity_level(&t) < 2 {
        return Err(ConnectedError::NotBiconnected);
    }
    if !emb.matches_graph(&t) || !emb.is_planar() {
        return Err(ConnectedError::EmbeddingMismatch);
    }
    Ok(t)
}

/// For each edge outside `S`, the first face of `emb` holding both endpoints.
pub(crate) fn assign_faces(g: &Graph, s: &SubgraphSpec, emb: &Embedding) -> Result<Vec<Vec<usize>>, ConnectedError> {
    let mut faces_of: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
    for (i, f) in emb.faces().iter().enumerate() {
        for &v in f {
            faces_of[v].push(i);
        }
    }
    let mut per_face = vec![Vec::new(); emb.faces().len()];
    for e in s.complement() {
        let (u, v) = g.edge(e);
        let f = faces_of[u]
            .iter()
            .copied()
            .find(|f| faces_of[v].contains(f))
            .ok_or(ConnectedError::NotCofacial { edge: e })?;
        per_face[f].push(e);
    }
    Ok(per_face)
}

/// Convex-draws a triconnected augmentation with one of its triangular faces
/// (chosen by `pick`) as the outer face. Positions come back exact.
pub(crate) fn draw_augmented<F>(aug: &Graph, pick: F) -> Result<(Vec<Coord>, Vec<usize>), ConnectedError>
where
    F: Fn(&[usize]) -> bool,
{
    if connectivity_level(aug) < 3 {
        return Err(ConnectedError::AugmentationFailed("augmented graph is not triconnected".into()));
    }
    let emb = planar_embed(aug)
        .ok_or_else(|| ConnectedError::AugmentationFailed("augmented graph is not planar".into()))?;
    let outer = emb
        .faces()
        .iter()
        .find(|f| f.len() == 3 && pick(f))
        .ok_or_else(|| ConnectedError::AugmentationFailed("no triangular outer face".into()))?
        .clone();
    // clockwise, so bounded faces come out counter-clockwise
    let fixed = [Coord::exact(0, 0), Coord::exact(1, 2), Coord::exact(2, 0)];
    let d = convex_draw(aug, &outer, &fixed)?.to_exact();
    Ok((d.positions, outer))
}

/// `count` distinct points strictly inside the kernel of `poly`, on a line
/// through the kernel center that misses every point of `avoid`.
pub(crate) fn spread_in_kernel(
    poly: &[Coord],
    count: usize,
    avoid: &[Coord],
    face: usize,
) -> Result<Vec<Coord>, ConnectedError> {
    let kernel = kernel_of_polygon(poly);
    if !kernel.has_interior() {
        return Err(ConnectedError::KernelDegenerate { face });
    }
    let c = kernel.center().expect("kernel has vertices");
    let (cx, cy) = c.to_rational();
    let dir = (0i64..)
        .map(|j| Coord::exact_rational(&cx + BigRational::from_integer(1.into()), &cy + BigRational::from_integer(j.into())))
        .find(|q| avoid.iter().all(|p| orient(&c, q, p).unwrap_or(0) != 0))
        .expect("finitely many directions are blocked");
    let (qx, qy) = dir.to_rational();
    let (dx, dy) = (qx - &cx, qy - &cy);
    let mut pts: Vec<(BigRational, BigRational)> = poly.iter().map(Coord::to_rational).collect();
    if twice_area(&pts).is_negative() {
        pts.reverse();
    }
    let (mut lo, mut hi): (Option<BigRational>, Option<BigRational>) = (None, None);
    for i in 0..pts.len() {
        let (a, b) = (&pts[i], &pts[(i + 1) % pts.len()]);
        let o0 = (&b.0 - &a.0) * (&cy - &a.1) - (&b.1 - &a.1) * (&cx - &a.0);
        let o1 = (&b.0 - &a.0) * &dy - (&b.1 - &a.1) * &dx;
        if !o0.is_positive() {
            return Err(ConnectedError::KernelDegenerate { face });
        }
        if o1.is_negative() {
            let t = &o0 / -&o1;
            hi = Some(hi.map_or(t.clone(), |h| h.min(t)));
        } else if o1.is_positive() {
            let t = -(&o0 / &o1);
            lo = Some(lo.map_or(t.clone(), |l| l.max(t)));
        }
    }
    let (Some(lo), Some(hi)) = (lo, hi) else {
        return Err(ConnectedError::KernelDegenerate { face });
    };
    let two = BigRational::from_integer(2.into());
    let (lo, hi) = (lo / &two, hi / &two);
    let steps = BigRational::from_integer((count + 1).into());
    Ok((0..count)
        .map(|j| {
            let t = &lo + (&hi - &lo) * BigRational::from_integer((j + 1).into()) / &steps;
            Coord::exact_rational(&cx + &dx * &t, &cy + &dy * &t)
        })
        .collect())
}

/// Draws `G` with `S` planar in embedding `emb` and one bend per other edge.
///
/// A hub is added inside every face of `S`, the resulting triangulation is
/// drawn with a hub triangle outside, and each face's edges bend at distinct
/// points of that face's kernel.
pub fn draw_bicon_1bend(g: &Graph, s: &SubgraphSpec, emb: &Embedding) -> Result<Drawing, ConnectedError> {
    draw_bicon_1bend_with_regions(g, s, emb).map(|r| r.drawing)
}

pub fn draw_bicon_1bend_with_regions(
    g: &Graph,
    s: &SubgraphSpec,
    emb: &Embedding,
) -> Result<RegionDrawing, ConnectedError> {
    let t = check_biconnected(g, s, emb)?;
    let per_face = assign_faces(g, s, emb)?;
    let n = g.vertex_count();
    let faces = emb.faces();
    let mut edges = t.edges().to_vec();
    for (i, f) in faces.iter().enumerate() {
        edges.extend(f.iter().map(|&v| (v, n + i)));
    }
    let aug = Graph::new(n + faces.len(), edges)?;
    let outer_face = (0..faces.len()).max_by_key(|&i| (faces[i].len(), usize::MAX - i)).unwrap_or(0);
    let hub = n + outer_face;
    let (positions, outer) = draw_augmented(&aug, |f| f.contains(&hub))?;
    let regions: Vec<Vec<Coord>> = faces
        .iter()
        .enumerate()
        .map(|(i, f)| {
            if i != outer_face {
                return f.iter().map(|&v| positions[v].clone()).collect();
            }
            // the outer hub's fan: hub, then the walk from one outer corner around to the other
            let k = f.len();
            let start = (0..k)
                .find(|&j| {
                    let pair = [f[j], f[(j + 1) % k]];
                    pair.iter().all(|v| outer.contains(v))
                })
                .unwrap_or(0);
            let mut poly = vec![positions[hub].clone()];
            poly.extend((1..=k).map(|s| positions[f[(start + s) % k]].clone()));
            poly
        })
        .collect();
    let vertex_positions: Vec<Coord> = positions[..n].to_vec();
    let mut curves: Vec<Polyline> = g.edges().iter().map(|&(u, v)| Polyline::straight(u, v)).collect();
    for (i, list) in per_face.iter().enumerate() {
        if list.is_empty() {
            continue;
        }
        let bends = spread_in_kernel(&regions[i], list.len(), &vertex_positions, i)?;
        for (&e, b) in list.iter().zip(bends) {
            curves[e].bends = vec![b];
        }
    }
    Ok(RegionDrawing { drawing: Drawing::exact(vertex_positions, curves), regions })
}
