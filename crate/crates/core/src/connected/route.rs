//! Routing a co-facial edge along the shorter side of its face.

use num_rational::BigRational;

use super::ConnectedError;
use crate::embedding::Embedding;
use crate::geometry::{rational_from_f64, segments_cross, Coord, Drawing, Polyline, SegmentRelation};

/// Whether `base` shows the rotation of `emb` clockwise instead of counter-clockwise.
pub(crate) fn drawing_is_mirrored(emb: &Embedding, base: &Drawing) -> bool {
    let angle = |v: usize, w: usize| {
        let (px, py) = base.positions[v].to_f64();
        let (qx, qy) = base.positions[w].to_f64();
        (qy - py).atan2(qx - px)
    };
    let tau = std::f64::consts::TAU;
    for (v, rot) in emb.rotation().iter().enumerate() {
        if rot.len() >= 3 {
            let a0 = angle(v, rot[0]);
            let d1 = (angle(v, rot[1]) - a0).rem_euclid(tau);
            let d2 = (angle(v, rot[2]) - a0).rem_euclid(tau);
            return d1 > d2;
        }
    }
    false
}

/// Unit vector from `p` into the face at the corner `prev -> p -> next` of a
/// walk that keeps its face on the left (or on the right when `mirrored`).
pub(crate) fn inward_direction(prev: (f64, f64), p: (f64, f64), next: (f64, f64), mirrored: bool) -> (f64, f64) {
    let norm = |x: f64, y: f64| {
        let l = x.hypot(y);
        (x / l, y / l)
    };
    let (mut a, mut b) = (norm(prev.0 - p.0, prev.1 - p.1), norm(next.0 - p.0, next.1 - p.1));
    if mirrored {
        std::mem::swap(&mut a, &mut b);
    }
    // the face spans counter-clockwise from b to a
    let cross = b.0 * a.1 - b.1 * a.0;
    let (sx, sy) = (a.0 + b.0, a.1 + b.1);
    if sx.hypot(sy) < 1e-12 {
        return (-b.1, b.0);
    }
    let s = norm(sx, sy);
    if cross >= 0.0 {
        s
    } else {
        (-s.0, -s.1)
    }
}

/// Interior vertices of the shorter boundary path of `face` from `u` to `v`,
/// with their walk neighbors; ties take the walk direction.
pub(crate) fn shorter_side(face: &[usize], u: usize, v: usize) -> Option<Vec<(usize, usize, usize)>> {
    let k = face.len();
    let i = face.iter().position(|&x| x == u)?;
    let j = face.iter().position(|&x| x == v)?;
    let forward = (j + k - i - 1) % k;
    let backward = (i + k - j - 1) % k;
    let corner = |idx: usize| (face[(idx + k - 1) % k], face[idx], face[(idx + 1) % k]);
    Some(if forward <= backward {
        (1..=forward).map(|s| corner((i + s) % k)).collect()
    } else {
        (1..=backward).map(|s| corner((i + k - s) % k)).collect()
    })
}

/// Draws edge `(u, v)` inside face `face` of `emb`, bending once near each
/// interior vertex of the shorter boundary path between them.
///
/// Bends start a quarter of the shortest edge length away from their vertex
/// along the corner bisector and move closer until the route meets no edge of
/// `base` except at its own endpoints.
pub fn route_k_bend(
    edge: (usize, usize),
    face: usize,
    emb: &Embedding,
    base: &Drawing,
) -> Result<Polyline, ConnectedError> {
    let (u, v) = edge;
    let walk = emb.faces().get(face).ok_or(ConnectedError::NotCofacial { edge: usize::MAX })?;
    let corners = shorter_side(walk, u, v).ok_or(ConnectedError::NotCofacial { edge: usize::MAX })?;
    if corners.is_empty() {
        return Ok(Polyline::straight(u, v));
    }
    let mirrored = drawing_is_mirrored(emb, base);
    let pos = |x: usize| base.positions[x].to_f64();
    let dirs: Vec<(BigRational, BigRational)> = corners
        .iter()
        .map(|&(a, p, b)| {
            let d = inward_direction(pos(a), pos(p), pos(b), mirrored);
            (rational_from_f64(d.0), rational_from_f64(d.1))
        })
        .collect();
    let shortest = base
        .curves
        .iter()
        .map(|c| {
            let (p, q) = (pos(c.u), pos(c.v));
            (q.0 - p.0).hypot(q.1 - p.1)
        })
        .fold(f64::INFINITY, f64::min);
    let mut delta = rational_from_f64(if shortest.is_finite() { shortest / 4.0 } else { 1.0 });
    let two = BigRational::from_integer(2.into());
    for _ in 0..64 {
        let bends: Vec<Coord> = corners
            .iter()
            .zip(&dirs)
            .map(|(&(_, p, _), (dx, dy))| {
                let (px, py) = base.positions[p].to_rational();
                base.positions[p].like(px + dx * &delta, py + dy * &delta)
            })
            .collect();
        let line = Polyline::new(u, v, bends);
        if route_is_clear(&line, base) {
            return Ok(line);
        }
        delta /= &two;
    }
    Err(ConnectedError::NotCofacial { edge: usize::MAX })
}

/// Whether every segment of `line` avoids every curve of `base`, except for
/// touching at `line`'s own endpoints.
pub(crate) fn route_is_clear(line: &Polyline, base: &Drawing) -> bool {
    let mut pts = vec![&base.positions[line.u]];
    pts.extend(line.bends.iter());
    pts.push(&base.positions[line.v]);
    let ends = [&base.positions[line.u], &base.positions[line.v]];
    for (e, _) in base.curves.iter().enumerate() {
        let other = base.curve_points(e);
        for w in pts.windows(2) {
            for o in other.windows(2) {
                match segments_cross((w[0], w[1]), (o[0], o[1])) {
                    Ok(SegmentRelation::Disjoint) => {}
                    Ok(SegmentRelation::Touch(p)) if ends.iter().any(|&x| *x == p) => {}
                    _ => return false,
                }
            }
        }
    }
    true
}
