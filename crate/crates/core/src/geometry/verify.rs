//! Exhaustive segment census that certifies a drawing.

use rayon::prelude::*;
use serde::Serialize;

use super::coord::CoordMode;
use super::drawing::{Drawing, FLOAT_EPSILON};
use super::lattice::{meet, to_lattice, Lattice, LatticeDrawing, LatticePoint, Meet};
use super::GeometryError;
use crate::graph::{Graph, SubgraphSpec};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Crossing {
    pub edge_a: usize,
    pub seg_a: usize,
    pub edge_b: usize,
    pub seg_b: usize,
    pub point: (f64, f64),
    /// Acute angle between the two segments, in degrees.
    pub angle_degrees: f64,
    /// Exact perpendicularity test on the lattice coordinates.
    pub right_angle: bool,
    pub involves_subgraph: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum PointRef {
    Vertex(usize),
    Bend { edge: usize, index: usize },
}

#[derive(Debug, Clone, PartialEq, PartialOrd, Serialize)]
pub enum Violation {
    BentSubgraphEdge { edge: usize, bends: usize },
    CoincidentPoints { first: PointRef, second: PointRef },
    ZeroLengthSegment { edge: usize, segment: usize },
    SelfIntersection { edge: usize, seg_a: usize, seg_b: usize },
    Overlap { edge_a: usize, seg_a: usize, edge_b: usize, seg_b: usize },
    /// Two edges meet in a point that is not a shared endpoint of both
    /// (vertex on an edge, bend on an edge, or two bends on each other).
    IllegalTouch { edge_a: usize, seg_a: usize, edge_b: usize, seg_b: usize, point: (f64, f64) },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NearDegeneracy {
    pub edge_a: usize,
    pub seg_a: usize,
    pub edge_b: usize,
    pub seg_b: usize,
    pub distance: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundingBox {
    pub min_x: f64,
    pub min_y: f64,
    pub width: f64,
    pub height: f64,
}

impl BoundingBox {
    pub fn area(&self) -> f64 {
        self.width * self.height
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    /// Recorded crossings sorted by (edge_a, seg_a, edge_b, seg_b); empty when truncated.
    pub crossings: Vec<Crossing>,
    pub crossings_truncated: bool,
    pub crossing_count: usize,
    pub s_crossing_count: usize,
    pub non_right_crossings: usize,
    pub max_bends: usize,
    pub bounding_box: BoundingBox,
    pub min_separation: f64,
    pub near_degeneracies: Vec<NearDegeneracy>,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    /// No subgraph edge is crossed and no invariant of a drawing is broken.
    pub fn is_compatible(&self) -> bool {
        self.s_crossing_count == 0 && self.violations.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Stop listing individual crossings beyond this many (counts stay exact).
    pub max_recorded_crossings: Option<usize>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { max_recorded_crossings: Some(100_000) }
    }
}

pub fn verify(g: &Graph, s: &SubgraphSpec, d: &Drawing) -> Result<VerificationReport, GeometryError> {
    verify_with(g, s, d, &VerifyOptions::default())
}

pub fn verify_with(
    g: &Graph,
    s: &SubgraphSpec,
    d: &Drawing,
    opts: &VerifyOptions,
) -> Result<VerificationReport, GeometryError> {
    check_shape(g, d)?;
    let curves: Vec<Vec<_>> = (0..g.edge_count()).map(|e| d.curve_points(e)).collect();
    let float_curves: Vec<Vec<(f64, f64)>> =
        curves.iter().map(|c| c.iter().map(|p| p.to_f64()).collect()).collect();
    let (x0, y0, x1, y1) = d.bounds_f64();
    let bounding_box = if d.positions.is_empty() {
        BoundingBox { min_x: 0.0, min_y: 0.0, width: 0.0, height: 0.0 }
    } else {
        BoundingBox { min_x: x0, min_y: y0, width: x1 - x0, height: y1 - y0 }
    };
    let tolerance = match d.mode {
        CoordMode::Float => {
            d.epsilon.unwrap_or(FLOAT_EPSILON) * bounding_box.width.max(bounding_box.height).max(1.0)
        }
        CoordMode::Exact => 0.0,
    };
    let float_vertices: Vec<(f64, f64)> = d.positions.iter().map(|p| p.to_f64()).collect();
    let ctx = Context {
        g,
        s,
        float_curves: &float_curves,
        float_vertices: &float_vertices,
        tolerance,
        cap: opts.max_recorded_crossings,
    };
    let mut acc = match to_lattice(&d.positions, &curves) {
        Lattice::Small(l) => census(&ctx, &l),
        Lattice::Big(l) => census(&ctx, &l),
    };
    for (e, c) in d.curves.iter().enumerate() {
        if s.contains(e) && !c.bends.is_empty() {
            acc.violations.push(Violation::BentSubgraphEdge { edge: e, bends: c.bends.len() });
        }
    }
    acc.violations.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
    acc.crossings.sort_by_key(|c| (c.edge_a, c.seg_a, c.edge_b, c.seg_b));
    acc.near.sort_by_key(|c| (c.edge_a, c.seg_a, c.edge_b, c.seg_b));
    Ok(VerificationReport {
        crossings: acc.crossings,
        crossings_truncated: acc.truncated,
        crossing_count: acc.count,
        s_crossing_count: acc.s_count,
        non_right_crossings: acc.non_right,
        max_bends: d.max_bends(),
        bounding_box,
        min_separation: min_separation(d),
        near_degeneracies: acc.near,
        violations: acc.violations,
    })
}

fn check_shape(g: &Graph, d: &Drawing) -> Result<(), GeometryError> {
    if d.positions.len() != g.vertex_count() {
        return Err(GeometryError::VertexCountMismatch {
            expected: g.vertex_count(),
            found: d.positions.len(),
        });
    }
    for e in 0..g.edge_count() {
        let Some(c) = d.curves.get(e) else {
            return Err(GeometryError::IncompleteDrawing { edge: e });
        };
        let (u, v) = g.edge(e);
        if !((c.u == u && c.v == v) || (c.u == v && c.v == u)) {
            return Err(GeometryError::CurveEndpointMismatch { edge: e });
        }
    }
    if d.curves.len() != g.edge_count() {
        return Err(GeometryError::IncompleteDrawing { edge: d.curves.len() });
    }
    let modes_ok = d.all_points().all(|p| p.mode() == d.mode);
    if !modes_ok {
        return Err(GeometryError::MixedMode);
    }
    Ok(())
}

/// Smallest distance between two distinct points of the drawing (vertices and bends).
pub fn min_separation(d: &Drawing) -> f64 {
    let pts: Vec<(f64, f64)> = d.all_points().map(|p| p.to_f64()).collect();
    (0..pts.len())
        .into_par_iter()
        .map(|i| {
            let (xi, yi) = pts[i];
            pts[i + 1..]
                .iter()
                .map(|&(x, y)| (x - xi).hypot(y - yi))
                .fold(f64::INFINITY, f64::min)
        })
        .reduce(|| f64::INFINITY, f64::min)
}

struct Context<'a> {
    g: &'a Graph,
    s: &'a SubgraphSpec,
    float_curves: &'a [Vec<(f64, f64)>],
    float_vertices: &'a [(f64, f64)],
    tolerance: f64,
    cap: Option<usize>,
}

struct Seg<'a, P> {
    edge: usize,
    idx: usize,
    a: &'a P,
    b: &'a P,
    lo: (f64, f64),
    hi: (f64, f64),
}

#[derive(Default)]
struct Acc {
    crossings: Vec<Crossing>,
    truncated: bool,
    count: usize,
    s_count: usize,
    non_right: usize,
    near: Vec<NearDegeneracy>,
    violations: Vec<Violation>,
}

impl Acc {
    fn merge(mut self, other: Acc, cap: Option<usize>) -> Acc {
        self.count += other.count;
        self.s_count += other.s_count;
        self.non_right += other.non_right;
        self.truncated |= other.truncated;
        self.crossings.extend(other.crossings);
        if cap.is_some_and(|c| self.crossings.len() > c) {
            self.truncated = true;
        }
        if self.truncated {
            self.crossings = Vec::new();
        }
        self.near.extend(other.near);
        self.violations.extend(other.violations);
        self
    }
}

fn census<P: LatticePoint>(ctx: &Context<'_>, l: &LatticeDrawing<P>) -> Acc {
    let mut segs: Vec<Seg<'_, P>> = Vec::new();
    let mut acc = Acc::default();
    for (e, pts) in l.curves.iter().enumerate() {
        for i in 0..pts.len() - 1 {
            if pts[i] == pts[i + 1] {
                acc.violations.push(Violation::ZeroLengthSegment { edge: e, segment: i });
            }
            let (fa, fb) = (ctx.float_curves[e][i], ctx.float_curves[e][i + 1]);
            segs.push(Seg {
                edge: e,
                idx: i,
                a: &pts[i],
                b: &pts[i + 1],
                lo: (fa.0.min(fb.0) - ctx.tolerance, fa.1.min(fb.1) - ctx.tolerance),
                hi: (fa.0.max(fb.0) + ctx.tolerance, fa.1.max(fb.1) + ctx.tolerance),
            });
        }
    }
    acc.violations.extend(coincident_points(l));
    segs.sort_by(|p, q| p.lo.0.total_cmp(&q.lo.0));
    let cap = ctx.cap;
    let found = (0..segs.len())
        .into_par_iter()
        .fold(Acc::default, |mut acc, i| {
            let si = &segs[i];
            for sj in segs[i + 1..].iter().take_while(|sj| sj.lo.0 <= si.hi.0) {
                if sj.lo.1 > si.hi.1 || sj.hi.1 < si.lo.1 {
                    continue;
                }
                let (sa, sb) = if (si.edge, si.idx) < (sj.edge, sj.idx) { (si, sj) } else { (sj, si) };
                examine(ctx, l, sa, sb, &mut acc);
            }
            if cap.is_some_and(|c| acc.crossings.len() > c) {
                acc.truncated = true;
                acc.crossings = Vec::new();
            }
            acc
        })
        .reduce(Acc::default, |a, b| a.merge(b, cap));
    acc.merge(found, cap)
}

fn coincident_points<P: LatticePoint>(l: &LatticeDrawing<P>) -> Vec<Violation> {
    let mut pts: Vec<(&P, PointRef)> =
        l.vertices.iter().enumerate().map(|(v, p)| (p, PointRef::Vertex(v))).collect();
    for (e, c) in l.curves.iter().enumerate() {
        for (i, p) in c[1..c.len() - 1].iter().enumerate() {
            pts.push((p, PointRef::Bend { edge: e, index: i }));
        }
    }
    pts.sort();
    pts.windows(2)
        .filter(|w| w[0].0 == w[1].0)
        .map(|w| Violation::CoincidentPoints { first: w[0].1, second: w[1].1 })
        .collect()
}

fn examine<P: LatticePoint>(
    ctx: &Context<'_>,
    l: &LatticeDrawing<P>,
    sa: &Seg<'_, P>,
    sb: &Seg<'_, P>,
    acc: &mut Acc,
) {
    let relation = meet(sa.a, sa.b, sb.a, sb.b);
    if sa.edge == sb.edge {
        let adjacent = sa.idx + 1 == sb.idx;
        let ok = match &relation {
            Meet::Disjoint => !adjacent,
            Meet::Touch(p) => adjacent && p == sa.b,
            _ => false,
        };
        if !ok {
            acc.violations.push(Violation::SelfIntersection {
                edge: sa.edge,
                seg_a: sa.idx,
                seg_b: sb.idx,
            });
        }
        return;
    }
    let shared_vertex = shared_endpoint(ctx.g, sa.edge, sb.edge);
    match relation {
        Meet::Disjoint => {}
        Meet::Proper => {
            let involves_subgraph = ctx.s.contains(sa.edge) || ctx.s.contains(sb.edge);
            let right_angle = P::perpendicular(sa.a, sa.b, sb.a, sb.b);
            acc.count += 1;
            if involves_subgraph {
                acc.s_count += 1;
            }
            if !right_angle {
                acc.non_right += 1;
            }
            if !acc.truncated {
                let fa = segment_f64(ctx, sa);
                let fb = segment_f64(ctx, sb);
                acc.crossings.push(Crossing {
                    edge_a: sa.edge,
                    seg_a: sa.idx,
                    edge_b: sb.edge,
                    seg_b: sb.idx,
                    point: line_intersection(fa, fb),
                    angle_degrees: if right_angle { 90.0 } else { acute_angle(fa, fb) },
                    right_angle,
                    involves_subgraph,
                });
            }
        }
        Meet::Touch(p) => {
            let legal = shared_vertex.is_some_and(|w| {
                p == l.vertices[w] && (&p == sa.a || &p == sa.b) && (&p == sb.a || &p == sb.b)
            });
            if !legal {
                let fa = segment_f64(ctx, sa);
                let fb = segment_f64(ctx, sb);
                acc.violations.push(Violation::IllegalTouch {
                    edge_a: sa.edge,
                    seg_a: sa.idx,
                    edge_b: sb.edge,
                    seg_b: sb.idx,
                    point: touch_point(fa, fb),
                });
            }
        }
        Meet::Overlap => acc.violations.push(Violation::Overlap {
            edge_a: sa.edge,
            seg_a: sa.idx,
            edge_b: sb.edge,
            seg_b: sb.idx,
        }),
    }
    if ctx.tolerance > 0.0 {
        near_check(ctx, sa, sb, shared_vertex, acc);
    }
}

fn shared_endpoint(g: &Graph, a: usize, b: usize) -> Option<usize> {
    let (u, v) = g.edge(a);
    let (x, y) = g.edge(b);
    [u, v].into_iter().find(|&w| w == x || w == y)
}

type FSeg = ((f64, f64), (f64, f64));

fn segment_f64<P>(ctx: &Context<'_>, s: &Seg<'_, P>) -> FSeg {
    let c = &ctx.float_curves[s.edge];
    (c[s.idx], c[s.idx + 1])
}

fn line_intersection(a: FSeg, b: FSeg) -> (f64, f64) {
    let (p, r) = (a.0, (a.1 .0 - a.0 .0, a.1 .1 - a.0 .1));
    let (q, s) = (b.0, (b.1 .0 - b.0 .0, b.1 .1 - b.0 .1));
    let denom = r.0 * s.1 - r.1 * s.0;
    let t = ((q.0 - p.0) * s.1 - (q.1 - p.1) * s.0) / denom;
    (p.0 + t * r.0, p.1 + t * r.1)
}

fn touch_point(a: FSeg, b: FSeg) -> (f64, f64) {
    for p in [a.0, a.1] {
        if point_segment_distance(p, b) == 0.0 {
            return p;
        }
    }
    for p in [b.0, b.1] {
        if point_segment_distance(p, a) == 0.0 {
            return p;
        }
    }
    a.0
}

fn acute_angle(a: FSeg, b: FSeg) -> f64 {
    let (ax, ay) = (a.1 .0 - a.0 .0, a.1 .1 - a.0 .1);
    let (bx, by) = (b.1 .0 - b.0 .0, b.1 .1 - b.0 .1);
    let cos = (ax * bx + ay * by).abs() / (ax.hypot(ay) * bx.hypot(by));
    cos.clamp(0.0, 1.0).acos().to_degrees()
}

fn point_segment_distance(p: (f64, f64), s: FSeg) -> f64 {
    let (a, b) = s;
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let len2 = dx * dx + dy * dy;
    let t = if len2 == 0.0 {
        0.0
    } else {
        (((p.0 - a.0) * dx + (p.1 - a.1) * dy) / len2).clamp(0.0, 1.0)
    };
    (p.0 - (a.0 + t * dx)).hypot(p.1 - (a.1 + t * dy))
}

fn near_check<P>(
    ctx: &Context<'_>,
    sa: &Seg<'_, P>,
    sb: &Seg<'_, P>,
    shared_vertex: Option<usize>,
    acc: &mut Acc,
) {
    let fa = segment_f64(ctx, sa);
    let fb = segment_f64(ctx, sb);
    let shared = shared_vertex.map(|w| ctx.float_vertices[w]);
    let mut dist = f64::INFINITY;
    for p in [fa.0, fa.1] {
        if Some(p) != shared {
            dist = dist.min(point_segment_distance(p, fb));
        }
    }
    for p in [fb.0, fb.1] {
        if Some(p) != shared {
            dist = dist.min(point_segment_distance(p, fa));
        }
    }
    if dist < ctx.tolerance {
        acc.near.push(NearDegeneracy {
            edge_a: sa.edge,
            seg_a: sa.idx,
            edge_b: sb.edge,
            seg_b: sb.idx,
            distance: dist,
        });
    }
}
