use num_rational::BigRational;

use super::coord::{rational_from_f64, Coord, CoordMode};
use crate::graph::Graph;

/// The curve of one edge: its endpoints and the bends between them, in order from `u` to `v`.
#[derive(Debug, Clone, PartialEq)]
pub struct Polyline {
    pub u: usize,
    pub v: usize,
    pub bends: Vec<Coord>,
}

impl Polyline {
    pub fn straight(u: usize, v: usize) -> Self {
        Polyline { u, v, bends: Vec::new() }
    }

    pub fn new(u: usize, v: usize, bends: Vec<Coord>) -> Self {
        Polyline { u, v, bends }
    }

    pub fn segment_count(&self) -> usize {
        self.bends.len() + 1
    }
}

/// Vertex positions plus one polyline per edge of the drawn graph, indexed like its edges.
#[derive(Debug, Clone, PartialEq)]
pub struct Drawing {
    pub mode: CoordMode,
    /// Separation tolerance declared by float-mode constructions.
    pub epsilon: Option<f64>,
    pub positions: Vec<Coord>,
    pub curves: Vec<Polyline>,
}

pub const FLOAT_EPSILON: f64 = 1e-9;

impl Drawing {
    pub fn exact(positions: Vec<Coord>, curves: Vec<Polyline>) -> Self {
        Drawing { mode: CoordMode::Exact, epsilon: None, positions, curves }
    }

    pub fn float(positions: Vec<Coord>, curves: Vec<Polyline>) -> Self {
        Drawing { mode: CoordMode::Float, epsilon: Some(FLOAT_EPSILON), positions, curves }
    }

    /// A drawing of `g` with every edge straight.
    pub fn straight_line(g: &Graph, positions: Vec<Coord>) -> Self {
        let curves = g.edges().iter().map(|&(u, v)| Polyline::straight(u, v)).collect();
        let mode = positions.first().map_or(CoordMode::Exact, Coord::mode);
        Drawing {
            mode,
            epsilon: (mode == CoordMode::Float).then_some(FLOAT_EPSILON),
            positions,
            curves,
        }
    }

    /// All points of edge `e`'s curve, from `u` to `v`.
    pub fn curve_points(&self, e: usize) -> Vec<&Coord> {
        let c = &self.curves[e];
        let mut pts = Vec::with_capacity(c.bends.len() + 2);
        pts.push(&self.positions[c.u]);
        pts.extend(c.bends.iter());
        pts.push(&self.positions[c.v]);
        pts
    }

    pub fn max_bends(&self) -> usize {
        self.curves.iter().map(|c| c.bends.len()).max().unwrap_or(0)
    }

    pub fn all_points(&self) -> impl Iterator<Item = &Coord> {
        self.positions.iter().chain(self.curves.iter().flat_map(|c| c.bends.iter()))
    }

    /// (min x, min y, max x, max y) over all vertices and bends, in doubles.
    pub fn bounds_f64(&self) -> (f64, f64, f64, f64) {
        let mut b = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in self.all_points() {
            let (x, y) = p.to_f64();
            b = (b.0.min(x), b.1.min(y), b.2.max(x), b.3.max(y));
        }
        b
    }

    /// Exact (width, height) of the bounding box; float coordinates are taken at their binary value.
    pub fn exact_extent(&self) -> (BigRational, BigRational) {
        let mut pts = self.all_points().map(Coord::to_rational);
        let Some(first) = pts.next() else {
            return (BigRational::from_integer(0.into()), BigRational::from_integer(0.into()));
        };
        let (mut lo, mut hi) = (first.clone(), first);
        for (x, y) in pts {
            if x < lo.0 {
                lo.0 = x.clone();
            }
            if x > hi.0 {
                hi.0 = x;
            }
            if y < lo.1 {
                lo.1 = y.clone();
            }
            if y > hi.1 {
                hi.1 = y;
            }
        }
        (hi.0 - lo.0, hi.1 - lo.1)
    }

    /// Multiplies every coordinate by `factor` (float drawings only).
    pub fn scale_float(&mut self, factor: f64) {
        let scale = |c: &mut Coord| {
            if let Coord::Float { x, y } = c {
                *x *= factor;
                *y *= factor;
            }
        };
        self.positions.iter_mut().for_each(scale);
        self.curves.iter_mut().flat_map(|c| c.bends.iter_mut()).for_each(scale);
    }

    /// Converts every float coordinate to its exact rational value.
    pub fn to_exact(&self) -> Drawing {
        let conv = |c: &Coord| match c {
            Coord::Float { x, y } => Coord::Exact { x: rational_from_f64(*x), y: rational_from_f64(*y) },
            other => other.clone(),
        };
        Drawing {
            mode: CoordMode::Exact,
            epsilon: None,
            positions: self.positions.iter().map(conv).collect(),
            curves: self
                .curves
                .iter()
                .map(|c| Polyline::new(c.u, c.v, c.bends.iter().map(conv).collect()))
                .collect(),
        }
    }
}
