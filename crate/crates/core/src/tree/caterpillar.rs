use std::f64::consts::{FRAC_PI_2, PI};

use super::TreeDrawError;
use crate::classify::{caterpillar_spine, check_spec, is_path};
use crate::geometry::{min_separation, Coord, Drawing};
use crate::graph::{Graph, SubgraphSpec};

/// A caterpillar drawing together with the quantities its area bound is stated in.
#[derive(Debug, Clone)]
pub struct CaterpillarLayout {
    pub drawing: Drawing,
    /// Number of points on the quarter circle, dummies included.
    pub augmented_count: usize,
    /// Radius of the quarter circle after scaling to unit minimum separation.
    pub radius: f64,
    /// Half the angular step for even counts, the full step for odd counts.
    pub beta: f64,
    /// Leaves of the augmented caterpillar in list order (the last dummy excluded), scaled.
    pub leaf_chain: Vec<(f64, f64)>,
}

impl CaterpillarLayout {
    /// The radius that guarantees unit separation: √2 / tan β.
    pub fn radius_bound(&self) -> f64 {
        2f64.sqrt() / self.beta.tan()
    }
}

pub fn draw_caterpillar(g: &Graph, s: &SubgraphSpec) -> Result<Drawing, TreeDrawError> {
    draw_caterpillar_layout(g, s).map(|l| l.drawing)
}

#[derive(Debug, Clone, Copy)]
enum Slot {
    Spine(usize),
    First(usize),
    Leaf(usize),
    Last(usize),
    ExtraSpine,
    ExtraLeaf,
}

type P = (f64, f64);

fn sub(a: P, b: P) -> P {
    (a.0 - b.0, a.1 - b.1)
}

fn cross(a: P, b: P) -> f64 {
    a.0 * b.1 - a.1 * b.0
}

fn dot(a: P, b: P) -> f64 {
    a.0 * b.0 + a.1 * b.1
}

fn direction(theta: f64) -> P {
    (theta.cos(), theta.sin())
}

/// Point where the ray from the origin along `d` meets the line through `a` and `b`.
fn ray_line(d: P, a: P, b: P) -> P {
    let ab = sub(b, a);
    let t = cross(a, ab) / cross(d, ab);
    (t * d.0, t * d.1)
}

/// Straight-line drawing for a spanning caterpillar on a quarter circle.
///
/// Spine vertices lie on the circle; the leaves of each spine vertex lie on
/// an arc tangent to the next spine chord, so all leaves are in convex
/// position just inside the spine polygon.
pub fn draw_caterpillar_layout(g: &Graph, s: &SubgraphSpec) -> Result<CaterpillarLayout, TreeDrawError> {
    check_spec(g, s)?;
    let t = s.graph(g);
    let n = g.vertex_count();
    let spine = if is_path(&t) {
        path_order(&t)
    } else {
        caterpillar_spine(&t).ok_or(TreeDrawError::NotACaterpillar)?
    };
    let k = spine.len();
    let mut on_spine = vec![false; n];
    for &u in &spine {
        on_spine[u] = true;
    }
    let mut list = Vec::new();
    for (i, &u) in spine.iter().enumerate() {
        list.push(Slot::Spine(i));
        list.push(Slot::First(i));
        for w in t.neighbors(u).filter(|&w| !on_spine[w]) {
            list.push(Slot::Leaf(w));
        }
        list.push(Slot::Last(i));
    }
    list.push(Slot::ExtraSpine);
    list.push(Slot::ExtraLeaf);
    let big_n = list.len();
    debug_assert_eq!(big_n, n + 2 * k + 2);

    let alpha = FRAC_PI_2 / (big_n - 1) as f64;
    let angle = |j: usize| PI - j as f64 * alpha; // j is 0-based
    let circle = |j: usize| direction(angle(j));

    // 0-based list positions of spine vertices (plus the extra one) and of the first/last dummies
    let mut spine_pos = vec![0; k + 1];
    let mut first_pos = vec![0; k + 1];
    let mut last_pos = vec![0; k];
    for (j, slot) in list.iter().enumerate() {
        match *slot {
            Slot::Spine(i) => spine_pos[i] = j,
            Slot::First(i) => first_pos[i] = j,
            Slot::Last(i) => last_pos[i] = j,
            Slot::ExtraSpine => spine_pos[k] = j,
            Slot::ExtraLeaf => first_pos[k] = j,
            Slot::Leaf(_) => {}
        }
    }

    let mut points: Vec<P> = vec![(0.0, 0.0); big_n];
    for i in 0..=k {
        points[spine_pos[i]] = circle(spine_pos[i]);
    }
    points[big_n - 1] = circle(big_n - 1);
    for i in 0..k {
        let ui = circle(spine_pos[i]);
        let a = ray_line(direction(angle(first_pos[i])), ui, circle(first_pos[i + 1]));
        let b = ray_line(direction(angle(last_pos[i])), ui, circle(spine_pos[i + 1]));
        points[first_pos[i]] = a;
        points[last_pos[i]] = b;
        // circle tangent to the chord u_i u_{i+1} at b and passing through a
        let chord = sub(circle(spine_pos[i + 1]), ui);
        let mut normal = (-chord.1, chord.0);
        let len = normal.0.hypot(normal.1);
        normal = (normal.0 / len, normal.1 / len);
        if dot(sub(a, b), normal) < 0.0 {
            normal = (-normal.0, -normal.1);
        }
        let ab = sub(a, b);
        let rho = dot(ab, ab) / (2.0 * dot(ab, normal));
        let center = (b.0 + rho * normal.0, b.1 + rho * normal.1);
        let roots = |d: P| {
            let dc = dot(d, center);
            let disc = (dc * dc - dot(center, center) + rho * rho).max(0.0).sqrt();
            (dc + disc, dc - disc)
        };
        // take the root on the same side as a (the arc between a and b)
        let da = direction(angle(first_pos[i]));
        let (hi, lo) = roots(da);
        let ra = a.0.hypot(a.1);
        let use_hi = (hi - ra).abs() <= (lo - ra).abs();
        for j in first_pos[i] + 1..last_pos[i] {
            let d = direction(angle(j));
            let (hi, lo) = roots(d);
            let r = if use_hi { hi } else { lo };
            points[j] = (r * d.0, r * d.1);
        }
    }

    let mut positions = vec![Coord::float(0.0, 0.0); n];
    for (j, slot) in list.iter().enumerate() {
        match *slot {
            Slot::Spine(i) => {
                let (x, y) = points[j];
                positions[spine[i]] = Coord::float(x, y);
            }
            Slot::Leaf(w) => positions[w] = Coord::float(points[j].0, points[j].1),
            _ => {}
        }
    }
    let mut drawing = Drawing::straight_line(g, positions);
    let scale = if n >= 2 { 1.0 / min_separation(&drawing) } else { 1.0 };
    drawing.scale_float(scale);
    let leaf_chain = list
        .iter()
        .enumerate()
        .filter(|(j, slot)| !matches!(slot, Slot::Spine(_) | Slot::ExtraSpine) && *j != big_n - 1)
        .map(|(j, _)| (points[j].0 * scale, points[j].1 * scale))
        .collect();
    let beta = if big_n % 2 == 0 { alpha / 2.0 } else { alpha };
    Ok(CaterpillarLayout { drawing, augmented_count: big_n, radius: scale, beta, leaf_chain })
}

/// Vertices of a path in order, starting from its smaller-index end.
fn path_order(t: &Graph) -> Vec<usize> {
    let n = t.vertex_count();
    let start = (0..n).find(|&v| t.degree(v) <= 1).unwrap_or(0);
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(next) = t.neighbors(cur).find(|&w| w != prev) {
        order.push(next);
        prev = cur;
        cur = next;
    }
    order
}
