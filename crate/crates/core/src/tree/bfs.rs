use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{RootedTree, TreeDrawError};
use crate::classify::{check_spec, is_bfs_root};
use crate::geometry::{Coord, Drawing, Polyline};
use crate::graph::{Graph, SubgraphSpec};

/// A BFS-tree drawing with the circle radii it was built on.
#[derive(Debug, Clone)]
pub struct BfsLayout {
    pub drawing: Drawing,
    /// Radius of the circle carrying each level, level 1 first (after scaling).
    pub radii: Vec<BigRational>,
    /// For each level `l` with a next level, the distance from the center to
    /// the shortest chord between consecutive points of level `l`.
    pub shortest_chord_distances: Vec<BigRational>,
}

#[derive(Debug, Clone, Copy)]
enum Entry {
    Real(usize),
    /// The leftmost dummy child of a real vertex.
    First,
    /// The rightmost dummy of a level, at angle π/2.
    Last,
}

pub fn draw_bfs_tree(g: &Graph, s: &SubgraphSpec, root: usize) -> Result<Drawing, TreeDrawError> {
    draw_bfs_tree_layout(g, s, root).map(|l| l.drawing)
}

/// Straight-line drawing for a BFS-tree on concentric quarter circles.
///
/// Level `l` lies on a quarter circle of radius `r_l`. The children of a
/// vertex at `q_i` are spread on the arc of the next circle between its
/// first crossing with the chord `q_i q_{i+1}` and the tangent point seen
/// from `q_i`. Besides the leftmost dummy child of every vertex, each level
/// ends with a dummy at angle π/2 so that every real vertex has a chord to
/// its right.
///
/// Consecutive radii approach each other doubly exponentially in the depth,
/// far beyond double precision, so the construction runs in binary fixed
/// point with enough bits for every strict inequality it relies on to hold
/// with a wide margin. Coordinates are exact dyadic rationals, scaled by a
/// power of two so that vertices are at least 1 apart.
pub fn draw_bfs_tree_layout(g: &Graph, s: &SubgraphSpec, root: usize) -> Result<BfsLayout, TreeDrawError> {
    check_spec(g, s)?;
    let t = s.graph(g);
    if !t.is_tree() {
        return Err(TreeDrawError::NotATree);
    }
    if root >= g.vertex_count() || !is_bfs_root(g, s, root) {
        return Err(TreeDrawError::NotABfsTree { root });
    }
    let tree = RootedTree::new(&t, root);
    let mut bits = 128;
    let built = loop {
        if let Some(b) = build(&tree, Fixed { bits }) {
            break b;
        }
        bits *= 2;
    };
    let fx = Fixed { bits };
    let sep = min_distance(&built.positions);
    // 2^k * sep / 2^bits >= 1
    let k = bits as i64 - (sep.bits() as i64 - 1);
    let scale = |v: &BigInt| -> BigRational {
        let r = fx.rational(v);
        if k >= 0 {
            r * BigRational::from_integer(BigInt::one() << k as usize)
        } else {
            r / BigRational::from_integer(BigInt::one() << (-k) as usize)
        }
    };
    let positions = built.positions.iter().map(|(x, y)| Coord::exact_rational(scale(x), scale(y))).collect();
    let curves = g.edges().iter().map(|&(u, v)| Polyline::straight(u, v)).collect();
    Ok(BfsLayout {
        drawing: Drawing::exact(positions, curves),
        radii: built.radii.iter().map(scale).collect(),
        shortest_chord_distances: built.chords.iter().map(scale).collect(),
    })
}

/// Binary fixed point: a value `v` stands for `v / 2^bits`.
#[derive(Clone, Copy)]
struct Fixed {
    bits: usize,
}

type Vec2 = (BigInt, BigInt);

impl Fixed {
    fn one(self) -> BigInt {
        BigInt::one() << self.bits
    }

    fn mul(self, a: &BigInt, b: &BigInt) -> BigInt {
        (a * b) >> self.bits
    }

    fn div(self, a: &BigInt, b: &BigInt) -> BigInt {
        (a << self.bits) / b
    }

    fn sqrt(self, a: &BigInt) -> BigInt {
        if a.is_positive() {
            (a << self.bits).sqrt()
        } else {
            BigInt::zero()
        }
    }

    fn dot(self, a: &Vec2, b: &Vec2) -> BigInt {
        self.mul(&a.0, &b.0) + self.mul(&a.1, &b.1)
    }

    fn cross(self, a: &Vec2, b: &Vec2) -> BigInt {
        self.mul(&a.0, &b.1) - self.mul(&a.1, &b.0)
    }

    fn scale(self, r: &BigInt, a: &Vec2) -> Vec2 {
        (self.mul(r, &a.0), self.mul(r, &a.1))
    }

    fn unit(self, a: &Vec2) -> Vec2 {
        let n = self.sqrt(&self.dot(a, a));
        (self.div(&a.0, &n), self.div(&a.1, &n))
    }

    fn rational(self, v: &BigInt) -> BigRational {
        BigRational::new(v.clone(), self.one())
    }

    /// Smallest gap accepted in a strict inequality of the construction.
    fn margin(self) -> BigInt {
        BigInt::one() << 32
    }
}

struct Built {
    positions: Vec<Vec2>,
    radii: Vec<BigInt>,
    chords: Vec<BigInt>,
}

/// Runs the construction at the given precision; `None` when some strict
/// inequality holds by less than the margin.
fn build(tree: &RootedTree, fx: Fixed) -> Option<Built> {
    let n = tree.children.len();
    let one = fx.one();
    let depth = tree.depth.iter().copied().max().unwrap_or(0);
    let mut positions = vec![(BigInt::zero(), BigInt::zero()); n];
    positions[tree.root] = (-one.clone(), one.clone());
    let mut radii = vec![one.clone()];
    let mut chords = Vec::new();
    // directions from π down towards π/2 for the children of the root
    let kids = &tree.children[tree.root];
    let k = kids.len() as i64;
    let mut level: Vec<(Entry, Vec2)> = kids
        .iter()
        .zip(0..)
        .map(|(&v, j)| (Entry::Real(v), fx.unit(&(BigInt::from(j - k) << fx.bits, BigInt::from(j) << fx.bits))))
        .collect();
    level.push((Entry::Last, (BigInt::zero(), one.clone())));

    for l in 1..=depth {
        let r = radii[l - 1].clone();
        for (e, dir) in &level {
            if let Entry::Real(v) = e {
                positions[*v] = fx.scale(&r, dir);
            }
        }
        if l == depth {
            break;
        }
        // the shortest chord is the one farthest from the center: r |a + b| / 2
        let half_sum = level
            .windows(2)
            .map(|w| {
                let sum = (&w[0].1 .0 + &w[1].1 .0, &w[0].1 .1 + &w[1].1 .1);
                fx.sqrt(&fx.dot(&sum, &sum)) / 2
            })
            .max()?;
        let chord = fx.mul(&r, &half_sum);
        let r_next: BigInt = (&chord + &r) / 2;
        if &r - &r_next < fx.margin() || &r_next - &chord < fx.margin() {
            return None;
        }
        chords.push(chord);

        // tangent from q_i: rotate its direction clockwise by acos(r_next / r)
        let cos = fx.div(&r_next, &r);
        let sin = fx.sqrt(&(&one - fx.mul(&cos, &cos)));
        let mut next: Vec<(Entry, Vec2)> = Vec::new();
        for (i, (e, a)) in level.iter().enumerate() {
            match e {
                Entry::Real(u) => {
                    let q = fx.scale(&r, a);
                    let q_next = fx.scale(&r, &level[i + 1].1);
                    let hit = first_circle_hit(fx, &q, &q_next, &r_next);
                    let first = (fx.div(&hit.0, &r_next), fx.div(&hit.1, &r_next));
                    let tangent =
                        (fx.mul(&a.0, &cos) + fx.mul(&a.1, &sin), fx.mul(&a.1, &cos) - fx.mul(&a.0, &sin));
                    let real = &tree.children[*u];
                    let count = real.len() as i64;
                    next.push((Entry::First, first.clone()));
                    for (j, &v) in (1..).zip(real.iter()) {
                        let mix = (
                            &first.0 * (count - j) + &tangent.0 * j,
                            &first.1 * (count - j) + &tangent.1 * j,
                        );
                        next.push((Entry::Real(v), fx.unit(&mix)));
                    }
                }
                Entry::Last => next.push((Entry::Last, (BigInt::zero(), one.clone()))),
                Entry::First => {}
            }
        }
        // directions must turn strictly clockwise along the level
        if next.windows(2).any(|w| -fx.cross(&w[0].1, &w[1].1) < fx.margin()) {
            return None;
        }
        radii.push(r_next);
        level = next;
    }
    Some(Built { positions, radii, chords })
}

/// First point (from `p`) where segment `p q` meets the circle of radius `r` about the origin.
fn first_circle_hit(fx: Fixed, p: &Vec2, q: &Vec2, r: &BigInt) -> Vec2 {
    let d = (&q.0 - &p.0, &q.1 - &p.1);
    let a = fx.dot(&d, &d);
    let b = fx.dot(p, &d) * 2;
    let c = fx.dot(p, p) - fx.mul(r, r);
    let disc = fx.sqrt(&(fx.mul(&b, &b) - fx.mul(&a, &c) * 4));
    let t = fx.div(&(-b - disc), &(a * 2));
    (&p.0 + fx.mul(&t, &d.0), &p.1 + fx.mul(&t, &d.1))
}

/// Smallest distance between two vertices, in fixed point.
fn min_distance(pts: &[Vec2]) -> BigInt {
    let mut best: Option<BigInt> = None;
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let (dx, dy) = (&pts[i].0 - &pts[j].0, &pts[i].1 - &pts[j].1);
            let sq = &dx * &dx + &dy * &dy;
            if best.as_ref().is_none_or(|b| sq < *b) {
                best = Some(sq);
            }
        }
    }
    best.map_or_else(BigInt::one, |b| b.sqrt().max(BigInt::one()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::verify;
    use num_traits::ToPrimitive;

    #[test]
    fn root_with_two_children_and_sibling_edge() {
        let g = Graph::new(3, vec![(0, 1), (0, 2), (1, 2)]).unwrap();
        let s = SubgraphSpec::new(&g, vec![0, 1], None).unwrap();
        let l = draw_bfs_tree_layout(&g, &s, 0).unwrap();
        let r1 = l.radii[0].clone();
        let (x, y) = l.drawing.positions[0].to_rational();
        assert_eq!((x, y), (-r1.clone(), r1.clone()));
        for v in [1, 2] {
            let (x, y) = l.drawing.positions[v].to_f64();
            let r = r1.to_f64().unwrap();
            assert!((x.hypot(y) - r).abs() < 1e-9 * r);
        }
        assert!(verify(&g, &s, &l.drawing).unwrap().is_compatible());
    }

    #[test]
    fn complete_binary_tree_with_all_legal_extras() {
        let tree = [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)];
        let levels: [usize; 7] = [0, 1, 1, 2, 2, 2, 2];
        let mut all = tree.to_vec();
        for u in 0..7usize {
            for v in u + 1..7 {
                if levels[u].abs_diff(levels[v]) <= 1 && !tree.contains(&(u, v)) {
                    all.push((u, v));
                }
            }
        }
        let g = Graph::new(7, all).unwrap();
        let s_edges = tree.iter().map(|&(u, v)| g.edge_between(u, v).unwrap()).collect();
        let s = SubgraphSpec::new(&g, s_edges, None).unwrap();
        let l = draw_bfs_tree_layout(&g, &s, 0).unwrap();
        let report = verify(&g, &s, &l.drawing).unwrap();
        assert!(report.is_compatible(), "{report:?}");
        for (lv, d) in l.shortest_chord_distances.iter().enumerate() {
            assert!(*d < l.radii[lv + 1] && l.radii[lv + 1] < l.radii[lv]);
        }
    }

    #[test]
    fn deep_tree_keeps_levels_apart() {
        // a path of 24 levels with a second child on every vertex, siblings joined
        let mut tree = Vec::new();
        let mut extra = Vec::new();
        for i in 0..24 {
            tree.push((2 * i, 2 * i + 2));
            tree.push((2 * i, 2 * i + 1));
            extra.push((2 * i + 1, 2 * i + 2));
        }
        let n = 49;
        let mut all = tree.clone();
        all.extend(extra);
        let g = Graph::new(n, all).unwrap();
        let s = SubgraphSpec::new(&g, (0..tree.len()).collect(), Some(0)).unwrap();
        let l = draw_bfs_tree_layout(&g, &s, 0).unwrap();
        assert_eq!(l.radii.len(), 24);
        assert!(l.radii.windows(2).all(|w| w[1] < w[0]));
        for (lv, d) in l.shortest_chord_distances.iter().enumerate() {
            assert!(*d < l.radii[lv + 1]);
        }
        let report = verify(&g, &s, &l.drawing).unwrap();
        assert!(report.is_compatible(), "{:?}", report.violations);
    }

    #[test]
    fn rejects_wrong_root() {
        let g = Graph::new(4, vec![(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let s = SubgraphSpec::new(&g, vec![0, 1, 2], None).unwrap();
        let e = g.edge_between(0, 3).unwrap();
        assert!(!s.contains(e));
        assert_eq!(draw_bfs_tree(&g, &s, 0), Err(TreeDrawError::NotABfsTree { root: 0 }));
    }
}
