//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;
use num_traits::{Signed, Zero};

use crossfree::geometry::Coord;
use crossfree::{planar_embed, Drawing, Embedding, Graph, SubgraphSpec};

type Pt = (BigRational, BigRational);

fn sign(p: &Pt, q: &Pt, r: &Pt) -> i8 {
    let v = (&q.0 - &p.0) * (&r.1 - &p.1) - (&q.1 - &p.1) * (&r.0 - &p.0);
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// Whether two closed segments cross at a single point interior to both.
pub fn proper_cross(a: &Pt, b: &Pt, c: &Pt, d: &Pt) -> bool {
    let (o1, o2) = (sign(a, b, c), sign(a, b, d));
    let (o3, o4) = (sign(c, d, a), sign(c, d, b));
    o1 * o2 < 0 && o3 * o4 < 0
}

/// All-pairs count of proper crossings between segments of different edges:
/// (total, pairs involving an edge of `S`).
pub fn naive_crossings(g: &Graph, s: &SubgraphSpec, d: &Drawing) -> (usize, usize) {
    let curves: Vec<Vec<Pt>> = (0..g.edge_count())
        .map(|e| d.curve_points(e).into_iter().map(Coord::to_rational).collect())
        .collect();
    let (mut total, mut on_s) = (0, 0);
    for e in 0..curves.len() {
        for f in e + 1..curves.len() {
            for x in curves[e].windows(2) {
                for y in curves[f].windows(2) {
                    if proper_cross(&x[0], &x[1], &y[0], &y[1]) {
                        total += 1;
                        if s.contains(e) || s.contains(f) {
                            on_s += 1;
                        }
                    }
                }
            }
        }
    }
    (total, on_s)
}

/// Whether a face triple exists for a triconnected `S`: the edges outside `S`
/// are all co-facial and some face has three vertices of which no pair
/// separates, in the face's cyclic order, the endpoints of an edge on that face.
pub fn triple_oracle(g: &Graph, s: &SubgraphSpec) -> bool {
    let emb = planar_embed(&s.graph(g)).expect("planar S");
    let extra: Vec<(usize, usize)> = s.complement().iter().map(|&e| g.edge(e)).collect();
    let cofacial = |u: usize, v: usize| emb.faces().iter().any(|f| f.contains(&u) && f.contains(&v));
    if !extra.iter().all(|&(u, v)| cofacial(u, v)) {
        return false;
    }
    (0..emb.faces().len()).any(|f| {
        let face = &emb.faces()[f];
        let k = face.len();
        (0..k).any(|a| {
            (a + 1..k).any(|b| (b + 1..k).any(|c| triple_ok_in(&emb, g, s, f, [face[a], face[b], face[c]])))
        })
    })
}

/// Whether vertices `triple` of face `f` form a valid triple.
pub fn triple_ok(g: &Graph, s: &SubgraphSpec, f: usize, triple: [usize; 3]) -> bool {
    let emb = planar_embed(&s.graph(g)).expect("planar S");
    triple_ok_in(&emb, g, s, f, triple)
}

fn triple_ok_in(emb: &Embedding, g: &Graph, s: &SubgraphSpec, f: usize, triple: [usize; 3]) -> bool {
    let Some(face) = emb.faces().get(f) else { return false };
    let at = |x: usize| face.iter().position(|&y| y == x);
    let Some(idx) = triple.iter().map(|&v| at(v)).collect::<Option<Vec<usize>>>() else { return false };
    if idx[0] == idx[1] || idx[1] == idx[2] || idx[0] == idx[2] {
        return false;
    }
    let separates = |a: usize, b: usize, x: usize, y: usize| {
        let (lo, hi) = (a.min(b), a.max(b));
        let inside = |z: usize| lo < z && z < hi;
        ![a, b].contains(&x) && ![a, b].contains(&y) && inside(x) != inside(y)
    };
    s.complement().iter().all(|&e| {
        let (u, v) = g.edge(e);
        let (Some(x), Some(y)) = (at(u), at(v)) else { return true };
        let (a, b, c) = (idx[0], idx[1], idx[2]);
        !separates(a, b, x, y) && !separates(b, c, x, y) && !separates(a, c, x, y)
    })
}

/// Exact intersection point of two properly crossing segments.
pub fn crossing_point(a: &Pt, b: &Pt, c: &Pt, d: &Pt) -> Pt {
    let r = (&b.0 - &a.0, &b.1 - &a.1);
    let q = (&d.0 - &c.0, &d.1 - &c.1);
    let den = &r.0 * &q.1 - &r.1 * &q.0;
    let t = ((&c.0 - &a.0) * &q.1 - (&c.1 - &a.1) * &q.0) / den;
    (&a.0 + &t * &r.0, &a.1 + &t * &r.1)
}

/// All proper crossings of a drawing as exact points.
pub fn crossing_points(g: &Graph, d: &Drawing) -> Vec<Pt> {
    let curves: Vec<Vec<Pt>> = (0..g.edge_count())
        .map(|e| d.curve_points(e).into_iter().map(Coord::to_rational).collect())
        .collect();
    let mut out = Vec::new();
    for e in 0..curves.len() {
        for f in e + 1..curves.len() {
            for x in curves[e].windows(2) {
                for y in curves[f].windows(2) {
                    if proper_cross(&x[0], &x[1], &y[0], &y[1]) {
                        out.push(crossing_point(&x[0], &x[1], &y[0], &y[1]));
                    }
                }
            }
        }
    }
    out
}

/// Whether `q` lies strictly inside the simple polygon `poly`, by exact ray casting.
pub fn strictly_inside(poly: &[Coord], q: &Pt) -> bool {
    let pts: Vec<Pt> = poly.iter().map(Coord::to_rational).collect();
    let k = pts.len();
    let mut odd = false;
    for i in 0..k {
        let (a, b) = (&pts[i], &pts[(i + 1) % k]);
        let on_line = sign(a, b, q) == 0;
        let in_box = a.0.clone().min(b.0.clone()) <= q.0
            && q.0 <= a.0.clone().max(b.0.clone())
            && a.1.clone().min(b.1.clone()) <= q.1
            && q.1 <= a.1.clone().max(b.1.clone());
        if on_line && in_box {
            return false;
        }
        if (a.1 > q.1) != (b.1 > q.1) {
            let x = &a.0 + (&q.1 - &a.1) * (&b.0 - &a.0) / (&b.1 - &a.1);
            if x > q.0 {
                odd = !odd;
            }
        }
    }
    odd
}

/// Faces of a rotation system, traced with "after (u, v) comes (v, w), w following u at v".
fn trace(rot: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut used: Vec<Vec<bool>> = rot.iter().map(|r| vec![false; r.len()]).collect();
    let mut faces = Vec::new();
    for u in 0..rot.len() {
        for i in 0..rot[u].len() {
            if used[u][i] {
                continue;
            }
            let mut face = Vec::new();
            let (mut a, mut j) = (u, i);
            while !used[a][j] {
                used[a][j] = true;
                face.push(a);
                let b = rot[a][j];
                let back = rot[b].iter().position(|&x| x == a).unwrap();
                let k = (back + 1) % rot[b].len();
                a = b;
                j = k;
            }
            faces.push(face);
        }
    }
    faces
}

/// Number of rotation systems of `g`: the product of (deg - 1)!.
pub fn rotation_system_count(g: &Graph) -> u128 {
    (0..g.vertex_count())
        .map(|v| (1..g.degree(v).max(1) as u128).product::<u128>())
        .product()
}

/// Brute force over every rotation system of `S`: is there a planar one in
/// which every edge outside `S` has both endpoints on one face?
pub fn embedding_oracle(g: &Graph, s: &SubgraphSpec) -> bool {
    let t = s.graph(g);
    let n = t.vertex_count();
    let pairs: Vec<(usize, usize)> = s.complement().iter().map(|&e| g.edge(e)).collect();
    let nbrs: Vec<Vec<usize>> = (0..n).map(|v| t.neighbors(v).collect()).collect();
    let mut rot: Vec<Vec<usize>> = nbrs.clone();
    fn perms(rest: &[usize]) -> Vec<Vec<usize>> {
        if rest.len() <= 1 {
            return vec![rest.to_vec()];
        }
        let mut out = Vec::new();
        for i in 0..rest.len() {
            let mut r = rest.to_vec();
            let x = r.remove(i);
            for mut p in perms(&r) {
                p.insert(0, x);
                out.push(p);
            }
        }
        out
    }
    let options: Vec<Vec<Vec<usize>>> = nbrs
        .iter()
        .map(|nb| {
            if nb.is_empty() {
                return vec![Vec::new()];
            }
            perms(&nb[1..])
                .into_iter()
                .map(|p| {
                    let mut r = vec![nb[0]];
                    r.extend(p);
                    r
                })
                .collect()
        })
        .collect();
    let m = t.edge_count() as isize;
    fn go(
        v: usize,
        options: &[Vec<Vec<usize>>],
        rot: &mut Vec<Vec<usize>>,
        check: &dyn Fn(&[Vec<usize>]) -> bool,
    ) -> bool {
        if v == options.len() {
            return check(rot);
        }
        for o in &options[v] {
            rot[v] = o.clone();
            if go(v + 1, options, rot, check) {
                return true;
            }
        }
        false
    }
    let check = |rot: &[Vec<usize>]| {
        let faces = trace(rot);
        if n as isize - m + faces.len() as isize != 2 {
            return false;
        }
        pairs.iter().all(|&(u, v)| faces.iter().any(|f| f.contains(&u) && f.contains(&v)))
    };
    go(0, &options, &mut rot, &check)
}

/// A graph whose first edges are `base` (forming `S`) followed by `extra`.
pub fn instance(n: usize, base: &[(usize, usize)], extra: &[(usize, usize)], root: Option<usize>) -> (Graph, SubgraphSpec) {
    let mut all = base.to_vec();
    all.extend_from_slice(extra);
    let g = Graph::new(n, all).unwrap();
    let s = SubgraphSpec::new(&g, (0..base.len()).collect(), root).unwrap();
    (g, s)
}

/// `count` random vertex pairs that are not edges of `base`, drawn from those satisfying `ok`.
pub fn random_pairs<R: Rng>(
    n: usize,
    base: &[(usize, usize)],
    count: usize,
    ok: impl Fn(usize, usize) -> bool,
    rng: &mut R,
) -> Vec<(usize, usize)> {
    let has = |u: usize, v: usize| base.iter().any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u));
    let mut pool: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !has(u, v) && ok(u, v)).collect();
    pool.shuffle(rng);
    pool.truncate(count);
    pool.sort_unstable();
    pool
}

/// A random connected graph drawn on a small grid, non-`S` edges with up to two bends.
pub fn random_drawing<R: Rng>(rng: &mut R, float: bool) -> (Graph, SubgraphSpec, Drawing) {
    let n: usize = rng.gen_range(4..=10);
    let tree = crossfree::harness::random_recursive_tree(n, rng);
    let k = rng.gen_range(0..=n);
    let extra = random_pairs(n, &tree, k, |_, _| true, rng);
    let (g, s) = instance(n, &tree, &extra, Some(0));
    let point = |rng: &mut R| {
        let (x, y) = (rng.gen_range(0..8i64), rng.gen_range(0..8i64));
        if float {
            Coord::float(x as f64 * 0.5, y as f64 * 0.25)
        } else {
            Coord::exact(x, y)
        }
    };
    let mut cells: Vec<(i64, i64)> = (0..8).flat_map(|x| (0..8).map(move |y| (x, y))).collect();
    cells.shuffle(rng);
    let positions = cells[..n]
        .iter()
        .map(|&(x, y)| if float { Coord::float(x as f64 * 0.5, y as f64 * 0.25) } else { Coord::exact(x, y) })
        .collect();
    let mut d = Drawing::straight_line(&g, positions);
    for e in s.complement() {
        let b = rng.gen_range(0..=2);
        d.curves[e].bends = (0..b).map(|_| point(rng)).collect();
    }
    (g, s, d)
}
