//! Kernels of simple polygons by exact half-plane clipping.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::geometry::Coord;

type Pt = (BigRational, BigRational);

/// The set of points that see the whole polygon.
#[derive(Debug, Clone, PartialEq)]
pub enum Kernel {
    Empty,
    /// Vertices of the kernel in counter-clockwise order. Fewer than three
    /// vertices, or zero area, means the kernel has no interior.
    Polygon(Vec<Coord>),
}

impl Kernel {
    pub fn vertices(&self) -> &[Coord] {
        match self {
            Kernel::Empty => &[],
            Kernel::Polygon(v) => v,
        }
    }

    pub fn has_interior(&self) -> bool {
        let pts: Vec<Pt> = self.vertices().iter().map(Coord::to_rational).collect();
        pts.len() >= 3 && twice_area(&pts).is_positive()
    }

    /// Average of the kernel's vertices; inside the kernel whenever it has interior.
    pub fn center(&self) -> Option<Coord> {
        let pts: Vec<Pt> = self.vertices().iter().map(Coord::to_rational).collect();
        if pts.is_empty() {
            return None;
        }
        let k = BigRational::from_integer(pts.len().into());
        let (sx, sy) = pts.iter().fold((BigRational::zero(), BigRational::zero()), |acc, p| {
            (acc.0 + &p.0, acc.1 + &p.1)
        });
        Some(Coord::exact_rational(sx / &k, sy / k))
    }
}

pub(crate) fn twice_area(poly: &[Pt]) -> BigRational {
    let k = poly.len();
    let mut s = BigRational::zero();
    for i in 0..k {
        let (p, q) = (&poly[i], &poly[(i + 1) % k]);
        s += &p.0 * &q.1 - &p.1 * &q.0;
    }
    s
}

fn side(a: &Pt, b: &Pt, p: &Pt) -> BigRational {
    (&b.0 - &a.0) * (&p.1 - &a.1) - (&b.1 - &a.1) * (&p.0 - &a.0)
}

/// Intersection of the closed inner half-planes of every polygon edge.
///
/// Works in exact arithmetic (float input is taken at its binary value) and
/// accepts either orientation.
pub fn kernel_of_polygon(poly: &[Coord]) -> Kernel {
    let mut pts: Vec<Pt> = poly.iter().map(Coord::to_rational).collect();
    if pts.len() < 3 {
        return Kernel::Empty;
    }
    if twice_area(&pts).is_negative() {
        pts.reverse();
    }
    // start from the bounding box, then clip by each edge line
    let (mut lo, mut hi) = (pts[0].clone(), pts[0].clone());
    for p in &pts {
        if p.0 < lo.0 {
            lo.0 = p.0.clone();
        }
        if p.1 < lo.1 {
            lo.1 = p.1.clone();
        }
        if p.0 > hi.0 {
            hi.0 = p.0.clone();
        }
        if p.1 > hi.1 {
            hi.1 = p.1.clone();
        }
    }
    let mut region: Vec<Pt> = vec![
        (lo.0.clone(), lo.1.clone()),
        (hi.0.clone(), lo.1.clone()),
        (hi.0.clone(), hi.1.clone()),
        (lo.0.clone(), hi.1.clone()),
    ];
    let k = pts.len();
    for i in 0..k {
        let (a, b) = (&pts[i], &pts[(i + 1) % k]);
        region = clip(&region, a, b);
        if region.is_empty() {
            return Kernel::Empty;
        }
    }
    region.dedup();
    if region.len() > 1 && region.first() == region.last() {
        region.pop();
    }
    Kernel::Polygon(region.into_iter().map(|(x, y)| Coord::exact_rational(x, y)).collect())
}

/// One Sutherland-Hodgman step keeping the closed left side of line a -> b.
fn clip(region: &[Pt], a: &Pt, b: &Pt) -> Vec<Pt> {
    let mut out = Vec::new();
    let k = region.len();
    for i in 0..k {
        let (p, q) = (&region[i], &region[(i + 1) % k]);
        let (sp, sq) = (side(a, b, p), side(a, b, q));
        if !sp.is_negative() {
            out.push(p.clone());
        }
        if (sp.is_positive() && sq.is_negative()) || (sp.is_negative() && sq.is_positive()) {
            let t = &sp / (&sp - &sq);
            out.push((&p.0 + (&q.0 - &p.0) * &t, &p.1 + (&q.1 - &p.1) * &t));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::orient;

    fn poly(pts: &[(i64, i64)]) -> Vec<Coord> {
        pts.iter().map(|&(x, y)| Coord::exact(x, y)).collect()
    }

    /// Brute-force oracle: a point is in the kernel iff it is weakly left of every edge.
    fn in_kernel(poly: &[Coord], p: &Coord) -> bool {
        let pts: Vec<Pt> = poly.iter().map(Coord::to_rational).collect();
        let ccw = twice_area(&pts).is_positive();
        (0..poly.len()).all(|i| {
            let o = orient(&poly[i], &poly[(i + 1) % poly.len()], p).unwrap();
            if ccw {
                o >= 0
            } else {
                o <= 0
            }
        })
    }

    #[test]
    fn square_is_its_own_kernel() {
        let sq = poly(&[(0, 0), (2, 0), (2, 2), (0, 2)]);
        let k = kernel_of_polygon(&sq);
        let mut got: Vec<(i64, i64)> = k
            .vertices()
            .iter()
            .map(|c| {
                let (x, y) = c.to_f64();
                (x as i64, y as i64)
            })
            .collect();
        got.sort_unstable();
        assert_eq!(got, vec![(0, 0), (0, 2), (2, 0), (2, 2)]);
        assert!(k.has_interior());
    }

    #[test]
    fn l_shape_kernel_is_the_corner_square() {
        let l = poly(&[(0, 0), (4, 0), (4, 1), (1, 1), (1, 4), (0, 4)]);
        let k = kernel_of_polygon(&l);
        assert!(k.has_interior());
        let c = k.center().unwrap();
        assert!(in_kernel(&l, &c));
        for v in k.vertices() {
            assert!(in_kernel(&l, v));
        }
        // grid oracle: sampled points inside the kernel polygon iff they see every edge
        for x in 0..=8 {
            for y in 0..=8 {
                let p = Coord::exact_rational(
                    BigRational::new(x.into(), 2.into()),
                    BigRational::new(y.into(), 2.into()),
                );
                let expected = in_kernel(&l, &p);
                let inside = x <= 2 && y <= 2;
                assert_eq!(expected, inside, "point {x}/2, {y}/2");
            }
        }
    }

    #[test]
    fn non_star_polygons_have_no_interior_kernel() {
        let u = poly(&[(0, 0), (3, 0), (3, 3), (2, 3), (2, 1), (1, 1), (1, 3), (0, 3)]);
        let spiral = poly(&[
            (0, 0), (5, 0), (5, 5), (1, 5), (1, 2), (3, 2), (3, 3), (2, 3), (2, 4), (4, 4), (4, 1), (0, 1),
        ]);
        for p in [u, spiral] {
            assert!(!kernel_of_polygon(&p).has_interior());
            let strictly_inside = |q: &Coord| {
                let pts: Vec<Pt> = p.iter().map(Coord::to_rational).collect();
                let want = if twice_area(&pts).is_positive() { 1 } else { -1 };
                (0..p.len()).all(|i| orient(&p[i], &p[(i + 1) % p.len()], q).unwrap() == want)
            };
            for x in 0..=20 {
                for y in 0..=20 {
                    let q = Coord::exact_rational(
                        BigRational::new(x.into(), 4.into()),
                        BigRational::new(y.into(), 4.into()),
                    );
                    assert!(!strictly_inside(&q));
                }
            }
        }
    }
}
