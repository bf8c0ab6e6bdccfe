//! Integer lattice representation of a drawing for exact predicates.
//!
//! Every coordinate (floats included, at their exact binary value) is scaled
//! by the least common multiple of all denominators. Drawings whose scaled
//! coordinates stay below 2^61 in magnitude use `i64` points with `i128`
//! products; everything else falls back to big integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::coord::Coord;

pub(crate) trait LatticePoint: Clone + Ord + Send + Sync {
    type Scalar: Ord + Clone + Send + Sync;

    fn x(&self) -> &Self::Scalar;
    fn y(&self) -> &Self::Scalar;
    fn orient(p: &Self, q: &Self, r: &Self) -> i8;
    /// Whether directions (a1 -> a2) and (b1 -> b2) are perpendicular.
    fn perpendicular(a1: &Self, a2: &Self, b1: &Self, b2: &Self) -> bool;
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct SmallPt(pub i64, pub i64);

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct BigPt(pub BigInt, pub BigInt);

fn sign_i128(v: i128) -> i8 {
    v.signum() as i8
}

impl LatticePoint for SmallPt {
    type Scalar = i64;

    fn x(&self) -> &i64 {
        &self.0
    }

    fn y(&self) -> &i64 {
        &self.1
    }

    fn orient(p: &Self, q: &Self, r: &Self) -> i8 {
        let (ax, ay) = ((q.0 - p.0) as i128, (q.1 - p.1) as i128);
        let (bx, by) = ((r.0 - p.0) as i128, (r.1 - p.1) as i128);
        sign_i128(ax * by - ay * bx)
    }

    fn perpendicular(a1: &Self, a2: &Self, b1: &Self, b2: &Self) -> bool {
        let (ax, ay) = ((a2.0 - a1.0) as i128, (a2.1 - a1.1) as i128);
        let (bx, by) = ((b2.0 - b1.0) as i128, (b2.1 - b1.1) as i128);
        ax * bx + ay * by == 0
    }
}

impl LatticePoint for BigPt {
    type Scalar = BigInt;

    fn x(&self) -> &BigInt {
        &self.0
    }

    fn y(&self) -> &BigInt {
        &self.1
    }

    fn orient(p: &Self, q: &Self, r: &Self) -> i8 {
        let det = (&q.0 - &p.0) * (&r.1 - &p.1) - (&q.1 - &p.1) * (&r.0 - &p.0);
        if det.is_zero() {
            0
        } else if det.is_positive() {
            1
        } else {
            -1
        }
    }

    fn perpendicular(a1: &Self, a2: &Self, b1: &Self, b2: &Self) -> bool {
        let dot = (&a2.0 - &a1.0) * (&b2.0 - &b1.0) + (&a2.1 - &a1.1) * (&b2.1 - &b1.1);
        dot.is_zero()
    }
}

/// How two closed lattice segments meet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Meet<P> {
    Disjoint,
    Proper,
    Touch(P),
    Overlap,
}

fn within<P: LatticePoint>(a: &P, b: &P, p: &P) -> bool {
    let (xlo, xhi) = if a.x() <= b.x() { (a.x(), b.x()) } else { (b.x(), a.x()) };
    let (ylo, yhi) = if a.y() <= b.y() { (a.y(), b.y()) } else { (b.y(), a.y()) };
    xlo <= p.x() && p.x() <= xhi && ylo <= p.y() && p.y() <= yhi
}

pub(crate) fn meet<P: LatticePoint>(p1: &P, p2: &P, q1: &P, q2: &P) -> Meet<P> {
    let d1 = P::orient(q1, q2, p1);
    let d2 = P::orient(q1, q2, p2);
    if d1 * d2 > 0 {
        return Meet::Disjoint;
    }
    let d3 = P::orient(p1, p2, q1);
    let d4 = P::orient(p1, p2, q2);
    if d3 * d4 > 0 {
        return Meet::Disjoint;
    }
    if d1 * d2 < 0 && d3 * d4 < 0 {
        return Meet::Proper;
    }
    if d1 == 0 && d2 == 0 && d3 == 0 && d4 == 0 {
        let (a_lo, a_hi) = if p1 <= p2 { (p1, p2) } else { (p2, p1) };
        let (b_lo, b_hi) = if q1 <= q2 { (q1, q2) } else { (q2, q1) };
        let lo = a_lo.max(b_lo);
        let hi = a_hi.min(b_hi);
        return match lo.cmp(hi) {
            std::cmp::Ordering::Less => Meet::Overlap,
            std::cmp::Ordering::Equal => Meet::Touch(lo.clone()),
            std::cmp::Ordering::Greater => Meet::Disjoint,
        };
    }
    for (d, p, a, b) in [(d1, p1, q1, q2), (d2, p2, q1, q2), (d3, q1, p1, p2), (d4, q2, p1, p2)] {
        if d == 0 && within(a, b, p) {
            return Meet::Touch(p.clone());
        }
    }
    Meet::Disjoint
}

/// A drawing's points on a common integer lattice: vertex points and, per edge, the full point chain.
pub(crate) struct LatticeDrawing<P> {
    pub vertices: Vec<P>,
    pub curves: Vec<Vec<P>>,
}

pub(crate) enum Lattice {
    Small(LatticeDrawing<SmallPt>),
    Big(LatticeDrawing<BigPt>),
}

const SMALL_LIMIT: i64 = 1 << 61;

/// Scales rational points to integers with a common denominator.
pub(crate) fn to_lattice(vertices: &[Coord], curves: &[Vec<&Coord>]) -> Lattice {
    let vr: Vec<(BigRational, BigRational)> = vertices.iter().map(Coord::to_rational).collect();
    let cr: Vec<Vec<(BigRational, BigRational)>> =
        curves.iter().map(|c| c.iter().map(|p| p.to_rational()).collect()).collect();
    let mut l = BigInt::one();
    for (x, y) in vr.iter().chain(cr.iter().flatten()) {
        l = l.lcm(x.denom()).lcm(y.denom());
    }
    let scale = |v: &BigRational| -> BigInt { v.numer() * (&l / v.denom()) };
    let big_v: Vec<BigPt> = vr.iter().map(|(x, y)| BigPt(scale(x), scale(y))).collect();
    let big_c: Vec<Vec<BigPt>> =
        cr.iter().map(|c| c.iter().map(|(x, y)| BigPt(scale(x), scale(y))).collect()).collect();
    let small = |p: &BigPt| -> Option<SmallPt> {
        let x = p.0.to_i64()?;
        let y = p.1.to_i64()?;
        (x.abs() < SMALL_LIMIT && y.abs() < SMALL_LIMIT).then_some(SmallPt(x, y))
    };
    let sv: Option<Vec<SmallPt>> = big_v.iter().map(small).collect();
    let sc: Option<Vec<Vec<SmallPt>>> =
        big_c.iter().map(|c| c.iter().map(small).collect()).collect();
    match (sv, sc) {
        (Some(vertices), Some(curves)) => Lattice::Small(LatticeDrawing { vertices, curves }),
        _ => Lattice::Big(LatticeDrawing { vertices: big_v, curves: big_c }),
    }
}
