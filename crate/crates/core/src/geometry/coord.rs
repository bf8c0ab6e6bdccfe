use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::GeometryError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CoordMode {
    Exact,
    Float,
}

/// A point in the plane, either exact rational or double precision.
#[derive(Debug, Clone, PartialEq)]
pub enum Coord {
    Exact { x: BigRational, y: BigRational },
    Float { x: f64, y: f64 },
}

pub fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact rational value of a finite double.
pub fn rational_from_f64(v: f64) -> BigRational {
    BigRational::from_float(v).expect("coordinates must be finite")
}

pub fn rational_to_f64(v: &BigRational) -> f64 {
    v.to_f64().unwrap_or_else(|| {
        // ratio of huge integers: scale both down before dividing
        let shift = v.numer().bits().max(v.denom().bits()).saturating_sub(1000);
        let n = (v.numer() >> shift).to_f64().unwrap_or(f64::NAN);
        let d = (v.denom() >> shift).to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

impl Coord {
    pub fn exact(x: i64, y: i64) -> Self {
        Coord::Exact { x: rat(x), y: rat(y) }
    }

    pub fn exact_rational(x: BigRational, y: BigRational) -> Self {
        Coord::Exact { x, y }
    }

    pub fn float(x: f64, y: f64) -> Self {
        Coord::Float { x, y }
    }

    pub fn mode(&self) -> CoordMode {
        match self {
            Coord::Exact { .. } => CoordMode::Exact,
            Coord::Float { .. } => CoordMode::Float,
        }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        match self {
            Coord::Exact { x, y } => (rational_to_f64(x), rational_to_f64(y)),
            Coord::Float { x, y } => (*x, *y),
        }
    }

    /// Exact rational value of the point; floats are converted without rounding.
    pub fn to_rational(&self) -> (BigRational, BigRational) {
        match self {
            Coord::Exact { x, y } => (x.clone(), y.clone()),
            Coord::Float { x, y } => (rational_from_f64(*x), rational_from_f64(*y)),
        }
    }

    /// A point of the same mode built from a rational value.
    pub(crate) fn like(&self, x: BigRational, y: BigRational) -> Coord {
        match self {
            Coord::Exact { .. } => Coord::Exact { x, y },
            Coord::Float { .. } => Coord::Float { x: rational_to_f64(&x), y: rational_to_f64(&y) },
        }
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coord::Exact { x, y } => write!(f, "({x}, {y})"),
            Coord::Float { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

fn same_mode(points: &[&Coord]) -> Result<(), GeometryError> {
    let mode = points[0].mode();
    if points.iter().all(|p| p.mode() == mode) {
        Ok(())
    } else {
        Err(GeometryError::MixedMode)
    }
}

pub(crate) fn orient_rational(
    p: &(BigRational, BigRational),
    q: &(BigRational, BigRational),
    r: &(BigRational, BigRational),
) -> i8 {
    let det = (&q.0 - &p.0) * (&r.1 - &p.1) - (&q.1 - &p.1) * (&r.0 - &p.0);
    if det.is_zero() {
        0
    } else if det.is_positive() {
        1
    } else {
        -1
    }
}

/// Sign of the signed area of triangle pqr (+1 for a left turn).
///
/// Float inputs are evaluated exactly on their binary values.
pub fn orient(p: &Coord, q: &Coord, r: &Coord) -> Result<i8, GeometryError> {
    same_mode(&[p, q, r])?;
    Ok(orient_rational(&p.to_rational(), &q.to_rational(), &r.to_rational()))
}

#[derive(Debug, Clone, PartialEq)]
pub enum SegmentRelation {
    Disjoint,
    /// The segments meet in one point interior to both.
    ProperCross(Coord),
    /// The segments meet in one point that is an endpoint of at least one of them.
    Touch(Coord),
    /// The segments are collinear and share more than one point.
    Overlap,
}

type RPoint = (BigRational, BigRational);

fn on_segment_collinear(a: &RPoint, b: &RPoint, p: &RPoint) -> bool {
    let (xlo, xhi) = if a.0 <= b.0 { (&a.0, &b.0) } else { (&b.0, &a.0) };
    let (ylo, yhi) = if a.1 <= b.1 { (&a.1, &b.1) } else { (&b.1, &a.1) };
    xlo <= &p.0 && &p.0 <= xhi && ylo <= &p.1 && &p.1 <= yhi
}

/// Classifies how two closed segments meet.
pub fn segments_cross(
    s1: (&Coord, &Coord),
    s2: (&Coord, &Coord),
) -> Result<SegmentRelation, GeometryError> {
    same_mode(&[s1.0, s1.1, s2.0, s2.1])?;
    let (p1, p2) = (s1.0.to_rational(), s1.1.to_rational());
    let (q1, q2) = (s2.0.to_rational(), s2.1.to_rational());
    let d1 = orient_rational(&q1, &q2, &p1);
    let d2 = orient_rational(&q1, &q2, &p2);
    let d3 = orient_rational(&p1, &p2, &q1);
    let d4 = orient_rational(&p1, &p2, &q2);
    let template = s1.0;
    if d1 * d2 < 0 && d3 * d4 < 0 {
        // p1 + t (p2 - p1) with t = d(q,p1) / (d(q,p1) - d(q,p2)) using signed areas
        let area = |a: &RPoint, b: &RPoint, c: &RPoint| {
            (&b.0 - &a.0) * (&c.1 - &a.1) - (&b.1 - &a.1) * (&c.0 - &a.0)
        };
        let a1 = area(&q1, &q2, &p1);
        let a2 = area(&q1, &q2, &p2);
        let t = &a1 / (&a1 - &a2);
        let x = &p1.0 + &t * (&p2.0 - &p1.0);
        let y = &p1.1 + &t * (&p2.1 - &p1.1);
        return Ok(SegmentRelation::ProperCross(template.like(x, y)));
    }
    if d1 == 0 && d2 == 0 && d3 == 0 && d4 == 0 {
        let key = |p: &RPoint| (p.0.clone(), p.1.clone());
        let (a_lo, a_hi) = if key(&p1) <= key(&p2) { (p1, p2) } else { (p2, p1) };
        let (b_lo, b_hi) = if key(&q1) <= key(&q2) { (q1, q2) } else { (q2, q1) };
        let lo = if key(&a_lo) >= key(&b_lo) { a_lo } else { b_lo };
        let hi = if key(&a_hi) <= key(&b_hi) { a_hi } else { b_hi };
        return Ok(match key(&lo).cmp(&key(&hi)) {
            std::cmp::Ordering::Less => SegmentRelation::Overlap,
            std::cmp::Ordering::Equal => SegmentRelation::Touch(template.like(lo.0, lo.1)),
            std::cmp::Ordering::Greater => SegmentRelation::Disjoint,
        });
    }
    let candidates = [
        (d1, &p1, &q1, &q2),
        (d2, &p2, &q1, &q2),
        (d3, &q1, &p1, &p2),
        (d4, &q2, &p1, &p2),
    ];
    for (d, p, a, b) in candidates {
        if d == 0 && on_segment_collinear(a, b, p) {
            return Ok(SegmentRelation::Touch(template.like(p.0.clone(), p.1.clone())));
        }
    }
    Ok(SegmentRelation::Disjoint)
}
