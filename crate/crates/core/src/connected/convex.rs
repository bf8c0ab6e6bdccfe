//! Barycentric (Tutte) drawings with a fixed convex outer face.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::ConnectedError;
use crate::geometry::{orient, Coord, CoordMode, Drawing};
use crate::graph::Graph;

/// Interior vertex count up to which the system is solved in exact arithmetic.
pub(crate) const EXACT_LIMIT: usize = 60;

/// Places the `outer` cycle at `fixed` and every other vertex at the average
/// of its neighbors.
///
/// Exact coordinates are used when `fixed` is exact and there are at most 60
/// interior vertices; larger systems are solved in doubles.
pub fn convex_draw(t: &Graph, outer: &[usize], fixed: &[Coord]) -> Result<Drawing, ConnectedError> {
    let n = t.vertex_count();
    if outer.len() < 3 || outer.len() != fixed.len() || !strictly_convex(fixed) {
        return Err(ConnectedError::BadOuterFace);
    }
    let mut slot = vec![usize::MAX; n];
    let mut pinned = vec![None; n];
    for (v, p) in outer.iter().zip(fixed) {
        if *v >= n || pinned[*v].is_some() {
            return Err(ConnectedError::BadOuterFace);
        }
        pinned[*v] = Some(p);
    }
    let interior: Vec<usize> = (0..n).filter(|&v| pinned[v].is_none()).collect();
    for (i, &v) in interior.iter().enumerate() {
        slot[v] = i;
    }
    let exact = fixed.iter().all(|p| p.mode() == CoordMode::Exact);
    let solved: Vec<Coord> = if exact && interior.len() <= EXACT_LIMIT {
        solve_exact(t, &interior, &slot, &pinned)?
    } else {
        solve_float(t, &interior, &slot, &pinned)?
    };
    let positions: Vec<Coord> = (0..n)
        .map(|v| match pinned[v] {
            Some(p) if exact && interior.len() <= EXACT_LIMIT => p.clone(),
            Some(p) => {
                let (x, y) = p.to_f64();
                Coord::float(x, y)
            }
            None => solved[slot[v]].clone(),
        })
        .collect();
    Ok(Drawing::straight_line(t, positions))
}

fn strictly_convex(poly: &[Coord]) -> bool {
    let k = poly.len();
    let mut sign = 0;
    for i in 0..k {
        let (p, q) = (&poly[i], &poly[(i + 1) % k]);
        for (j, r) in poly.iter().enumerate() {
            if j == i || j == (i + 1) % k {
                continue;
            }
            match orient(p, q, r) {
                Ok(0) | Err(_) => return false,
                Ok(o) if sign == 0 => sign = o,
                Ok(o) if o != sign => return false,
                Ok(_) => {}
            }
        }
    }
    true
}

/// Whether the polygon traced by `face` in `d` is strictly convex (either orientation).
pub fn face_is_strictly_convex(d: &Drawing, face: &[usize]) -> bool {
    let poly: Vec<Coord> = face.iter().map(|&v| d.positions[v].clone()).collect();
    strictly_convex(&poly)
}

fn solve_exact(
    t: &Graph,
    interior: &[usize],
    slot: &[usize],
    pinned: &[Option<&Coord>],
) -> Result<Vec<Coord>, ConnectedError> {
    let m = interior.len();
    // integer Laplacian rows; the right-hand sides share one denominator
    let mut lcm = BigInt::one();
    for p in pinned.iter().flatten() {
        let (x, y) = p.to_rational();
        lcm = lcm.lcm(x.denom()).lcm(y.denom());
    }
    let scale = |r: &BigRational| r.numer() * (&lcm / r.denom());
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(m);
    for &v in interior {
        let mut row = vec![BigInt::zero(); m + 2];
        row[slot[v]] = BigInt::from(t.degree(v)) * &lcm;
        for w in t.neighbors(v) {
            match pinned[w] {
                Some(p) => {
                    let (x, y) = p.to_rational();
                    row[m] += scale(&x);
                    row[m + 1] += scale(&y);
                }
                None => row[slot[w]] -= &lcm,
            }
        }
        rows.push(row);
    }
    let sol = bareiss_solve(rows, m).ok_or(ConnectedError::SingularSystem)?;
    Ok(sol.into_iter().map(|(x, y)| Coord::exact_rational(x, y)).collect())
}

/// Solves an m×m integer system with two right-hand-side columns by
/// fraction-free elimination.
fn bareiss_solve(mut a: Vec<Vec<BigInt>>, m: usize) -> Option<Vec<(BigRational, BigRational)>> {
    let cols = m + 2;
    let mut prev = BigInt::one();
    for k in 0..m {
        let p = (k..m).find(|&r| !a[r][k].is_zero())?;
        a.swap(k, p);
        for i in k + 1..m {
            for j in k + 1..cols {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let mut x: Vec<(BigRational, BigRational)> =
        vec![(BigRational::zero(), BigRational::zero()); m];
    for i in (0..m).rev() {
        let mut sx = BigRational::from_integer(a[i][m].clone());
        let mut sy = BigRational::from_integer(a[i][m + 1].clone());
        for j in i + 1..m {
            if !a[i][j].is_zero() {
                let c = BigRational::from_integer(a[i][j].clone());
                sx -= &c * &x[j].0;
                sy -= &c * &x[j].1;
            }
        }
        let d = BigRational::from_integer(a[i][i].clone());
        x[i] = (sx / &d, sy / &d);
    }
    Some(x)
}

fn solve_float(
    t: &Graph,
    interior: &[usize],
    slot: &[usize],
    pinned: &[Option<&Coord>],
) -> Result<Vec<Coord>, ConnectedError> {
    let m = interior.len();
    let mut a = vec![vec![0.0f64; m + 2]; m];
    for (i, &v) in interior.iter().enumerate() {
        a[i][i] = t.degree(v) as f64;
        for w in t.neighbors(v) {
            match pinned[w] {
                Some(p) => {
                    let (x, y) = p.to_f64();
                    a[i][m] += x;
                    a[i][m + 1] += y;
                }
                None => a[i][slot[w]] -= 1.0,
            }
        }
    }
    for k in 0..m {
        let p = (k..m)
            .max_by(|&r, &s| a[r][k].abs().total_cmp(&a[s][k].abs()))
            .filter(|&r| a[r][k].abs() > 1e-12)
            .ok_or(ConnectedError::SingularSystem)?;
        a.swap(k, p);
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot = &top[k];
        for row in rest.iter_mut() {
            let f = row[k] / pivot[k];
            if f != 0.0 {
                for j in k..m + 2 {
                    row[j] -= f * pivot[j];
                }
            }
        }
    }
    let mut x = vec![(0.0, 0.0); m];
    for i in (0..m).rev() {
        let (mut sx, mut sy) = (a[i][m], a[i][m + 1]);
        for j in i + 1..m {
            sx -= a[i][j] * x[j].0;
            sy -= a[i][j] * x[j].1;
        }
        x[i] = (sx / a[i][i], sy / a[i][i]);
    }
    Ok(x.into_iter().map(|(x, y)| Coord::float(x, y)).collect())
}
