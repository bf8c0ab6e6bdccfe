use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::geometry::{verify, Coord, Drawing};
use crate::graph::{Graph, SubgraphSpec};

#[derive(Debug, Clone)]
pub struct SearchResult {
    pub trials: usize,
    /// Fewest crossings involving an edge of `S` over all trials, as reported by the verifier.
    pub best_s_crossings: usize,
    /// First trial reaching the minimum.
    pub best_trial: usize,
    pub best_drawing: Drawing,
}

fn orient(p: (i64, i64), q: (i64, i64), r: (i64, i64)) -> i64 {
    ((q.0 - p.0) * (r.1 - p.1) - (q.1 - p.1) * (r.0 - p.0)).signum()
}

/// Crossings of a straight-line placement in general position that involve an edge of `S`.
pub fn s_crossings_straight(g: &Graph, s: &SubgraphSpec, pts: &[(i64, i64)]) -> usize {
    let edges = g.edges();
    let mut count = 0;
    for &e in s.edges() {
        let (a, b) = edges[e];
        for (f, &(c, d)) in edges.iter().enumerate() {
            if (s.contains(f) && f <= e) || a == c || a == d || b == c || b == d {
                continue;
            }
            let (pa, pb, pc, pd) = (pts[a], pts[b], pts[c], pts[d]);
            if orient(pa, pb, pc) * orient(pa, pb, pd) < 0 && orient(pc, pd, pa) * orient(pc, pd, pb) < 0 {
                count += 1;
            }
        }
    }
    count
}

/// Integer points in [0, 10n]^2 with no two equal and no three collinear.
fn general_position<R: Rng>(n: usize, rng: &mut R) -> Vec<(i64, i64)> {
    let side = 10 * n.max(1) as i64;
    let mut pts: Vec<(i64, i64)> = Vec::with_capacity(n);
    while pts.len() < n {
        let p = (rng.gen_range(0..=side), rng.gen_range(0..=side));
        let bad = pts.iter().enumerate().any(|(i, &q)| {
            q == p || pts[i + 1..].iter().any(|&r| orient(q, r, p) == 0)
        });
        if !bad {
            pts.push(p);
        }
    }
    pts
}

/// Draws `G` straight-line at random general-position integer points `trials`
/// times and keeps the placement with the fewest crossings on `S`.
///
/// Trial `t` draws from the ChaCha stream `t` of `seed`, so results do not
/// depend on scheduling; ties go to the lowest trial index.
pub fn random_search_straightline(g: &Graph, s: &SubgraphSpec, trials: usize, seed: u64) -> SearchResult {
    let trials = trials.max(1);
    let n = g.vertex_count();
    let (count, best_trial, pts) = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(t as u64);
            let pts = general_position(n, &mut rng);
            (s_crossings_straight(g, s, &pts), t, pts)
        })
        .min_by_key(|(c, t, _)| (*c, *t))
        .expect("at least one trial");
    let positions = pts.iter().map(|&(x, y)| Coord::exact(x, y)).collect();
    let best_drawing = Drawing::straight_line(g, positions);
    let report = verify(g, s, &best_drawing).expect("straight-line drawing of g");
    debug_assert_eq!(report.s_crossing_count, count);
    SearchResult { trials, best_s_crossings: report.s_crossing_count, best_trial, best_drawing }
}
