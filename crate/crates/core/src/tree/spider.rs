use super::TreeDrawError;
use crate::classify::{check_spec, spider_center};
use crate::geometry::{Coord, Drawing};
use crate::graph::{Graph, SubgraphSpec};

/// Straight-line drawing for a spanning spider.
///
/// Leg vertices, taken leg by leg from the center outwards, go to `(j², j)`
/// for `j = 0..n-2`; the center goes to `(0, n-2)`. All of them are in convex
/// position and visible from the center.
pub fn draw_spider(g: &Graph, s: &SubgraphSpec) -> Result<Drawing, TreeDrawError> {
    check_spec(g, s)?;
    let t = s.graph(g);
    let center = spider_center(&t).ok_or(TreeDrawError::NotASpider)?;
    let n = g.vertex_count();
    let mut positions = vec![Coord::exact(0, 0); n];
    let mut j: i64 = 0;
    for first in t.neighbors(center) {
        let (mut prev, mut cur) = (center, first);
        loop {
            positions[cur] = Coord::exact(j * j, j);
            j += 1;
            match t.neighbors(cur).find(|&w| w != prev) {
                Some(next) => {
                    prev = cur;
                    cur = next;
                }
                None => break,
            }
        }
    }
    let top = if n == 2 { 1 } else { n as i64 - 2 };
    positions[center] = Coord::exact(0, top);
    Ok(Drawing::straight_line(g, positions))
}
