use std::fmt::Write;

use crate::geometry::{verify, Drawing};
use crate::graph::{Graph, SubgraphSpec};

#[derive(Debug, Clone, PartialEq)]
pub struct SvgOptions {
    /// Longer side of the drawing area in SVG units.
    pub size: f64,
    pub margin: f64,
    pub mark_crossings: bool,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions { size: 800.0, margin: 20.0, mark_crossings: false }
    }
}

/// Renders `d` with edges of `S` thick and dark and the other edges thin and light.
///
/// The y axis points up. Crossings are marked with small squares when requested.
pub fn emit_svg(d: &Drawing, g: &Graph, s: &SubgraphSpec, opts: &SvgOptions) -> String {
    let (x0, y0, x1, y1) = if d.positions.is_empty() { (0.0, 0.0, 1.0, 1.0) } else { d.bounds_f64() };
    let extent = (x1 - x0).max(y1 - y0);
    let scale = if extent > 0.0 { opts.size / extent } else { 1.0 };
    let map = |(x, y): (f64, f64)| (opts.margin + (x - x0) * scale, opts.margin + (y1 - y) * scale);
    let width = 2.0 * opts.margin + (x1 - x0) * scale;
    let height = 2.0 * opts.margin + (y1 - y0) * scale;
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="0 0 {width:.3} {height:.3}" width="{width:.3}" height="{height:.3}">"#
    );
    let _ = writeln!(out, r#"<g fill="none" stroke-linejoin="round" stroke-linecap="round">"#);
    for e in 0..g.edge_count() {
        let pts = d.curve_points(e);
        let mut path = String::new();
        for (i, p) in pts.iter().enumerate() {
            let (x, y) = map(p.to_f64());
            let _ = write!(path, "{}{x:.3} {y:.3}", if i == 0 { "M" } else { " L" });
        }
        let style = if s.contains(e) {
            r##"stroke="#222222" stroke-width="3""##
        } else {
            r##"stroke="#7a9cc6" stroke-width="1""##
        };
        let _ = writeln!(out, r#"<path d="{path}" {style}/>"#);
    }
    out.push_str("</g>\n");
    if opts.mark_crossings {
        if let Ok(report) = verify(g, s, d) {
            for c in &report.crossings {
                let (x, y) = map(c.point);
                let color = if c.involves_subgraph { "#d62728" } else { "#ff9f1c" };
                let _ = writeln!(out, r#"<rect x="{:.3}" y="{:.3}" width="4" height="4" fill="{color}"/>"#, x - 2.0, y - 2.0);
            }
        }
    }
    for (v, p) in d.positions.iter().enumerate() {
        let (x, y) = map(p.to_f64());
        let _ = writeln!(out, r##"<circle cx="{x:.3}" cy="{y:.3}" r="4" fill="#ffffff" stroke="#222222"><title>{v}</title></circle>"##);
    }
    out.push_str("</svg>\n");
    out
}
