//! Graph and drawing documents, SVG output and benchmark rows.

mod document;
mod svg;

pub use document::{
    emit_drawing, emit_graph, parse_drawing, parse_graph, DrawingDocument, GraphDocument, Number, Provenance,
    CurveDocument, DRAWING_VERSION, GRAPH_VERSION,
};
pub use svg::{emit_svg, SvgOptions};

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IoError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("validation error: {0}")]
    Validation(String),
}

impl From<serde_json::Error> for IoError {
    fn from(e: serde_json::Error) -> Self {
        IoError::Parse { line: e.line(), column: e.column(), message: e.to_string() }
    }
}

/// One line of benchmark output; field order is the CSV column order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub instance: String,
    pub algorithm: String,
    pub n: usize,
    pub m: usize,
    pub s_crossings: usize,
    pub max_bends: usize,
    pub width: f64,
    pub height: f64,
    pub crossings: usize,
}

pub const BENCH_HEADER: &str = "instance,algorithm,n,m,s_crossings,max_bends,width,height,crossings";
