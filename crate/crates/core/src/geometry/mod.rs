//! Coordinates, exact predicates, drawings and the drawing verifier.

mod coord;
mod drawing;
mod lattice;
mod verify;

pub use coord::{
    orient, rat, ratio, rational_from_f64, rational_to_f64, segments_cross, Coord, CoordMode,
    SegmentRelation,
};
pub use drawing::{Drawing, Polyline, FLOAT_EPSILON};
pub use verify::{
    min_separation, verify, verify_with, BoundingBox, Crossing, NearDegeneracy, PointRef,
    VerificationReport, VerifyOptions, Violation,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeometryError {
    #[error("points of different coordinate modes cannot be compared")]
    MixedMode,
    #[error("edge {edge} has no curve")]
    IncompleteDrawing { edge: usize },
    #[error("curve of edge {edge} does not join that edge's endpoints")]
    CurveEndpointMismatch { edge: usize },
    #[error("drawing has {found} vertex positions, graph has {expected} vertices")]
    VertexCountMismatch { expected: usize, found: usize },
}
