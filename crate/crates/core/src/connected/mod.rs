//! Decision procedures and drawers for triconnected and biconnected spanning subgraphs.

mod bicon1;
mod bicon2;
mod cofacial;
mod convex;
mod kernel;
mod route;
mod tricon;

pub use bicon1::{draw_bicon_1bend, draw_bicon_1bend_with_regions, RegionDrawing};
pub use bicon2::{draw_bicon_2bend, draw_bicon_2bend_with_gadgets, GadgetDrawing};
pub use cofacial::{cofacial_embed_search, EmbedBudget, SearchOutcome, BUDGET_ENV};
pub use convex::{convex_draw, face_is_strictly_convex};
pub use kernel::{kernel_of_polygon, Kernel};
pub use route::route_k_bend;
pub use tricon::{tricon_decide, tricon_draw, FaceTriple, Rejection, TriconDecision};

use crate::graph::GraphError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConnectedError {
    #[error("subgraph is not planar and triconnected")]
    NotTriconnected,
    #[error("subgraph is not planar and biconnected")]
    NotBiconnected,
    #[error("embedding does not match the subgraph")]
    EmbeddingMismatch,
    #[error("edge {edge} has no face containing both endpoints")]
    NotCofacial { edge: usize },
    #[error("face triple does not lie on a face of the embedding")]
    InvalidTriple,
    #[error("barycentric system is singular")]
    SingularSystem,
    #[error("outer face needs at least three fixed points in convex position")]
    BadOuterFace,
    #[error("kernel of face {face} is degenerate")]
    KernelDegenerate { face: usize },
    #[error("augmented graph is not triconnected: {0}")]
    AugmentationFailed(String),
    #[error("embedding enumeration exceeds budget ({vertices} vertices, {embeddings} embeddings)")]
    BudgetExceeded { vertices: usize, embeddings: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Left-to-right position lookup of vertices in a cyclic face walk.
pub(crate) fn face_positions(face: &[usize]) -> std::collections::HashMap<usize, usize> {
    face.iter().enumerate().map(|(i, &v)| (v, i)).collect()
}

/// Whether chords (a, b) and (c, d) of a circle of positions strictly interleave.
pub(crate) fn interleave(a: usize, b: usize, c: usize, d: usize) -> bool {
    let (lo, hi) = (a.min(b), a.max(b));
    let inside = |x: usize| lo < x && x < hi;
    let distinct = c != a && c != b && d != a && d != b;
    distinct && (inside(c) != inside(d))
}
