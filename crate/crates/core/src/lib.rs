//! Drawing graphs so that a designated spanning subgraph is drawn with
//! straight, uncrossed edges.
//!
//! A graph `G` comes with a connected spanning subgraph `S` given by a
//! [`SubgraphSpec`]. The drawers in [`tree`] and [`connected`] place the
//! vertices and route the remaining edges with bends so that no edge of `S`
//! is crossed; [`verify`] checks a drawing with exact predicates.

pub mod classify;
pub mod connected;
pub mod embedding;
pub mod geometry;
pub mod graph;
pub mod harness;
pub mod io;
pub mod tree;

#[cfg(test)]
mod testgraphs;

pub use classify::{classify, SubgraphClass};
pub use connected::{
    cofacial_embed_search, convex_draw, draw_bicon_1bend, draw_bicon_2bend, kernel_of_polygon, route_k_bend,
    tricon_decide, tricon_draw, ConnectedError, EmbedBudget, FaceTriple, SearchOutcome, TriconDecision,
};
pub use embedding::{planar_embed, Embedding, Face};
pub use geometry::{verify, Coord, CoordMode, Drawing, Polyline, VerificationReport};
pub use graph::{connectivity_level, Graph, GraphError, SubgraphSpec};
pub use tree::{
    draw_bfs_tree, draw_caterpillar, draw_spider, draw_tree_1bend, draw_tree_3bend, draw_tree_4bend, TreeDrawError,
};
