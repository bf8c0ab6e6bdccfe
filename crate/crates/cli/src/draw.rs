//! Drawer selection for `draw` and `bench`.

use std::collections::BTreeMap;

use clap::ValueEnum;
use crossfree::tree::TreeDrawError;
use crossfree::{
    classify, cofacial_embed_search, draw_bfs_tree, draw_bicon_1bend, draw_bicon_2bend, draw_caterpillar,
    draw_spider, draw_tree_1bend, draw_tree_3bend, draw_tree_4bend, tricon_decide, tricon_draw, ConnectedError,
    Drawing, EmbedBudget, Embedding, Graph, SearchOutcome, SubgraphClass, SubgraphSpec, TriconDecision,
};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    /// The most specific drawer for the class of S, preferring fewer bends.
    Auto,
    Spider,
    Caterpillar,
    Bfs,
    Tricon,
    Tree1,
    Tree3,
    Tree4,
    Bicon1,
    Bicon2,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Auto => "auto",
            Algorithm::Spider => "spider",
            Algorithm::Caterpillar => "caterpillar",
            Algorithm::Bfs => "bfs",
            Algorithm::Tricon => "tricon",
            Algorithm::Tree1 => "tree1",
            Algorithm::Tree3 => "tree3",
            Algorithm::Tree4 => "tree4",
            Algorithm::Bicon1 => "bicon1",
            Algorithm::Bicon2 => "bicon2",
        }
    }
}

pub struct Drawn {
    pub drawing: Drawing,
    /// The drawer actually used (never `Auto`).
    pub algorithm: Algorithm,
    pub parameters: BTreeMap<String, String>,
}

/// The drawer `auto` resolves to for this instance.
pub fn resolve_auto(g: &Graph, s: &SubgraphSpec) -> Result<Algorithm, CliError> {
    let class = classify(g, s).map_err(|e| CliError::Input(e.to_string()))?;
    Ok(match class {
        SubgraphClass::Path | SubgraphClass::Spider => Algorithm::Spider,
        SubgraphClass::Caterpillar => Algorithm::Caterpillar,
        SubgraphClass::BfsTree(_) => Algorithm::Bfs,
        SubgraphClass::GeneralTree => Algorithm::Tree1,
        SubgraphClass::Triconnected => match tricon_decide(g, s).map_err(connected)? {
            TriconDecision::Accept(_) => Algorithm::Tricon,
            // a 1-bend drawing may still exist when only the triple is missing
            TriconDecision::Reject(crossfree::connected::Rejection::Condition2) => Algorithm::Bicon1,
            TriconDecision::Reject(r) => return Err(CliError::Rejected(format!("{r:?}"))),
        },
        SubgraphClass::Biconnected => Algorithm::Bicon1,
        SubgraphClass::OtherConnected => {
            return Err(CliError::Input("no drawer handles a subgraph that is neither a tree nor biconnected planar".into()))
        }
    })
}

pub fn draw(g: &Graph, s: &SubgraphSpec, algorithm: Algorithm) -> Result<Drawn, CliError> {
    let algorithm = match algorithm {
        Algorithm::Auto => resolve_auto(g, s)?,
        a => a,
    };
    let mut parameters = BTreeMap::new();
    let drawing = match algorithm {
        Algorithm::Auto => unreachable!("resolved above"),
        Algorithm::Spider => draw_spider(g, s).map_err(tree)?,
        Algorithm::Caterpillar => draw_caterpillar(g, s).map_err(tree)?,
        Algorithm::Bfs => {
            let root = match classify(g, s) {
                Ok(SubgraphClass::BfsTree(r)) => r,
                _ => s.root().unwrap_or(0),
            };
            parameters.insert("root".into(), root.to_string());
            draw_bfs_tree(g, s, root).map_err(tree)?
        }
        Algorithm::Tree1 => draw_tree_1bend(g, s).map_err(tree)?,
        Algorithm::Tree3 => draw_tree_3bend(g, s).map_err(tree)?,
        Algorithm::Tree4 => draw_tree_4bend(g, s).map_err(tree)?,
        Algorithm::Tricon => match tricon_decide(g, s).map_err(connected)? {
            TriconDecision::Accept(t) => {
                parameters.insert("face".into(), t.face.to_string());
                parameters.insert("triple".into(), format!("{:?}", t.vertices));
                tricon_draw(g, s, t).map_err(connected)?
            }
            TriconDecision::Reject(r) => return Err(CliError::Rejected(format!("{r:?}"))),
        },
        Algorithm::Bicon1 => draw_bicon_1bend(g, s, &embedding(g, s)?).map_err(connected)?,
        Algorithm::Bicon2 => draw_bicon_2bend(g, s, &embedding(g, s)?).map_err(connected)?,
    };
    Ok(Drawn { drawing, algorithm, parameters })
}

fn embedding(g: &Graph, s: &SubgraphSpec) -> Result<Embedding, CliError> {
    match cofacial_embed_search(g, s, EmbedBudget::from_env()).map_err(connected)? {
        SearchOutcome::Found(emb) => Ok(emb),
        SearchOutcome::Reject { edge: Some(e) } => {
            let (u, v) = g.edge(e);
            Err(CliError::Rejected(format!("edge {e} ({u}, {v}) has no face of S in common")))
        }
        SearchOutcome::Reject { edge: None } => {
            Err(CliError::Rejected("no embedding of S puts every other edge inside a face".into()))
        }
    }
}

fn tree(e: TreeDrawError) -> CliError {
    CliError::Input(e.to_string())
}

fn connected(e: ConnectedError) -> CliError {
    match e {
        ConnectedError::NotCofacial { .. } => CliError::Rejected(e.to_string()),
        ConnectedError::BudgetExceeded { .. } => {
            CliError::Input(format!("{e}; raise it with {}=VERTICES,EMBEDDINGS", crossfree::connected::BUDGET_ENV))
        }
        ConnectedError::SingularSystem
        | ConnectedError::KernelDegenerate { .. }
        | ConnectedError::AugmentationFailed(_) => CliError::Internal(e.to_string()),
        _ => CliError::Input(e.to_string()),
    }
}
