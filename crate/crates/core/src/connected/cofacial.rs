//! Search for an embedding of a biconnected `S` in which every edge of `G` is co-facial.

use std::cell::Cell;
use std::ops::ControlFlow;

use super::ConnectedError;
use crate::classify::check_spec;
use crate::embedding::{enumerate_biconnected_embeddings, planar_embed, Embedding};
use crate::graph::{connectivity_level, Graph, SubgraphSpec};

/// Limits for brute-force embedding enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EmbedBudget {
    pub max_vertices: usize,
    pub max_embeddings: usize,
}

pub const BUDGET_ENV: &str = "CROSSFREE_EMBED_BUDGET";

impl Default for EmbedBudget {
    fn default() -> Self {
        EmbedBudget { max_vertices: 12, max_embeddings: 10_000 }
    }
}

impl EmbedBudget {
    /// The default budget, overridden by `CROSSFREE_EMBED_BUDGET="vertices,embeddings"` when set and well formed.
    pub fn from_env() -> Self {
        std::env::var(BUDGET_ENV).ok().and_then(|s| Self::parse(&s)).unwrap_or_default()
    }

    pub fn parse(s: &str) -> Option<Self> {
        let (a, b) = s.split_once(',')?;
        Some(EmbedBudget {
            max_vertices: a.trim().parse().ok()?,
            max_embeddings: b.trim().parse().ok()?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Embedding),
    /// No embedding of `S` has every edge of `G` on a common face; the edge is
    /// a witness when `S` is triconnected.
    Reject { edge: Option<usize> },
}

/// Whether every pair in `pairs` has both endpoints on some face of `emb`.
fn all_cofacial(emb: &Embedding, pairs: &[(usize, usize)]) -> Option<usize> {
    let mut faces_of: Vec<Vec<usize>> = vec![Vec::new(); emb.vertex_count()];
    for (i, f) in emb.faces().iter().enumerate() {
        for &v in f {
            if faces_of[v].last() != Some(&i) {
                faces_of[v].push(i);
            }
        }
    }
    pairs.iter().position(|&(u, v)| !faces_of[u].iter().any(|f| faces_of[v].contains(f)))
}

/// Finds an embedding of `S` with every non-`S` edge co-facial.
///
/// Triconnected subgraphs have one embedding up to reflection and are scanned
/// directly. Otherwise embeddings are enumerated with pruning, within `budget`.
pub fn cofacial_embed_search(
    g: &Graph,
    s: &SubgraphSpec,
    budget: EmbedBudget,
) -> Result<SearchOutcome, ConnectedError> {
    check_spec(g, s)?;
    let t = s.graph(g);
    let level = connectivity_level(&t);
    if level < 2 {
        return Err(ConnectedError::NotBiconnected);
    }
    let others = s.complement();
    let pairs: Vec<(usize, usize)> = others.iter().map(|&e| g.edge(e)).collect();
    if level == 3 {
        let emb = planar_embed(&t).ok_or(ConnectedError::NotBiconnected)?;
        return Ok(match all_cofacial(&emb, &pairs) {
            None => SearchOutcome::Found(emb),
            Some(i) => SearchOutcome::Reject { edge: Some(others[i]) },
        });
    }
    if planar_embed(&t).is_none() {
        return Err(ConnectedError::NotBiconnected);
    }
    let n = g.vertex_count();
    if n > budget.max_vertices {
        return Err(ConnectedError::BudgetExceeded { vertices: n, embeddings: 0 });
    }
    let prune = |state: &crate::embedding::PathAddition| {
        pairs.iter().any(|&(u, v)| {
            state.in_h[u]
                && state.in_h[v]
                && !state.faces.iter().any(|f| f.contains(&u) && f.contains(&v))
        })
    };
    let seen = Cell::new(0usize);
    let mut found = None;
    let mut over = false;
    let _ = enumerate_biconnected_embeddings(&t, &prune, &mut |emb| {
        seen.set(seen.get() + 1);
        if seen.get() > budget.max_embeddings {
            over = true;
            return ControlFlow::Break(());
        }
        if all_cofacial(&emb, &pairs).is_none() {
            found = Some(emb);
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    if over {
        return Err(ConnectedError::BudgetExceeded { vertices: n, embeddings: seen.get() });
    }
    Ok(match found {
        Some(emb) => SearchOutcome::Found(emb.canonicalized()),
        None => SearchOutcome::Reject { edge: None },
    })
}
