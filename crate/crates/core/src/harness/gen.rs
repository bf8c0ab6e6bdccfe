use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::HarnessError;
use crate::classify::{classify, SubgraphClass};
use crate::embedding::planar_embed;
use crate::graph::{connectivity_level, Graph, SubgraphSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InstanceKind {
    Spider,
    Caterpillar,
    BfsTree,
    GeneralTree,
    Triconnected,
    Biconnected,
}

impl InstanceKind {
    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "spider" => InstanceKind::Spider,
            "caterpillar" => InstanceKind::Caterpillar,
            "bfs_tree" => InstanceKind::BfsTree,
            "general_tree" => InstanceKind::GeneralTree,
            "triconnected" => InstanceKind::Triconnected,
            "biconnected" => InstanceKind::Biconnected,
            _ => return None,
        })
    }

    /// Whether class `c` of an `n`-vertex instance counts as this kind. Every
    /// spider on three vertices is a path, and every caterpillar on fewer than
    /// six vertices is a path or a spider.
    pub fn matches(self, c: SubgraphClass, n: usize) -> bool {
        match self {
            InstanceKind::Spider if n <= 3 => matches!(c, SubgraphClass::Spider | SubgraphClass::Path),
            InstanceKind::Spider => c == SubgraphClass::Spider,
            InstanceKind::Caterpillar if n < 6 => {
                matches!(c, SubgraphClass::Caterpillar | SubgraphClass::Spider | SubgraphClass::Path)
            }
            InstanceKind::Caterpillar => c == SubgraphClass::Caterpillar,
            InstanceKind::BfsTree => matches!(c, SubgraphClass::BfsTree(_)),
            InstanceKind::GeneralTree => c == SubgraphClass::GeneralTree,
            InstanceKind::Triconnected => c == SubgraphClass::Triconnected,
            InstanceKind::Biconnected => c == SubgraphClass::Biconnected,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceRecipe {
    pub kind: InstanceKind,
    pub n: usize,
    pub extra_edge_count: usize,
    pub seed: u64,
}

const ATTEMPTS: usize = 200;

/// Vertex lists of the faces extra edges must stay within.
type Faces = Vec<Vec<usize>>;

/// Builds a random instance of the requested kind, deterministically from the seed.
///
/// Extra edges of BFS-tree
/// instances join equal or adjacent levels from root 0; extra edges of
/// triconnected and biconnected instances lie on a common face of the
/// embedding used to build `S`.
pub fn gen_instance(r: &InstanceRecipe) -> Result<(Graph, SubgraphSpec), HarnessError> {
    let infeasible = |why: &str| HarnessError::InfeasibleRecipe(format!("{:?} n={}: {why}", r.kind, r.n));
    if r.n < 2 {
        return Err(infeasible("need at least two vertices"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(r.seed);
    for _ in 0..ATTEMPTS {
        let (tree, root, cofacial): (Vec<(usize, usize)>, Option<usize>, Option<Faces>) = match r.kind {
            InstanceKind::Spider => (random_spider(r.n, &mut rng), Some(0), None),
            InstanceKind::Caterpillar => (random_caterpillar(r.n, &mut rng), None, None),
            InstanceKind::BfsTree | InstanceKind::GeneralTree => (random_recursive_tree(r.n, &mut rng), Some(0), None),
            InstanceKind::Triconnected => {
                if r.n < 4 {
                    return Err(infeasible("triconnected graphs need four vertices"));
                }
                let s = random_triconnected_planar(r.n, &mut rng);
                let faces = face_lists(r.n, &s);
                (s, None, Some(faces))
            }
            InstanceKind::Biconnected => {
                if r.n < 3 {
                    return Err(infeasible("biconnected graphs need three vertices"));
                }
                let (s, faces) = random_biconnected_planar(r.n, &mut rng);
                (s, None, Some(faces))
            }
        };
        let levels = (r.kind == InstanceKind::BfsTree).then(|| {
            let t = Graph::new(r.n, tree.clone()).expect("generated tree");
            t.bfs_levels(0)
        });
        let allowed = |u: usize, v: usize| {
            if let Some(lv) = &levels {
                return lv[u].abs_diff(lv[v]) <= 1;
            }
            if let Some(faces) = &cofacial {
                return faces.iter().any(|f| f.contains(&u) && f.contains(&v));
            }
            true
        };
        let Some(extras) = add_random_extras(r.n, &tree, r.extra_edge_count, allowed, &mut rng) else {
            continue;
        };
        let s_len = tree.len();
        let mut all = tree;
        all.extend(extras);
        let g = Graph::new(r.n, all).expect("generated graph is simple and connected");
        let s = SubgraphSpec::new(&g, (0..s_len).collect(), root).expect("generated subgraph spans");
        if classify(&g, &s).is_ok_and(|c| r.kind.matches(c, r.n)) {
            return Ok((g, s));
        }
    }
    Err(infeasible("no instance of this kind found"))
}

/// `count` distinct pairs outside `base` satisfying `allowed`, or `None` if too few exist.
pub fn add_random_extras<R: Rng, F: Fn(usize, usize) -> bool>(
    n: usize,
    base: &[(usize, usize)],
    count: usize,
    allowed: F,
    rng: &mut R,
) -> Option<Vec<(usize, usize)>> {
    let mut present = std::collections::HashSet::new();
    for &(u, v) in base {
        present.insert((u.min(v), u.max(v)));
    }
    let mut candidates: Vec<(usize, usize)> = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !present.contains(&(u, v)) && allowed(u, v) {
                candidates.push((u, v));
            }
        }
    }
    if candidates.len() < count {
        return None;
    }
    let (chosen, _) = candidates.partial_shuffle(rng, count);
    let mut out = chosen.to_vec();
    out.sort_unstable();
    Some(out)
}

/// Each vertex `v >= 1` attaches to a uniformly random earlier vertex.
pub fn random_recursive_tree<R: Rng>(n: usize, rng: &mut R) -> Vec<(usize, usize)> {
    (1..n).map(|v| (rng.gen_range(0..v), v)).collect()
}

fn random_spider<R: Rng>(n: usize, rng: &mut R) -> Vec<(usize, usize)> {
    let rest = n - 1;
    let legs = if rest < 3 { rest.max(1) } else { rng.gen_range(3..=rest) };
    // random composition of `rest` into `legs` positive parts
    let mut cuts: Vec<usize> = (1..rest).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<usize> = cuts[..legs - 1].to_vec();
    cuts.sort_unstable();
    cuts.insert(0, 0);
    cuts.push(rest);
    let mut edges = Vec::with_capacity(rest);
    let mut next = 1;
    for w in cuts.windows(2) {
        let mut prev = 0;
        for _ in w[0]..w[1] {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    edges
}

fn random_caterpillar<R: Rng>(n: usize, rng: &mut R) -> Vec<(usize, usize)> {
    let spine = if n <= 4 { n.min(2) } else { rng.gen_range(2..=(n / 2).max(2)) };
    let mut edges: Vec<(usize, usize)> = (1..spine).map(|i| (i - 1, i)).collect();
    for v in spine..n {
        // both spine ends get a leaf first so that they stay on the spine
        let at = match v - spine {
            0 => 0,
            1 => spine - 1,
            _ => rng.gen_range(0..spine),
        };
        edges.push((at, v));
    }
    edges
}

/// A random planar triconnected graph: a stacked triangulation thinned by
/// deleting random edges while triconnectivity holds.
pub fn random_triconnected_planar<R: Rng>(n: usize, rng: &mut R) -> Vec<(usize, usize)> {
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1]];
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    for v in 3..n {
        let i = rng.gen_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(i);
        faces.extend([[a, b, v], [b, c, v], [c, a, v]]);
        edges.extend([(a, v), (b, v), (c, v)]);
    }
    let mut order: Vec<usize> = (0..edges.len()).collect();
    order.shuffle(rng);
    let mut removed = vec![false; edges.len()];
    for e in order {
        if rng.gen_bool(0.5) {
            continue;
        }
        removed[e] = true;
        let kept: Vec<(usize, usize)> =
            edges.iter().enumerate().filter(|(i, _)| !removed[*i]).map(|(_, &p)| p).collect();
        let still = Graph::new(n, kept).map(|g| connectivity_level(&g) == 3).unwrap_or(false);
        if !still {
            removed[e] = false;
        }
    }
    edges.into_iter().enumerate().filter(|(i, _)| !removed[*i]).map(|(_, p)| p).collect()
}

fn face_lists(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let g = Graph::new(n, edges.to_vec()).expect("generated graph");
    planar_embed(&g).expect("generated graph is planar").faces().to_vec()
}

/// A random planar biconnected graph built by adding paths across faces of
/// a cycle, with the face walks of the embedding used to build it.
pub fn random_biconnected_planar<R: Rng>(n: usize, rng: &mut R) -> (Vec<(usize, usize)>, Vec<Vec<usize>>) {
    let c = rng.gen_range(3..=n);
    let mut edges: Vec<(usize, usize)> = (0..c).map(|i| (i, (i + 1) % c)).collect();
    let mut faces: Vec<Vec<usize>> = vec![(0..c).collect(), (0..c).rev().collect()];
    let mut next = c;
    let has = |edges: &[(usize, usize)], u: usize, v: usize| edges.iter().any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u));
    let mut chords = rng.gen_range(0..=n / 3);
    let mut tries = 0;
    while next < n || (chords > 0 && tries < 100 * n) {
        tries += 1;
        let fi = rng.gen_range(0..faces.len());
        let k = faces[fi].len();
        let i = rng.gen_range(0..k);
        let j = rng.gen_range(0..k);
        if i == j {
            continue;
        }
        let (i, j) = (i.min(j), i.max(j));
        let f = faces[fi].clone();
        let len = if next < n { rng.gen_range(1..=(n - next).min(3)) } else { 0 };
        if len == 0 && (j - i == 1 || (i == 0 && j == k - 1) || has(&edges, f[i], f[j])) {
            continue;
        }
        let path: Vec<usize> = (next..next + len).collect();
        next += len;
        if len == 0 {
            chords -= 1;
        }
        let mut chain = vec![f[i]];
        chain.extend(&path);
        chain.push(f[j]);
        edges.extend(chain.windows(2).map(|w| (w[0], w[1])));
        let mut f1: Vec<usize> = f[i..=j].to_vec();
        f1.extend(path.iter().rev());
        let mut f2: Vec<usize> = f[j..].to_vec();
        f2.extend(&f[..=i]);
        f2.extend(&path);
        faces[fi] = f1;
        faces.push(f2);
    }
    (edges, faces)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn recipe(kind: InstanceKind, n: usize, extra: usize, seed: u64) -> InstanceRecipe {
        InstanceRecipe { kind, n, extra_edge_count: extra, seed }
    }

    #[test]
    fn spider_recipe() {
        let (g, s) = gen_instance(&recipe(InstanceKind::Spider, 10, 5, 1)).unwrap();
        assert_eq!(classify(&g, &s).unwrap(), SubgraphClass::Spider);
        assert_eq!(g.edge_count(), 9 + 5);
    }

    #[test]
    fn bfs_recipe_extras_span_one_level() {
        let (g, s) = gen_instance(&recipe(InstanceKind::BfsTree, 15, 10, 2)).unwrap();
        let lv = s.graph(&g).bfs_levels(0);
        for e in s.complement() {
            let (u, v) = g.edge(e);
            assert!(lv[u].abs_diff(lv[v]) <= 1);
        }
        assert_eq!(s.complement().len(), 10);
    }

    #[test]
    fn triconnected_recipe_extras_are_cofacial() {
        let (g, s) = gen_instance(&recipe(InstanceKind::Triconnected, 8, 2, 3)).unwrap();
        let t = s.graph(&g);
        assert_eq!(connectivity_level(&t), 3);
        let emb = planar_embed(&t).unwrap();
        for e in s.complement() {
            let (u, v) = g.edge(e);
            assert!(!emb.faces_containing(u, v).is_empty());
        }
    }

    #[test]
    fn every_kind_is_deterministic_and_classified() {
        let kinds = [
            (InstanceKind::Spider, 12),
            (InstanceKind::Caterpillar, 12),
            (InstanceKind::BfsTree, 14),
            (InstanceKind::GeneralTree, 14),
            (InstanceKind::Triconnected, 9),
            (InstanceKind::Biconnected, 9),
        ];
        for (kind, n) in kinds {
            for seed in 0..5 {
                let r = recipe(kind, n, 3, seed);
                let a = gen_instance(&r).unwrap();
                let b = gen_instance(&r).unwrap();
                assert_eq!(a.0.edges(), b.0.edges());
                assert!(kind.matches(classify(&a.0, &a.1).unwrap(), n), "{kind:?} seed {seed}");
            }
        }
    }

    #[test]
    fn infeasible_recipes_are_reported() {
        assert!(gen_instance(&recipe(InstanceKind::Spider, 4, 10, 0)).is_err());
        assert!(gen_instance(&recipe(InstanceKind::Triconnected, 3, 0, 0)).is_err());
        assert!(gen_instance(&recipe(InstanceKind::GeneralTree, 6, 0, 0)).is_err());
    }

    #[test]
    fn biconnected_faces_cover_every_edge_twice() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..20 {
            let (edges, faces) = random_biconnected_planar(9, &mut rng);
            let darts: usize = faces.iter().map(Vec::len).sum();
            assert_eq!(darts, 2 * edges.len());
            let g = Graph::new(9, edges).unwrap();
            assert!(connectivity_level(&g) >= 2);
            assert_eq!(9 - g.edge_count() as isize + faces.len() as isize, 2);
        }
    }
}
