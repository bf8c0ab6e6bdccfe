//! Combinatorial embeddings: rotation systems, face traversal and a
//! path-addition planarity test that produces a rotation system.
//!
//! Faces are traced with the rule "after dart (u, v) comes (v, w) where w
//! follows u in the rotation at v". With rotations read counter-clockwise in
//! a drawing, every face keeps its region on the left: bounded faces are
//! traversed counter-clockwise and the unbounded face clockwise.

use std::collections::{HashMap, VecDeque};
use std::ops::ControlFlow;

use crate::graph::Graph;

/// A facial walk as a cyclic vertex sequence.
pub type Face = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    rotation: Vec<Vec<usize>>,
    faces: Vec<Face>,
}

impl Embedding {
    /// Builds an embedding from per-vertex cyclic neighbor orders and traces its faces.
    pub fn from_rotation(rotation: Vec<Vec<usize>>) -> Self {
        let faces = trace_faces(&rotation);
        Embedding { rotation, faces }
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rotation.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// n - m + f, which equals 2 exactly for planar embeddings of connected graphs.
    pub fn euler_characteristic(&self) -> isize {
        self.vertex_count() as isize - self.edge_count() as isize + self.faces.len() as isize
    }

    pub fn is_planar(&self) -> bool {
        self.euler_characteristic() == 2
    }

    /// The reflected embedding (every rotation reversed).
    pub fn mirror(&self) -> Embedding {
        let rotation = self
            .rotation
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        Embedding::from_rotation(rotation)
    }

    /// Indices of faces whose walk visits both `u` and `v`.
    pub fn faces_containing(&self, u: usize, v: usize) -> Vec<usize> {
        self.faces
            .iter()
            .enumerate()
            .filter(|(_, f)| f.contains(&u) && f.contains(&v))
            .map(|(i, _)| i)
            .collect()
    }

    /// Embedding of the subgraph induced by the vertices with `keep[v]`;
    /// vertex indices are preserved and dropped vertices get empty rotations.
    pub fn restrict(&self, keep: &[bool]) -> Embedding {
        let rotation = self
            .rotation
            .iter()
            .enumerate()
            .map(|(v, r)| {
                if keep[v] {
                    r.iter().copied().filter(|&w| keep[w]).collect()
                } else {
                    Vec::new()
                }
            })
            .collect();
        Embedding::from_rotation(rotation)
    }

    /// Checks that the rotation is a permutation of each vertex's neighborhood in `g`.
    pub fn matches_graph(&self, g: &Graph) -> bool {
        if self.rotation.len() != g.vertex_count() {
            return false;
        }
        self.rotation.iter().enumerate().all(|(v, r)| {
            let mut sorted = r.clone();
            sorted.sort_unstable();
            sorted.iter().copied().eq(g.neighbors(v))
        })
    }

    fn canonical_key(&self) -> Vec<Vec<usize>> {
        let mut key: Vec<Vec<usize>> = self.faces.iter().map(|f| min_rotation(f)).collect();
        key.sort();
        key
    }

    /// Picks, between this embedding and its mirror, the one whose sorted
    /// face-walk encoding is lexicographically smaller.
    pub fn canonicalized(self) -> Embedding {
        let mirror = self.mirror();
        if mirror.canonical_key() < self.canonical_key() {
            mirror
        } else {
            self
        }
    }
}

fn min_rotation(f: &[usize]) -> Vec<usize> {
    (0..f.len().max(1))
        .map(|s| f.iter().cycle().skip(s).take(f.len()).copied().collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

fn trace_faces(rotation: &[Vec<usize>]) -> Vec<Face> {
    let n = rotation.len();
    let mut offset = Vec::with_capacity(n + 1);
    offset.push(0);
    for r in rotation {
        offset.push(offset.last().unwrap() + r.len());
    }
    let darts = offset[n];
    if darts == 0 {
        return vec![Vec::new()];
    }
    let position: Vec<HashMap<usize, usize>> = rotation
        .iter()
        .map(|r| r.iter().enumerate().map(|(i, &w)| (w, i)).collect())
        .collect();
    let mut used = vec![false; darts];
    let mut faces = Vec::new();
    for u in 0..n {
        for i in 0..rotation[u].len() {
            if used[offset[u] + i] {
                continue;
            }
            let mut face = Vec::new();
            let (mut a, mut ai) = (u, i);
            while !used[offset[a] + ai] {
                used[offset[a] + ai] = true;
                face.push(a);
                let b = rotation[a][ai];
                let pos = position[b][&a];
                let next = (pos + 1) % rotation[b].len();
                a = b;
                ai = next;
            }
            faces.push(face);
        }
    }
    faces
}

/// Computes a planar embedding of `g`, or `None` when `g` is not planar.
///
/// Each biconnected block is embedded by incremental path addition; block
/// rotations are concatenated at cut vertices. The result is canonicalized
/// against its mirror image.
pub fn planar_embed(g: &Graph) -> Option<Embedding> {
    let n = g.vertex_count();
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); n];
    for block in g.blocks() {
        if block.len() == 1 {
            let (u, v) = g.edge(block[0]);
            rotation[u].push(v);
            rotation[v].push(u);
            continue;
        }
        let local = LocalBlock::new(g, &block);
        let faces = embed_block(&local.graph)?;
        let local_rot = rotation_from_faces(&local.graph, &faces)?;
        for (lv, r) in local_rot.into_iter().enumerate() {
            let v = local.vertices[lv];
            rotation[v].extend(r.into_iter().map(|w| local.vertices[w]));
        }
    }
    let emb = Embedding::from_rotation(rotation);
    debug_assert!(emb.is_planar(), "block merge must stay planar");
    Some(emb.canonicalized())
}

/// The faces of an embedding (cyclic vertex order of each facial walk).
pub fn faces(emb: &Embedding) -> &[Face] {
    emb.faces()
}

struct LocalBlock {
    graph: Graph,
    vertices: Vec<usize>,
}

impl LocalBlock {
    fn new(g: &Graph, block: &[usize]) -> Self {
        let mut vertices: Vec<usize> = block
            .iter()
            .flat_map(|&e| {
                let (u, v) = g.edge(e);
                [u, v]
            })
            .collect();
        vertices.sort_unstable();
        vertices.dedup();
        let index: HashMap<usize, usize> =
            vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let edges = block
            .iter()
            .map(|&e| {
                let (u, v) = g.edge(e);
                (index[&u], index[&v])
            })
            .collect();
        let graph = Graph::new(vertices.len(), edges).expect("blocks are connected");
        LocalBlock { graph, vertices }
    }
}

/// Recovers a rotation system from a consistent set of oriented faces.
fn rotation_from_faces(g: &Graph, faces: &[Face]) -> Option<Vec<Vec<usize>>> {
    let n = g.vertex_count();
    let mut succ: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];
    for f in faces {
        let k = f.len();
        for i in 0..k {
            let (u, v, w) = (f[i], f[(i + 1) % k], f[(i + 2) % k]);
            if succ[v].insert(u, w).is_some() {
                return None;
            }
        }
    }
    let mut rotation = Vec::with_capacity(n);
    for v in 0..n {
        let start = g.neighbors(v).next()?;
        let mut order = vec![start];
        let mut cur = *succ[v].get(&start)?;
        while cur != start {
            order.push(cur);
            cur = *succ[v].get(&cur)?;
            if order.len() > g.degree(v) {
                return None;
            }
        }
        if order.len() != g.degree(v) {
            return None;
        }
        rotation.push(order);
    }
    Some(rotation)
}

/// Partial embedding grown by path addition on a biconnected graph.
#[derive(Debug, Clone)]
pub(crate) struct PathAddition {
    pub(crate) in_h: Vec<bool>,
    pub(crate) edge_in_h: Vec<bool>,
    pub(crate) faces: Vec<Face>,
}

#[derive(Debug)]
struct Fragment {
    attachments: Vec<usize>,
    edge: Option<usize>,
    component: Vec<usize>,
}

impl PathAddition {
    fn start(g: &Graph) -> Self {
        let cycle = initial_cycle(g);
        let mut in_h = vec![false; g.vertex_count()];
        let mut edge_in_h = vec![false; g.edge_count()];
        for i in 0..cycle.len() {
            let (u, v) = (cycle[i], cycle[(i + 1) % cycle.len()]);
            in_h[u] = true;
            edge_in_h[g.edge_between(u, v).unwrap()] = true;
        }
        let rev = cycle.iter().rev().copied().collect();
        PathAddition { in_h, edge_in_h, faces: vec![cycle, rev] }
    }

    fn fragments(&self, g: &Graph) -> Vec<Fragment> {
        let mut out = Vec::new();
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            if !self.edge_in_h[e] && self.in_h[u] && self.in_h[v] {
                out.push(Fragment { attachments: vec![u, v], edge: Some(e), component: vec![] });
            }
        }
        let mut seen = self.in_h.clone();
        for s in 0..g.vertex_count() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut component = vec![s];
            let mut attachments = Vec::new();
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for w in g.neighbors(x) {
                    if self.in_h[w] {
                        attachments.push(w);
                    } else if !seen[w] {
                        seen[w] = true;
                        component.push(w);
                        queue.push_back(w);
                    }
                }
            }
            attachments.sort_unstable();
            attachments.dedup();
            out.push(Fragment { attachments, edge: None, component });
        }
        out
    }

    fn admissible(&self, frag: &Fragment) -> Vec<usize> {
        self.faces
            .iter()
            .enumerate()
            .filter(|(_, f)| frag.attachments.iter().all(|a| f.contains(a)))
            .map(|(i, _)| i)
            .collect()
    }

    fn fragment_path(&self, g: &Graph, frag: &Fragment) -> Vec<usize> {
        if let Some(e) = frag.edge {
            let (u, v) = g.edge(e);
            return vec![u, v];
        }
        let a = frag.attachments[0];
        let mut parent: HashMap<usize, usize> = HashMap::new();
        let mut queue = VecDeque::new();
        for w in g.neighbors(a) {
            if !self.in_h[w] && frag.component.contains(&w) && !parent.contains_key(&w) {
                parent.insert(w, a);
                queue.push_back(w);
            }
        }
        while let Some(x) = queue.pop_front() {
            if let Some(b) = g.neighbors(x).find(|&b| self.in_h[b] && b != a) {
                let mut path = vec![b, x];
                let mut cur = x;
                while let Some(&p) = parent.get(&cur) {
                    path.push(p);
                    if p == a {
                        break;
                    }
                    cur = p;
                }
                path.reverse();
                return path;
            }
            for w in g.neighbors(x) {
                if !self.in_h[w] && !parent.contains_key(&w) {
                    parent.insert(w, x);
                    queue.push_back(w);
                }
            }
        }
        unreachable!("a fragment of a biconnected graph has two attachments")
    }

    fn embed(&mut self, g: &Graph, face: usize, path: &[usize]) {
        let f = std::mem::take(&mut self.faces[face]);
        let (a, b) = (path[0], *path.last().unwrap());
        let k = f.len();
        let i = f.iter().position(|&x| x == a).unwrap();
        let j = f.iter().position(|&x| x == b).unwrap();
        let interior = &path[1..path.len() - 1];
        let mut f1: Vec<usize> = (0..k).map(|s| f[(i + s) % k]).take_while(|&x| x != b).collect();
        f1.push(b);
        f1.extend(interior.iter().rev());
        let mut f2: Vec<usize> = (0..k).map(|s| f[(j + s) % k]).take_while(|&x| x != a).collect();
        f2.push(a);
        f2.extend(interior.iter());
        self.faces[face] = f1;
        self.faces.push(f2);
        for w in path.windows(2) {
            self.edge_in_h[g.edge_between(w[0], w[1]).unwrap()] = true;
        }
        for &v in path {
            self.in_h[v] = true;
        }
    }
}

fn initial_cycle(g: &Graph) -> Vec<usize> {
    let (u, v) = g.edge(0);
    // shortest v -> u path avoiding the edge (u, v)
    let mut parent = vec![usize::MAX; g.vertex_count()];
    parent[v] = v;
    let mut queue = VecDeque::from([v]);
    while let Some(x) = queue.pop_front() {
        for w in g.neighbors(x) {
            if (x == v && w == u) || parent[w] != usize::MAX {
                continue;
            }
            parent[w] = x;
            if w == u {
                queue.clear();
                break;
            }
            queue.push_back(w);
        }
    }
    let mut cycle = vec![u];
    let mut cur = u;
    while cur != v {
        cur = parent[cur];
        cycle.push(cur);
    }
    cycle
}

fn embed_block(g: &Graph) -> Option<Vec<Face>> {
    let mut state = PathAddition::start(g);
    loop {
        let frags = state.fragments(g);
        if frags.is_empty() {
            return Some(state.faces);
        }
        let mut best: Option<(usize, Vec<usize>)> = None;
        for (i, frag) in frags.iter().enumerate() {
            let adm = state.admissible(frag);
            if adm.is_empty() {
                return None;
            }
            if best.as_ref().is_none_or(|(_, b)| adm.len() < b.len()) {
                best = Some((i, adm));
            }
        }
        let (i, adm) = best.unwrap();
        let path = state.fragment_path(g, &frags[i]);
        state.embed(g, adm[0], &path);
    }
}

/// Visits every planar embedding of a biconnected graph (mirror images
/// included) by branching over the admissible faces of each added path.
///
/// `prune` is called on each partial embedding; returning `true` discards
/// the branch. Faces of a partial embedding only ever split, so pruning on
/// "these two placed vertices share no face" is sound.
pub(crate) fn enumerate_biconnected_embeddings<P, V>(
    g: &Graph,
    prune: &P,
    visit: &mut V,
) -> ControlFlow<()>
where
    P: Fn(&PathAddition) -> bool,
    V: FnMut(Embedding) -> ControlFlow<()>,
{
    let start = PathAddition::start(g);
    if prune(&start) {
        return ControlFlow::Continue(());
    }
    branch(g, start, prune, visit)
}

fn branch<P, V>(g: &Graph, state: PathAddition, prune: &P, visit: &mut V) -> ControlFlow<()>
where
    P: Fn(&PathAddition) -> bool,
    V: FnMut(Embedding) -> ControlFlow<()>,
{
    let frags = state.fragments(g);
    if frags.is_empty() {
        let Some(rotation) = rotation_from_faces(g, &state.faces) else {
            return ControlFlow::Continue(());
        };
        return visit(Embedding::from_rotation(rotation));
    }
    let mut best: Option<(usize, Vec<usize>)> = None;
    for (i, frag) in frags.iter().enumerate() {
        let adm = state.admissible(frag);
        if adm.is_empty() {
            return ControlFlow::Continue(());
        }
        if best.as_ref().is_none_or(|(_, b)| adm.len() < b.len()) {
            best = Some((i, adm));
        }
    }
    let (i, adm) = best.unwrap();
    let path = state.fragment_path(g, &frags[i]);
    for face in adm {
        let mut next = state.clone();
        next.embed(g, face, &path);
        if prune(&next) {
            continue;
        }
        branch(g, next, prune, visit)?;
    }
    ControlFlow::Continue(())
}
