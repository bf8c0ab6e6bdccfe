//! Acceptance suite: one pass/fail line per criterion.
//!
//! Run with `cargo test -p crossfree-core --test acceptance`. Tolerances are
//! the constants below; every criterion draws its instances from a fixed seed.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crossfree::connected::{draw_bicon_2bend_with_gadgets, face_is_strictly_convex};
use crossfree::geometry::rat;
use crossfree::harness::{
    fixture, gen_instance, random_biconnected_planar, random_recursive_tree, random_search_straightline,
    random_triconnected_planar, Fixture, InstanceKind, InstanceRecipe,
};
use crossfree::tree::{draw_bfs_tree_layout, draw_caterpillar_layout};
use crossfree::{
    classify, cofacial_embed_search, draw_bicon_1bend, draw_spider, draw_tree_1bend, draw_tree_3bend,
    draw_tree_4bend, planar_embed, tricon_decide, tricon_draw, verify, Drawing, EmbedBudget, Graph,
    SearchOutcome, SubgraphClass, SubgraphSpec, TriconDecision, VerificationReport,
};

/// Drawing time limit for a spider on 200 vertices.
const SPIDER_TIME_LIMIT: Duration = Duration::from_millis(50);
/// Caterpillar area bound: area / min_separation² ≤ C·N² over the augmented vertex count N.
const CATERPILLAR_AREA_C: f64 = 8.0;
/// 3-bend tree drawings fit in a square of side 4(n + m).
const TREE3_SIDE_FACTOR: i64 = 4;
/// 4-bend tree drawings have area at most C(n + m)².
const TREE4_AREA_C: i64 = 2;
/// Instances of the biconnected suite whose subgraph has more rotation
/// systems than this are resampled, to keep the brute-force oracle fast.
const ROTATION_CAP: u128 = 2_000_000;
/// Trials of the random straight-line search on each fixture.
const FIXTURE_TRIALS: usize = 10_000;

type Outcome = Result<String, String>;

fn err<E: std::fmt::Display>(what: &str) -> impl FnOnce(E) -> String + '_ {
    move |e| format!("{what}: {e}")
}

/// No violations and no crossing on an edge of `S`.
fn clean(r: &VerificationReport, label: &str) -> Result<(), String> {
    if let Some(v) = r.violations.first() {
        return Err(format!("{label}: {} violations, first {v:?}", r.violations.len()));
    }
    if r.s_crossing_count != 0 {
        return Err(format!("{label}: {} crossings on S", r.s_crossing_count));
    }
    Ok(())
}

fn max_non_s_bends(s: &SubgraphSpec, d: &Drawing) -> usize {
    s.complement().iter().map(|&e| d.curves[e].bends.len()).max().unwrap_or(0)
}

fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::INFINITY)
}

fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::new(n, edges).unwrap()
}


fn spider() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut slowest = Duration::ZERO;
    for i in 0..100u64 {
        // the first two instances are the largest: complete, then random density
        let n: usize = if i < 2 { 200 } else { rng.gen_range(3..=200) };
        let room = n * (n - 1) / 2 - (n - 1);
        let extra = if i == 0 { room } else { rng.gen_range(0..=room) };
        let recipe = InstanceRecipe { kind: InstanceKind::Spider, n, extra_edge_count: extra, seed: i };
        let (g, s) = gen_instance(&recipe).map_err(err("generate"))?;
        let start = Instant::now();
        let d = draw_spider(&g, &s).map_err(err("draw"))?;
        let took = start.elapsed();
        if n == 200 {
            slowest = slowest.max(took);
            if took >= SPIDER_TIME_LIMIT {
                return Err(format!("instance {i}: drawing took {took:?}"));
            }
        }
        clean(&verify(&g, &s, &d).map_err(err("verify"))?, &format!("instance {i}"))?;
        let k = n as i64 - 2;
        let (w, h) = d.exact_extent();
        if (w.clone(), h.clone()) != (rat(k * k), rat(k)) {
            return Err(format!("instance {i} (n={n}): extent {w} x {h}, expected {} x {k}", k * k));
        }
    }
    Ok(format!("100 instances, slowest n=200 drawing {slowest:?}"))
}

fn caterpillar() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut worst = 0.0f64;
    for i in 0..100u64 {
        let n: usize = rng.gen_range(3..=100);
        let room = n * (n - 1) / 2 - (n - 1);
        let extra = rng.gen_range(0..=room.min(4 * n));
        let recipe = InstanceRecipe { kind: InstanceKind::Caterpillar, n, extra_edge_count: extra, seed: i };
        let (g, s) = gen_instance(&recipe).map_err(err("generate"))?;
        let l = draw_caterpillar_layout(&g, &s).map_err(err("draw"))?;
        let r = verify(&g, &s, &l.drawing).map_err(err("verify"))?;
        clean(&r, &format!("instance {i}"))?;
        let sep = r.min_separation;
        let area = r.bounding_box.area() / (sep * sep);
        let big_n = l.augmented_count as f64;
        let ratio = area / (big_n * big_n);
        worst = worst.max(ratio);
        if ratio.is_nan() || ratio > CATERPILLAR_AREA_C {
            return Err(format!("instance {i} (n={n}): area/N^2 = {ratio:.3}"));
        }
    }
    Ok(format!("100 instances, largest area/N^2 = {worst:.3}"))
}

fn bfs_tree() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (mut done, mut seed) = (0, 0u64);
    while done < 100 {
        seed += 1;
        if seed > 2000 {
            return Err(format!("only {done} BFS-tree instances generated"));
        }
        let n: usize = rng.gen_range(10..=40);
        let extra = rng.gen_range(0..=2 * n);
        let recipe = InstanceRecipe { kind: InstanceKind::BfsTree, n, extra_edge_count: extra, seed };
        let Ok((g, s)) = gen_instance(&recipe) else { continue };
        let SubgraphClass::BfsTree(root) = classify(&g, &s).map_err(err("classify"))? else {
            return Err(format!("seed {seed}: generated instance is not a BFS-tree"));
        };
        let l = draw_bfs_tree_layout(&g, &s, root).map_err(err("draw"))?;
        clean(&verify(&g, &s, &l.drawing).map_err(err("verify"))?, &format!("seed {seed}"))?;
        if l.radii.windows(2).any(|w| !(w[1] < w[0])) {
            return Err(format!("seed {seed}: radii not strictly decreasing"));
        }
        for (lv, d) in l.shortest_chord_distances.iter().enumerate() {
            if !(*d < l.radii[lv + 1]) {
                return Err(format!("seed {seed}: circle {} misses the shortest chord of level {}", lv + 2, lv + 1));
            }
        }
        done += 1;
    }
    Ok(format!("100 instances from {seed} seeds"))
}

fn fixtures() -> Outcome {
    let mut detail = Vec::new();
    for f in [Fixture::K13Ternary, Fixture::K22Binary] {
        let (g, s) = fixture(f);
        let r = random_search_straightline(&g, &s, FIXTURE_TRIALS, 4);
        if r.best_s_crossings < 1 {
            return Err(format!("{}: trial {} has no crossing on S", f.name(), r.best_trial));
        }
        detail.push(format!("{} best {}", f.name(), r.best_s_crossings));
    }
    let g = complete(4);
    let star: Vec<usize> = (0..3).map(|v| g.edge_between(0, v + 1).unwrap()).collect();
    let s = SubgraphSpec::new(&g, star, Some(0)).unwrap();
    let r = random_search_straightline(&g, &s, 1000, 4);
    if r.best_s_crossings != 0 {
        return Err("K4 with a spanning star: no crossing-free placement found".into());
    }
    clean(&verify(&g, &s, &r.best_drawing).map_err(err("verify"))?, "K4 control")?;
    detail.push(format!("K4 control found at trial {}", r.best_trial));
    Ok(detail.join(", "))
}

fn cube() -> Vec<(usize, usize)> {
    let mut e = Vec::new();
    for i in 0..4 {
        e.extend([(i, (i + 1) % 4), (4 + i, 4 + (i + 1) % 4), (i, i + 4)]);
    }
    e
}

fn octahedron() -> Vec<(usize, usize)> {
    let missing = [(0, 5), (1, 3), (2, 4)];
    (0..6).flat_map(|u| (u + 1..6).map(move |v| (u, v))).filter(|p| !missing.contains(p)).collect()
}

fn prism() -> Vec<(usize, usize)> {
    vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
}

/// Non-adjacent vertex pairs sharing a face of the embedding of `base`.
fn cofacial_chords(n: usize, base: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let t = Graph::new(n, base.to_vec()).unwrap();
    let emb = planar_embed(&t).unwrap();
    let mut out: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !t.has_edge(u, v) && emb.faces().iter().any(|f| f.contains(&u) && f.contains(&v)))
        .collect();
    out.sort_unstable();
    out
}

/// Runs the decision on one instance against the oracle; returns the accepted triple.
fn decide_one(g: &Graph, s: &SubgraphSpec, label: &str) -> Result<Option<crossfree::FaceTriple>, String> {
    let expect = common::triple_oracle(g, s);
    let got = tricon_decide(g, s).map_err(err("decide"))?;
    match got {
        TriconDecision::Accept(t) if expect => {
            if !common::triple_ok(g, s, t.face, t.vertices) {
                return Err(format!("{label}: accepted with an invalid triple {t:?}"));
            }
            Ok(Some(t))
        }
        TriconDecision::Reject(_) if !expect => Ok(None),
        other => Err(format!("{label}: decision {other:?}, oracle says {expect}")),
    }
}

type Accepted = Vec<(Graph, SubgraphSpec, crossfree::FaceTriple)>;

fn tricon_suite() -> Result<(Accepted, String), String> {
    let mut accepted = Vec::new();
    let mut total = 0;
    for (name, n, base) in [("cube", 8, cube()), ("octahedron", 6, octahedron()), ("prism", 6, prism())] {
        let chords = cofacial_chords(n, &base);
        for mask in 0u32..1 << chords.len() {
            let extra: Vec<(usize, usize)> =
                chords.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect();
            let (g, s) = common::instance(n, &base, &extra, None);
            total += 1;
            if let Some(t) = decide_one(&g, &s, &format!("{name} subset {mask:#x}"))? {
                accepted.push((g, s, t));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for i in 0..200 {
        let n: usize = rng.gen_range(4..=12);
        let base = random_triconnected_planar(n, &mut rng);
        let extra = if i % 2 == 0 {
            let chords = cofacial_chords(n, &base);
            let k = rng.gen_range(0..=chords.len());
            chords.choose_multiple(&mut rng, k).copied().collect()
        } else {
            let k = rng.gen_range(1..=3);
            common::random_pairs(n, &base, k, |_, _| true, &mut rng)
        };
        let (g, s) = common::instance(n, &base, &extra, None);
        total += 1;
        if let Some(t) = decide_one(&g, &s, &format!("random instance {i} (n={n})"))? {
            accepted.push((g, s, t));
        }
    }
    let detail = format!("{total} instances agree with the oracle, {} accepted", accepted.len());
    Ok((accepted, detail))
}

fn tricon_drawings(accepted: &Accepted) -> Outcome {
    for (i, (g, s, t)) in accepted.iter().enumerate() {
        let d = tricon_draw(g, s, *t).map_err(err("draw"))?;
        let r = verify(g, s, &d).map_err(err("verify"))?;
        clean(&r, &format!("accepted instance {i}"))?;
        let emb = planar_embed(&s.graph(g)).unwrap();
        for (f, face) in emb.faces().iter().enumerate() {
            if f != t.face && !face_is_strictly_convex(&d, face) {
                return Err(format!("accepted instance {i}: face {face:?} not strictly convex"));
            }
        }
    }
    Ok(format!("{} drawings, every inner face of S strictly convex", accepted.len()))
}

fn tree_suite() -> Vec<(Graph, SubgraphSpec)> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    (0..100)
        .map(|_| {
            let n: usize = rng.gen_range(2..=100);
            let tree = random_recursive_tree(n, &mut rng);
            let room = (n * (n - 1) / 2 - (n - 1)).min(500 - (n - 1));
            let k = rng.gen_range(0..=room);
            let extra = common::random_pairs(n, &tree, k, |_, _| true, &mut rng);
            common::instance(n, &tree, &extra, Some(0))
        })
        .collect()
}

/// Checks one tree drawer on the shared suite; `bound` tests the exact extent.
fn tree_drawer(
    bends: usize,
    draw: fn(&Graph, &SubgraphSpec) -> Result<Drawing, crossfree::TreeDrawError>,
    bound: impl Fn(i64, i64, &BigRational, &BigRational) -> bool,
    extra: impl Fn(&VerificationReport) -> Result<(), String>,
) -> Outcome {
    let mut largest = 0;
    for (i, (g, s)) in tree_suite().iter().enumerate() {
        let d = draw(g, s).map_err(err("draw"))?;
        let r = verify(g, s, &d).map_err(err("verify"))?;
        let label = format!("instance {i}");
        clean(&r, &label)?;
        extra(&r).map_err(|e| format!("{label}: {e}"))?;
        let b = max_non_s_bends(s, &d);
        if b > bends {
            return Err(format!("{label}: an edge has {b} bends"));
        }
        largest = largest.max(b);
        let (n, m) = (g.vertex_count() as i64, g.edge_count() as i64);
        let (w, h) = d.exact_extent();
        if !bound(n, m, &w, &h) {
            return Err(format!("{label} (n={n}, m={m}): extent {} x {}", to_f64(&w), to_f64(&h)));
        }
    }
    Ok(format!("100 instances, at most {largest} bends per edge"))
}

fn tree_1bend() -> Outcome {
    tree_drawer(1, draw_tree_1bend, |n, m, w, h| *w <= rat(n * n + 1) && *h <= rat(n + m), |_| Ok(()))
}

fn tree_3bend() -> Outcome {
    let side = |n: i64, m: i64| rat(TREE3_SIDE_FACTOR * (n + m));
    tree_drawer(3, draw_tree_3bend, move |n, m, w, h| *w <= side(n, m) && *h <= side(n, m), |_| Ok(()))
}

fn tree_4bend() -> Outcome {
    tree_drawer(
        4,
        draw_tree_4bend,
        |n, m, w, h| w * h <= rat(TREE4_AREA_C * (n + m) * (n + m)),
        |r| match r.non_right_crossings {
            0 => Ok(()),
            k => Err(format!("{k} crossings are not at right angles")),
        },
    )
}

fn biconnected() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let (mut done, mut found, mut resampled) = (0, 0, 0);
    while done < 100 {
        let n: usize = rng.gen_range(3..=10);
        let (base, faces) = random_biconnected_planar(n, &mut rng);
        let extra = if done % 2 == 0 {
            let k = rng.gen_range(1..=4);
            common::random_pairs(n, &base, k, |u, v| faces.iter().any(|f| f.contains(&u) && f.contains(&v)), &mut rng)
        } else {
            let k = rng.gen_range(1..=3);
            common::random_pairs(n, &base, k, |_, _| true, &mut rng)
        };
        let (g, s) = common::instance(n, &base, &extra, None);
        if common::rotation_system_count(&s.graph(&g)) > ROTATION_CAP {
            resampled += 1;
            continue;
        }
        done += 1;
        let label = format!("instance {done} (n={n})");
        let expect = common::embedding_oracle(&g, &s);
        let emb = match cofacial_embed_search(&g, &s, EmbedBudget::default()).map_err(err("search"))? {
            SearchOutcome::Found(emb) if expect => emb,
            SearchOutcome::Reject { .. } if !expect => continue,
            other => return Err(format!("{label}: search {other:?}, oracle says {expect}")),
        };
        found += 1;
        let d = draw_bicon_1bend(&g, &s, &emb).map_err(err("1-bend"))?;
        clean(&verify(&g, &s, &d).map_err(err("verify"))?, &format!("{label} 1-bend"))?;
        if max_non_s_bends(&s, &d) > 1 {
            return Err(format!("{label}: 1-bend drawing uses more bends"));
        }
        let gd = draw_bicon_2bend_with_gadgets(&g, &s, &emb).map_err(err("2-bend"))?;
        clean(&verify(&g, &s, &gd.drawing).map_err(err("verify"))?, &format!("{label} 2-bend"))?;
        if max_non_s_bends(&s, &gd.drawing) > 2 {
            return Err(format!("{label}: 2-bend drawing uses more bends"));
        }
        for p in common::crossing_points(&g, &gd.drawing) {
            if !gd.gadgets.iter().any(|poly| common::strictly_inside(poly, &p)) {
                return Err(format!("{label}: crossing at ({}, {}) outside every gadget", to_f64(&p.0), to_f64(&p.1)));
            }
        }
    }
    Ok(format!("100 instances agree with the oracle, {found} drawn, {resampled} resampled"))
}

fn verifier() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut total = 0;
    for i in 0..50 {
        let (g, s, d) = common::random_drawing(&mut rng, i % 2 == 1);
        let r = verify(&g, &s, &d).map_err(err("verify"))?;
        let (all, on_s) = common::naive_crossings(&g, &s, &d);
        if (r.crossing_count, r.s_crossing_count) != (all, on_s) {
            return Err(format!(
                "drawing {i}: census {} / {} on S, oracle {all} / {on_s}",
                r.crossing_count, r.s_crossing_count
            ));
        }
        total += all;
    }
    Ok(format!("50 drawings, {total} crossings in total"))
}

fn main() -> ExitCode {
    let mut failed = 0;
    let mut report = |num: usize, name: &str, run: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {num} {name}: PASS ({detail}; {secs:.1}s)"),
            Err(detail) => {
                failed += 1;
                println!("criterion {num} {name}: FAIL ({detail}; {secs:.1}s)");
            }
        }
    };
    report(1, "spider", &mut spider);
    report(2, "caterpillar", &mut caterpillar);
    report(3, "bfs-tree", &mut bfs_tree);
    report(4, "negative fixtures", &mut fixtures);
    let mut accepted = Vec::new();
    report(5, "triconnected decision", &mut || {
        tricon_suite().map(|(a, detail)| {
            accepted = a;
            detail
        })
    });
    report(6, "triconnected drawing", &mut || tricon_drawings(&accepted));
    report(7, "1-bend tree", &mut tree_1bend);
    report(8, "3-bend tree", &mut tree_3bend);
    report(9, "4-bend tree", &mut tree_4bend);
    report(10, "biconnected pipeline", &mut biconnected);
    report(11, "verifier census", &mut verifier);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
