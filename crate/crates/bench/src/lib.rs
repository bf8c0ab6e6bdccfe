//! Instances shared by the benchmarks.

use crossfree::harness::{fixture, gen_instance, Fixture, InstanceKind, InstanceRecipe};
use crossfree::{Graph, SubgraphSpec};

pub fn instance(kind: InstanceKind, n: usize, extra: usize, seed: u64) -> (Graph, SubgraphSpec) {
    let recipe = InstanceRecipe { kind, n, extra_edge_count: extra, seed };
    gen_instance(&recipe).expect("benchmark recipes are feasible")
}

/// The complete graph on `n` vertices with a spanning spider.
pub fn complete_spider(n: usize) -> (Graph, SubgraphSpec) {
    instance(InstanceKind::Spider, n, (n - 1) * (n - 2) / 2, 0)
}

pub fn k13() -> (Graph, SubgraphSpec) {
    fixture(Fixture::K13Ternary)
}
