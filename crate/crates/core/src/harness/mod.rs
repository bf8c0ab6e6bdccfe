//! Instance generators, the fixed negative instances, and random placement search.

mod fixtures;
mod gen;
mod search;

pub use fixtures::{fixture, Fixture};
pub use gen::{
    add_random_extras, gen_instance, random_biconnected_planar, random_recursive_tree,
    random_triconnected_planar, InstanceKind, InstanceRecipe,
};
pub use search::{random_search_straightline, s_crossings_straight, SearchResult};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HarnessError {
    #[error("infeasible recipe: {0}")]
    InfeasibleRecipe(String),
}
