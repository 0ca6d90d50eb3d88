//! Weighted graphs and optimization: minimum spanning trees, tours,
//! matchings, Hall's condition and Ramsey searches.

mod matching;
mod mst;
mod ramsey;
mod tsp;
mod weighted;

pub use matching::{
    augment, find_augmenting_path, greedy_matching_in_order, greedy_maximal_matching, hall_violator,
    maximum_matching_bipartite, Matching, MAX_HALL_LEFT,
};
pub use mst::{kruskal_mst, SpanningTree};
pub use ramsey::{
    mono_clique, pentagon_coloring, ramsey_counterexample, ramsey_holds, ramsey_holds_with_workers, ramsey_number,
    EdgeColoring2, MAX_RAMSEY_EDGES,
};
pub use tsp::{brute_force_tour, brute_force_tour_with_workers, tsp_tree_shortcut, Tour, MAX_BRUTE_FORCE_TOUR};
pub use weighted::{euclidean_graph, parse_weighted_graph, satisfies_triangle_inequality, WeightedGraph};

#[cfg(test)]
mod tests;
