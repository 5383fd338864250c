//! Exact minimum-cost perfect matching on general weighted graphs, plus a
//! brute-force oracle for cross-validation.
//!
//! The engine is a maximum-weight blossom solver; minimum-cost perfect
//! matching negates the weights and demands maximum cardinality, then
//! rejects the result unless every node is covered.

mod blossom;

use std::collections::BTreeSet;

pub(crate) use blossom::{max_weight_matching, UNMATCHED};

/// Node cap for [`brute_force_matching`] (the search visits all pairings).
pub const BRUTE_FORCE_NODE_LIMIT: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatchingError {
    #[error("invalid weighted graph: {0}")]
    InvalidGraph(String),
    #[error("graph too large for brute force: {n} nodes > limit {limit}")]
    TooLarge { n: usize, limit: usize },
}

/// Simple undirected graph with nonnegative integer edge weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    node_count: usize,
    edges: Vec<(usize, usize, i64)>,
}

impl WeightedGraph {
    pub fn new(
        node_count: usize,
        edges: Vec<(usize, usize, i64)>,
    ) -> Result<WeightedGraph, MatchingError> {
        let mut seen = BTreeSet::new();
        for &(u, v, w) in &edges {
            if u == v || u >= node_count || v >= node_count {
                return Err(MatchingError::InvalidGraph(format!(
                    "edge ({u},{v}) invalid for {node_count} nodes"
                )));
            }
            if w < 0 {
                return Err(MatchingError::InvalidGraph(format!(
                    "negative weight {w} on ({u},{v})"
                )));
            }
            if !seen.insert(crate::game::pair(u, v)) {
                return Err(MatchingError::InvalidGraph(format!(
                    "duplicate edge ({u},{v})"
                )));
            }
        }
        Ok(WeightedGraph { node_count, edges })
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edges(&self) -> &[(usize, usize, i64)] {
        &self.edges
    }
}

/// A perfect matching: disjoint pairs covering every node, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerfectMatching {
    pub pairs: Vec<(usize, usize)>,
    pub total_cost: i64,
}

impl PerfectMatching {
    /// Whether the normalized pair is matched.
    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.pairs.binary_search(&crate::game::pair(u, v)).is_ok()
    }
}

fn pairs_from_mate(mate: &[usize]) -> Option<Vec<(usize, usize)>> {
    let mut pairs = Vec::with_capacity(mate.len() / 2);
    for (v, &m) in mate.iter().enumerate() {
        if m == UNMATCHED {
            return None;
        }
        if v < m {
            pairs.push((v, m));
        }
    }
    Some(pairs)
}

/// Minimum-total-cost perfect matching, or `None` when no perfect matching
/// exists. Deterministic for a fixed input.
pub fn min_cost_perfect_matching(g: &WeightedGraph) -> Option<PerfectMatching> {
    if g.node_count % 2 != 0 {
        return None;
    }
    if g.node_count == 0 {
        return Some(PerfectMatching {
            pairs: vec![],
            total_cost: 0,
        });
    }
    let negated: Vec<(usize, usize, i64)> =
        g.edges.iter().map(|&(u, v, w)| (u, v, -w)).collect();
    let mate = max_weight_matching(g.node_count, &negated, true);
    let pairs = pairs_from_mate(&mate)?;
    let total_cost = g
        .edges
        .iter()
        .filter(|&&(u, v, _)| mate[u] == v)
        .map(|&(_, _, w)| w)
        .sum();
    Some(PerfectMatching { pairs, total_cost })
}

/// Maximum-cardinality matching on an unweighted graph; returns the mate
/// array with [`UNMATCHED`] gaps.
pub(crate) fn max_cardinality_matching(node_count: usize, pairs: &[(usize, usize)]) -> Vec<usize> {
    let edges: Vec<(usize, usize, i64)> = pairs.iter().map(|&(u, v)| (u, v, 0)).collect();
    max_weight_matching(node_count, &edges, true)
}

/// Exhaustive minimum-cost perfect matching over all pairings; ties go to
/// the lexicographically smallest pair set.
pub fn brute_force_matching(
    g: &WeightedGraph,
) -> Result<Option<PerfectMatching>, MatchingError> {
    let n = g.node_count;
    if n > BRUTE_FORCE_NODE_LIMIT {
        return Err(MatchingError::TooLarge {
            n,
            limit: BRUTE_FORCE_NODE_LIMIT,
        });
    }
    if n % 2 != 0 {
        return Ok(None);
    }
    let mut weight = vec![vec![None; n]; n];
    for &(u, v, w) in &g.edges {
        weight[u][v] = Some(w);
        weight[v][u] = Some(w);
    }

    struct Search<'w> {
        weight: &'w [Vec<Option<i64>>],
        used: Vec<bool>,
        current: Vec<(usize, usize)>,
        best: Option<(i64, Vec<(usize, usize)>)>,
    }
    impl Search<'_> {
        // Pairs the lowest free node with each candidate in ascending
        // order, so complete matchings appear in lexicographic order of
        // their pair lists; strict improvement keeps the first optimum.
        fn go(&mut self, cost: i64) {
            let u = match self.used.iter().position(|&b| !b) {
                Some(u) => u,
                None => {
                    if self.best.as_ref().map_or(true, |(bc, _)| cost < *bc) {
                        self.best = Some((cost, self.current.clone()));
                    }
                    return;
                }
            };
            self.used[u] = true;
            for v in u + 1..self.used.len() {
                if self.used[v] {
                    continue;
                }
                if let Some(w) = self.weight[u][v] {
                    self.used[v] = true;
                    self.current.push((u, v));
                    self.go(cost + w);
                    self.current.pop();
                    self.used[v] = false;
                }
            }
            self.used[u] = false;
        }
    }

    let mut search = Search {
        weight: &weight,
        used: vec![false; n],
        current: vec![],
        best: None,
    };
    search.go(0);
    Ok(search.best.map(|(total_cost, pairs)| PerfectMatching {
        pairs,
        total_cost,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize, i64)]) -> WeightedGraph {
        WeightedGraph::new(n, edges.to_vec()).unwrap()
    }

    #[test]
    fn odd_node_count_has_no_perfect_matching() {
        let g = graph(3, &[(0, 1, 1), (1, 2, 1), (0, 2, 1)]);
        assert_eq!(min_cost_perfect_matching(&g), None);
        assert_eq!(brute_force_matching(&g).unwrap(), None);
    }

    #[test]
    fn four_cycle_picks_cheaper_pairing() {
        // Pairings: {ab, cd} = 1 + 3 and {bc, da} = 2 + 4.
        let g = graph(4, &[(0, 1, 1), (1, 2, 2), (2, 3, 3), (3, 0, 4)]);
        let m = min_cost_perfect_matching(&g).unwrap();
        assert_eq!(m.total_cost, 4);
        assert_eq!(m.pairs, vec![(0, 1), (2, 3)]);
        assert_eq!(brute_force_matching(&g).unwrap().unwrap(), m);
    }

    #[test]
    fn unique_perfect_matching() {
        let g = graph(4, &[(0, 1, 5), (2, 3, 7)]);
        let m = min_cost_perfect_matching(&g).unwrap();
        assert_eq!(m.total_cost, 12);
        assert_eq!(m.pairs, vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn isolated_node_blocks_perfection() {
        let g = graph(4, &[(0, 1, 1)]);
        assert_eq!(min_cost_perfect_matching(&g), None);
        assert_eq!(brute_force_matching(&g).unwrap(), None);
    }

    #[test]
    fn empty_graph_is_trivially_matched() {
        let g = graph(0, &[]);
        assert_eq!(
            min_cost_perfect_matching(&g).unwrap(),
            PerfectMatching {
                pairs: vec![],
                total_cost: 0
            }
        );
    }

    #[test]
    fn brute_force_tie_break_is_lexicographic() {
        let edges: Vec<(usize, usize, i64)> = crate::game::all_pairs(4)
            .map(|(u, v)| (u, v, 1))
            .collect();
        let g = graph(4, &edges);
        let m = brute_force_matching(&g).unwrap().unwrap();
        assert_eq!(m.total_cost, 2);
        assert_eq!(m.pairs, vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn brute_force_limit_enforced() {
        let g = graph(14, &[(0, 1, 1)]);
        assert!(matches!(
            brute_force_matching(&g),
            Err(MatchingError::TooLarge { n: 14, .. })
        ));
    }

    #[test]
    fn rejects_malformed_graphs() {
        assert!(WeightedGraph::new(2, vec![(0, 0, 1)]).is_err());
        assert!(WeightedGraph::new(2, vec![(0, 3, 1)]).is_err());
        assert!(WeightedGraph::new(2, vec![(0, 1, -4)]).is_err());
        assert!(WeightedGraph::new(3, vec![(0, 1, 1), (1, 0, 2)]).is_err());
    }

    #[test]
    fn blossom_agrees_with_brute_force_on_k6() {
        let weights = [3, 9, 4, 2, 8, 1, 7, 12, 6, 5, 11, 10, 14, 13, 15];
        let edges: Vec<(usize, usize, i64)> = crate::game::all_pairs(6)
            .zip(weights)
            .map(|((u, v), w)| (u, v, w))
            .collect();
        let g = graph(6, &edges);
        let fast = min_cost_perfect_matching(&g).unwrap();
        let slow = brute_force_matching(&g).unwrap().unwrap();
        assert_eq!(fast.total_cost, slow.total_cost);
    }

    #[test]
    fn scaling_preserves_optimal_pairs() {
        let g = graph(6, &[(0, 1, 2), (1, 2, 3), (2, 3, 1), (3, 4, 5), (4, 5, 2), (5, 0, 4), (1, 4, 1)]);
        let base = min_cost_perfect_matching(&g).unwrap();
        let scaled_edges: Vec<_> = g.edges().iter().map(|&(u, v, w)| (u, v, 7 * w)).collect();
        let scaled = min_cost_perfect_matching(&graph(6, &scaled_edges)).unwrap();
        assert_eq!(scaled.total_cost, 7 * base.total_cost);
        assert_eq!(scaled.pairs, base.pairs);
    }
}
