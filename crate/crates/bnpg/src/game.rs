//! Game model: utility tables, investment degree sets, best responses, and
//! pure-strategy equilibrium checking/enumeration.
//!
//! A player's behavior is fully determined by the set `D_i` of investing-
//! neighbor counts at which investing is a best response: `z ∈ D_i` iff
//! `g_i(z+1) - g_i(z) ≥ c_i` (ties favor investing). Both directions are
//! implemented: [`UtilityTable::derive_degree_set`] and
//! [`realize_degree_set`], which builds a slope-2/cost-1 table realizing any
//! prescribed set.

use std::collections::BTreeSet;
use std::fmt;

use crate::rational::Rat;

/// Default cap for [`enumerate_psne`] (the search is `2^n`).
pub const PSNE_ENUMERATION_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GameError {
    #[error("invalid utility table: {0}")]
    InvalidTable(String),
    #[error("degree-set member {member} out of range for table domain 0..={max}")]
    MemberOutOfRange { member: usize, max: usize },
    #[error("edge ({i},{j}) invalid for a graph on {n} nodes")]
    InvalidEdge { i: usize, j: usize, n: usize },
    #[error("enumeration limit exceeded: n={n} > limit={limit}")]
    LimitExceeded { n: usize, limit: usize },
}

// ============================================================
// Utility tables
// ============================================================

/// Tabulated utility `g` plus investment cost `c` for one player.
///
/// For a game on `n` players the table stores `n + 1` values `g(0..=n)`:
/// the argument `x_i + n_i` ranges up to `n`, and the marginal gain
/// `Δg(z) = g(z+1) - g(z)` must be defined for every reachable neighbor
/// count `z ∈ {0..n-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UtilityTable {
    values: Vec<Rat>,
    invest_cost: Rat,
}

impl UtilityTable {
    /// Validates non-negativity and monotonicity.
    pub fn new(values: Vec<Rat>, invest_cost: Rat) -> Result<UtilityTable, GameError> {
        if values.is_empty() {
            return Err(GameError::InvalidTable("empty value list".into()));
        }
        let zero = Rat::from_integer(0);
        if values[0] < zero {
            return Err(GameError::InvalidTable("negative value".into()));
        }
        for w in values.windows(2) {
            if w[1] < w[0] {
                return Err(GameError::InvalidTable(format!(
                    "values must be non-decreasing ({} then {})",
                    w[0], w[1]
                )));
            }
        }
        if invest_cost < zero {
            return Err(GameError::InvalidTable("negative invest cost".into()));
        }
        Ok(UtilityTable {
            values,
            invest_cost,
        })
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    pub fn invest_cost(&self) -> Rat {
        self.invest_cost
    }

    /// Number of players this table serves: a table of `m + 1` values
    /// covers arguments `0..=m`.
    pub fn players(&self) -> usize {
        self.values.len() - 1
    }

    /// Utility of choosing `invest` against `count` investing neighbors.
    pub fn utility(&self, invest: bool, count: usize) -> Rat {
        let arg = count + usize::from(invest);
        assert!(arg < self.values.len(), "argument {arg} beyond table");
        let base = self.values[arg];
        if invest {
            base - self.invest_cost
        } else {
            base
        }
    }

    /// The set `{ z : g(z+1) - g(z) ≥ c }` of neighbor counts at which
    /// investing is a best response.
    pub fn derive_degree_set(&self) -> DegreeSet {
        let members = (0..self.players())
            .filter(|&z| self.values[z + 1] - self.values[z] >= self.invest_cost)
            .collect::<BTreeSet<_>>();
        DegreeSet { members }
    }
}

/// Builds a table realizing `d` for `n` players: `g(0) = 0`, marginal gain
/// 2 on members of `d` and 0 elsewhere, cost 1.
pub fn realize_degree_set(d: &DegreeSet, n: usize) -> Result<UtilityTable, GameError> {
    if let Some(&member) = d.members.iter().next_back() {
        if member >= n {
            return Err(GameError::MemberOutOfRange {
                member,
                max: n.saturating_sub(1),
            });
        }
    }
    let mut values = Vec::with_capacity(n + 1);
    let mut acc = Rat::from_integer(0);
    values.push(acc);
    for z in 0..n {
        if d.contains(z) {
            acc += Rat::from_integer(2);
        }
        values.push(acc);
    }
    Ok(UtilityTable {
        values,
        invest_cost: Rat::from_integer(1),
    })
}

// ============================================================
// Degree sets
// ============================================================

/// Structural class of a degree set within `{0..n-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    /// Downward-closed interval `{0..R}` (or empty).
    Concave,
    /// Upward-closed interval `{L..n-1}`.
    Convex,
    /// Contiguous interval `{L..R}` touching neither end.
    Sigmoid,
    /// No interval structure.
    General,
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Shape::Concave => "concave",
            Shape::Convex => "convex",
            Shape::Sigmoid => "sigmoid",
            Shape::General => "general",
        };
        write!(f, "{name}")
    }
}

/// The set of investing-neighbor counts at which a player invests.
///
/// Members are stored raw; consumers that require `D ⊆ {0..n-1}` clamp via
/// [`DegreeSet::clamped`] (out-of-range members are inert there — a count
/// can never reach them).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct DegreeSet {
    members: BTreeSet<usize>,
}

impl DegreeSet {
    pub fn new(members: impl IntoIterator<Item = usize>) -> DegreeSet {
        DegreeSet {
            members: members.into_iter().collect(),
        }
    }

    /// `{lo..=hi}`; empty when `lo > hi`.
    pub fn interval(lo: usize, hi: usize) -> DegreeSet {
        DegreeSet {
            members: (lo..=hi).collect(),
        }
    }

    pub fn contains(&self, z: usize) -> bool {
        self.members.contains(&z)
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn min(&self) -> Option<usize> {
        self.members.iter().next().copied()
    }

    pub fn max(&self) -> Option<usize> {
        self.members.iter().next_back().copied()
    }

    /// Members intersected with `{0..n-1}`.
    pub fn clamped(&self, n: usize) -> DegreeSet {
        DegreeSet {
            members: self.members.iter().copied().filter(|&z| z < n).collect(),
        }
    }

    /// True when the members form a contiguous run (or the set is empty).
    pub fn is_interval(&self) -> bool {
        match (self.min(), self.max()) {
            (Some(lo), Some(hi)) => hi - lo + 1 == self.members.len(),
            _ => true,
        }
    }

    /// `(min, max)` of a nonempty interval set.
    pub fn interval_bounds(&self) -> Option<(usize, usize)> {
        if self.is_interval() {
            Some((self.min()?, self.max()?))
        } else {
            None
        }
    }

    /// Classifies the clamped set within `{0..n-1}`; when several labels
    /// apply the most specific wins (concave, then convex, then sigmoid).
    pub fn shape(&self, n: usize) -> Shape {
        let clamped = self.clamped(n);
        let (lo, hi) = match (clamped.min(), clamped.max()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Shape::Concave,
        };
        if !clamped.is_interval() {
            Shape::General
        } else if lo == 0 {
            Shape::Concave
        } else if n > 0 && hi == n - 1 {
            Shape::Convex
        } else {
            Shape::Sigmoid
        }
    }
}

impl FromIterator<usize> for DegreeSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> DegreeSet {
        DegreeSet::new(iter)
    }
}

// ============================================================
// Graphs
// ============================================================

/// Simple undirected loop-free graph on nodes `0..n`.
///
/// Edges are kept as normalized `(min, max)` pairs in a sorted set, so
/// iteration order is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

/// Normalizes an unordered pair.
pub fn pair(i: usize, j: usize) -> (usize, usize) {
    if i < j {
        (i, j)
    } else {
        (j, i)
    }
}

/// All normalized pairs over `0..n` in sorted order.
pub fn all_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

impl Graph {
    pub fn new(n: usize) -> Graph {
        Graph {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn with_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Graph, GameError> {
        let mut g = Graph::new(n);
        for (i, j) in edges {
            if i == j || i >= n || j >= n {
                return Err(GameError::InvalidEdge { i, j, n });
            }
            g.edges.insert(pair(i, j));
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && self.edges.contains(&pair(i, j))
    }

    /// Inserts a valid edge; true if it was absent.
    pub fn insert_edge(&mut self, i: usize, j: usize) -> bool {
        assert!(i != j && i < self.n && j < self.n, "invalid edge ({i},{j})");
        self.edges.insert(pair(i, j))
    }

    /// Removes an edge; true if it was present.
    pub fn remove_edge(&mut self, i: usize, j: usize) -> bool {
        self.edges.remove(&pair(i, j))
    }

    pub fn degree(&self, i: usize) -> usize {
        self.neighbors(i).count()
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        assert!(i < self.n, "node {i} out of range");
        (0..self.n).filter(move |&j| self.has_edge(i, j))
    }

    /// Edges as sorted normalized pairs.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_set(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    /// Subgraph induced by `keep` (sorted), nodes reindexed by position.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut sub = Graph::new(keep.len());
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate().skip(a + 1) {
                if self.has_edge(i, j) {
                    sub.insert_edge(a, b);
                }
            }
        }
        sub
    }
}

// ============================================================
// Strategy profiles
// ============================================================

/// One bit per player: invest or not. The investing set `I` is the support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrategyProfile {
    invest: Vec<bool>,
}

impl StrategyProfile {
    pub fn from_bools(invest: Vec<bool>) -> StrategyProfile {
        StrategyProfile { invest }
    }

    pub fn from_investing(
        n: usize,
        investing: impl IntoIterator<Item = usize>,
    ) -> Result<StrategyProfile, GameError> {
        let mut invest = vec![false; n];
        for i in investing {
            if i >= n {
                return Err(GameError::InvalidEdge { i, j: i, n });
            }
            invest[i] = true;
        }
        Ok(StrategyProfile { invest })
    }

    pub fn all_invest(n: usize) -> StrategyProfile {
        StrategyProfile {
            invest: vec![true; n],
        }
    }

    pub fn n(&self) -> usize {
        self.invest.len()
    }

    pub fn invests(&self, i: usize) -> bool {
        self.invest[i]
    }

    /// Sorted investing set.
    pub fn investing_set(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.invest[i]).collect()
    }

    pub fn count_investing(&self) -> usize {
        self.invest.iter().filter(|&&b| b).count()
    }
}

// ============================================================
// Best responses and equilibria
// ============================================================

/// `|Neigh(i) ∩ I|` — how many of `i`'s neighbors invest.
///
/// # Panics
/// When `i` is out of range or the profile length mismatches the graph.
pub fn neighbor_investors(g: &Graph, x: &StrategyProfile, i: usize) -> usize {
    assert_eq!(g.n(), x.n(), "profile length mismatch");
    g.neighbors(i).filter(|&j| x.invests(j)).count()
}

/// Whether choosing `invests` is a best response at `count` investing
/// neighbors; ties favor investing, so investing is best exactly on `D`.
pub fn is_best_response(d: &DegreeSet, invests: bool, count: usize) -> bool {
    d.contains(count) == invests
}

/// Result of an equilibrium check: empty `violations` means PSNE.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquilibriumCheck {
    pub violations: Vec<usize>,
}

impl EquilibriumCheck {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every player's best response; lists violators.
pub fn is_psne(g: &Graph, degsets: &[DegreeSet], x: &StrategyProfile) -> EquilibriumCheck {
    assert_eq!(g.n(), degsets.len(), "degree-set count mismatch");
    let violations = (0..g.n())
        .filter(|&i| {
            let count = neighbor_investors(g, x, i);
            !is_best_response(&degsets[i], x.invests(i), count)
        })
        .collect();
    EquilibriumCheck { violations }
}

/// All PSNE profiles, ordered lexicographically by investing set.
pub fn enumerate_psne(
    g: &Graph,
    degsets: &[DegreeSet],
    limit: usize,
) -> Result<Vec<StrategyProfile>, GameError> {
    let n = g.n();
    if n > limit {
        return Err(GameError::LimitExceeded { n, limit });
    }
    let mut found = Vec::new();
    let mut current = Vec::new();
    // Depth-first over investing sets emits them in lexicographic order.
    fn rec(
        g: &Graph,
        degsets: &[DegreeSet],
        start: usize,
        current: &mut Vec<usize>,
        found: &mut Vec<StrategyProfile>,
    ) {
        let x = StrategyProfile::from_investing(g.n(), current.iter().copied())
            .expect("indices in range");
        if is_psne(g, degsets, &x).holds() {
            found.push(x);
        }
        for j in start..g.n() {
            current.push(j);
            rec(g, degsets, j + 1, current, found);
            current.pop();
        }
    }
    rec(g, degsets, 0, &mut current, &mut found);
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(v: i64) -> Rat {
        Rat::from_integer(v)
    }

    fn table(values: &[i64], cost: i64) -> UtilityTable {
        UtilityTable::new(values.iter().map(|&v| rat(v)).collect(), rat(cost)).unwrap()
    }

    #[test]
    fn best_shot_table_derives_zero_set() {
        // g jumps to 2 at argument 1 and stays flat: invest only when no
        // neighbor does.
        let t = table(&[0, 2, 2, 2], 1);
        let d = t.derive_degree_set();
        assert_eq!(d, DegreeSet::new([0]));
        assert_eq!(d.shape(t.players()), Shape::Concave);
    }

    #[test]
    fn flat_table_derives_empty_set() {
        let t = table(&[0, 0, 0, 0], 1);
        assert!(t.derive_degree_set().is_empty());
    }

    #[test]
    fn unimodal_margins_derive_sigmoid_window() {
        let t = table(&[0, 1, 3, 6, 6], 2);
        let d = t.derive_degree_set();
        assert_eq!(d, DegreeSet::new([1, 2]));
        assert_eq!(d.shape(t.players()), Shape::Sigmoid);
    }

    #[test]
    fn realize_builds_slope_two_tables() {
        let t = realize_degree_set(&DegreeSet::new([0, 1]), 4).unwrap();
        assert_eq!(
            t.values(),
            &[rat(0), rat(2), rat(4), rat(4), rat(4)][..]
        );
        assert_eq!(t.invest_cost(), rat(1));

        let t = realize_degree_set(&DegreeSet::new([]), 3).unwrap();
        assert_eq!(t.values(), &[rat(0); 4][..]);

        let t = realize_degree_set(&DegreeSet::new([2, 3]), 5).unwrap();
        assert_eq!(
            t.values(),
            &[rat(0), rat(0), rat(0), rat(2), rat(4), rat(4)][..]
        );
        assert_eq!(t.derive_degree_set(), DegreeSet::new([2, 3]));
    }

    #[test]
    fn realize_rejects_out_of_range_members() {
        let err = realize_degree_set(&DegreeSet::new([4]), 4).unwrap_err();
        assert!(matches!(err, GameError::MemberOutOfRange { member: 4, .. }));
    }

    #[test]
    fn round_trip_small_exhaustive() {
        for n in 1..=5usize {
            for mask in 0u32..(1 << n) {
                let d: DegreeSet = (0..n).filter(|&z| mask & (1 << z) != 0).collect();
                let t = realize_degree_set(&d, n).unwrap();
                assert_eq!(t.derive_degree_set(), d, "n={n} mask={mask}");
            }
        }
    }

    #[test]
    fn shape_labels() {
        let n = 5;
        assert_eq!(DegreeSet::new([]).shape(n), Shape::Concave);
        assert_eq!(DegreeSet::new([0]).shape(n), Shape::Concave);
        assert_eq!(DegreeSet::new([0, 1, 2]).shape(n), Shape::Concave);
        assert_eq!(DegreeSet::new([4]).shape(n), Shape::Convex);
        assert_eq!(DegreeSet::new([3, 4]).shape(n), Shape::Convex);
        assert_eq!(DegreeSet::new([2]).shape(n), Shape::Sigmoid);
        assert_eq!(DegreeSet::new([1, 2, 3]).shape(n), Shape::Sigmoid);
        assert_eq!(DegreeSet::new([0, 2]).shape(n), Shape::General);
        assert_eq!(DegreeSet::interval(0, 4).shape(n), Shape::Concave);
        // Members beyond n-1 are inert for classification.
        assert_eq!(DegreeSet::new([3, 4, 7]).shape(n), Shape::Convex);
    }

    #[test]
    fn neighbor_counts() {
        let triangle = Graph::with_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let all = StrategyProfile::all_invest(3);
        assert_eq!(neighbor_investors(&triangle, &all, 0), 2);

        let edgeless = Graph::new(4);
        assert_eq!(neighbor_investors(&edgeless, &StrategyProfile::all_invest(4), 2), 0);

        let path = Graph::with_edges(3, [(0, 1), (1, 2)]).unwrap();
        let x = StrategyProfile::from_investing(3, [0, 2]).unwrap();
        assert_eq!(neighbor_investors(&path, &x, 1), 2);
    }

    #[test]
    fn best_response_tie_break() {
        let d = DegreeSet::new([0]);
        assert!(is_best_response(&d, true, 0));
        assert!(!is_best_response(&d, true, 1));
        let window = DegreeSet::new([1, 2]);
        assert!(is_best_response(&window, false, 3));
    }

    #[test]
    fn triangle_best_shot_equilibria_are_singletons() {
        let g = Graph::with_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let d = vec![DegreeSet::new([0]); 3];
        let psne = enumerate_psne(&g, &d, PSNE_ENUMERATION_LIMIT).unwrap();
        let sets: Vec<Vec<usize>> = psne.iter().map(|x| x.investing_set()).collect();
        assert_eq!(sets, vec![vec![0], vec![1], vec![2]]);

        let one = StrategyProfile::from_investing(3, [0]).unwrap();
        assert!(is_psne(&g, &d, &one).holds());
        let two = StrategyProfile::from_investing(3, [0, 1]).unwrap();
        let check = is_psne(&g, &d, &two);
        assert!(!check.holds());
        assert_eq!(check.violations, vec![0, 1]);
    }

    #[test]
    fn star_profile_is_equilibrium() {
        // Center 0 with leaves 1, 2; D_0 = {2}, D_leaf = {1}: everyone
        // investing is consistent (center sees 2, each leaf sees 1).
        let g = Graph::with_edges(3, [(0, 1), (0, 2)]).unwrap();
        let d = vec![
            DegreeSet::new([2]),
            DegreeSet::new([1]),
            DegreeSet::new([1]),
        ];
        assert!(is_psne(&g, &d, &StrategyProfile::all_invest(3)).holds());
    }

    #[test]
    fn four_cycle_best_shot_equilibria() {
        let g = Graph::with_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let d = vec![DegreeSet::new([0]); 4];
        let psne = enumerate_psne(&g, &d, PSNE_ENUMERATION_LIMIT).unwrap();
        let sets: Vec<Vec<usize>> = psne.iter().map(|x| x.investing_set()).collect();
        assert_eq!(sets, vec![vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn edgeless_pair_must_both_invest() {
        let g = Graph::new(2);
        let d = vec![DegreeSet::new([0]); 2];
        let psne = enumerate_psne(&g, &d, PSNE_ENUMERATION_LIMIT).unwrap();
        assert_eq!(psne.len(), 1);
        assert_eq!(psne[0].investing_set(), vec![0, 1]);
    }

    #[test]
    fn enumeration_respects_limit() {
        let g = Graph::new(5);
        let d = vec![DegreeSet::new([0]); 5];
        assert!(matches!(
            enumerate_psne(&g, &d, 4),
            Err(GameError::LimitExceeded { n: 5, limit: 4 })
        ));
    }

    #[test]
    fn table_validation() {
        assert!(UtilityTable::new(vec![rat(0), rat(2), rat(1)], rat(1)).is_err());
        assert!(UtilityTable::new(vec![], rat(1)).is_err());
        assert!(UtilityTable::new(vec![rat(0)], rat(-1)).is_err());
    }

    #[test]
    fn utility_values_match_margins() {
        let t = table(&[0, 1, 3, 6, 6], 2);
        // At count 1 the margin is g(2)-g(1) = 2 = c: investing ties, and
        // the utility difference is exactly zero.
        assert_eq!(t.utility(true, 1), t.utility(false, 1));
        // At count 3 the margin is 0 < 2.
        assert!(t.utility(true, 3) < t.utility(false, 3));
    }

    #[test]
    fn induced_subgraph_reindexes() {
        let g = Graph::with_edges(4, [(0, 2), (1, 3), (2, 3)]).unwrap();
        let sub = g.induced(&[1, 2, 3]);
        assert_eq!(sub.n(), 3);
        let edges: Vec<_> = sub.edges().collect();
        assert_eq!(edges, vec![(0, 2), (1, 2)]);
    }
}
