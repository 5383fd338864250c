//! Design-problem instances: graph, per-player degree sets, symmetric pair
//! costs, budget, and target class — plus validation, solution
//! verification, and the canonical JSON formats.
//!
//! A modification's cost is the sum of pair costs over the symmetric
//! difference between the original and final edge sets. Cost `0` makes a
//! toggle free, `inf` prohibits it.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::game::{pair, DegreeSet, GameError, Graph, StrategyProfile, UtilityTable};
use crate::rational::{parse_rat, rat_string, Cost, Rat};

#[derive(Debug, thiserror::Error)]
pub enum InstanceError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid instance: {0}")]
    Invalid(String),
    #[error(transparent)]
    Game(#[from] GameError),
}

// ============================================================
// Cost matrix
// ============================================================

/// Symmetric map from unordered pairs to toggle costs; dense over all
/// pairs of `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CostMatrix {
    n: usize,
    entries: BTreeMap<(usize, usize), Cost>,
}

impl CostMatrix {
    /// Every pair costs `cost`.
    pub fn uniform(n: usize, cost: Cost) -> CostMatrix {
        let entries = crate::game::all_pairs(n).map(|p| (p, cost)).collect();
        CostMatrix { n, entries }
    }

    /// Pairs currently in `edges` default to `default_remove`, absent pairs
    /// to `default_add`; `overrides` replace individual pairs.
    pub fn with_defaults(
        n: usize,
        edges: &BTreeSet<(usize, usize)>,
        default_add: Cost,
        default_remove: Cost,
        overrides: impl IntoIterator<Item = (usize, usize, Cost)>,
    ) -> Result<CostMatrix, InstanceError> {
        let mut entries: BTreeMap<(usize, usize), Cost> = crate::game::all_pairs(n)
            .map(|p| {
                let default = if edges.contains(&p) {
                    default_remove
                } else {
                    default_add
                };
                (p, default)
            })
            .collect();
        let mut seen = BTreeSet::new();
        for (i, j, cost) in overrides {
            if i == j {
                return Err(InstanceError::Invalid(format!(
                    "cost entry for loop pair ({i},{i})"
                )));
            }
            if i >= n || j >= n {
                return Err(InstanceError::Invalid(format!(
                    "cost entry ({i},{j}) out of range for n={n}"
                )));
            }
            let p = pair(i, j);
            if !seen.insert(p) {
                return Err(InstanceError::Invalid(format!(
                    "duplicate cost entry for pair ({},{})",
                    p.0, p.1
                )));
            }
            entries.insert(p, cost);
        }
        Ok(CostMatrix { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// # Panics
    /// On loops or out-of-range indices.
    pub fn cost(&self, i: usize, j: usize) -> Cost {
        assert!(i != j && i < self.n && j < self.n, "invalid pair ({i},{j})");
        self.entries[&pair(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, cost: Cost) {
        assert!(i != j && i < self.n && j < self.n, "invalid pair ({i},{j})");
        self.entries.insert(pair(i, j), cost);
    }

    /// Sorted `(i, j, cost)` triples over all pairs.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, Cost)> + '_ {
        self.entries.iter().map(|(&(i, j), &c)| (i, j, c))
    }

    /// Submatrix over `keep` (sorted), reindexed by position.
    pub fn induced(&self, keep: &[usize]) -> CostMatrix {
        let mut entries = BTreeMap::new();
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate().skip(a + 1) {
                entries.insert((a, b), self.cost(i, j));
            }
        }
        CostMatrix {
            n: keep.len(),
            entries,
        }
    }
}

// ============================================================
// Target classes
// ============================================================

/// The family of investing sets the design must make an equilibrium.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TargetClass {
    /// Every player invests.
    All,
    /// Exactly the given set invests.
    ExactSet(BTreeSet<usize>),
    /// At least the given set invests.
    SupersetOf(BTreeSet<usize>),
    /// At least this many players invest.
    AtLeast(usize),
}

impl TargetClass {
    pub fn check_bounds(&self, n: usize) -> Result<(), InstanceError> {
        match self {
            TargetClass::All => Ok(()),
            TargetClass::ExactSet(s) | TargetClass::SupersetOf(s) => {
                match s.iter().next_back() {
                    Some(&max) if max >= n => Err(InstanceError::Invalid(format!(
                        "target member {max} out of range for n={n}"
                    ))),
                    _ => Ok(()),
                }
            }
            TargetClass::AtLeast(r) => {
                if *r > n {
                    Err(InstanceError::Invalid(format!(
                        "target count {r} exceeds n={n}"
                    )))
                } else {
                    Ok(())
                }
            }
        }
    }

    /// Whether the sorted investing set belongs to the class.
    pub fn admits(&self, investing: &[usize], n: usize) -> bool {
        match self {
            TargetClass::All => investing.len() == n,
            TargetClass::ExactSet(s) => {
                investing.len() == s.len() && investing.iter().all(|i| s.contains(i))
            }
            TargetClass::SupersetOf(s) => s.iter().all(|i| investing.binary_search(i).is_ok()),
            TargetClass::AtLeast(r) => investing.len() >= *r,
        }
    }
}

// ============================================================
// Instances
// ============================================================

/// A full network-design problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DesignInstance {
    pub graph: Graph,
    pub degsets: Vec<DegreeSet>,
    pub costs: CostMatrix,
    pub budget: Cost,
    pub target: TargetClass,
}

impl DesignInstance {
    pub fn new(
        graph: Graph,
        degsets: Vec<DegreeSet>,
        costs: CostMatrix,
        budget: Cost,
        target: TargetClass,
    ) -> Result<DesignInstance, InstanceError> {
        if degsets.len() != graph.n() {
            return Err(InstanceError::Invalid(format!(
                "{} degree sets for {} players",
                degsets.len(),
                graph.n()
            )));
        }
        if costs.n() != graph.n() {
            return Err(InstanceError::Invalid(format!(
                "cost matrix spans {} nodes, graph has {}",
                costs.n(),
                graph.n()
            )));
        }
        target.check_bounds(graph.n())?;
        Ok(DesignInstance {
            graph,
            degsets,
            costs,
            budget,
            target,
        })
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }
}

/// One validation finding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub subject: String,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.subject, self.message)
    }
}

fn diag(subject: impl Into<String>, message: impl Into<String>) -> Diagnostic {
    Diagnostic {
        subject: subject.into(),
        message: message.into(),
    }
}

/// Type-invariant checks plus solvability red flags. Empty result = ok.
pub fn validate(inst: &DesignInstance) -> Vec<Diagnostic> {
    let n = inst.n();
    let mut out = Vec::new();
    for (i, d) in inst.degsets.iter().enumerate() {
        if d.is_empty() {
            out.push(diag(
                format!("player {i}"),
                "infeasible: empty degree set",
            ));
        } else if d.clamped(n).is_empty() {
            out.push(diag(
                format!("player {i}"),
                format!("infeasible: degree set empty after clamping to 0..{}", n - 1),
            ));
        }
    }
    out
}

/// [`validate`] plus the interval requirement of the polynomial solvers.
pub fn validate_for_interval_solver(inst: &DesignInstance) -> Vec<Diagnostic> {
    let n = inst.n();
    let mut out = validate(inst);
    for (i, d) in inst.degsets.iter().enumerate() {
        if !d.clamped(n).is_interval() {
            out.push(diag(format!("player {i}"), "non-interval degree set"));
        }
    }
    out
}

// ============================================================
// Solutions
// ============================================================

/// An edge modification plus the investing set it supports.
///
/// Serialized form is exactly these four fields; the final edge set is
/// recomputed against the instance's original edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Solution {
    pub added: BTreeSet<(usize, usize)>,
    pub removed: BTreeSet<(usize, usize)>,
    pub investing: Vec<usize>,
    #[serde(with = "rat_string")]
    pub cost: Rat,
}

impl Solution {
    /// `E = E' ∪ added ∖ removed`.
    pub fn final_edges(&self, original: &Graph) -> Graph {
        let mut g = original.clone();
        for &(i, j) in &self.removed {
            g.remove_edge(i, j);
        }
        for &(i, j) in &self.added {
            g.insert_edge(i, j);
        }
        g
    }

    pub fn profile(&self, n: usize) -> Result<StrategyProfile, GameError> {
        StrategyProfile::from_investing(n, self.investing.iter().copied())
    }
}

/// Itemized verification outcome; empty `failures` means the solution is
/// accepted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub failures: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "ok")
        } else {
            for (k, failure) in self.failures.iter().enumerate() {
                if k > 0 {
                    writeln!(f)?;
                }
                write!(f, "{failure}")?;
            }
            Ok(())
        }
    }
}

/// Checks a claimed solution: recomputed cost matches and fits the budget,
/// every player's investing-neighbor count lands inside (investors) or
/// outside (non-investors) their degree set, and the investing set belongs
/// to the target class.
pub fn verify_solution(inst: &DesignInstance, sol: &Solution) -> VerifyReport {
    let n = inst.n();
    let mut failures = Vec::new();

    let mut structurally_sound = true;
    let mut check_pairs = |pairs: &BTreeSet<(usize, usize)>, label: &str, want_present: bool| {
        for &(i, j) in pairs {
            if i == j || i >= n || j >= n {
                failures.push(format!("{label} pair ({i},{j}) out of range"));
                structurally_sound = false;
            } else if inst.graph.has_edge(i, j) != want_present {
                let state = if want_present { "absent" } else { "already present" };
                failures.push(format!("{label} pair ({i},{j}) is {state} in the instance"));
            }
        }
    };
    check_pairs(&sol.added, "added", false);
    check_pairs(&sol.removed, "removed", true);
    if !structurally_sound {
        return VerifyReport { failures };
    }
    if let Some(&p) = sol.added.intersection(&sol.removed).next() {
        failures.push(format!("pair ({},{}) both added and removed", p.0, p.1));
        return VerifyReport { failures };
    }
    for &i in &sol.investing {
        if i >= n {
            failures.push(format!("investing player {i} out of range"));
            return VerifyReport { failures };
        }
    }

    let recomputed: Cost = sol
        .added
        .iter()
        .chain(sol.removed.iter())
        .map(|&(i, j)| inst.costs.cost(i, j))
        .sum();
    match recomputed.finite() {
        None => failures.push("modification toggles a prohibited (inf-cost) pair".into()),
        Some(total) => {
            if total != sol.cost {
                failures.push(format!(
                    "cost mismatch: claimed {}, recomputed {total}",
                    sol.cost
                ));
            }
            if Cost::Finite(total) > inst.budget {
                failures.push(format!(
                    "cost {total} exceeds budget {}",
                    inst.budget
                ));
            }
        }
    }

    let final_graph = sol.final_edges(&inst.graph);
    let profile = match sol.profile(n) {
        Ok(p) => p,
        Err(e) => {
            failures.push(e.to_string());
            return VerifyReport { failures };
        }
    };
    for i in 0..n {
        let count = crate::game::neighbor_investors(&final_graph, &profile, i);
        let inside = inst.degsets[i].contains(count);
        if profile.invests(i) && !inside {
            failures.push(format!(
                "investor {i} has count {count} outside its degree set"
            ));
        } else if !profile.invests(i) && inside {
            failures.push(format!(
                "non-investor {i} has count {count} inside its degree set"
            ));
        }
    }

    let investing = profile.investing_set();
    if !inst.target.admits(&investing, n) {
        failures.push("investing set does not belong to the target class".into());
    }

    VerifyReport { failures }
}

// ============================================================
// JSON formats
// ============================================================

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum DegreeSetDoc {
    Members(Vec<usize>),
    Interval { interval: [usize; 2] },
}

#[derive(Serialize, Deserialize)]
struct UtilityDoc {
    values: Vec<String>,
    invest_cost: String,
}

#[derive(Serialize, Deserialize)]
struct InstanceDoc {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    degree_sets: Option<Vec<DegreeSetDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    utilities: Option<Vec<UtilityDoc>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    costs: Vec<(usize, usize, Cost)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    default_add: Option<Cost>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    default_remove: Option<Cost>,
    budget: Cost,
    target: TargetClass,
}

/// Parses the JSON instance format.
///
/// Degree sets come either from `degree_sets` (arrays or
/// `{"interval":[L,R]}`) or are derived from `utilities` (tables of `n+1`
/// `"p/q"` values plus `invest_cost`); when both are present they must
/// agree. Pair costs default to `default_add`/`default_remove` (1 each)
/// by edge presence, overridden by sparse `costs` entries.
pub fn read_instance(text: &str) -> Result<DesignInstance, InstanceError> {
    let doc: InstanceDoc =
        serde_json::from_str(text).map_err(|e| InstanceError::Parse(e.to_string()))?;
    let n = doc.n;

    for &(i, j) in &doc.edges {
        if i == j {
            return Err(InstanceError::Parse(format!("loop edge ({i},{i})")));
        }
    }
    let graph = Graph::with_edges(n, doc.edges.iter().copied())?;

    let explicit: Option<Vec<DegreeSet>> = doc.degree_sets.map(|docs| {
        docs.into_iter()
            .map(|d| match d {
                DegreeSetDoc::Members(m) => DegreeSet::new(m),
                DegreeSetDoc::Interval { interval: [lo, hi] } => DegreeSet::interval(lo, hi),
            })
            .collect()
    });
    let derived: Option<Vec<DegreeSet>> = match doc.utilities {
        None => None,
        Some(tables) => {
            if tables.len() != n {
                return Err(InstanceError::Invalid(format!(
                    "{} utility tables for {n} players",
                    tables.len()
                )));
            }
            let mut out = Vec::with_capacity(n);
            for (i, t) in tables.into_iter().enumerate() {
                if t.values.len() != n + 1 {
                    return Err(InstanceError::Invalid(format!(
                        "utility table for player {i} must list {} values g(0..={n})",
                        n + 1
                    )));
                }
                let values = t
                    .values
                    .iter()
                    .map(|s| parse_rat(s))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| InstanceError::Parse(e.to_string()))?;
                let cost =
                    parse_rat(&t.invest_cost).map_err(|e| InstanceError::Parse(e.to_string()))?;
                let table = UtilityTable::new(values, cost)?;
                out.push(table.derive_degree_set());
            }
            Some(out)
        }
    };
    let degsets = match (explicit, derived) {
        (Some(e), Some(d)) => {
            if e != d {
                let player = e.iter().zip(&d).position(|(a, b)| a != b).unwrap_or(0);
                return Err(InstanceError::Invalid(format!(
                    "degree_sets disagree with utilities at player {player}"
                )));
            }
            e
        }
        (Some(e), None) => e,
        (None, Some(d)) => d,
        (None, None) => {
            return Err(InstanceError::Invalid(
                "one of degree_sets or utilities is required".into(),
            ))
        }
    };
    if degsets.len() != n {
        return Err(InstanceError::Invalid(format!(
            "{} degree sets for {n} players",
            degsets.len()
        )));
    }

    let one = Cost::from_int(1);
    let costs = CostMatrix::with_defaults(
        n,
        graph.edge_set(),
        doc.default_add.unwrap_or(one),
        doc.default_remove.unwrap_or(one),
        doc.costs,
    )?;

    DesignInstance::new(graph, degsets, costs, doc.budget, doc.target)
}

/// Canonical writer: sorted edges, explicit sorted degree-set members, and
/// every pair's cost listed, so the output is byte-deterministic and
/// re-reads to an equal instance.
pub fn write_instance(inst: &DesignInstance) -> String {
    let doc = InstanceDoc {
        n: inst.n(),
        edges: inst.graph.edges().collect(),
        degree_sets: Some(
            inst.degsets
                .iter()
                .map(|d| DegreeSetDoc::Members(d.iter().collect()))
                .collect(),
        ),
        utilities: None,
        costs: inst.costs.iter().collect(),
        default_add: None,
        default_remove: None,
        budget: inst.budget,
        target: inst.target.clone(),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("instance serializes");
    text.push('\n');
    text
}

pub fn read_solution(text: &str) -> Result<Solution, InstanceError> {
    serde_json::from_str(text).map_err(|e| InstanceError::Parse(e.to_string()))
}

pub fn write_solution(sol: &Solution) -> String {
    let mut text = serde_json::to_string_pretty(sol).expect("solution serializes");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_costs(n: usize) -> CostMatrix {
        CostMatrix::uniform(n, Cost::from_int(1))
    }

    fn two_isolated_nodes() -> DesignInstance {
        DesignInstance::new(
            Graph::new(2),
            vec![DegreeSet::new([1]), DegreeSet::new([1])],
            unit_costs(2),
            Cost::from_int(1),
            TargetClass::All,
        )
        .unwrap()
    }

    #[test]
    fn verify_accepts_the_single_edge_fix() {
        let inst = two_isolated_nodes();
        let sol = Solution {
            added: [(0, 1)].into(),
            removed: BTreeSet::new(),
            investing: vec![0, 1],
            cost: Rat::from_integer(1),
        };
        let report = verify_solution(&inst, &sol);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn verify_rejects_empty_modification_when_counts_miss() {
        let inst = two_isolated_nodes();
        let sol = Solution {
            added: BTreeSet::new(),
            removed: BTreeSet::new(),
            investing: vec![0, 1],
            cost: Rat::from_integer(0),
        };
        let report = verify_solution(&inst, &sol);
        assert!(!report.passed());
        assert_eq!(report.failures.len(), 2);
    }

    #[test]
    fn verify_flags_cost_mismatch() {
        let inst = two_isolated_nodes();
        let sol = Solution {
            added: [(0, 1)].into(),
            removed: BTreeSet::new(),
            investing: vec![0, 1],
            cost: Rat::from_integer(7),
        };
        let report = verify_solution(&inst, &sol);
        assert!(report
            .failures
            .iter()
            .any(|f| f.contains("cost mismatch")));
    }

    #[test]
    fn verify_flags_prohibited_toggles_and_budget() {
        let mut inst = two_isolated_nodes();
        inst.costs.set(0, 1, Cost::Infinite);
        let sol = Solution {
            added: [(0, 1)].into(),
            removed: BTreeSet::new(),
            investing: vec![0, 1],
            cost: Rat::from_integer(1),
        };
        assert!(verify_solution(&inst, &sol)
            .failures
            .iter()
            .any(|f| f.contains("prohibited")));

        let mut inst = two_isolated_nodes();
        inst.budget = Cost::ZERO;
        let sol = Solution {
            added: [(0, 1)].into(),
            removed: BTreeSet::new(),
            investing: vec![0, 1],
            cost: Rat::from_integer(1),
        };
        assert!(verify_solution(&inst, &sol)
            .failures
            .iter()
            .any(|f| f.contains("exceeds budget")));
    }

    #[test]
    fn target_membership() {
        let all = TargetClass::All;
        assert!(all.admits(&[0, 1, 2], 3));
        assert!(!all.admits(&[0, 1], 3));

        let exact = TargetClass::ExactSet([1, 2].into());
        assert!(exact.admits(&[1, 2], 4));
        assert!(!exact.admits(&[1, 2, 3], 4));

        let superset = TargetClass::SupersetOf([1].into());
        assert!(superset.admits(&[0, 1], 4));
        assert!(!superset.admits(&[0, 2], 4));
        assert!(TargetClass::SupersetOf(BTreeSet::new()).admits(&[], 4));

        let atleast = TargetClass::AtLeast(2);
        assert!(atleast.admits(&[0, 3], 4));
        assert!(!atleast.admits(&[3], 4));
    }

    #[test]
    fn validate_flags_empty_and_non_interval_sets() {
        let inst = DesignInstance::new(
            Graph::new(3),
            vec![
                DegreeSet::new([]),
                DegreeSet::new([0, 2]),
                DegreeSet::new([1]),
            ],
            unit_costs(3),
            Cost::Infinite,
            TargetClass::All,
        )
        .unwrap();
        let base = validate(&inst);
        assert_eq!(base.len(), 1);
        assert!(base[0].message.contains("empty degree set"));

        let strict = validate_for_interval_solver(&inst);
        assert!(strict
            .iter()
            .any(|d| d.message.contains("non-interval degree set")));
    }

    #[test]
    fn cost_matrix_is_symmetric_and_dense() {
        let cm = CostMatrix::with_defaults(
            4,
            Graph::with_edges(4, [(0, 1)]).unwrap().edge_set(),
            Cost::from_int(1),
            Cost::from_int(2),
            [(2, 1, Cost::Infinite)],
        )
        .unwrap();
        assert_eq!(cm.cost(1, 2), Cost::Infinite);
        assert_eq!(cm.cost(2, 1), Cost::Infinite);
        assert_eq!(cm.cost(0, 1), Cost::from_int(2)); // present pair
        assert_eq!(cm.cost(0, 3), Cost::from_int(1)); // absent pair
        assert_eq!(cm.iter().count(), 6);
    }

    #[test]
    fn duplicate_cost_entries_rejected() {
        let result = CostMatrix::with_defaults(
            3,
            &BTreeSet::new(),
            Cost::from_int(1),
            Cost::from_int(1),
            [(0, 1, Cost::ZERO), (1, 0, Cost::from_int(2))],
        );
        assert!(result.is_err());
    }

    #[test]
    fn instance_json_round_trip() {
        let text = r#"{
            "n": 3,
            "edges": [[0, 1]],
            "degree_sets": [[0, 1], {"interval": [1, 2]}, [2]],
            "costs": [[0, 2, "3/2"], [1, 2, "inf"]],
            "default_remove": "2",
            "budget": "3/2",
            "target": {"exact_set": [0, 2]}
        }"#;
        let inst = read_instance(text).unwrap();
        assert_eq!(inst.n(), 3);
        assert_eq!(inst.degsets[1], DegreeSet::interval(1, 2));
        assert_eq!(inst.costs.cost(0, 2), Cost::Finite(Rat::new(3, 2)));
        assert_eq!(inst.costs.cost(1, 2), Cost::Infinite);
        assert_eq!(inst.costs.cost(0, 1), Cost::from_int(2));
        assert_eq!(inst.budget, Cost::Finite(Rat::new(3, 2)));
        assert_eq!(inst.target, TargetClass::ExactSet([0, 2].into()));

        let written = write_instance(&inst);
        let reread = read_instance(&written).unwrap();
        assert_eq!(reread, inst);
        assert_eq!(write_instance(&reread), written);
    }

    #[test]
    fn utilities_derive_degree_sets_at_load() {
        let text = r#"{
            "n": 2,
            "edges": [],
            "utilities": [
                {"values": ["0", "2", "2"], "invest_cost": "1"},
                {"values": ["0", "0", "2"], "invest_cost": "1"}
            ],
            "budget": "inf",
            "target": "all"
        }"#;
        let inst = read_instance(text).unwrap();
        assert_eq!(inst.degsets[0], DegreeSet::new([0]));
        assert_eq!(inst.degsets[1], DegreeSet::new([1]));
    }

    #[test]
    fn utilities_conflicting_with_degree_sets_error() {
        let text = r#"{
            "n": 2,
            "edges": [],
            "degree_sets": [[1], [1]],
            "utilities": [
                {"values": ["0", "2", "2"], "invest_cost": "1"},
                {"values": ["0", "0", "2"], "invest_cost": "1"}
            ],
            "budget": "inf",
            "target": "all"
        }"#;
        let err = read_instance(text).unwrap_err();
        assert!(err.to_string().contains("disagree"));
    }

    #[test]
    fn loop_edges_are_parse_errors() {
        let text = r#"{
            "n": 2,
            "edges": [[1, 1]],
            "degree_sets": [[0], [0]],
            "budget": "0",
            "target": "all"
        }"#;
        assert!(matches!(
            read_instance(text),
            Err(InstanceError::Parse(msg)) if msg.contains("loop")
        ));
    }

    #[test]
    fn solution_json_round_trip() {
        let sol = Solution {
            added: [(0, 2)].into(),
            removed: [(1, 2)].into(),
            investing: vec![0, 1],
            cost: Rat::new(5, 2),
        };
        let text = write_solution(&sol);
        assert_eq!(read_solution(&text).unwrap(), sol);
        assert!(text.contains("\"5/2\""));
    }

    #[test]
    fn target_bounds_checked() {
        let bad = DesignInstance::new(
            Graph::new(2),
            vec![DegreeSet::new([0]); 2],
            unit_costs(2),
            Cost::ZERO,
            TargetClass::AtLeast(3),
        );
        assert!(bad.is_err());
    }
}
