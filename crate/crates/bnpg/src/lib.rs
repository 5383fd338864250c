//! Exact solvers for network design in binary networked public goods games.
//!
//! Players sit on the nodes of a simple undirected graph and choose whether
//! to invest in a public good. Player `i`'s utility is `g_i(x_i + n_i) -
//! c_i * x_i`, where `n_i` counts investing neighbors, `g_i` is non-negative
//! and non-decreasing, and ties are broken in favor of investing. Investing
//! is a best response exactly when the marginal gain `g_i(n_i + 1) -
//! g_i(n_i)` covers the cost `c_i`, which makes each player's behavior a
//! pure function of `n_i`: the *investment degree set* `D_i` collects the
//! neighbor counts at which `i` invests.
//!
//! The design problem: given a starting graph, per-player degree sets (or
//! utility tables), symmetric edge add/remove costs (possibly 0 or `inf`),
//! and a budget, edit the edge set at minimum cost so that a prescribed
//! class of investing sets (`all`, `= S`, `⊇ S`, `≥ r` players) contains a
//! pure-strategy Nash equilibrium of the edited game.
//!
//! What lives where:
//!
//! - [`game`]: utility tables, degree sets, best responses, equilibrium
//!   checking and enumeration.
//! - [`instance`]: the design-problem instance (graph, degree sets, cost
//!   matrix, budget, target class), validation, solution verification, and
//!   the canonical JSON formats.
//! - [`matching`]: exact minimum-cost perfect matching on general graphs
//!   (blossom algorithm) plus a brute-force oracle.
//! - [`gadget`]: the degree-interval matching gadget that reduces the
//!   `all`-target design problem to minimum-cost perfect matching, with
//!   modification extraction and a forward encoder.
//! - [`solver`]: top-level solvers — polynomial routes for `all` and `= S`
//!   under interval degree sets, a unit-cost fast path for threshold
//!   (upward-closed) sets, an exhaustive oracle for everything else, and
//!   the dispatching `solve`.
//! - [`reductions`]: generators that turn Independent Set, k-Clique, and
//!   Vertex Cover inputs into design instances, plus witness reconstruction.
//!
//! Runnable examples (`cargo run -p bnpg --example <name>`):
//!
//! - `degree_sets` — derive degree sets from utility tables and back.
//! - `equilibria` — enumerate pure equilibria of best-shot games.
//! - `design_all` — make every player invest via the matching gadget.
//! - `design_exact_set` — two-phase solve for an exact investing set.
//! - `matching_demo` — minimum-cost perfect matching directly.
//! - `fast_path` — unit-cost threshold fast path vs. the general solver.
//! - `hardness_instances` — reduction generators and witness extraction.
//!
//! The `bnpg` binary wraps the same functionality as `solve`, `verify`,
//! `psne`, and `generate` subcommands over JSON files.

pub mod game;
pub mod gadget;
pub mod instance;
pub mod matching;
pub mod rational;
pub mod reductions;
pub mod solver;

pub use game::{DegreeSet, Graph, Shape, StrategyProfile, UtilityTable};
pub use instance::{CostMatrix, DesignInstance, Solution, TargetClass};
pub use rational::{Cost, Rat};
pub use solver::{solve, SolveOutcome, SolveStatus, SolverRoute};
