//! Exact solvers.
//!
//! Every solver returns a [`SolveResult`]. A `yes` answer always carries a
//! [`DeletionSet`] that has been verified against the input graph before the
//! result is handed back.

mod auto;
mod bound;
mod branching;
mod degree_two;
mod mono_free;
mod nice;
mod oracle;
mod vertex_cover;

use std::collections::BTreeMap;
use std::time::Duration;

use serde::Serialize;

use crate::detect;
use crate::error::{BpdError, Result};
use crate::graph::{ColoredGraph, Edge};

pub use auto::{solve_auto, solve_with, AutoConfig, MethodChoice};
pub use branching::{solve_branching, BranchConfig, BRANCHING_FACTOR};
pub use degree_two::solve_degree_two;
pub use mono_free::solve_mono_free;
pub use nice::{nice_witness, solve_nice};
pub use oracle::{oracle_min_deletions, solve_oracle, OracleResult};
pub use vertex_cover::{
    bipartite_min_vertex_cover, build_conflict_graph, max_packing_bound, maximum_matching, solve_endangered_free,
    ConflictGraph,
};

/// A set of edges to delete, kept sorted and duplicate-free.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DeletionSet {
    pub edges: Vec<Edge>,
}

impl DeletionSet {
    pub fn new(mut edges: Vec<Edge>) -> DeletionSet {
        edges.sort_unstable();
        edges.dedup();
        DeletionSet { edges }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(Edge::pair).collect()
    }

    /// Checks that every member is an edge of `g` (same color), that `G - S` is
    /// bicolored-P3-free and that `|S| <= k`.
    pub fn verify(&self, g: &ColoredGraph, k: i64) -> Result<()> {
        let rest = g.delete_edge_set(&self.edges)?;
        if let Some(p) = detect::enumerate_bicolored_p3(&rest).first() {
            return Err(BpdError::Precondition(format!(
                "G - S still contains the bicolored P3 {:?}",
                p.witness
            )));
        }
        if self.len() as i64 > k {
            return Err(BpdError::Precondition(format!(
                "deletion set has {} edges, budget is {k}",
                self.len()
            )));
        }
        Ok(())
    }

    pub fn is_solution(&self, g: &ColoredGraph, k: i64) -> bool {
        self.verify(g, k).is_ok()
    }
}

/// Decision with a budget, or minimization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Decide(i64),
    Optimize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Method {
    #[serde(rename = "kernel-only")]
    KernelOnly,
    #[serde(rename = "branch")]
    Branch,
    #[serde(rename = "nice")]
    Nice,
    #[serde(rename = "vc")]
    VertexCover,
    #[serde(rename = "deg2")]
    DegreeTwo,
    #[serde(rename = "monofree")]
    MonoFree,
    #[serde(rename = "oracle")]
    Oracle,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::KernelOnly => "kernel-only",
            Method::Branch => "branch",
            Method::Nice => "nice",
            Method::VertexCover => "vc",
            Method::DegreeTwo => "deg2",
            Method::MonoFree => "monofree",
            Method::Oracle => "oracle",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct SearchStats {
    pub nodes_expanded: u64,
    pub max_depth: usize,
    /// Applications per branching rule (`br1`, `br2`, `br3`) plus leaf counters.
    pub rule_counts: BTreeMap<String, u64>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl SearchStats {
    pub fn time_ms(&self) -> f64 {
        self.wall_time.as_secs_f64() * 1e3
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SolveResult {
    pub answer: bool,
    /// Budget of the decision run; `None` in optimization mode.
    pub k: Option<i64>,
    pub solution: Option<DeletionSet>,
    pub optimum: Option<usize>,
    pub stats: SearchStats,
    pub method: Method,
}

impl SolveResult {
    /// Builds a result from an exact optimum and a witness of that size.
    pub(crate) fn from_optimum(
        g: &ColoredGraph,
        mode: Mode,
        optimum: usize,
        witness: DeletionSet,
        stats: SearchStats,
        method: Method,
    ) -> Result<SolveResult> {
        debug_assert_eq!(witness.len(), optimum);
        let (answer, k) = match mode {
            Mode::Decide(k) => (optimum as i64 <= k, Some(k)),
            Mode::Optimize => (true, None),
        };
        let res = SolveResult {
            answer,
            k,
            solution: answer.then_some(witness),
            optimum: matches!(mode, Mode::Optimize).then_some(optimum),
            stats,
            method,
        };
        res.check(g)?;
        Ok(res)
    }

    /// Soundness check run on every result: a `yes` must carry a verifying set.
    pub(crate) fn check(&self, g: &ColoredGraph) -> Result<()> {
        if !self.answer {
            return Ok(());
        }
        let sol = self
            .solution
            .as_ref()
            .ok_or_else(|| BpdError::Internal("yes answer without a deletion set".into()))?;
        let budget = self.k.unwrap_or(i64::MAX);
        sol.verify(g, budget)
            .map_err(|e| BpdError::Internal(format!("{} produced an invalid solution: {e}", self.method.name())))?;
        if let Some(opt) = self.optimum {
            if opt != sol.len() {
                return Err(BpdError::Internal(format!(
                    "optimum {opt} disagrees with witness size {}",
                    sol.len()
                )));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Color::{Blue, Red};

    #[test]
    fn verify_checks_all_three_conditions() {
        let g = ColoredGraph::from_edges(3, [(0, 1, Blue), (1, 2, Red)]).unwrap();
        assert!(DeletionSet::new(vec![Edge::new(0, 1, Blue)]).is_solution(&g, 1));
        assert!(!DeletionSet::new(vec![Edge::new(0, 1, Blue)]).is_solution(&g, 0));
        assert!(!DeletionSet::default().is_solution(&g, 1));
        assert!(!DeletionSet::new(vec![Edge::new(0, 2, Blue)]).is_solution(&g, 1));
    }
}
