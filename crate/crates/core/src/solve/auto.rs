use std::str::FromStr;
use std::time::Instant;

use crate::detect;
use crate::error::{BpdError, Result};
use crate::graph::ColoredGraph;
use crate::kernel::{kernelize_with, lift_solution, Instance, KernelConfig};

use super::{
    solve_branching, solve_degree_two, solve_endangered_free, solve_mono_free, solve_oracle,
    BranchConfig, DeletionSet, Method, Mode, SearchStats, SolveResult,
};

/// Solver selection for [`solve_with`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MethodChoice {
    #[default]
    Auto,
    Branch,
    Vc,
    Deg2,
    Monofree,
    Oracle,
}

impl FromStr for MethodChoice {
    type Err = BpdError;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "auto" => MethodChoice::Auto,
            "branch" => MethodChoice::Branch,
            "vc" => MethodChoice::Vc,
            "deg2" => MethodChoice::Deg2,
            "monofree" => MethodChoice::Monofree,
            "oracle" => MethodChoice::Oracle,
            other => return Err(BpdError::Precondition(format!("unknown method `{other}`"))),
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AutoConfig {
    pub branch: BranchConfig,
    pub kernel: KernelConfig,
}

pub fn solve_with(g: &ColoredGraph, mode: Mode, choice: MethodChoice, cfg: &AutoConfig) -> Result<SolveResult> {
    match choice {
        MethodChoice::Auto => solve_auto(g, mode, cfg),
        MethodChoice::Branch => solve_branching(g, mode, &cfg.branch),
        MethodChoice::Vc => solve_endangered_free(g, mode),
        MethodChoice::Deg2 => solve_degree_two(g, mode),
        MethodChoice::Monofree => solve_mono_free(g, mode),
        MethodChoice::Oracle => solve_oracle(g, mode),
    }
}

/// Kernelizes, then runs the cheapest exact method the kernel qualifies for,
/// and lifts the answer back to `g`.
///
/// Optimization on graphs outside the polynomial classes repeats the decision
/// pipeline for increasing budgets, starting at a packing lower bound.
pub fn solve_auto(g: &ColoredGraph, mode: Mode, cfg: &AutoConfig) -> Result<SolveResult> {
    match mode {
        Mode::Decide(k) => decide(g, k, cfg),
        Mode::Optimize => {
            let start = Instant::now();
            if let Some(res) = polynomial(g, mode) {
                return res;
            }
            let lb = super::max_packing_bound(g);
            let ub = g.m_red().min(g.m_blue());
            let mut stats = SearchStats::default();
            for k in lb..=ub {
                let r = decide(g, k as i64, cfg)?;
                merge(&mut stats, &r.stats);
                if r.answer {
                    stats.wall_time = start.elapsed();
                    let sol = r.solution.unwrap();
                    return SolveResult::from_optimum(g, mode, sol.len(), sol, stats, r.method);
                }
            }
            Err(BpdError::Internal(format!(
                "no solution within the smaller color class ({ub} edges)"
            )))
        }
    }
}

fn polynomial(g: &ColoredGraph, mode: Mode) -> Option<Result<SolveResult>> {
    let flags = detect::classify(g);
    if flags.mono_free {
        Some(solve_mono_free(g, mode))
    } else if flags.endangered_k3_free {
        Some(solve_endangered_free(g, mode))
    } else if flags.max_degree_le_2 {
        Some(solve_degree_two(g, mode))
    } else {
        None
    }
}

fn decide(g: &ColoredGraph, k: i64, cfg: &AutoConfig) -> Result<SolveResult> {
    let start = Instant::now();
    let (kernel, trace) = kernelize_with(&Instance::new(g.clone(), k), cfg.kernel);
    let kernel_only = |answer: bool, solution: Option<DeletionSet>| SolveResult {
        answer,
        k: Some(k),
        solution,
        optimum: None,
        stats: SearchStats {
            wall_time: start.elapsed(),
            ..SearchStats::default()
        },
        method: Method::KernelOnly,
    };

    let res = if kernel.is_no_instance() {
        kernel_only(false, None)
    } else if detect::is_p3_free(&kernel.graph) {
        kernel_only(true, Some(lift_solution(&trace, &DeletionSet::default())?))
    } else {
        let inner = match polynomial(&kernel.graph, Mode::Decide(kernel.k)) {
            Some(r) => r?,
            None => solve_branching(&kernel.graph, Mode::Decide(kernel.k), &cfg.branch)?,
        };
        let solution = match &inner.solution {
            Some(s) if inner.answer => Some(lift_solution(&trace, s)?),
            _ => None,
        };
        let mut stats = inner.stats;
        stats.wall_time = start.elapsed();
        SolveResult {
            answer: inner.answer,
            k: Some(k),
            solution,
            optimum: None,
            stats,
            method: inner.method,
        }
    };
    res.check(g)?;
    Ok(res)
}

fn merge(into: &mut SearchStats, from: &SearchStats) {
    into.nodes_expanded += from.nodes_expanded;
    into.max_depth = into.max_depth.max(from.max_depth);
    for (name, count) in &from.rule_counts {
        *into.rule_counts.entry(name.clone()).or_insert(0) += count;
    }
}
