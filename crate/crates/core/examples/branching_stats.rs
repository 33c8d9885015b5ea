//! Search-tree statistics of the branching solver with and without pruning.
//!
//!     cargo run --release --example branching_stats

use bpd::generate::{gadget, random_instance, GadgetKind};
use bpd::solve::{solve_branching, BranchConfig, BRANCHING_FACTOR};
use bpd::{ColoredGraph, Mode};

fn report(name: &str, g: &ColoredGraph) -> bpd::Result<()> {
    let opt = solve_branching(g, Mode::Optimize, &BranchConfig::default())?.optimum.unwrap();
    for (label, cfg) in [("plain", BranchConfig::plain()), ("default", BranchConfig::default())] {
        let r = solve_branching(g, Mode::Decide(opt as i64), &cfg)?;
        println!(
            "{name:<16} {label:<8} k={opt:<3} nodes={:<7} 1.8393^k={:<10.1} depth={:<3} {:?}",
            r.stats.nodes_expanded,
            BRANCHING_FACTOR.powi(opt as i32),
            r.stats.max_depth,
            r.stats.rule_counts
        );
    }
    Ok(())
}

fn main() -> bpd::Result<()> {
    report("clause gadget", &gadget(GadgetKind::Clause)?)?;
    report("hourglass", &gadget(GadgetKind::Hourglass)?)?;
    for seed in 0..4 {
        report(&format!("random n=9 #{seed}"), &random_instance(9, 0.5, 0.5, seed)?)?;
    }
    let parallel = BranchConfig {
        parallel: true,
        ..BranchConfig::default()
    };
    let g = random_instance(12, 0.5, 0.5, 42)?;
    let r = solve_branching(&g, Mode::Optimize, &parallel)?;
    println!("parallel optimize on n=12: {} in {:.2} ms", r.optimum.unwrap(), r.stats.time_ms());
    Ok(())
}
