//! Kernelize a bounded-degree random instance, solve the kernel, lift the
//! solution back and replay the trace.
//!
//!     cargo run --example kernelize [seed]

use bpd::generate::random_bounded_degree;
use bpd::kernel::replay;
use bpd::solve::{solve_branching, AutoConfig, BranchConfig};
use bpd::{kernelize, lift_solution, solve_auto, Instance, Mode};

fn main() -> bpd::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    let g = random_bounded_degree(60, 0.06, 0.5, 4, seed)?;
    // Budget at the optimum, so the answer is yes.
    let opt = solve_auto(&g, Mode::Optimize, &AutoConfig::default())?.optimum.unwrap();
    let inst = Instance::new(g, opt as i64);
    let (kernel, trace) = kernelize(&inst);

    println!("input:  n={} m={} k={}", inst.graph.n(), inst.graph.m(), inst.k);
    println!("kernel: n={} m={} k={}", kernel.graph.n(), kernel.graph.m(), kernel.k);
    for step in &trace.steps {
        println!("  {}", serde_json::to_string(step).unwrap());
    }
    if let Some(b) = trace.bound {
        println!("size bound {} (holds: {})", b.bound, b.holds);
    }
    assert_eq!(replay(&inst, &trace)?, kernel);

    if kernel.is_no_instance() {
        println!("no-instance");
        return Ok(());
    }
    let r = solve_branching(&kernel.graph, Mode::Decide(kernel.k), &BranchConfig::default())?;
    match r.solution {
        Some(s) => {
            let lifted = lift_solution(&trace, &s)?;
            lifted.verify(&inst.graph, inst.k)?;
            println!("yes: {} deletions in the kernel, {} after lifting", s.len(), lifted.len());
        }
        None => println!("no"),
    }
    Ok(())
}
