//! Build a small graph, solve it, and check the answer.
//!
//!     cargo run --example quickstart

use bpd::format::{parse_bpd, write_bpd};
use bpd::solve::AutoConfig;
use bpd::{solve_auto, Color, ColoredGraph, Mode};

fn main() -> bpd::Result<()> {
    // A blue path 0-1-2 with a red edge hanging off 2, and a red triangle on 3, 4, 5
    // touching it through a blue edge.
    let g = ColoredGraph::from_edges(
        6,
        [
            (0, 1, Color::Blue),
            (1, 2, Color::Blue),
            (2, 3, Color::Red),
            (3, 4, Color::Red),
            (4, 5, Color::Red),
            (3, 5, Color::Red),
            (2, 5, Color::Blue),
        ],
    )?;
    print!("{}", write_bpd(&g));
    assert_eq!(parse_bpd(&write_bpd(&g))?, g);

    let best = solve_auto(&g, Mode::Optimize, &AutoConfig::default())?;
    let sol = best.solution.as_ref().unwrap();
    println!("optimum {} via {}", sol.len(), best.method.name());
    for e in &sol.edges {
        println!("  delete {{{}, {}}} ({:?})", e.u, e.v, e.color);
    }

    let opt = best.optimum.unwrap() as i64;
    for k in [opt - 1, opt] {
        let r = solve_auto(&g, Mode::Decide(k), &AutoConfig::default())?;
        println!("k = {k}: {}", if r.answer { "yes" } else { "no" });
    }
    sol.verify(&g, opt)?;
    Ok(())
}
