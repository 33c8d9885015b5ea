//! The polynomial-time solvers next to the exhaustive oracle.
//!
//!     cargo run --example special_cases

use bpd::generate::{gadget, GadgetKind};
use bpd::solve::{oracle_min_deletions, solve_degree_two, solve_endangered_free, solve_mono_free};
use bpd::{Color, ColoredGraph, Mode};

fn main() -> bpd::Result<()> {
    for len in (4..=12).step_by(2) {
        let c = gadget(GadgetKind::AlternatingCycle(len))?;
        let r = solve_degree_two(&c, Mode::Optimize)?;
        println!("alternating cycle {len:>2}: optimum {}", r.optimum.unwrap());
    }

    // The variable gadget has no bicolored triangle at all.
    let var = gadget(GadgetKind::Variable)?;
    let vc = solve_endangered_free(&var, Mode::Optimize)?;
    println!("variable gadget via vertex cover: {}", vc.optimum.unwrap());

    // Triangle with a pendant path: no monochromatic P3 or K3.
    let paw = ColoredGraph::from_edges(
        7,
        [
            (0, 1, Color::Red),
            (0, 2, Color::Red),
            (1, 2, Color::Blue),
            (0, 3, Color::Blue),
            (3, 4, Color::Red),
            (4, 5, Color::Blue),
            (5, 6, Color::Red),
        ],
    )?;
    let mf = solve_mono_free(&paw, Mode::Optimize)?;
    let oracle = oracle_min_deletions(&paw, None);
    println!("paw with tail: mono-free solver {}, oracle {}", mf.optimum.unwrap(), oracle.optimum.unwrap());

    // Preconditions are checked, not assumed.
    let clause = gadget(GadgetKind::Clause)?;
    match solve_endangered_free(&clause, Mode::Optimize) {
        Err(e) => println!("clause gadget: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
