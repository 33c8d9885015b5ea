//! Reduce random (3,4)-formulas and compare satisfiability with the solver's answer
//! at the reduction budget and one below it.
//!
//!     cargo run --release --example sat_reduction [count]

use bpd::generate::{random_formula, reduce_sat_to_bpd, sat_brute_force};
use bpd::solve::AutoConfig;
use bpd::{solve_auto, Mode};

fn main() -> bpd::Result<()> {
    let count: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    println!("{:>4} {:>3} {:>3} {:>4} {:>5} {:>4} {:>6} {:>9}", "seed", "X", "C", "n", "m", "k", "sat", "yes/k-1");
    for seed in 0..count {
        let vars = 3 + (seed % 8) as usize;
        let clauses = (1 + (seed as usize * 5) % 8).min(4 * vars / 3);
        let Some(f) = random_formula(vars, clauses, seed) else { continue };
        let (inst, _) = reduce_sat_to_bpd(&f)?;
        let at_k = solve_auto(&inst.graph, Mode::Decide(inst.k), &AutoConfig::default())?;
        let below = solve_auto(&inst.graph, Mode::Decide(inst.k - 1), &AutoConfig::default())?;
        let sat = sat_brute_force(&f);
        assert_eq!(sat, at_k.answer);
        println!(
            "{seed:>4} {vars:>3} {clauses:>3} {:>4} {:>5} {:>4} {:>6} {:>5}/{}",
            inst.graph.n(),
            inst.graph.m(),
            inst.k,
            sat,
            at_k.answer,
            below.answer
        );
    }
    Ok(())
}
