//! Locate bicolored P3s, the branching patterns and the graph classes of each gadget.
//!
//!     cargo run --example detect_structures

use bpd::detect::{self, StructureKind};
use bpd::generate::{gadget, GadgetKind};

fn main() -> bpd::Result<()> {
    let kinds = ["variable", "clause", "lc", "lo", "iiz", "hourglass", "alternating_cycle:6"];
    for name in kinds {
        let kind: GadgetKind = name.parse()?;
        let g = gadget(kind)?;
        let flags = detect::classify(&g);
        println!(
            "{name:>20}: n={:<2} m={:<2} p3={:<3} nice={:<5} {:?}",
            g.n(),
            g.m(),
            detect::count_bicolored_p3(&g),
            detect::is_nice(&g),
            flags
        );
        for k in detect::BRANCH_ORDER {
            if let Some(s) = detect::first_pattern(&g, k) {
                println!("{:>24} {} at {:?}", "", k.name(), s.witness);
            }
        }
    }

    let hourglass = gadget(GadgetKind::Hourglass)?;
    let s = detect::find_branch_structure(&hourglass).unwrap();
    assert_eq!(s.kind, StructureKind::CCHourglass);
    println!("hourglass edges: {:?}", s.edges);
    Ok(())
}
