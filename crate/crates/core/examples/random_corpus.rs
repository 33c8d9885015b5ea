//! Write a seeded corpus of random instances to a directory, ready for
//! `bpd bench --corpus <dir>`.
//!
//!     cargo run --example random_corpus -- <dir> [count] [seed]

use std::path::PathBuf;

use bpd::format::write_bpd;
use bpd::generate::random_instance;
use bpd::solve::oracle_min_deletions;

fn main() -> bpd::Result<()> {
    let mut args = std::env::args().skip(1);
    let dir = PathBuf::from(args.next().unwrap_or_else(|| "corpus".into()));
    let count: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(20);
    let seed: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(0);
    std::fs::create_dir_all(&dir)?;
    for i in 0..count {
        let n = 6 + (i % 4) as usize;
        let g = random_instance(n, 0.5, 0.5, seed + i)?;
        let opt = oracle_min_deletions(&g, None).optimum.unwrap();
        let path = dir.join(format!("random_{i:03}.bpd"));
        std::fs::write(&path, format!("# optimum {opt}\n{}", write_bpd(&g)))?;
        println!("{} n={n} m={} optimum={opt}", path.display(), g.m());
    }
    Ok(())
}
