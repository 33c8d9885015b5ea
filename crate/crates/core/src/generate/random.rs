use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{BpdError, Result};
use crate::graph::{Color, ColoredGraph};

fn check_prob(name: &str, p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(BpdError::Precondition(format!("{name} = {p} is not a probability")))
    }
}

/// Each vertex pair becomes an edge with probability `edge_prob`; each edge is
/// blue with probability `blue_prob`. Deterministic in `seed`.
pub fn random_instance(n: usize, edge_prob: f64, blue_prob: f64, seed: u64) -> Result<ColoredGraph> {
    check_prob("edge_prob", edge_prob)?;
    check_prob("blue_prob", blue_prob)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(edge_prob) {
                let c = if rng.gen_bool(blue_prob) { Color::Blue } else { Color::Red };
                edges.push((u, v, c));
            }
        }
    }
    ColoredGraph::from_edges(n, edges)
}

/// Like [`random_instance`], but pairs are visited in random order and an edge
/// is only added while both endpoints have degree below `max_degree`.
pub fn random_bounded_degree(
    n: usize,
    edge_prob: f64,
    blue_prob: f64,
    max_degree: usize,
    seed: u64,
) -> Result<ColoredGraph> {
    check_prob("edge_prob", edge_prob)?;
    check_prob("blue_prob", blue_prob)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(&mut rng);
    let mut deg = vec![0usize; n];
    let mut edges = Vec::new();
    for (u, v) in pairs {
        if deg[u] < max_degree && deg[v] < max_degree && rng.gen_bool(edge_prob) {
            let c = if rng.gen_bool(blue_prob) { Color::Blue } else { Color::Red };
            edges.push((u, v, c));
            deg[u] += 1;
            deg[v] += 1;
        }
    }
    ColoredGraph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detect;

    #[test]
    fn examples() {
        assert_eq!(random_instance(8, 0.0, 0.5, 1).unwrap().m(), 0);
        let mono = random_instance(8, 0.7, 1.0, 2).unwrap();
        assert_eq!(mono.m_red(), 0);
        assert!(detect::is_p3_free(&mono));
        assert_eq!(random_instance(9, 0.4, 0.5, 3).unwrap(), random_instance(9, 0.4, 0.5, 3).unwrap());
        assert!(random_instance(3, 1.5, 0.5, 0).is_err());
    }

    #[test]
    fn degree_cap() {
        for seed in 0..20 {
            assert!(random_bounded_degree(12, 0.8, 0.5, 3, seed).unwrap().max_degree() <= 3);
        }
    }
}
