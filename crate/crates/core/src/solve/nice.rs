use std::time::Instant;

use crate::detect;
use crate::error::{BpdError, Result};
use crate::graph::{Color, ColoredGraph, Edge};

use super::{DeletionSet, Method, Mode, SearchStats, SolveResult};

/// Solves a nice graph directly: its optimum equals its number of bicolored P3s.
pub fn solve_nice(g: &ColoredGraph, mode: Mode) -> Result<SolveResult> {
    let start = Instant::now();
    if !detect::is_nice(g) {
        return Err(BpdError::Precondition("graph is not nice".into()));
    }
    let p = detect::count_bicolored_p3(g);
    if let Mode::Decide(k) = mode {
        if p as i64 > k {
            let stats = SearchStats {
                wall_time: start.elapsed(),
                ..SearchStats::default()
            };
            return Ok(SolveResult {
                answer: false,
                k: Some(k),
                solution: None,
                optimum: None,
                stats,
                method: Method::Nice,
            });
        }
    }
    let witness = nice_witness(g)?;
    let stats = SearchStats {
        wall_time: start.elapsed(),
        ..SearchStats::default()
    };
    SolveResult::from_optimum(g, mode, p, DeletionSet::new(witness), stats, Method::Nice)
}

/// One edge per bicolored P3 of a nice graph, chosen so that every deletion
/// removes exactly one P3 and keeps the graph nice.
///
/// For the first remaining P3 the blue edge is tried first, then the red one.
pub fn nice_witness(g: &ColoredGraph) -> Result<Vec<Edge>> {
    let mut cur = g.clone();
    let mut p = detect::count_bicolored_p3(&cur);
    let mut out = Vec::with_capacity(p);
    while p > 0 {
        let first = detect::enumerate_bicolored_p3(&cur)
            .into_iter()
            .next()
            .expect("p > 0");
        let mut edges = first.edges.clone();
        edges.sort_by_key(|e| e.color != Color::Blue);
        let mut chosen = None;
        for e in edges {
            let next = cur.delete_edge_set(&[e])?;
            if detect::count_bicolored_p3(&next) == p - 1 && detect::is_nice(&next) {
                chosen = Some((e, next));
                break;
            }
        }
        let (e, next) = chosen.ok_or_else(|| {
            BpdError::Internal(format!(
                "no edge of the P3 {:?} removes exactly one P3",
                first.witness
            ))
        })?;
        out.push(e);
        cur = next;
        p -= 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Color::{Blue, Red};
    use crate::solve::oracle_min_deletions;

    #[test]
    fn alternating_path() {
        let g = ColoredGraph::from_edges(3, [(0, 1, Blue), (1, 2, Red)]).unwrap();
        let r = solve_nice(&g, Mode::Optimize).unwrap();
        assert_eq!(r.optimum, Some(1));
        assert_eq!(r.solution.unwrap().edges, vec![Edge::new(0, 1, Blue)]);
    }

    #[test]
    fn matches_oracle_on_disjoint_p3s() {
        let mut e = Vec::new();
        for i in 0..4 {
            e.push((3 * i, 3 * i + 1, Red));
            e.push((3 * i + 1, 3 * i + 2, Blue));
        }
        let g = ColoredGraph::from_edges(12, e).unwrap();
        let r = solve_nice(&g, Mode::Decide(4)).unwrap();
        assert!(r.answer);
        assert!(!solve_nice(&g, Mode::Decide(3)).unwrap().answer);
        assert_eq!(oracle_min_deletions(&g, None).optimum, Some(4));
    }

    #[test]
    fn rejects_non_nice() {
        let g = ColoredGraph::from_edges(
            4,
            [(0, 1, Blue), (0, 2, Red), (0, 3, Red)],
        )
        .unwrap();
        assert!(matches!(
            solve_nice(&g, Mode::Optimize),
            Err(BpdError::Precondition(_))
        ));
    }
}
