use std::time::Instant;

use crate::error::Result;
use crate::graph::{Color, ColoredGraph, Edge};

use super::{DeletionSet, Method, Mode, SearchStats, SolveResult};

/// Result of the brute-force search. `optimum` is `None` when the cap was exceeded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub optimum: Option<usize>,
    pub witness: Option<DeletionSet>,
}

/// Exact minimum number of edge deletions that make `g` bicolored-P3-free.
///
/// Complete two-way branching on the two edges of some bicolored P3, bounded by
/// the best solution found so far. The smaller color class seeds the bound. With
/// `cap = Some(c)` only solutions of size at most `c` are searched for.
///
/// Deliberately shares no code with the detection module: it serves as the
/// reference the other solvers are tested against.
pub fn oracle_min_deletions(g: &ColoredGraph, cap: Option<usize>) -> OracleResult {
    let color_class = if g.m_red() <= g.m_blue() {
        Color::Red
    } else {
        Color::Blue
    };
    let class_size = g.m_red().min(g.m_blue());

    let mut search = Search {
        best: None,
        limit: usize::MAX,
        stack: Vec::new(),
    };
    if cap.is_none_or(|c| class_size <= c) {
        search.best = Some(g.edges_of_color(color_class));
        search.limit = class_size;
    } else {
        search.limit = cap.unwrap() + 1;
    }
    search.run(g.clone());

    match search.best {
        Some(edges) => OracleResult {
            optimum: Some(edges.len()),
            witness: Some(DeletionSet::new(edges)),
        },
        None => OracleResult {
            optimum: None,
            witness: None,
        },
    }
}

/// [`oracle_min_deletions`] wrapped as a solver. A budget doubles as the cap.
pub fn solve_oracle(g: &ColoredGraph, mode: Mode) -> Result<SolveResult> {
    let start = Instant::now();
    let cap = match mode {
        Mode::Decide(k) => Some(k.max(-1)),
        Mode::Optimize => None,
    };
    let res = match cap {
        Some(c) if c < 0 => OracleResult {
            optimum: None,
            witness: None,
        },
        Some(c) => oracle_min_deletions(g, Some(c as usize)),
        None => oracle_min_deletions(g, None),
    };
    let stats = SearchStats {
        wall_time: start.elapsed(),
        ..SearchStats::default()
    };
    match (res.optimum, res.witness) {
        (Some(opt), Some(w)) => SolveResult::from_optimum(g, mode, opt, w, stats, Method::Oracle),
        _ => Ok(SolveResult {
            answer: false,
            k: cap,
            solution: None,
            optimum: None,
            stats,
            method: Method::Oracle,
        }),
    }
}

struct Search {
    best: Option<Vec<Edge>>,
    /// Only solutions strictly smaller than this are of interest.
    limit: usize,
    stack: Vec<Edge>,
}

impl Search {
    fn run(&mut self, g: ColoredGraph) {
        let Some((e1, e2)) = first_conflict(&g) else {
            if self.stack.len() < self.limit {
                self.limit = self.stack.len();
                self.best = Some(self.stack.clone());
            }
            return;
        };
        if self.stack.len() + 1 >= self.limit {
            return;
        }
        for e in [e1, e2] {
            let mut h = g.clone();
            h.remove_edge_in_place(e.u, e.v).unwrap();
            self.stack.push(e);
            self.run(h);
            self.stack.pop();
        }
    }
}

/// First pair of edges `{u,v}`, `{v,w}` with different colors and `u`, `w`
/// non-adjacent, found by checking every vertex triple.
fn first_conflict(g: &ColoredGraph) -> Option<(Edge, Edge)> {
    let n = g.n();
    for v in 0..n {
        for u in 0..n {
            let Some(cu) = g.edge(u, v).map(|e| e.color) else { continue };
            for w in (u + 1)..n {
                if w == v {
                    continue;
                }
                let Some(cw) = g.edge(v, w).map(|e| e.color) else { continue };
                if cu != cw && g.edge(u, w).is_none() {
                    return Some((Edge::new(u, v, cu), Edge::new(v, w, cw)));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Color::{Blue, Red};

    #[test]
    fn trivial_cases() {
        let g = ColoredGraph::from_edges(3, [(0, 1, Red), (1, 2, Red)]).unwrap();
        let r = oracle_min_deletions(&g, None);
        assert_eq!(r.optimum, Some(0));
        assert!(r.witness.unwrap().is_empty());

        let p3 = ColoredGraph::from_edges(3, [(0, 1, Blue), (1, 2, Red)]).unwrap();
        let r = oracle_min_deletions(&p3, None);
        assert_eq!(r.optimum, Some(1));
        assert!(r.witness.unwrap().is_solution(&p3, 1));
    }

    #[test]
    fn cap_exceeded_is_a_value() {
        let mut e = Vec::new();
        for i in 0..3 {
            e.push((3 * i, 3 * i + 1, Blue));
            e.push((3 * i + 1, 3 * i + 2, Red));
        }
        let g = ColoredGraph::from_edges(9, e).unwrap();
        assert_eq!(oracle_min_deletions(&g, Some(2)).optimum, None);
        assert_eq!(oracle_min_deletions(&g, Some(3)).optimum, Some(3));
    }
}
