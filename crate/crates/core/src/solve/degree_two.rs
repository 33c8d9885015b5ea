use std::time::Instant;

use crate::error::{BpdError, Result};
use crate::graph::{Color, ColoredGraph, Edge};

use super::oracle::oracle_min_deletions;
use super::{DeletionSet, Method, Mode, SearchStats, SolveResult};

/// Exact solver for graphs of maximum degree two, where every component is a
/// path or a cycle.
pub fn solve_degree_two(g: &ColoredGraph, mode: Mode) -> Result<SolveResult> {
    let start = Instant::now();
    let deletions = degree_two_deletions(g)?;
    let stats = SearchStats {
        wall_time: start.elapsed(),
        ..SearchStats::default()
    };
    let opt = deletions.len();
    SolveResult::from_optimum(g, mode, opt, DeletionSet::new(deletions), stats, Method::DegreeTwo)
}

/// An optimal deletion set for a graph of maximum degree two.
pub(crate) fn degree_two_deletions(g: &ColoredGraph) -> Result<Vec<Edge>> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) > 2) {
        return Err(BpdError::Precondition(format!(
            "vertex {v} has degree {}",
            g.degree(v)
        )));
    }
    let mut out = Vec::new();
    for comp in g.connected_components() {
        if comp.len() < 3 {
            continue;
        }
        let (edges, cycle) = walk(g, &comp);
        if cycle {
            out.extend(solve_cycle(g, &comp, &edges));
        } else {
            out.extend(path_greedy(&edges));
        }
    }
    Ok(out)
}

/// Edges of a path or cycle component in walking order.
fn walk(g: &ColoredGraph, comp: &[usize]) -> (Vec<Edge>, bool) {
    let cycle = comp.iter().all(|&v| g.degree(v) == 2);
    let first = if cycle {
        comp[0]
    } else {
        *comp.iter().find(|&&v| g.degree(v) == 1).expect("path has an end")
    };
    let mut edges = Vec::with_capacity(comp.len());
    let (mut prev, mut cur) = (usize::MAX, first);
    loop {
        let next = g.adj(cur).iter().find(|&&(x, _)| x != prev);
        let Some(&(x, c)) = next else { break };
        if cycle && edges.len() == comp.len() {
            break;
        }
        edges.push(Edge::new(cur, x, c));
        prev = cur;
        cur = x;
        if cur == first {
            break;
        }
    }
    (edges, cycle)
}

/// Left-to-right greedy on a path given by its edges in order: at the first edge
/// in a bicolored P3, delete the edge after it and restart behind the deletion.
fn path_greedy(edges: &[Edge]) -> Vec<Edge> {
    let mut out = Vec::new();
    let mut start = 0;
    let mut i = 0;
    while i < edges.len() {
        let c = edges[i].color;
        let left = i > start && edges[i - 1].color != c;
        let right = i + 1 < edges.len() && edges[i + 1].color != c;
        if left || right {
            debug_assert!(!left, "the edge before would have been hit first");
            out.push(edges[i + 1]);
            start = i + 2;
            i = start;
        } else {
            i += 1;
        }
    }
    out
}

fn solve_cycle(g: &ColoredGraph, comp: &[usize], edges: &[Edge]) -> Vec<Edge> {
    let len = edges.len();
    if len <= 5 {
        let (sub, map) = g.induced_subgraph(comp).unwrap();
        let w = oracle_min_deletions(&sub, None).witness.unwrap();
        return w
            .edges
            .iter()
            .map(|e| Edge::new(map[e.u], map[e.v], e.color))
            .collect();
    }
    let at = |i: usize| edges[i % len];
    let Some(run_start) = (0..len).find(|&i| at(i + len - 1).color != at(i).color) else {
        return Vec::new();
    };
    // Maximal runs of equal color as (first index, length), walking from run_start.
    let mut runs = Vec::new();
    let mut i = 0;
    while i < len {
        let c = at(run_start + i).color;
        let mut l = 1;
        while i + l < len && at(run_start + i + l).color == c {
            l += 1;
        }
        runs.push((run_start + i, l));
        i += l;
    }
    if let Some(&(p, _)) = runs.iter().find(|r| r.1 >= 3) {
        // The middle edge of three equal colors is in no P3; dropping it leaves a path.
        let path: Vec<Edge> = (0..len - 1).map(|j| at(p + 2 + j)).collect();
        return path_greedy(&path);
    }
    if let Some(&(p, _)) = runs.iter().find(|r| r.1 == 2) {
        let mut out = vec![at(p + len - 1), at(p + 2)];
        let rest: Vec<Edge> = (0..len - 4).map(|j| at(p + 3 + j)).collect();
        out.extend(path_greedy(&rest));
        return out;
    }
    edges.iter().copied().filter(|e| e.color == Color::Blue).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Color::{Blue, Red};

    fn cycle(colors: &[Color]) -> ColoredGraph {
        let n = colors.len();
        ColoredGraph::from_edges(n, colors.iter().enumerate().map(|(i, &c)| (i, (i + 1) % n, c))).unwrap()
    }

    fn path(colors: &[Color]) -> ColoredGraph {
        ColoredGraph::from_edges(colors.len() + 1, colors.iter().enumerate().map(|(i, &c)| (i, i + 1, c))).unwrap()
    }

    #[test]
    fn alternating_eight_cycle() {
        let g = cycle(&[Blue, Red, Blue, Red, Blue, Red, Blue, Red]);
        let r = solve_degree_two(&g, Mode::Optimize).unwrap();
        assert_eq!(r.optimum, Some(4));
    }

    #[test]
    fn monochromatic_path() {
        let r = solve_degree_two(&path(&[Red, Red, Red]), Mode::Optimize).unwrap();
        assert_eq!(r.optimum, Some(0));
    }

    #[test]
    fn short_paths_match_oracle() {
        for colors in [[Blue, Red, Blue], [Blue, Blue, Red], [Red, Blue, Blue]] {
            let g = path(&colors);
            let want = oracle_min_deletions(&g, None).optimum;
            assert_eq!(solve_degree_two(&g, Mode::Optimize).unwrap().optimum, want);
        }
    }

    #[test]
    fn cycles_with_runs_match_oracle() {
        let cases: [&[Color]; 4] = [
            &[Blue, Blue, Red, Blue, Red, Red, Blue],
            &[Blue, Blue, Blue, Red, Blue, Red],
            &[Red, Red, Blue, Red, Blue, Red, Blue, Blue],
            &[Blue, Red, Red, Blue, Red, Blue],
        ];
        for colors in cases {
            let g = cycle(colors);
            let want = oracle_min_deletions(&g, None).optimum;
            assert_eq!(solve_degree_two(&g, Mode::Optimize).unwrap().optimum, want, "{colors:?}");
        }
    }

    #[test]
    fn rejects_degree_three() {
        let g = ColoredGraph::from_edges(4, [(0, 1, Red), (0, 2, Red), (0, 3, Blue)]).unwrap();
        assert!(matches!(
            solve_degree_two(&g, Mode::Optimize),
            Err(BpdError::Precondition(_))
        ));
    }
}
