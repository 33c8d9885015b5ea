use std::collections::VecDeque;
use std::time::Instant;

use serde::Serialize;

use crate::detect;
use crate::error::{BpdError, Result};
use crate::graph::{Color, ColoredGraph, Edge};

use super::{DeletionSet, Method, Mode, SearchStats, SolveResult};

/// Bipartite graph on the edges of `G`: red edges on the left, blue edges on the
/// right, and a conflict for each pair forming an induced bicolored P3.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConflictGraph {
    pub left: Vec<Edge>,
    pub right: Vec<Edge>,
    /// `(left index, right index)` pairs, sorted.
    pub adjacency: Vec<(usize, usize)>,
}

impl ConflictGraph {
    /// Builds a conflict graph directly from its bipartition and adjacency.
    pub fn from_parts(left: Vec<Edge>, right: Vec<Edge>, mut adjacency: Vec<(usize, usize)>) -> ConflictGraph {
        adjacency.sort_unstable();
        adjacency.dedup();
        ConflictGraph {
            left,
            right,
            adjacency,
        }
    }

    fn left_adj(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.left.len()];
        for &(l, r) in &self.adjacency {
            adj[l].push(r);
        }
        adj
    }
}

pub fn build_conflict_graph(g: &ColoredGraph) -> ConflictGraph {
    let left = g.edges_of_color(Color::Red);
    let right = g.edges_of_color(Color::Blue);
    let mut adjacency = Vec::new();
    detect::for_each_p3(g, |u, v, w| {
        let (a, b) = (g.edge(u, v).unwrap(), g.edge(v, w).unwrap());
        let (red, blue) = if a.color == Color::Red { (a, b) } else { (b, a) };
        adjacency.push((
            left.binary_search(&red).unwrap(),
            right.binary_search(&blue).unwrap(),
        ));
    });
    ConflictGraph::from_parts(left, right, adjacency)
}

/// Maximum matching by Hopcroft–Karp, as `(left, right)` index pairs.
pub fn maximum_matching(cg: &ConflictGraph) -> Vec<(usize, usize)> {
    const FREE: usize = usize::MAX;
    let adj = cg.left_adj();
    let (nl, nr) = (cg.left.len(), cg.right.len());
    let mut match_l = vec![FREE; nl];
    let mut match_r = vec![FREE; nr];
    let mut dist = vec![0usize; nl];

    loop {
        // Layered BFS from free left vertices.
        let mut queue = VecDeque::new();
        for l in 0..nl {
            if match_l[l] == FREE {
                dist[l] = 0;
                queue.push_back(l);
            } else {
                dist[l] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(l) = queue.pop_front() {
            for &r in &adj[l] {
                let l2 = match_r[r];
                if l2 == FREE {
                    found = true;
                } else if dist[l2] == usize::MAX {
                    dist[l2] = dist[l] + 1;
                    queue.push_back(l2);
                }
            }
        }
        if !found {
            break;
        }
        // Vertex-disjoint shortest augmenting paths along the layers.
        let mut next = vec![0usize; nl];
        for s in 0..nl {
            if match_l[s] != FREE {
                continue;
            }
            let mut path: Vec<usize> = vec![s];
            while let Some(&l) = path.last() {
                if next[l] == adj[l].len() {
                    dist[l] = usize::MAX;
                    path.pop();
                    continue;
                }
                let r = adj[l][next[l]];
                next[l] += 1;
                let l2 = match_r[r];
                if l2 == FREE {
                    // Augment along the path.
                    let mut r = r;
                    while let Some(l) = path.pop() {
                        let prev = match_l[l];
                        match_l[l] = r;
                        match_r[r] = l;
                        r = prev;
                    }
                    break;
                }
                if dist[l2] == dist[l] + 1 {
                    path.push(l2);
                }
            }
        }
    }
    (0..nl)
        .filter(|&l| match_l[l] != FREE)
        .map(|l| (l, match_l[l]))
        .collect()
}

/// Size of a maximum set of edge-disjoint bicolored P3s.
///
/// Such a set is exactly a matching in the conflict graph, and every solution
/// has to hit each of its P3s, so this is a lower bound on the optimum.
pub fn max_packing_bound(g: &ColoredGraph) -> usize {
    maximum_matching(&build_conflict_graph(g)).len()
}

/// Minimum vertex cover from a maximum matching (König): with `Z` the vertices
/// reachable from unmatched left vertices by alternating paths, the cover is
/// `(L \ Z) ∪ (R ∩ Z)`. Returned as edges of the original graph, sorted.
pub fn bipartite_min_vertex_cover(cg: &ConflictGraph) -> Vec<Edge> {
    const FREE: usize = usize::MAX;
    let adj = cg.left_adj();
    let matching = maximum_matching(cg);
    let mut match_l = vec![FREE; cg.left.len()];
    let mut match_r = vec![FREE; cg.right.len()];
    for &(l, r) in &matching {
        match_l[l] = r;
        match_r[r] = l;
    }
    let mut z_left = vec![false; cg.left.len()];
    let mut z_right = vec![false; cg.right.len()];
    let mut queue: VecDeque<usize> = (0..cg.left.len()).filter(|&l| match_l[l] == FREE).collect();
    for &l in &queue {
        z_left[l] = true;
    }
    while let Some(l) = queue.pop_front() {
        for &r in &adj[l] {
            if z_right[r] || match_l[l] == r {
                continue;
            }
            z_right[r] = true;
            let l2 = match_r[r];
            if l2 != FREE && !z_left[l2] {
                z_left[l2] = true;
                queue.push_back(l2);
            }
        }
    }
    let mut cover: Vec<Edge> = (0..cg.left.len())
        .filter(|&l| !z_left[l])
        .map(|l| cg.left[l])
        .chain((0..cg.right.len()).filter(|&r| z_right[r]).map(|r| cg.right[r]))
        .collect();
    debug_assert_eq!(cover.len(), matching.len());
    cover.sort_unstable();
    cover
}

/// Exact solver for graphs without an endangered bicolored K3: the deletion set
/// is a minimum vertex cover of the conflict graph.
pub fn solve_endangered_free(g: &ColoredGraph, mode: Mode) -> Result<SolveResult> {
    let start = Instant::now();
    if let Some(k3) = detect::find_endangered_k3(g) {
        return Err(BpdError::Precondition(format!(
            "graph contains the endangered bicolored K3 {:?}",
            k3.witness
        )));
    }
    let cover = bipartite_min_vertex_cover(&build_conflict_graph(g));
    let stats = SearchStats {
        wall_time: start.elapsed(),
        ..SearchStats::default()
    };
    let opt = cover.len();
    SolveResult::from_optimum(g, mode, opt, DeletionSet::new(cover), stats, Method::VertexCover)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Color::{Blue, Red};

    fn variable_gadget() -> ColoredGraph {
        let mut e = Vec::new();
        for i in 1..=4 {
            e.push((0, i, Blue));
            e.push((0, i + 4, Red));
        }
        ColoredGraph::from_edges(9, e).unwrap()
    }

    #[test]
    fn conflict_graph_examples() {
        let free = ColoredGraph::from_edges(3, [(0, 1, Red), (1, 2, Red)]).unwrap();
        assert!(build_conflict_graph(&free).adjacency.is_empty());
        let p3 = ColoredGraph::from_edges(3, [(0, 1, Red), (1, 2, Blue)]).unwrap();
        let cg = build_conflict_graph(&p3);
        assert_eq!(cg.adjacency, vec![(0, 0)]);
        assert_eq!(bipartite_min_vertex_cover(&cg).len(), 1);

        let cg = build_conflict_graph(&variable_gadget());
        assert_eq!((cg.left.len(), cg.right.len(), cg.adjacency.len()), (4, 4, 16));
        let cover = bipartite_min_vertex_cover(&cg);
        assert_eq!(cover.len(), 4);
        let c = cover[0].color;
        assert!(cover.iter().all(|e| e.color == c));
    }

    #[test]
    fn variable_gadget_needs_four() {
        let g = variable_gadget();
        assert!(solve_endangered_free(&g, Mode::Decide(4)).unwrap().answer);
        assert!(!solve_endangered_free(&g, Mode::Decide(3)).unwrap().answer);
    }

    #[test]
    fn refuses_endangered_k3() {
        let g = ColoredGraph::from_edges(4, [(0, 1, Blue), (0, 2, Blue), (1, 2, Red), (3, 0, Red)]).unwrap();
        assert!(matches!(
            solve_endangered_free(&g, Mode::Optimize),
            Err(BpdError::Precondition(_))
        ));
    }
}
