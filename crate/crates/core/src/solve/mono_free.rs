use std::time::Instant;

use crate::detect;
use crate::error::{BpdError, Result};
use crate::graph::{ColoredGraph, Edge};
use crate::kernel::{rr1_components, Instance};

use super::degree_two::degree_two_deletions;
use super::{DeletionSet, Method, Mode, SearchStats, SolveResult};

/// Exact solver for graphs with no monochromatic K3 and no monochromatic P3.
///
/// Small and P3-free components go first. Every remaining degree-3 vertex `v`
/// then sits in a paw: a triangle `v, u, w` plus one pendant edge `{v, t}`, which
/// is a bridge and gets deleted together with the triangle. What is left has
/// maximum degree two.
pub fn solve_mono_free(g: &ColoredGraph, mode: Mode) -> Result<SolveResult> {
    let start = Instant::now();
    let flags = detect::classify(g);
    if !flags.mono_free {
        let why = detect::enumerate_mono_p3(g)
            .into_iter()
            .chain(detect::enumerate_mono_k3(g))
            .next()
            .map(|s| format!("{} at {:?}", s.kind.name(), s.witness))
            .unwrap_or_default();
        return Err(BpdError::Precondition(format!("graph is not monochromatic-free: {why}")));
    }

    let (reduced, trace) = rr1_components(&Instance::new(g.clone(), i64::MAX / 4));
    let mut deletions: Vec<Edge> = trace.steps.iter().flat_map(|s| s.forced_edges()).collect();
    let mut cur = reduced.graph;
    let mut orig = trace.kernel_to_original;

    while let Some(v) = (0..cur.n()).find(|&v| cur.degree(v) >= 3) {
        if cur.degree(v) > 3 {
            return Err(BpdError::Internal(format!(
                "vertex {} keeps degree {} after the component rule",
                orig[v],
                cur.degree(v)
            )));
        }
        let (u, w, t) = paw(&cur, v).ok_or_else(|| {
            let mut nb: Vec<usize> = cur.adj(v).iter().map(|&(x, _)| orig[x]).collect();
            nb.push(orig[v]);
            nb.sort_unstable();
            BpdError::Internal(format!("closed neighborhood {nb:?} is not a paw"))
        })?;
        let bridge = cur.edge(v, t).unwrap();
        deletions.push(Edge::new(orig[v], orig[t], bridge.color));
        let keep: Vec<usize> = (0..cur.n()).filter(|&x| x != v && x != u && x != w).collect();
        let (next, map) = cur.induced_subgraph(&keep)?;
        orig = map.iter().map(|&x| orig[x]).collect();
        cur = next;
    }

    for e in degree_two_deletions(&cur)? {
        deletions.push(Edge::new(orig[e.u], orig[e.v], e.color));
    }
    let stats = SearchStats {
        wall_time: start.elapsed(),
        ..SearchStats::default()
    };
    let opt = deletions.len();
    SolveResult::from_optimum(g, mode, opt, DeletionSet::new(deletions), stats, Method::MonoFree)
}

/// For a degree-3 vertex `v`: neighbors `u, w` with `N(u) = {v, w}` and
/// `N(w) = {u, v}`, and the remaining neighbor `t`.
fn paw(g: &ColoredGraph, v: usize) -> Option<(usize, usize, usize)> {
    let nb: Vec<usize> = g.adj(v).iter().map(|&(x, _)| x).collect();
    for (i, j, k) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
        let (u, w, t) = (nb[i], nb[j], nb[k]);
        let closed = |a: usize, b: usize| {
            g.degree(a) == 2 && g.has_edge(a, v) && g.has_edge(a, b)
        };
        if closed(u, w) && closed(w, u) && !g.has_edge(t, u) && !g.has_edge(t, w) {
            return Some((u, w, t));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Color::{Blue, Red};
    use crate::solve::oracle_min_deletions;

    #[test]
    fn paw_bridge_is_deleted() {
        // Triangle v=0, u=1, w=2 with pendant path 0-3-4-5-6 hanging off v.
        let g = ColoredGraph::from_edges(
            7,
            [
                (0, 1, Red),
                (0, 2, Red),
                (1, 2, Blue),
                (0, 3, Blue),
                (3, 4, Red),
                (4, 5, Blue),
                (5, 6, Red),
            ],
        )
        .unwrap();
        assert!(detect::classify(&g).mono_free);
        let r = solve_mono_free(&g, Mode::Optimize).unwrap();
        assert!(r.solution.as_ref().unwrap().edges.contains(&Edge::new(0, 3, Blue)));
        assert_eq!(r.optimum, oracle_min_deletions(&g, None).optimum);
    }

    #[test]
    fn refuses_mono_p3() {
        let g = ColoredGraph::from_edges(3, [(0, 1, Red), (1, 2, Red)]).unwrap();
        assert!(matches!(
            solve_mono_free(&g, Mode::Optimize),
            Err(BpdError::Precondition(_))
        ));
    }
}
