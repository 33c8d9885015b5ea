use std::collections::HashMap;
use std::sync::Mutex;

use crate::graph::{normalize, Color, ColoredGraph};

use super::branching::{solve_branching, BranchConfig};
use super::vertex_cover::{build_conflict_graph, maximum_matching, ConflictGraph};
use super::Mode;

/// Largest vertex set treated as one dense block.
const MAX_BLOCK: usize = 10;

/// Smallest clique that seeds a dense block.
const MIN_CLIQUE: usize = 4;

/// Lower bound from edge-disjoint induced subgraphs.
///
/// A solution restricted to an induced subgraph `G[S]` solves `G[S]`, so the
/// optima of induced subgraphs with pairwise disjoint edge sets add up to a
/// lower bound. Blocks are chosen once for a graph and evaluated on any graph
/// obtained from it by deleting edges:
///
/// * dense blocks, a clique of size at least four plus vertices that see two
///   of its members, solved exactly;
/// * induced stars, worth `min(red leaves, blue leaves)`;
/// * single P3s on the remaining edges, counted by a maximum matching in the
///   conflict graph.
#[derive(Clone, Debug, Default)]
pub(crate) struct BlockBound {
    dense: Vec<Vec<usize>>,
    stars: Vec<(usize, Vec<usize>)>,
    /// Vertex pairs inside some block, sorted.
    owned: Vec<(usize, usize)>,
}

pub(crate) type BlockCache = Mutex<HashMap<Vec<(u8, u8, bool)>, usize>>;

impl BlockBound {
    pub(crate) fn build(g: &ColoredGraph, cache: &BlockCache) -> BlockBound {
        let mut used = vec![Vec::<usize>::new(); g.n()];
        let free = |used: &[Vec<usize>], a: usize, b: usize| !used[a].contains(&b);
        let mark = |used: &mut [Vec<usize>], a: usize, b: usize| {
            used[a].push(b);
            used[b].push(a);
        };
        let mut order: Vec<usize> = (0..g.n()).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));

        let mut out = BlockBound::default();
        for &v in &order {
            let mut clique = vec![v];
            let mut cand: Vec<usize> = g.adj(v).iter().map(|&(x, _)| x).filter(|&x| free(&used, v, x)).collect();
            while !cand.is_empty() {
                let inside = |c: usize| cand.iter().filter(|&&y| g.has_edge(c, y) && free(&used, c, y)).count();
                let best = *cand.iter().max_by_key(|&&c| (inside(c), std::cmp::Reverse(c))).unwrap();
                clique.push(best);
                cand.retain(|&y| y != best && g.has_edge(best, y) && free(&used, best, y));
            }
            if clique.len() < MIN_CLIQUE || clique.len() > MAX_BLOCK {
                continue;
            }
            let mut set = clique;
            let mut outside: Vec<usize> = set
                .iter()
                .flat_map(|&u| g.adj(u).iter().map(|&(x, _)| x))
                .filter(|x| !set.contains(x))
                .collect();
            outside.sort_unstable();
            outside.dedup();
            outside.sort_by_key(|&x| std::cmp::Reverse(set.iter().filter(|&&u| g.has_edge(u, x)).count()));
            for x in outside {
                if set.len() == MAX_BLOCK {
                    break;
                }
                let links: Vec<usize> = set.iter().copied().filter(|&u| g.has_edge(u, x)).collect();
                if links.len() >= 2 && links.iter().all(|&u| free(&used, u, x)) {
                    set.push(x);
                }
            }
            set.sort_unstable();
            let (sub, _) = g.induced_subgraph(&set).unwrap();
            if block_optimum(&sub, cache) <= maximum_matching(&build_conflict_graph(&sub)).len() {
                continue;
            }
            for e in sub.edges() {
                mark(&mut used, set[e.u], set[e.v]);
            }
            out.dense.push(set);
        }

        for &v in &order {
            let mut leaves: Vec<usize> = Vec::new();
            let mut nb: Vec<(usize, Color)> =
                g.adj(v).iter().copied().filter(|&(x, _)| free(&used, v, x)).collect();
            // Rarer color first: it caps what the star is worth.
            nb.sort_by_key(|&(x, c)| (g.color_degree(v, c), x));
            for (x, _) in nb {
                if leaves.iter().all(|&y| !g.has_edge(x, y)) {
                    leaves.push(x);
                }
            }
            let red = leaves.iter().filter(|&&x| g.color(v, x) == Some(Color::Red)).count();
            if red.min(leaves.len() - red) < 2 {
                continue;
            }
            for &x in &leaves {
                mark(&mut used, v, x);
            }
            out.stars.push((v, leaves));
        }

        for (a, list) in used.iter().enumerate() {
            out.owned.extend(list.iter().filter(|&&b| a < b).map(|&b| (a, b)));
        }
        out.owned.sort_unstable();
        out
    }

    pub(crate) fn is_empty(&self) -> bool {
        self.dense.is_empty() && self.stars.is_empty()
    }

    /// The bound on `g`, which must have the vertex set the blocks were built on.
    pub(crate) fn eval(&self, g: &ColoredGraph, cache: &BlockCache) -> usize {
        let mut total = 0;
        for set in &self.dense {
            let (sub, _) = g.induced_subgraph(set).unwrap();
            total += block_optimum(&sub, cache);
        }
        for (v, leaves) in &self.stars {
            let (mut red, mut blue) = (0, 0);
            for &x in leaves {
                match g.color(*v, x) {
                    Some(Color::Red) => red += 1,
                    Some(Color::Blue) => blue += 1,
                    None => {}
                }
            }
            total += red.min(blue);
        }
        let cg = build_conflict_graph(g);
        let free = |e: &crate::graph::Edge| self.owned.binary_search(&normalize(e.u, e.v)).is_err();
        let adjacency = cg
            .adjacency
            .iter()
            .copied()
            .filter(|&(l, r)| free(&cg.left[l]) && free(&cg.right[r]))
            .collect();
        total + maximum_matching(&ConflictGraph::from_parts(cg.left, cg.right, adjacency)).len()
    }
}

fn block_optimum(sub: &ColoredGraph, cache: &BlockCache) -> usize {
    let key: Vec<(u8, u8, bool)> = sub
        .edges()
        .iter()
        .map(|e| (e.u as u8, e.v as u8, e.color == Color::Blue))
        .collect();
    if let Some(&opt) = cache.lock().unwrap().get(&key) {
        return opt;
    }
    let cfg = BranchConfig {
        block_bound: false,
        ..BranchConfig::default()
    };
    let opt = solve_branching(sub, Mode::Optimize, &cfg)
        .ok()
        .and_then(|r| r.optimum)
        .expect("small block has an optimum");
    cache.lock().unwrap().insert(key, opt);
    opt
}
