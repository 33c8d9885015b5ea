use std::collections::HashMap;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::{Arc, Mutex};
use std::time::Instant;

use rayon::prelude::*;

use crate::detect::{self, ForbiddenStructure, StructureKind};
use crate::error::{BpdError, Result};
use crate::graph::{ColoredGraph, Edge};

use super::nice::nice_witness;
use super::bound::{BlockBound, BlockCache};
use super::vertex_cover::max_packing_bound;
use super::{DeletionSet, Method, Mode, SearchStats, SolveResult};

/// Worst-case branching number of the search tree.
pub const BRANCHING_FACTOR: f64 = 1.8393;

/// Parallel branching is only used this close to the root.
const PARALLEL_DEPTH: usize = 3;

const CACHE_LIMIT: usize = 1 << 16;

/// Search options. None of them changes the answer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchConfig {
    /// Prune when a maximum packing of edge-disjoint P3s exceeds the budget.
    pub packing_prune: bool,
    /// Strengthen the packing bound with dense blocks and stars. Needs `packing_prune`.
    pub block_bound: bool,
    /// Solve connected components independently.
    pub split_components: bool,
    /// Memoize component optima within one call. Needs `split_components`.
    pub cache: bool,
    pub parallel: bool,
    /// Worker threads for parallel mode; falls back to `BPD_THREADS`, then rayon's default.
    pub threads: Option<usize>,
}

impl Default for BranchConfig {
    fn default() -> Self {
        BranchConfig {
            packing_prune: true,
            block_bound: true,
            split_components: true,
            cache: true,
            parallel: false,
            threads: None,
        }
    }
}

impl BranchConfig {
    /// The bare search: branching rules and the nice endgame only.
    pub fn plain() -> BranchConfig {
        BranchConfig {
            packing_prune: false,
            block_bound: false,
            split_components: false,
            cache: false,
            parallel: false,
            threads: None,
        }
    }
}

enum Outcome {
    Yes(Vec<Edge>),
    No,
    Cancelled,
}

#[derive(Clone)]
struct CacheEntry {
    /// No solution smaller than this exists.
    proven_lb: usize,
    optimum: Option<Vec<Edge>>,
}

type CacheKey = Vec<(u32, u32, bool)>;

const BR1: usize = 0;
const BR2: usize = 1;
const BR3: usize = 2;
const NICE: usize = 3;
const PRUNED: usize = 4;
const CACHE_HITS: usize = 5;
const COUNTER_NAMES: [&str; 6] = ["br1", "br2", "br3", "nice_leaves", "packing_prunes", "cache_hits"];

struct Ctx<'a> {
    cfg: &'a BranchConfig,
    nodes: AtomicU64,
    max_depth: AtomicUsize,
    counters: [AtomicU64; 6],
    cache: Mutex<HashMap<CacheKey, CacheEntry>>,
    blocks: BlockCache,
}

impl<'a> Ctx<'a> {
    fn new(cfg: &'a BranchConfig) -> Ctx<'a> {
        Ctx {
            cfg,
            nodes: AtomicU64::new(0),
            max_depth: AtomicUsize::new(0),
            counters: Default::default(),
            cache: Mutex::new(HashMap::new()),
            blocks: BlockCache::default(),
        }
    }

    fn bump(&self, i: usize) {
        self.counters[i].fetch_add(1, Ordering::Relaxed);
    }

    fn stats(&self, start: Instant) -> SearchStats {
        let mut rule_counts = std::collections::BTreeMap::new();
        for (i, name) in COUNTER_NAMES.iter().enumerate() {
            rule_counts.insert(name.to_string(), self.counters[i].load(Ordering::Relaxed));
        }
        SearchStats {
            nodes_expanded: self.nodes.load(Ordering::Relaxed),
            max_depth: self.max_depth.load(Ordering::Relaxed),
            rule_counts,
            wall_time: start.elapsed(),
        }
    }

    fn blocks_for(&self, g: &ColoredGraph) -> BlockBound {
        if self.cfg.packing_prune && self.cfg.block_bound {
            BlockBound::build(g, &self.blocks)
        } else {
            BlockBound::default()
        }
    }

    fn lower_bound(&self, g: &ColoredGraph, blocks: &BlockBound) -> usize {
        if blocks.is_empty() {
            max_packing_bound(g)
        } else {
            blocks.eval(g, &self.blocks)
        }
    }

    fn search(
        &self,
        g: &ColoredGraph,
        k: i64,
        depth: usize,
        blocks: &BlockBound,
        flags: &[Arc<AtomicBool>],
    ) -> Outcome {
        self.nodes.fetch_add(1, Ordering::Relaxed);
        self.max_depth.fetch_max(depth, Ordering::Relaxed);
        if flags.iter().any(|f| f.load(Ordering::Relaxed)) {
            return Outcome::Cancelled;
        }
        if k < 0 {
            return Outcome::No;
        }
        if self.cfg.packing_prune && self.lower_bound(g, blocks) as i64 > k {
            self.bump(PRUNED);
            return Outcome::No;
        }
        if self.cfg.split_components {
            let mark = detect::p3_vertices(g);
            let comps: Vec<Vec<usize>> = g
                .connected_components()
                .into_iter()
                .filter(|c| c.iter().any(|&v| mark[v]))
                .collect();
            if comps.len() > 1 || comps.first().is_some_and(|c| c.len() < g.n()) {
                return self.split(g, comps, k, depth, flags);
            }
        }

        let Some(s) = detect::find_branch_structure(g) else {
            self.bump(NICE);
            let p = detect::count_bicolored_p3(g);
            if p as i64 > k {
                return Outcome::No;
            }
            return Outcome::Yes(nice_witness(g).expect("nice graph"));
        };
        let (rule, mut children) = branch_children(&s);
        self.bump(rule);
        children.retain(|set| set.len() as i64 <= k);

        if self.cfg.parallel && depth < PARALLEL_DEPTH {
            let flag = Arc::new(AtomicBool::new(false));
            let mut nested = flags.to_vec();
            nested.push(flag.clone());
            let found = children.par_iter().find_map_any(|set| {
                let h = g.delete_edge_set(set).expect("branch edges are present");
                match self.search(&h, k - set.len() as i64, depth + 1, blocks, &nested) {
                    Outcome::Yes(mut sol) => {
                        flag.store(true, Ordering::Relaxed);
                        sol.extend_from_slice(set);
                        Some(sol)
                    }
                    _ => None,
                }
            });
            return match found {
                Some(sol) => Outcome::Yes(sol),
                None if flags.iter().any(|f| f.load(Ordering::Relaxed)) => Outcome::Cancelled,
                None => Outcome::No,
            };
        }

        for set in &children {
            let h = g.delete_edge_set(set).expect("branch edges are present");
            debug_assert_eq!(h.m() + set.len(), g.m());
            match self.search(&h, k - set.len() as i64, depth + 1, blocks, flags) {
                Outcome::Yes(mut sol) => {
                    sol.extend_from_slice(set);
                    return Outcome::Yes(sol);
                }
                Outcome::Cancelled => return Outcome::Cancelled,
                Outcome::No => {}
            }
        }
        Outcome::No
    }

    /// Solves each component to optimality by iterative deepening, handing each
    /// one the budget left after the lower bounds of the others.
    fn split(
        &self,
        g: &ColoredGraph,
        comps: Vec<Vec<usize>>,
        k: i64,
        depth: usize,
        flags: &[Arc<AtomicBool>],
    ) -> Outcome {
        let subs: Vec<(ColoredGraph, Vec<usize>, BlockBound)> = comps
            .iter()
            .map(|c| {
                let (h, map) = g.induced_subgraph(c).unwrap();
                let blocks = self.blocks_for(&h);
                (h, map, blocks)
            })
            .collect();
        let lbs: Vec<usize> = subs.iter().map(|(h, _, b)| self.lower_bound(h, b)).collect();
        let mut rest_lb: i64 = lbs.iter().sum::<usize>() as i64;
        let mut remaining = k;
        let mut out = Vec::new();
        for ((h, map, blocks), lb) in subs.iter().zip(&lbs) {
            rest_lb -= *lb as i64;
            let budget = remaining - rest_lb;
            match self.component_optimum(h, *lb, budget, depth + 1, blocks, flags) {
                Outcome::Yes(sol) => {
                    remaining -= sol.len() as i64;
                    out.extend(sol.iter().map(|e| Edge::new(map[e.u], map[e.v], e.color)));
                }
                other => return other,
            }
        }
        Outcome::Yes(out)
    }

    fn component_optimum(
        &self,
        h: &ColoredGraph,
        lb: usize,
        budget: i64,
        depth: usize,
        blocks: &BlockBound,
        flags: &[Arc<AtomicBool>],
    ) -> Outcome {
        let key: Option<CacheKey> = self
            .cfg
            .cache
            .then(|| h.edges().iter().map(|e| (e.u as u32, e.v as u32, e.color == crate::graph::Color::Blue)).collect());
        let mut start = lb;
        if let Some(entry) = key.as_ref().and_then(|k| self.cache.lock().unwrap().get(k).cloned()) {
            self.bump(CACHE_HITS);
            if let Some(sol) = entry.optimum {
                return if sol.len() as i64 <= budget {
                    Outcome::Yes(sol)
                } else {
                    Outcome::No
                };
            }
            start = start.max(entry.proven_lb);
        }
        let mut b = start as i64;
        while b <= budget {
            match self.search(h, b, depth, blocks, flags) {
                Outcome::Yes(sol) => {
                    debug_assert_eq!(sol.len() as i64, b);
                    self.store(key, b as usize, Some(sol.clone()));
                    return Outcome::Yes(sol);
                }
                Outcome::No => {
                    self.store(key.clone(), b as usize + 1, None);
                }
                Outcome::Cancelled => return Outcome::Cancelled,
            }
            b += 1;
        }
        Outcome::No
    }

    fn store(&self, key: Option<CacheKey>, proven_lb: usize, optimum: Option<Vec<Edge>>) {
        let Some(key) = key else { return };
        let mut cache = self.cache.lock().unwrap();
        if cache.len() >= CACHE_LIMIT && !cache.contains_key(&key) {
            return;
        }
        let entry = cache.entry(key).or_insert(CacheEntry {
            proven_lb: 0,
            optimum: None,
        });
        entry.proven_lb = entry.proven_lb.max(proven_lb);
        if optimum.is_some() {
            entry.optimum = optimum;
        }
    }
}

/// Child deletion sets of a branching structure, in branching order, with the
/// index of the rule that produced them.
fn branch_children(s: &ForbiddenStructure) -> (usize, Vec<Vec<Edge>>) {
    let edge = |i: usize, j: usize| -> Edge {
        let (a, b) = (s.witness[i], s.witness[j]);
        *s.edges
            .iter()
            .find(|e| e.pair() == crate::graph::normalize(a, b))
            .expect("pattern edge")
    };
    match s.kind {
        StructureKind::MultiConflictEdge => {
            let [e1, e2, e3] = [s.edges[0], s.edges[1], s.edges[2]];
            (BR1, vec![vec![e1], vec![e2, e3]])
        }
        StructureKind::LCDiamond | StructureKind::LODiamond | StructureKind::IIZDiamond => {
            // u v w z
            (
                BR2,
                vec![
                    vec![edge(1, 2)],
                    vec![edge(0, 1), edge(0, 3)],
                    vec![edge(0, 1), edge(1, 3), edge(2, 3)],
                ],
            )
        }
        StructureKind::CCHourglass => {
            // u v w z1 z2
            (
                BR3,
                vec![
                    vec![edge(1, 2)],
                    vec![edge(0, 1), edge(1, 3)],
                    vec![edge(0, 1), edge(0, 3), edge(1, 4)],
                ],
            )
        }
        other => unreachable!("{other:?} is not a branching structure"),
    }
}

fn thread_pool(cfg: &BranchConfig) -> Result<rayon::ThreadPool> {
    let threads = cfg.threads.or_else(|| {
        std::env::var("BPD_THREADS")
            .ok()
            .and_then(|s| s.parse().ok())
    });
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads {
        builder = builder.num_threads(t);
    }
    builder
        .build()
        .map_err(|e| BpdError::Internal(format!("thread pool: {e}")))
}

/// Search-tree algorithm with the three branching rules and the nice endgame.
///
/// In optimization mode the decision search runs for increasing budgets,
/// starting at the packing lower bound.
pub fn solve_branching(g: &ColoredGraph, mode: Mode, cfg: &BranchConfig) -> Result<SolveResult> {
    let start = Instant::now();
    let ctx = Ctx::new(cfg);
    let blocks = ctx.blocks_for(g);
    let pool = if cfg.parallel { Some(thread_pool(cfg)?) } else { None };
    let decide = |k: i64| -> Result<Option<Vec<Edge>>> {
        let before = ctx.nodes.load(Ordering::Relaxed);
        let run = || ctx.search(g, k, 0, &blocks, &[]);
        let out = match &pool {
            Some(p) => p.install(run),
            None => run(),
        };
        let nodes = ctx.nodes.load(Ordering::Relaxed) - before;
        if !cfg.split_components && (0..62).contains(&k) && nodes > 1u64 << (k + 1) {
            return Err(BpdError::Internal(format!(
                "search expanded {nodes} nodes for k = {k}, above 2^(k+1)"
            )));
        }
        match out {
            Outcome::Yes(sol) => Ok(Some(sol)),
            Outcome::No => Ok(None),
            Outcome::Cancelled => Err(BpdError::Internal("root search cancelled".into())),
        }
    };

    match mode {
        Mode::Decide(k) => {
            let sol = decide(k)?;
            let res = SolveResult {
                answer: sol.is_some(),
                k: Some(k),
                solution: sol.map(DeletionSet::new),
                optimum: None,
                stats: ctx.stats(start),
                method: Method::Branch,
            };
            res.check(g)?;
            Ok(res)
        }
        Mode::Optimize => {
            let lb = ctx.lower_bound(g, &blocks);
            let ub = g.m_red().min(g.m_blue());
            for k in lb..=ub {
                if let Some(sol) = decide(k as i64)? {
                    let set = DeletionSet::new(sol);
                    return SolveResult::from_optimum(g, mode, set.len(), set, ctx.stats(start), Method::Branch);
                }
            }
            Err(BpdError::Internal(format!(
                "no solution within the smaller color class ({ub} edges)"
            )))
        }
    }
}
