//! Data reduction.
//!
//! [`kernelize`] shrinks an instance with reduction rules that never change the
//! yes/no answer and records every step in a [`KernelTrace`]. The trace maps a
//! solution of the kernel back to the original graph via [`lift_solution`].
//!
//! All vertex ids and edges stored in a trace refer to the original instance.

use serde::Serialize;

use crate::detect;
use crate::error::{BpdError, Result};
use crate::graph::{Color, ColoredGraph, Edge, InstanceStats};
use crate::solve::{oracle_min_deletions, DeletionSet};

/// A graph plus a deletion budget. A negative budget marks a no-instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub graph: ColoredGraph,
    pub k: i64,
}

impl Instance {
    pub fn new(graph: ColoredGraph, k: i64) -> Instance {
        Instance { graph, k }
    }

    /// `m - k`: the number of edges that must survive.
    pub fn ell(&self) -> i64 {
        self.graph.m() as i64 - self.k
    }

    pub fn stats(&self) -> InstanceStats {
        self.graph.stats(self.k)
    }

    pub fn is_no_instance(&self) -> bool {
        self.k < 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum KernelStep {
    RemovedFreeComponent {
        vertices: Vec<usize>,
    },
    SolvedSmallComponent {
        vertices: Vec<usize>,
        deletions: Vec<Edge>,
        cost: usize,
    },
    BridgeRule {
        bridge: Edge,
        removed: Vec<usize>,
    },
    ForcedEdgeDeletion {
        edge: Edge,
    },
    RemovedVertex {
        vertex: usize,
    },
    /// The smaller color class was deleted; every vertex goes with it.
    TrivialYes {
        color: Color,
        deletions: Vec<Edge>,
    },
}

impl KernelStep {
    /// Budget spent by this step.
    pub fn cost(&self) -> usize {
        match self {
            KernelStep::SolvedSmallComponent { cost, .. } => *cost,
            KernelStep::BridgeRule { .. } | KernelStep::ForcedEdgeDeletion { .. } => 1,
            KernelStep::TrivialYes { deletions, .. } => deletions.len(),
            _ => 0,
        }
    }

    /// Edges this step puts into the solution.
    pub fn forced_edges(&self) -> Vec<Edge> {
        match self {
            KernelStep::SolvedSmallComponent { deletions, .. } => deletions.clone(),
            KernelStep::BridgeRule { bridge, .. } => vec![*bridge],
            KernelStep::ForcedEdgeDeletion { edge } => vec![*edge],
            KernelStep::TrivialYes { deletions, .. } => deletions.clone(),
            _ => Vec::new(),
        }
    }
}

/// Kernel size against `6kΔ·min(k, 2Δ) + 6k·min(k, 2Δ)`, with `k` and `Δ`
/// taken from the kernel itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub n: usize,
    pub k: i64,
    pub max_degree: usize,
    pub bound: u64,
    pub holds: bool,
}

impl BoundCheck {
    pub fn compute(g: &ColoredGraph, k: i64) -> BoundCheck {
        let kk = k.max(0) as u64;
        let delta = g.max_degree() as u64;
        let mm = kk.min(2 * delta);
        let bound = 6 * kk * delta * mm + 6 * kk * mm;
        BoundCheck {
            n: g.n(),
            k,
            max_degree: g.max_degree(),
            bound,
            holds: (g.n() as u64) <= bound,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelTrace {
    pub original_n: usize,
    pub original_k: i64,
    pub steps: Vec<KernelStep>,
    /// Original id of each kernel vertex.
    pub kernel_to_original: Vec<usize>,
    pub kernel_k: i64,
    /// Set by [`kernelize`] when the kernel is not a no-instance.
    pub bound: Option<BoundCheck>,
}

impl KernelTrace {
    pub fn total_cost(&self) -> usize {
        self.steps.iter().map(KernelStep::cost).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// Options for [`kernelize_with`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct KernelConfig {
    /// Also apply the bridge rule in every round.
    pub bridge_rule: bool,
}

struct Work {
    g: ColoredGraph,
    orig: Vec<usize>,
    k: i64,
    steps: Vec<KernelStep>,
    original_n: usize,
    original_k: i64,
}

impl Work {
    fn new(inst: &Instance) -> Work {
        Work {
            g: inst.graph.clone(),
            orig: (0..inst.graph.n()).collect(),
            k: inst.k,
            steps: Vec::new(),
            original_n: inst.graph.n(),
            original_k: inst.k,
        }
    }

    fn finish(self) -> (Instance, KernelTrace) {
        let trace = KernelTrace {
            original_n: self.original_n,
            original_k: self.original_k,
            steps: self.steps,
            kernel_to_original: self.orig,
            kernel_k: self.k,
            bound: None,
        };
        (Instance::new(self.g, self.k), trace)
    }

    fn to_orig(&self, e: Edge) -> Edge {
        Edge::new(self.orig[e.u], self.orig[e.v], e.color)
    }

    fn orig_vertices(&self, vs: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = vs.iter().map(|&v| self.orig[v]).collect();
        out.sort_unstable();
        out
    }

    fn remove_vertices(&mut self, dead: &[bool]) {
        let keep: Vec<usize> = (0..self.g.n()).filter(|&v| !dead[v]).collect();
        let (g, map) = self.g.induced_subgraph(&keep).expect("ids in range");
        self.orig = map.iter().map(|&v| self.orig[v]).collect();
        self.g = g;
    }

    fn trivial_yes(&mut self) -> bool {
        let Some((color, class)) = smaller_class_within(&self.g, self.k) else {
            return false;
        };
        let deletions: Vec<Edge> = class.iter().map(|&e| self.to_orig(e)).collect();
        self.k -= deletions.len() as i64;
        self.steps.push(KernelStep::TrivialYes { color, deletions });
        self.g = ColoredGraph::empty(0);
        self.orig.clear();
        true
    }

    fn rr1(&mut self) -> bool {
        let mut dead = vec![false; self.g.n()];
        let mut changed = false;
        for comp in self.g.connected_components() {
            let (sub, map) = self.g.induced_subgraph(&comp).unwrap();
            if detect::is_p3_free(&sub) {
                self.steps.push(KernelStep::RemovedFreeComponent {
                    vertices: self.orig_vertices(&comp),
                });
            } else if comp.len() <= 5 {
                let res = oracle_min_deletions(&sub, None);
                let witness = res.witness.expect("uncapped oracle always answers");
                let deletions = witness
                    .edges
                    .iter()
                    .map(|e| self.to_orig(Edge::new(map[e.u], map[e.v], e.color)))
                    .collect::<Vec<_>>();
                let cost = deletions.len();
                self.k -= cost as i64;
                self.steps.push(KernelStep::SolvedSmallComponent {
                    vertices: self.orig_vertices(&comp),
                    deletions,
                    cost,
                });
            } else {
                continue;
            }
            changed = true;
            for &v in &comp {
                dead[v] = true;
            }
            if self.k < 0 {
                break;
            }
        }
        if changed {
            self.remove_vertices(&dead);
        }
        changed
    }

    fn rr2_once(&mut self) -> bool {
        for b in self.g.bridges() {
            for (u, v) in [(b.u, b.v), (b.v, b.u)] {
                let in_p3 = self
                    .g
                    .adj(v)
                    .iter()
                    .any(|&(w, c)| w != u && c != b.color && !self.g.has_edge(u, w));
                if !in_p3 {
                    continue;
                }
                let side = component_without_edge(&self.g, v, u);
                let (sub, _) = self.g.induced_subgraph(&side).unwrap();
                if !detect::is_p3_free(&sub) {
                    continue;
                }
                self.steps.push(KernelStep::BridgeRule {
                    bridge: self.to_orig(b),
                    removed: self.orig_vertices(&side),
                });
                self.k -= 1;
                self.g.remove_edge_in_place(b.u, b.v).unwrap();
                let mut dead = vec![false; self.g.n()];
                for &x in &side {
                    dead[x] = true;
                }
                self.remove_vertices(&dead);
                return true;
            }
        }
        false
    }

    fn rr2(&mut self) -> bool {
        let mut changed = false;
        while self.k >= 0 && self.rr2_once() {
            changed = true;
        }
        changed
    }

    fn rr3(&mut self) -> bool {
        let mut changed = false;
        'scan: while self.k >= 0 {
            for e in self.g.edges() {
                if detect::p3_witness_count(&self.g, e.u, e.v) as i64 > self.k {
                    self.steps.push(KernelStep::ForcedEdgeDeletion {
                        edge: self.to_orig(e),
                    });
                    self.k -= 1;
                    self.g.remove_edge_in_place(e.u, e.v).unwrap();
                    changed = true;
                    continue 'scan;
                }
            }
            break;
        }
        changed
    }

    fn rr4(&mut self) -> bool {
        let mut changed = false;
        loop {
            let mark = detect::p3_vertices(&self.g);
            let dead: Vec<bool> = (0..self.g.n())
                .map(|v| !mark[v] && self.g.adj(v).iter().all(|&(u, _)| !mark[u]))
                .collect();
            if !dead.iter().any(|&d| d) {
                return changed;
            }
            for v in (0..self.g.n()).filter(|&v| dead[v]) {
                self.steps.push(KernelStep::RemovedVertex { vertex: self.orig[v] });
            }
            self.remove_vertices(&dead);
            changed = true;
        }
    }
}

fn smaller_class_within(g: &ColoredGraph, k: i64) -> Option<(Color, Vec<Edge>)> {
    let color = if g.m_blue() <= g.m_red() {
        Color::Blue
    } else {
        Color::Red
    };
    let class = g.edges_of_color(color);
    (k >= 0 && class.len() as i64 <= k).then_some((color, class))
}

/// Vertices reachable from `start` without using the edge `{start, avoid}`.
fn component_without_edge(g: &ColoredGraph, start: usize, avoid: usize) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    seen[start] = true;
    let mut stack = vec![start];
    let mut out = Vec::new();
    while let Some(x) = stack.pop() {
        out.push(x);
        for &(y, _) in g.adj(x) {
            if (x == start && y == avoid) || seen[y] {
                continue;
            }
            seen[y] = true;
            stack.push(y);
        }
    }
    out.sort_unstable();
    out
}

/// Removes every bicolored-P3-free component and solves every component with
/// at most five vertices exactly.
pub fn rr1_components(inst: &Instance) -> (Instance, KernelTrace) {
    let mut w = Work::new(inst);
    if w.k >= 0 {
        w.rr1();
    }
    w.finish()
}

/// Applies the bridge rule until it no longer matches.
pub fn rr2_bridge(inst: &Instance) -> (Instance, KernelTrace) {
    let mut w = Work::new(inst);
    w.rr2();
    w.finish()
}

/// Deletes edges with more than `k` P3 witness vertices, one at a time.
pub fn rr3_heavy_edge(inst: &Instance) -> (Instance, KernelTrace) {
    let mut w = Work::new(inst);
    w.rr3();
    w.finish()
}

/// Removes vertices whose closed neighborhood meets no bicolored P3.
pub fn rr4_far_vertex(inst: &Instance) -> (Instance, KernelTrace) {
    let mut w = Work::new(inst);
    w.rr4();
    w.finish()
}

/// The smaller color class, if it fits in the budget. Deleting one whole color
/// class always leaves a bicolored-P3-free graph.
pub fn trivial_yes_check(inst: &Instance) -> Option<DeletionSet> {
    smaller_class_within(&inst.graph, inst.k).map(|(_, class)| DeletionSet::new(class))
}

pub fn kernelize(inst: &Instance) -> (Instance, KernelTrace) {
    kernelize_with(inst, KernelConfig::default())
}

/// Trivial-yes check, then the heavy-edge rule, the far-vertex rule and the
/// component rule (plus the bridge rule if enabled), repeated until nothing
/// changes. A negative budget in the result marks a no-instance.
pub fn kernelize_with(inst: &Instance, cfg: KernelConfig) -> (Instance, KernelTrace) {
    let mut w = Work::new(inst);
    while w.k >= 0 {
        if w.trivial_yes() {
            break;
        }
        let mut changed = w.rr3();
        if w.k < 0 {
            break;
        }
        changed |= w.rr4();
        changed |= w.rr1();
        if cfg.bridge_rule && w.k >= 0 {
            changed |= w.rr2();
        }
        if !changed {
            break;
        }
    }
    let (kernel, mut trace) = w.finish();
    if !kernel.is_no_instance() {
        trace.bound = Some(BoundCheck::compute(&kernel.graph, kernel.k));
    }
    (kernel, trace)
}

/// Replays `trace` on `original` and returns the instance it produces.
pub fn replay(original: &Instance, trace: &KernelTrace) -> Result<Instance> {
    if original.graph.n() != trace.original_n || original.k != trace.original_k {
        return Err(BpdError::Trace("trace belongs to a different instance".into()));
    }
    let n = original.graph.n();
    let mut g = original.graph.clone();
    let mut alive = vec![true; n];
    let mut k = original.k;
    let kill = |alive: &mut Vec<bool>, v: usize| -> Result<()> {
        match alive.get_mut(v) {
            Some(a) if *a => {
                *a = false;
                Ok(())
            }
            _ => Err(BpdError::Trace(format!("vertex {v} removed twice or out of range"))),
        }
    };
    for step in &trace.steps {
        for e in step.forced_edges() {
            match g.color(e.u, e.v) {
                Some(c) if c == e.color && alive[e.u] && alive[e.v] => {
                    g.remove_edge_in_place(e.u, e.v)?;
                }
                _ => return Err(BpdError::Trace(format!("step deletes missing edge {e}"))),
            }
        }
        k -= step.cost() as i64;
        match step {
            KernelStep::RemovedFreeComponent { vertices }
            | KernelStep::SolvedSmallComponent { vertices, .. }
            | KernelStep::BridgeRule {
                removed: vertices, ..
            } => {
                for &v in vertices {
                    kill(&mut alive, v)?;
                }
            }
            KernelStep::RemovedVertex { vertex } => kill(&mut alive, *vertex)?,
            KernelStep::TrivialYes { .. } => alive.iter_mut().for_each(|a| *a = false),
            KernelStep::ForcedEdgeDeletion { .. } => {}
        }
    }
    let keep: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    if keep != trace.kernel_to_original {
        return Err(BpdError::Trace("surviving vertices disagree with the relabeling".into()));
    }
    if k != trace.kernel_k {
        return Err(BpdError::Trace(format!(
            "replayed budget {k} disagrees with recorded {}",
            trace.kernel_k
        )));
    }
    let (kernel, _) = g.induced_subgraph(&keep)?;
    Ok(Instance::new(kernel, k))
}

/// Maps a kernel solution to a solution of the original instance.
pub fn lift_solution(trace: &KernelTrace, kernel_solution: &DeletionSet) -> Result<DeletionSet> {
    let map = &trace.kernel_to_original;
    let mut out = Vec::with_capacity(kernel_solution.len() + trace.total_cost());
    for e in &kernel_solution.edges {
        if e.v >= map.len() {
            return Err(BpdError::Trace(format!("kernel edge {e} outside the kernel")));
        }
        out.push(Edge::new(map[e.u], map[e.v], e.color));
    }
    for step in &trace.steps {
        out.extend(step.forced_edges());
    }
    let lifted = DeletionSet::new(out);
    if lifted.len() != kernel_solution.len() + trace.total_cost() {
        return Err(BpdError::Trace("forced deletions overlap".into()));
    }
    Ok(lifted)
}
