//! Location of bicolored P3s and the fixed colored patterns the solvers branch on.
//!
//! All pattern matches are induced: pairs that a template leaves out must be
//! non-edges. Every template is matched in both color orientations; the
//! `orientation` of a match is the color playing the part of "blue" in the
//! canonical picture (the color of `{u, v}`).

use serde::Serialize;

use crate::error::{BpdError, Result};
use crate::graph::{Color, ColoredGraph, Edge};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum StructureKind {
    BicoloredP3,
    MonoP3,
    MonoK3,
    BicoloredK3,
    EndangeredK3,
    LCDiamond,
    LODiamond,
    IIZDiamond,
    CCHourglass,
    MultiConflictEdge,
}

impl StructureKind {
    pub const ALL: [StructureKind; 10] = [
        StructureKind::BicoloredP3,
        StructureKind::MonoP3,
        StructureKind::MonoK3,
        StructureKind::BicoloredK3,
        StructureKind::EndangeredK3,
        StructureKind::LCDiamond,
        StructureKind::LODiamond,
        StructureKind::IIZDiamond,
        StructureKind::CCHourglass,
        StructureKind::MultiConflictEdge,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StructureKind::BicoloredP3 => "bicolored_p3",
            StructureKind::MonoP3 => "mono_p3",
            StructureKind::MonoK3 => "mono_k3",
            StructureKind::BicoloredK3 => "bicolored_k3",
            StructureKind::EndangeredK3 => "endangered_k3",
            StructureKind::LCDiamond => "lc_diamond",
            StructureKind::LODiamond => "lo_diamond",
            StructureKind::IIZDiamond => "iiz_diamond",
            StructureKind::CCHourglass => "cc_hourglass",
            StructureKind::MultiConflictEdge => "multi_conflict_edge",
        }
    }
}

/// What a template says about one vertex pair of a witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairRole {
    /// Edge with the orientation color.
    Same,
    /// Edge with the opposite color.
    Other,
    Absent,
}

use PairRole::{Absent, Other, Same};

/// Role table for the four branching patterns, indexed by witness positions.
///
/// Positions are `u=0, v=1, w=2, z=3` for the diamonds and
/// `u=0, v=1, w=2, z1=3, z2=4` for the hourglass. Every pair is listed.
pub fn template(kind: StructureKind) -> &'static [(usize, usize, PairRole)] {
    const LC: [(usize, usize, PairRole); 6] = [
        (0, 1, Same),
        (1, 2, Other),
        (0, 3, Same),
        (1, 3, Other),
        (2, 3, Same),
        (0, 2, Absent),
    ];
    const LO: [(usize, usize, PairRole); 6] = [
        (0, 1, Same),
        (1, 2, Other),
        (0, 3, Same),
        (1, 3, Same),
        (2, 3, Other),
        (0, 2, Absent),
    ];
    const IIZ: [(usize, usize, PairRole); 6] = [
        (0, 1, Same),
        (1, 2, Other),
        (0, 3, Other),
        (1, 3, Same),
        (2, 3, Same),
        (0, 2, Absent),
    ];
    const CC: [(usize, usize, PairRole); 10] = [
        (0, 1, Same),
        (1, 2, Other),
        (0, 3, Same),
        (1, 3, Other),
        (1, 4, Same),
        (2, 4, Other),
        (0, 2, Absent),
        (0, 4, Absent),
        (2, 3, Absent),
        (3, 4, Absent),
    ];
    match kind {
        StructureKind::LCDiamond => &LC,
        StructureKind::LODiamond => &LO,
        StructureKind::IIZDiamond => &IIZ,
        StructureKind::CCHourglass => &CC,
        _ => &[],
    }
}

/// One located pattern.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForbiddenStructure {
    pub kind: StructureKind,
    /// Vertices in role order (`u, v, w[, z | z1, z2]`). For a multi-conflict edge
    /// this is the sorted vertex set of its three edges.
    pub witness: Vec<usize>,
    /// Color of `{u, v}` in the canonical picture.
    pub orientation: Color,
    /// The edges of the pattern. For a multi-conflict edge: `[e1, e2, e3]`
    /// where `e1` forms a bicolored P3 with `e2` and with `e3`.
    pub edges: Vec<Edge>,
}

impl ForbiddenStructure {
    /// Edge between witness positions `i` and `j`. Panics if absent.
    pub fn role_edge(&self, g: &ColoredGraph, i: usize, j: usize) -> Edge {
        g.edge(self.witness[i], self.witness[j])
            .expect("witness pair is an edge")
    }
}

/// Checks a witness tuple against a branching-pattern template.
///
/// Returns the orientation if it matches.
pub fn match_template(g: &ColoredGraph, kind: StructureKind, witness: &[usize]) -> Option<Color> {
    let t = template(kind);
    let c = g.color(witness[0], witness[1])?;
    for &(i, j, role) in t {
        let actual = g.color(witness[i], witness[j]);
        let ok = match role {
            Same => actual == Some(c),
            Other => actual == Some(c.other()),
            Absent => actual.is_none(),
        };
        if !ok {
            return None;
        }
    }
    Some(c)
}

fn pattern(g: &ColoredGraph, kind: StructureKind, witness: Vec<usize>, c: Color) -> ForbiddenStructure {
    let edges = template(kind)
        .iter()
        .filter(|(_, _, r)| *r != Absent)
        .map(|&(i, j, _)| g.edge(witness[i], witness[j]).unwrap())
        .collect();
    ForbiddenStructure {
        kind,
        witness,
        orientation: c,
        edges,
    }
}

/// Every induced bicolored P3 exactly once, as `(u, v, w)` with center `v` and `u < w`.
///
/// Ordered by center, then by `(u, w)`.
pub fn enumerate_bicolored_p3(g: &ColoredGraph) -> Vec<ForbiddenStructure> {
    let mut out = Vec::new();
    for_each_p3(g, |u, v, w| {
        let c = g.color(u, v).unwrap();
        out.push(ForbiddenStructure {
            kind: StructureKind::BicoloredP3,
            witness: vec![u, v, w],
            orientation: c,
            edges: vec![Edge::new(u, v, c), Edge::new(v, w, c.other())],
        });
    });
    out
}

/// Calls `f(u, v, w)` for every induced bicolored P3 with center `v` and `u < w`.
pub fn for_each_p3<F: FnMut(usize, usize, usize)>(g: &ColoredGraph, mut f: F) {
    for v in 0..g.n() {
        let nb = g.adj(v);
        for (i, &(u, cu)) in nb.iter().enumerate() {
            for &(w, cw) in &nb[i + 1..] {
                if cu != cw && !g.has_edge(u, w) {
                    f(u, v, w);
                }
            }
        }
    }
}

pub fn count_bicolored_p3(g: &ColoredGraph) -> usize {
    let mut count = 0;
    for_each_p3(g, |_, _, _| count += 1);
    count
}

pub fn is_p3_free(g: &ColoredGraph) -> bool {
    for v in 0..g.n() {
        let nb = g.adj(v);
        for (i, &(u, cu)) in nb.iter().enumerate() {
            for &(w, cw) in &nb[i + 1..] {
                if cu != cw && !g.has_edge(u, w) {
                    return false;
                }
            }
        }
    }
    true
}

/// Marks the vertices that lie in at least one bicolored P3.
pub fn p3_vertices(g: &ColoredGraph) -> Vec<bool> {
    let mut mark = vec![false; g.n()];
    for_each_p3(g, |u, v, w| {
        mark[u] = true;
        mark[v] = true;
        mark[w] = true;
    });
    mark
}

/// All edges forming an induced bicolored P3 together with `e`, in canonical order.
pub fn p3_partners(g: &ColoredGraph, e: (usize, usize)) -> Result<Vec<Edge>> {
    let (a, b) = e;
    if a >= g.n() || b >= g.n() || !g.has_edge(a, b) {
        return Err(BpdError::MissingEdge(a.min(b), a.max(b)));
    }
    Ok(partners_unchecked(g, a, b))
}

pub(crate) fn partners_unchecked(g: &ColoredGraph, a: usize, b: usize) -> Vec<Edge> {
    let c = g.color(a, b).unwrap();
    let mut out = Vec::new();
    for (x, y) in [(a, b), (b, a)] {
        for &(z, cz) in g.adj(x) {
            if z != y && cz != c && !g.has_edge(z, y) {
                out.push(Edge::new(x, z, cz));
            }
        }
    }
    out.sort_unstable();
    out
}

/// Number of vertices `w` with `G[{a, b, w}]` an induced bicolored P3.
pub fn p3_witness_count(g: &ColoredGraph, a: usize, b: usize) -> usize {
    let c = match g.color(a, b) {
        Some(c) => c,
        None => return 0,
    };
    let mut count = 0;
    for (x, y) in [(a, b), (b, a)] {
        for &(z, cz) in g.adj(x) {
            if z != y && cz != c && !g.has_edge(z, y) {
                count += 1;
            }
        }
    }
    count
}

fn first_multi_conflict(g: &ColoredGraph) -> Option<ForbiddenStructure> {
    for e in g.edges() {
        if p3_witness_count(g, e.u, e.v) < 2 {
            continue;
        }
        let partners = partners_unchecked(g, e.u, e.v);
        let (e2, e3) = (partners[0], partners[1]);
        let mut witness = vec![e.u, e.v, e2.u, e2.v, e3.u, e3.v];
        witness.sort_unstable();
        witness.dedup();
        return Some(ForbiddenStructure {
            kind: StructureKind::MultiConflictEdge,
            witness,
            orientation: e.color,
            edges: vec![e, e2, e3],
        });
    }
    None
}

/// Edges that form a bicolored P3 with at least two other edges, each with its
/// first two partners.
pub fn enumerate_multi_conflict(g: &ColoredGraph) -> Vec<ForbiddenStructure> {
    let mut out = Vec::new();
    for e in g.edges() {
        let partners = partners_unchecked(g, e.u, e.v);
        if partners.len() >= 2 {
            let mut witness = vec![e.u, e.v, partners[0].u, partners[0].v, partners[1].u, partners[1].v];
            witness.sort_unstable();
            witness.dedup();
            out.push(ForbiddenStructure {
                kind: StructureKind::MultiConflictEdge,
                witness,
                orientation: e.color,
                edges: vec![e, partners[0], partners[1]],
            });
        }
    }
    out
}

/// Ordered P3 scan `(u, v, w)`: `{u, v}` and `{v, w}` differ in color and `u, w`
/// are non-adjacent. Visits in lexicographic order of `(u, v, w)`. Stops when
/// `f` returns `true`.
fn scan_ordered_p3<F: FnMut(usize, usize, usize) -> bool>(g: &ColoredGraph, mut f: F) -> bool {
    for u in 0..g.n() {
        for &(v, c1) in g.adj(u) {
            for &(w, c2) in g.adj(v) {
                if w != u && c2 != c1 && !g.has_edge(u, w) && f(u, v, w) {
                    return true;
                }
            }
        }
    }
    false
}

fn scan_diamonds<F: FnMut(ForbiddenStructure) -> bool>(g: &ColoredGraph, kind: StructureKind, mut f: F) {
    scan_ordered_p3(g, |u, v, w| {
        for &(z, _) in g.adj(u) {
            if z == v || !g.has_edge(v, z) || !g.has_edge(w, z) {
                continue;
            }
            let witness = [u, v, w, z];
            if let Some(c) = match_template(g, kind, &witness) {
                if f(pattern(g, kind, witness.to_vec(), c)) {
                    return true;
                }
            }
        }
        false
    });
}

fn scan_hourglasses<F: FnMut(ForbiddenStructure) -> bool>(g: &ColoredGraph, mut f: F) {
    scan_ordered_p3(g, |u, v, w| {
        for &(z1, _) in g.adj(u) {
            if z1 == v || !g.has_edge(v, z1) || g.has_edge(w, z1) {
                continue;
            }
            for &(z2, _) in g.adj(v) {
                if z2 == u || z2 == w || z2 == z1 || !g.has_edge(w, z2) {
                    continue;
                }
                let witness = [u, v, w, z1, z2];
                if let Some(c) = match_template(g, StructureKind::CCHourglass, &witness) {
                    if f(pattern(g, StructureKind::CCHourglass, witness.to_vec(), c)) {
                        return true;
                    }
                }
            }
        }
        false
    });
}

/// Every witness tuple (in role order) matching the pattern `kind`.
///
/// Supports the four branching patterns; a witness tuple and its role
/// assignment identify a match, so one vertex set may be reported more than once.
pub fn enumerate_pattern(g: &ColoredGraph, kind: StructureKind) -> Vec<ForbiddenStructure> {
    let mut out = Vec::new();
    match kind {
        StructureKind::LCDiamond | StructureKind::LODiamond | StructureKind::IIZDiamond => {
            scan_diamonds(g, kind, |s| {
                out.push(s);
                false
            })
        }
        StructureKind::CCHourglass => scan_hourglasses(g, |s| {
            out.push(s);
            false
        }),
        _ => panic!("enumerate_pattern: {kind:?} is not a branching pattern"),
    }
    out
}

/// First match of a branching pattern in lexicographic witness order.
pub fn first_pattern(g: &ColoredGraph, kind: StructureKind) -> Option<ForbiddenStructure> {
    let mut found = None;
    let mut keep = |s| {
        found = Some(s);
        true
    };
    match kind {
        StructureKind::LCDiamond | StructureKind::LODiamond | StructureKind::IIZDiamond => {
            scan_diamonds(g, kind, &mut keep)
        }
        StructureKind::CCHourglass => scan_hourglasses(g, &mut keep),
        StructureKind::MultiConflictEdge => return first_multi_conflict(g),
        _ => panic!("first_pattern: {kind:?} is not a branching pattern"),
    }
    found
}

/// Scan order used by [`find_branch_structure`].
pub const BRANCH_ORDER: [StructureKind; 5] = [
    StructureKind::MultiConflictEdge,
    StructureKind::LCDiamond,
    StructureKind::LODiamond,
    StructureKind::IIZDiamond,
    StructureKind::CCHourglass,
];

/// The first structure to branch on, or `None` if `g` is nice.
pub fn find_branch_structure(g: &ColoredGraph) -> Option<ForbiddenStructure> {
    BRANCH_ORDER.iter().find_map(|&k| first_pattern(g, k))
}

/// No diamond or hourglass pattern, and every edge has at most one P3 partner.
pub fn is_nice(g: &ColoredGraph) -> bool {
    find_branch_structure(g).is_none()
}

/// Triangles `(u, v, w)` with `u < v < w`.
fn for_each_triangle<F: FnMut(usize, usize, usize) -> bool>(g: &ColoredGraph, mut f: F) -> bool {
    for u in 0..g.n() {
        let nb = g.adj(u);
        let start = nb.partition_point(|&(x, _)| x < u);
        for (i, &(v, _)) in nb[start..].iter().enumerate() {
            for &(w, _) in &nb[start + i + 1..] {
                if g.has_edge(v, w) && f(u, v, w) {
                    return true;
                }
            }
        }
    }
    false
}

/// Bicolored K3 in role order: apex `u` is shared by the two same-colored edges.
fn bicolored_k3(g: &ColoredGraph, a: usize, b: usize, c: usize) -> Option<ForbiddenStructure> {
    let ab = g.color(a, b)?;
    let ac = g.color(a, c)?;
    let bc = g.color(b, c)?;
    let (apex, x, y, same) = if ab == ac && bc != ab {
        (a, b, c, ab)
    } else if ab == bc && ac != ab {
        (b, a, c, ab)
    } else if ac == bc && ab != ac {
        (c, a, b, ac)
    } else {
        return None;
    };
    Some(ForbiddenStructure {
        kind: StructureKind::BicoloredK3,
        witness: vec![apex, x, y],
        orientation: same,
        edges: vec![
            Edge::new(apex, x, same),
            Edge::new(apex, y, same),
            Edge::new(x, y, same.other()),
        ],
    })
}

pub fn enumerate_bicolored_k3(g: &ColoredGraph) -> Vec<ForbiddenStructure> {
    let mut out = Vec::new();
    for_each_triangle(g, |u, v, w| {
        out.extend(bicolored_k3(g, u, v, w));
        false
    });
    out
}

fn is_endangered(g: &ColoredGraph, k3: &ForbiddenStructure) -> bool {
    k3.edges[..2]
        .iter()
        .any(|e| p3_witness_count(g, e.u, e.v) > 0)
}

/// Bicolored K3s where one of the two same-colored edges lies in a bicolored P3 of `g`.
pub fn enumerate_endangered_k3(g: &ColoredGraph) -> Vec<ForbiddenStructure> {
    enumerate_bicolored_k3(g)
        .into_iter()
        .filter(|s| is_endangered(g, s))
        .map(|mut s| {
            s.kind = StructureKind::EndangeredK3;
            s
        })
        .collect()
}

pub fn find_endangered_k3(g: &ColoredGraph) -> Option<ForbiddenStructure> {
    let mut found = None;
    for_each_triangle(g, |u, v, w| {
        if let Some(mut s) = bicolored_k3(g, u, v, w) {
            if is_endangered(g, &s) {
                s.kind = StructureKind::EndangeredK3;
                found = Some(s);
                return true;
            }
        }
        false
    });
    found
}

/// Monochromatic triangles, `u < v < w`.
pub fn enumerate_mono_k3(g: &ColoredGraph) -> Vec<ForbiddenStructure> {
    let mut out = Vec::new();
    for_each_triangle(g, |u, v, w| {
        let c = g.color(u, v).unwrap();
        if g.color(u, w) == Some(c) && g.color(v, w) == Some(c) {
            out.push(ForbiddenStructure {
                kind: StructureKind::MonoK3,
                witness: vec![u, v, w],
                orientation: c,
                edges: vec![Edge::new(u, v, c), Edge::new(u, w, c), Edge::new(v, w, c)],
            });
        }
        false
    });
    out
}

/// Induced monochromatic P3s `(u, v, w)`, center `v`, `u < w`.
pub fn enumerate_mono_p3(g: &ColoredGraph) -> Vec<ForbiddenStructure> {
    let mut out = Vec::new();
    for v in 0..g.n() {
        let nb = g.adj(v);
        for (i, &(u, cu)) in nb.iter().enumerate() {
            for &(w, cw) in &nb[i + 1..] {
                if cu == cw && !g.has_edge(u, w) {
                    out.push(ForbiddenStructure {
                        kind: StructureKind::MonoP3,
                        witness: vec![u, v, w],
                        orientation: cu,
                        edges: vec![Edge::new(u, v, cu), Edge::new(v, w, cu)],
                    });
                }
            }
        }
    }
    out
}

fn has_mono_p3(g: &ColoredGraph) -> bool {
    for v in 0..g.n() {
        let nb = g.adj(v);
        for (i, &(u, cu)) in nb.iter().enumerate() {
            for &(w, cw) in &nb[i + 1..] {
                if cu == cw && !g.has_edge(u, w) {
                    return true;
                }
            }
        }
    }
    false
}

fn has_mono_k3(g: &ColoredGraph) -> bool {
    for_each_triangle(g, |u, v, w| {
        let c = g.color(u, v);
        g.color(u, w) == c && g.color(v, w) == c
    })
}

/// Graph-class flags used to pick a solver.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClassFlags {
    pub bicolored_p3_free: bool,
    pub endangered_k3_free: bool,
    /// No monochromatic K3 and no monochromatic P3.
    pub mono_free: bool,
    pub max_degree_le_2: bool,
}

pub fn classify(g: &ColoredGraph) -> ClassFlags {
    let mono_free = !has_mono_p3(g) && !has_mono_k3(g);
    if mono_free {
        // Without monochromatic K3s and P3s, each color class has maximum degree two.
        let s = g.stats(0);
        assert!(
            s.max_blue_degree <= 2 && s.max_red_degree <= 2,
            "mono-free graph with color degree above two: {g:?}"
        );
    }
    ClassFlags {
        bicolored_p3_free: is_p3_free(g),
        endangered_k3_free: find_endangered_k3(g).is_none(),
        mono_free,
        max_degree_le_2: g.max_degree() <= 2,
    }
}

/// A maximal set of edge-disjoint bicolored P3s, each as `(edge at u, edge at w)`.
///
/// Greedy in [`for_each_p3`] order. Its size is a lower bound on the number of
/// deletions any solution needs.
pub fn greedy_p3_packing(g: &ColoredGraph) -> Vec<(Edge, Edge)> {
    let mut used = std::collections::HashSet::new();
    let mut out = Vec::new();
    for_each_p3(g, |u, v, w| {
        let a = (u.min(v), u.max(v));
        let b = (v.min(w), v.max(w));
        if !used.contains(&a) && !used.contains(&b) {
            used.insert(a);
            used.insert(b);
            out.push((g.edge(u, v).unwrap(), g.edge(v, w).unwrap()));
        }
    });
    out
}

/// Size of a maximum edge-disjoint bicolored-P3 packing, found by exhaustive
/// search. Stops early once a packing of size `target` is found.
///
/// Exponential; meant for gadget-sized graphs.
pub fn max_p3_packing(g: &ColoredGraph, target: Option<usize>) -> (usize, Vec<(Edge, Edge)>) {
    let mut p3s: Vec<(usize, usize)> = Vec::new();
    let edges = g.edges();
    let index = |a: usize, b: usize| -> usize {
        let e = g.edge(a, b).unwrap();
        edges.binary_search(&e).unwrap()
    };
    for_each_p3(g, |u, v, w| p3s.push((index(u, v), index(v, w))));

    struct Search<'a> {
        p3s: &'a [(usize, usize)],
        used: Vec<bool>,
        chosen: Vec<usize>,
        best: Vec<usize>,
        target: usize,
    }

    impl Search<'_> {
        fn run(&mut self, from: usize) -> bool {
            if self.chosen.len() > self.best.len() {
                self.best = self.chosen.clone();
                if self.best.len() >= self.target {
                    return true;
                }
            }
            let remaining = self.p3s[from..]
                .iter()
                .filter(|&&(a, b)| !self.used[a] && !self.used[b])
                .count();
            if self.chosen.len() + remaining <= self.best.len() {
                return false;
            }
            for i in from..self.p3s.len() {
                let (a, b) = self.p3s[i];
                if self.used[a] || self.used[b] {
                    continue;
                }
                self.used[a] = true;
                self.used[b] = true;
                self.chosen.push(i);
                let done = self.run(i + 1);
                self.chosen.pop();
                self.used[a] = false;
                self.used[b] = false;
                if done {
                    return true;
                }
                let remaining = self.p3s[i + 1..]
                    .iter()
                    .filter(|&&(a, b)| !self.used[a] && !self.used[b])
                    .count();
                if self.chosen.len() + remaining <= self.best.len() {
                    return false;
                }
            }
            false
        }
    }

    let mut s = Search {
        p3s: &p3s,
        used: vec![false; edges.len()],
        chosen: Vec::new(),
        best: Vec::new(),
        target: target.unwrap_or(usize::MAX),
    };
    s.run(0);
    let packing = s
        .best
        .iter()
        .map(|&i| (edges[p3s[i].0], edges[p3s[i].1]))
        .collect::<Vec<_>>();
    (packing.len(), packing)
}
