//! Brute-force references shared by the integration tests. Nothing here calls
//! into the solver code; graphs are copied into an adjacency matrix first.

#![allow(dead_code)]

use bpd::{Color, ColoredGraph};

pub const NONE: u8 = 0;
pub const RED: u8 = 1;
pub const BLUE: u8 = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub n: usize,
    cells: Vec<u8>,
}

impl Mat {
    pub fn new(n: usize) -> Mat {
        Mat { n, cells: vec![NONE; n * n] }
    }

    pub fn of(g: &ColoredGraph) -> Mat {
        let mut m = Mat::new(g.n());
        for e in g.edges() {
            m.set(e.u, e.v, if e.color == Color::Red { RED } else { BLUE });
        }
        m
    }

    pub fn get(&self, a: usize, b: usize) -> u8 {
        self.cells[a * self.n + b]
    }

    pub fn set(&mut self, a: usize, b: usize, c: u8) {
        self.cells[a * self.n + b] = c;
        self.cells[b * self.n + a] = c;
    }

    pub fn edges(&self) -> Vec<(usize, usize, u8)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                if self.get(a, b) != NONE {
                    out.push((a, b, self.get(a, b)));
                }
            }
        }
        out
    }

    pub fn degree(&self, v: usize, c: u8) -> usize {
        (0..self.n).filter(|&x| self.get(v, x) == c).count()
    }

    /// All bicolored P3s as `(u, v, w)` with center `v` and `u < w`.
    pub fn p3s(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for v in 0..self.n {
            for u in 0..self.n {
                for w in u + 1..self.n {
                    if u == v || w == v {
                        continue;
                    }
                    let (a, b) = (self.get(u, v), self.get(v, w));
                    if a != NONE && b != NONE && a != b && self.get(u, w) == NONE {
                        out.push((u, v, w));
                    }
                }
            }
        }
        out
    }

    pub fn first_p3(&self) -> Option<(usize, usize, usize)> {
        for v in 0..self.n {
            for u in 0..self.n {
                if u == v || self.get(u, v) == NONE {
                    continue;
                }
                for w in u + 1..self.n {
                    if w == v {
                        continue;
                    }
                    let (a, b) = (self.get(u, v), self.get(v, w));
                    if b != NONE && a != b && self.get(u, w) == NONE {
                        return Some((u, v, w));
                    }
                }
            }
        }
        None
    }

    pub fn p3_free(&self) -> bool {
        self.first_p3().is_none()
    }
}

fn fits(m: &mut Mat, budget: usize) -> bool {
    let Some((u, v, w)) = m.first_p3() else { return true };
    if budget == 0 {
        return false;
    }
    for (a, b) in [(u, v), (v, w)] {
        let c = m.get(a, b);
        m.set(a, b, NONE);
        let ok = fits(m, budget - 1);
        m.set(a, b, c);
        if ok {
            return true;
        }
    }
    false
}

/// Minimum number of deletions: every solution hits one of the two edges of any
/// bicolored P3, so branching on both is exhaustive.
pub fn brute_opt(g: &ColoredGraph) -> usize {
    let mut m = Mat::of(g);
    (0..).find(|&b| fits(&mut m, b)).unwrap()
}

pub fn brute_decide(g: &ColoredGraph, k: i64) -> bool {
    k >= 0 && fits(&mut Mat::of(g), k as usize)
}

/// `S` is a set of edges of `g`, `|S| <= k` and `G - S` has no bicolored P3.
/// A deletion set found by repeatedly removing the edge in the most P3s.
pub fn greedy_solution(g: &ColoredGraph) -> Vec<(usize, usize)> {
    let mut m = Mat::of(g);
    let mut out = Vec::new();
    loop {
        let mut count = std::collections::HashMap::new();
        for (u, v, w) in m.p3s() {
            *count.entry((u.min(v), u.max(v))).or_insert(0) += 1;
            *count.entry((v.min(w), v.max(w))).or_insert(0) += 1;
        }
        let Some((&(a, b), _)) = count.iter().max_by_key(|&(&e, &c)| (c, std::cmp::Reverse(e))) else {
            return out;
        };
        m.set(a, b, NONE);
        out.push((a, b));
    }
}

pub fn is_solution(g: &ColoredGraph, pairs: &[(usize, usize)], k: i64) -> bool {
    let mut m = Mat::of(g);
    let mut seen = std::collections::HashSet::new();
    for &(a, b) in pairs {
        if a >= m.n || b >= m.n || m.get(a, b) == NONE || !seen.insert((a.min(b), a.max(b))) {
            return false;
        }
        m.set(a, b, NONE);
    }
    pairs.len() as i64 <= k && m.p3_free()
}

/// Maximum matching by simple augmenting paths; `adj[l]` lists right vertices.
pub fn kuhn_matching(nl: usize, nr: usize, adj: &[Vec<usize>]) -> usize {
    fn augment(l: usize, adj: &[Vec<usize>], seen: &mut [bool], mate: &mut [Option<usize>]) -> bool {
        for &r in &adj[l] {
            if seen[r] {
                continue;
            }
            seen[r] = true;
            if mate[r].is_none() || augment(mate[r].unwrap(), adj, seen, mate) {
                mate[r] = Some(l);
                return true;
            }
        }
        false
    }
    let mut mate = vec![None; nr];
    (0..nl).filter(|&l| augment(l, adj, &mut vec![false; nr], &mut mate)).count()
}

/// Largest set of pairwise edge-disjoint bicolored P3s. Two P3s can only share
/// an edge of one color, so this is a matching between red and blue edges.
pub fn max_disjoint_p3(m: &Mat) -> usize {
    let edges = m.edges();
    let index = |a: usize, b: usize| edges.iter().position(|e| (e.0, e.1) == (a.min(b), a.max(b))).unwrap();
    let reds: Vec<usize> = (0..edges.len()).filter(|&i| edges[i].2 == RED).collect();
    let blues: Vec<usize> = (0..edges.len()).filter(|&i| edges[i].2 == BLUE).collect();
    let mut adj = vec![Vec::new(); reds.len()];
    for (u, v, w) in m.p3s() {
        let (x, y) = (index(u, v), index(v, w));
        let (r, b) = if edges[x].2 == RED { (x, y) } else { (y, x) };
        let l = reds.iter().position(|&i| i == r).unwrap();
        let rr = blues.iter().position(|&i| i == b).unwrap();
        if !adj[l].contains(&rr) {
            adj[l].push(rr);
        }
    }
    kuhn_matching(reds.len(), blues.len(), &adj)
}

/// Satisfiability by trying all assignments.
pub fn sat_by_enumeration(num_vars: usize, clauses: &[[i32; 3]]) -> bool {
    (0u64..1 << num_vars).any(|bits| {
        clauses.iter().all(|c| {
            c.iter().any(|&lit| {
                let value = bits >> (lit.unsigned_abs() - 1) & 1 == 1;
                value == (lit > 0)
            })
        })
    })
}

/// Kernel size bound `6kΔ·min(k, 2Δ) + 6k·min(k, 2Δ)`.
pub fn kernel_size_bound(k: i64, delta: usize) -> u64 {
    let k = k.max(0) as u64;
    let d = delta as u64;
    let mm = k.min(2 * d);
    6 * k * d * mm + 6 * k * mm
}

pub fn from_mat(m: &Mat) -> ColoredGraph {
    ColoredGraph::from_edges(
        m.n,
        m.edges()
            .into_iter()
            .map(|(a, b, c)| (a, b, if c == RED { Color::Red } else { Color::Blue })),
    )
    .unwrap()
}

/// No monochromatic P3 and no monochromatic K3.
pub fn mono_free(m: &Mat) -> bool {
    for v in 0..m.n {
        for u in 0..m.n {
            for w in u + 1..m.n {
                if u == v || w == v {
                    continue;
                }
                let c = m.get(u, v);
                if c != NONE && m.get(v, w) == c && (m.get(u, w) == NONE || m.get(u, w) == c) {
                    return false;
                }
            }
        }
    }
    true
}

fn tuples(n: usize, len: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if cur.len() == len {
        return f(cur);
    }
    for x in 0..n {
        if !cur.contains(&x) {
            cur.push(x);
            let stop = tuples(n, len, cur, f);
            cur.pop();
            if stop {
                return true;
            }
        }
    }
    false
}

/// Whether some vertex tuple matches the role table of `kind` in either
/// orientation.
pub fn has_pattern(m: &Mat, kind: bpd::detect::StructureKind) -> bool {
    use bpd::detect::PairRole;
    let table = bpd::detect::template(kind);
    let size = table.iter().map(|&(i, j, _)| i.max(j)).max().unwrap() + 1;
    tuples(m.n, size, &mut Vec::new(), &mut |t| {
        [RED, BLUE].iter().any(|&same| {
            let other = if same == RED { BLUE } else { RED };
            table.iter().all(|&(i, j, role)| {
                let c = m.get(t[i], t[j]);
                match role {
                    PairRole::Same => c == same,
                    PairRole::Other => c == other,
                    PairRole::Absent => c == NONE,
                }
            })
        })
    })
}

/// Every edge lies in at most one bicolored P3 and none of the four branching
/// patterns occurs.
pub fn nice_brute(m: &Mat) -> bool {
    let mut count = std::collections::HashMap::new();
    for (u, v, w) in m.p3s() {
        for e in [(u.min(v), u.max(v)), (v.min(w), v.max(w))] {
            *count.entry(e).or_insert(0) += 1;
        }
    }
    if count.values().any(|&c| c > 1) {
        return false;
    }
    use bpd::detect::StructureKind::*;
    ![LCDiamond, LODiamond, IIZDiamond, CCHourglass]
        .into_iter()
        .any(|k| has_pattern(m, k))
}
