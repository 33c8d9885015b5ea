//! Two-edge-colored simple graphs.
//!
//! A [`ColoredGraph`] has vertices `0..n` and an edge set partitioned into red and
//! blue edges. Graphs are immutable values: [`ColoredGraph::delete_edges`] and
//! [`ColoredGraph::induced_subgraph`] return new graphs and leave the receiver untouched.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{BpdError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }

    /// Single-letter code used by the text format.
    pub fn code(self) -> char {
        match self {
            Color::Red => 'r',
            Color::Blue => 'b',
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Color::Red => write!(f, "red"),
            Color::Blue => write!(f, "blue"),
        }
    }
}

/// An undirected colored edge, always stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub color: Color,
}

impl Edge {
    /// Builds a normalized edge. Panics on a self-loop.
    pub fn new(a: usize, b: usize, color: Color) -> Edge {
        assert_ne!(a, b, "self-loop {a}");
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        Edge { u, v, color }
    }

    pub fn pair(&self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn touches(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint that is not `x`. `x` must be an endpoint.
    pub fn other_end(&self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            debug_assert_eq!(self.v, x);
            self.u
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}:{}", self.u, self.v, self.color.code())
    }
}

pub fn normalize(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Simple undirected graph whose edges are red or blue.
///
/// Each vertex keeps a neighbor list sorted by neighbor id, which doubles as the
/// pair-to-color map: [`ColoredGraph::color`] is a binary search in the shorter
/// of the two endpoint lists.
#[derive(Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    adj: Vec<Vec<(usize, Color)>>,
    m_red: usize,
    m_blue: usize,
}

/// Size and degree summary of an instance (graph plus budget).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceStats {
    pub n: usize,
    pub m: usize,
    pub m_red: usize,
    pub m_blue: usize,
    pub max_degree: usize,
    pub max_blue_degree: usize,
    pub max_red_degree: usize,
    /// Dual parameter `m - k`.
    pub dual: i64,
}

impl ColoredGraph {
    pub fn empty(n: usize) -> ColoredGraph {
        ColoredGraph {
            adj: vec![Vec::new(); n],
            m_red: 0,
            m_blue: 0,
        }
    }

    /// Builds a graph from `(u, v, color)` triples.
    ///
    /// Rejects self-loops, out-of-range ids and repeated vertex pairs.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<ColoredGraph>
    where
        I: IntoIterator<Item = (usize, usize, Color)>,
    {
        let mut g = ColoredGraph::empty(n);
        for (a, b, c) in edges {
            g.check_vertex(a)?;
            g.check_vertex(b)?;
            if a == b {
                return Err(BpdError::SelfLoop(a));
            }
            g.adj[a].push((b, c));
            g.adj[b].push((a, c));
            match c {
                Color::Red => g.m_red += 1,
                Color::Blue => g.m_blue += 1,
            }
        }
        for (x, list) in g.adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0].0 == w[1].0) {
                let (u, v) = normalize(x, w[0].0);
                return Err(BpdError::DuplicateEdge(u, v));
            }
        }
        Ok(g)
    }

    pub fn from_edge_list(n: usize, edges: &[Edge]) -> Result<ColoredGraph> {
        ColoredGraph::from_edges(n, edges.iter().map(|e| (e.u, e.v, e.color)))
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m_red + self.m_blue
    }

    pub fn m_red(&self) -> usize {
        self.m_red
    }

    pub fn m_blue(&self) -> usize {
        self.m_blue
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(BpdError::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    /// Open neighborhood of `v` with edge colors, sorted by neighbor.
    pub fn neighbors(&self, v: usize) -> Result<&[(usize, Color)]> {
        self.check_vertex(v)?;
        Ok(&self.adj[v])
    }

    /// Unchecked variant of [`ColoredGraph::neighbors`]; panics if `v >= n`.
    #[inline]
    pub fn adj(&self, v: usize) -> &[(usize, Color)] {
        &self.adj[v]
    }

    pub fn closed_neighborhood(&self, v: usize) -> Result<Vec<usize>> {
        self.check_vertex(v)?;
        let mut out: Vec<usize> = self.adj[v].iter().map(|&(u, _)| u).collect();
        let pos = out.partition_point(|&u| u < v);
        out.insert(pos, v);
        Ok(out)
    }

    /// `N(N(v)) \ {v}`, sorted.
    pub fn second_neighborhood(&self, v: usize) -> Result<Vec<usize>> {
        self.check_vertex(v)?;
        let mut seen = vec![false; self.n()];
        for &(u, _) in &self.adj[v] {
            for &(w, _) in &self.adj[u] {
                seen[w] = true;
            }
        }
        seen[v] = false;
        Ok((0..self.n()).filter(|&w| seen[w]).collect())
    }

    #[inline]
    pub fn color(&self, a: usize, b: usize) -> Option<Color> {
        let (x, y) = if self.adj[a].len() <= self.adj[b].len() {
            (a, b)
        } else {
            (b, a)
        };
        let list = &self.adj[x];
        list.binary_search_by_key(&y, |&(w, _)| w)
            .ok()
            .map(|i| list[i].1)
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.color(a, b).is_some()
    }

    /// Looks up the edge on the pair `{a, b}`.
    pub fn edge(&self, a: usize, b: usize) -> Option<Edge> {
        if a == b || a >= self.n() || b >= self.n() {
            return None;
        }
        self.color(a, b).map(|c| Edge::new(a, b, c))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn color_degree(&self, v: usize, c: Color) -> usize {
        self.adj[v].iter().filter(|&&(_, x)| x == c).count()
    }

    pub fn blue_degree(&self, v: usize) -> usize {
        self.color_degree(v, Color::Blue)
    }

    pub fn red_degree(&self, v: usize) -> usize {
        self.color_degree(v, Color::Red)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn stats(&self, k: i64) -> InstanceStats {
        let n = self.n();
        InstanceStats {
            n,
            m: self.m(),
            m_red: self.m_red,
            m_blue: self.m_blue,
            max_degree: self.max_degree(),
            max_blue_degree: (0..n).map(|v| self.blue_degree(v)).max().unwrap_or(0),
            max_red_degree: (0..n).map(|v| self.red_degree(v)).max().unwrap_or(0),
            dual: self.m() as i64 - k,
        }
    }

    /// All edges in canonical order (sorted by `(u, v)`).
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.m());
        for (u, list) in self.adj.iter().enumerate() {
            for &(v, c) in list {
                if v > u {
                    out.push(Edge { u, v, color: c });
                }
            }
        }
        out
    }

    pub fn edges_of_color(&self, c: Color) -> Vec<Edge> {
        self.edges().into_iter().filter(|e| e.color == c).collect()
    }

    /// `E(A, B)`: edges with one endpoint in `a` and the other in `b`.
    pub fn edges_between(&self, a: &[usize], b: &[usize]) -> Result<Vec<Edge>> {
        let mut in_a = vec![false; self.n()];
        let mut in_b = vec![false; self.n()];
        for &x in a {
            self.check_vertex(x)?;
            in_a[x] = true;
        }
        for &x in b {
            self.check_vertex(x)?;
            in_b[x] = true;
        }
        Ok(self
            .edges()
            .into_iter()
            .filter(|e| (in_a[e.u] && in_b[e.v]) || (in_b[e.u] && in_a[e.v]))
            .collect())
    }

    pub fn edges_within(&self, a: &[usize]) -> Result<Vec<Edge>> {
        self.edges_between(a, a)
    }

    /// `G - S` for a set of vertex pairs. Every pair must be an edge.
    pub fn delete_edges(&self, pairs: &[(usize, usize)]) -> Result<ColoredGraph> {
        let mut g = self.clone();
        for &(a, b) in pairs {
            g.remove_edge_in_place(a, b)?;
        }
        Ok(g)
    }

    /// Like [`ColoredGraph::delete_edges`] but also checks that colors match.
    pub fn delete_edge_set(&self, edges: &[Edge]) -> Result<ColoredGraph> {
        for e in edges {
            self.check_vertex(e.u)?;
            self.check_vertex(e.v)?;
            match self.color(e.u, e.v) {
                None => return Err(BpdError::MissingEdge(e.u, e.v)),
                Some(c) if c != e.color => {
                    return Err(BpdError::ColorMismatch {
                        edge: *e,
                        expected: e.color,
                        actual: c,
                    })
                }
                Some(_) => {}
            }
        }
        let pairs: Vec<_> = edges.iter().map(Edge::pair).collect();
        self.delete_edges(&pairs)
    }

    pub(crate) fn remove_edge_in_place(&mut self, a: usize, b: usize) -> Result<Color> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        let (u, v) = normalize(a, b);
        let i = self.adj[a]
            .binary_search_by_key(&b, |&(w, _)| w)
            .map_err(|_| BpdError::MissingEdge(u, v))?;
        let (_, c) = self.adj[a].remove(i);
        let j = self.adj[b]
            .binary_search_by_key(&a, |&(w, _)| w)
            .expect("adjacency is symmetric");
        self.adj[b].remove(j);
        match c {
            Color::Red => self.m_red -= 1,
            Color::Blue => self.m_blue -= 1,
        }
        Ok(c)
    }

    /// Subgraph induced by `vertices`, relabeled to `0..len` in ascending id order.
    ///
    /// Returns the subgraph and the map from new ids to old ids.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(ColoredGraph, Vec<usize>)> {
        let mut keep: Vec<usize> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &x) in keep.iter().enumerate() {
            self.check_vertex(x)?;
            new_id[x] = i;
        }
        let mut adj = Vec::with_capacity(keep.len());
        let (mut m_red, mut m_blue) = (0, 0);
        for &x in &keep {
            let list: Vec<(usize, Color)> = self.adj[x]
                .iter()
                .filter(|&&(w, _)| new_id[w] != usize::MAX)
                .map(|&(w, c)| (new_id[w], c))
                .collect();
            for &(w, c) in &list {
                if w > new_id[x] {
                    match c {
                        Color::Red => m_red += 1,
                        Color::Blue => m_blue += 1,
                    }
                }
            }
            adj.push(list);
        }
        Ok((ColoredGraph { adj, m_red, m_blue }, keep))
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(x) = queue.pop_front() {
                comp.push(x);
                for &(y, _) in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Component label per vertex plus the number of components.
    pub fn component_labels(&self) -> (Vec<usize>, usize) {
        let mut label = vec![usize::MAX; self.n()];
        let comps = self.connected_components();
        for (i, c) in comps.iter().enumerate() {
            for &x in c {
                label[x] = i;
            }
        }
        (label, comps.len())
    }

    /// Bridges via iterative DFS low-link, in canonical order.
    pub fn bridges(&self) -> Vec<Edge> {
        let n = self.n();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut out = Vec::new();
        let mut time = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // (vertex, parent, next neighbor index)
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            disc[root] = time;
            low[root] = time;
            time += 1;
            while let Some(top) = stack.last_mut() {
                let (x, parent, idx) = *top;
                if idx < self.adj[x].len() {
                    top.2 += 1;
                    let y = self.adj[x][idx].0;
                    if y == parent {
                        continue;
                    }
                    if disc[y] == usize::MAX {
                        disc[y] = time;
                        low[y] = time;
                        time += 1;
                        stack.push((y, x, 0));
                    } else {
                        low[x] = low[x].min(disc[y]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[x]);
                        if low[x] > disc[parent] {
                            out.push(Edge::new(parent, x, self.color(parent, x).unwrap()));
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }
}

impl fmt::Debug for ColoredGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ColoredGraph(n={}, edges=[", self.n())?;
        for (i, e) in self.edges().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}-{}{}", e.u, e.v, e.color.code())?;
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Color::{Blue, Red};

    fn p3() -> ColoredGraph {
        ColoredGraph::from_edges(3, [(0, 1, Blue), (1, 2, Red)]).unwrap()
    }

    #[test]
    fn color_other_is_involution() {
        assert_eq!(Red.other(), Blue);
        assert_eq!(Blue.other(), Red);
        assert_ne!(Red, Blue);
    }

    #[test]
    fn edge_is_normalized() {
        let e = Edge::new(5, 2, Red);
        assert_eq!((e.u, e.v), (2, 5));
        assert_eq!(e, Edge::new(2, 5, Red));
    }

    #[test]
    fn constructor_rejects_bad_input() {
        assert_eq!(
            ColoredGraph::from_edges(2, [(0, 0, Red)]).unwrap_err(),
            BpdError::SelfLoop(0)
        );
        assert_eq!(
            ColoredGraph::from_edges(2, [(0, 1, Red), (1, 0, Blue)]).unwrap_err(),
            BpdError::DuplicateEdge(0, 1)
        );
        assert!(matches!(
            ColoredGraph::from_edges(2, [(0, 2, Red)]).unwrap_err(),
            BpdError::VertexOutOfRange { vertex: 2, n: 2 }
        ));
    }

    #[test]
    fn neighbors_examples() {
        let g = ColoredGraph::from_edges(4, [(0, 1, Blue), (1, 2, Red)]).unwrap();
        assert!(g.neighbors(3).unwrap().is_empty());
        assert_eq!(g.neighbors(1).unwrap(), &[(0, Blue), (2, Red)]);
        assert!(g.neighbors(4).is_err());
        assert_eq!(g.closed_neighborhood(1).unwrap(), vec![0, 1, 2]);
        assert_eq!(g.second_neighborhood(0).unwrap(), vec![2]);
    }

    #[test]
    fn degrees_split_by_color() {
        let g = ColoredGraph::from_edges(4, [(0, 1, Blue), (0, 2, Red), (0, 3, Red)]).unwrap();
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.blue_degree(0), 1);
        assert_eq!(g.red_degree(0), 2);
        let s = g.stats(1);
        assert_eq!((s.m, s.m_red, s.m_blue, s.max_degree), (3, 2, 1, 3));
        assert_eq!((s.max_blue_degree, s.max_red_degree, s.dual), (1, 2, 2));
    }

    #[test]
    fn edges_between_examples() {
        let g = p3();
        assert!(g.edges_between(&[0], &[2]).unwrap().is_empty());
        assert_eq!(g.edges_within(&[0, 1, 2]).unwrap().len(), 2);
        assert_eq!(g.edges_between(&[1], &[0, 2]).unwrap().len(), 2);
    }

    #[test]
    fn delete_edges_is_value_semantics() {
        let g = p3();
        let h = g.delete_edges(&[]).unwrap();
        assert_eq!(g, h);
        let h = g.delete_edges(&[(1, 0)]).unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(h.m(), 1);
        assert_eq!(h.n(), 3);
        assert_eq!(
            g.delete_edges(&[(0, 2)]).unwrap_err(),
            BpdError::MissingEdge(0, 2)
        );
        assert!(matches!(
            g.delete_edge_set(&[Edge::new(0, 1, Red)]).unwrap_err(),
            BpdError::ColorMismatch { .. }
        ));
    }

    #[test]
    fn components_examples() {
        assert_eq!(ColoredGraph::empty(3).connected_components().len(), 3);
        let g = ColoredGraph::from_edges(4, [(0, 1, Blue), (1, 2, Red)]).unwrap();
        assert_eq!(g.connected_components(), vec![vec![0, 1, 2], vec![3]]);
    }

    #[test]
    fn bridges_examples() {
        let tree =
            ColoredGraph::from_edges(5, [(0, 1, Blue), (1, 2, Red), (1, 3, Red), (3, 4, Blue)])
                .unwrap();
        assert_eq!(tree.bridges().len(), 4);
        let cycle =
            ColoredGraph::from_edges(4, [(0, 1, Blue), (1, 2, Red), (2, 3, Red), (3, 0, Blue)])
                .unwrap();
        assert!(cycle.bridges().is_empty());
        let paw =
            ColoredGraph::from_edges(4, [(0, 1, Blue), (1, 2, Red), (0, 2, Red), (2, 3, Blue)])
                .unwrap();
        assert_eq!(paw.bridges(), vec![Edge::new(2, 3, Blue)]);
    }

    #[test]
    fn induced_subgraph_relabels() {
        let g = ColoredGraph::from_edges(5, [(0, 1, Blue), (1, 4, Red), (2, 3, Red)]).unwrap();
        let (h, map) = g.induced_subgraph(&[4, 1, 0]).unwrap();
        assert_eq!(map, vec![0, 1, 4]);
        assert_eq!(h.edges(), vec![Edge::new(0, 1, Blue), Edge::new(1, 2, Red)]);
    }
}
