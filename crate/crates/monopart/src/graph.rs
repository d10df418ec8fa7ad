//! Core representation: simple graphs whose edges carry one of two colors.
//!
//! Vertices are dense integer ids `0..n`. Non-edges implicitly form the
//! complement; several algorithms test the complement for small bipartite
//! patterns. Adjacency is kept both as bitset rows (pattern tests) and as
//! sorted neighbor lists (path and matching routines).

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn opposite(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }

    pub const BOTH: [Color; 2] = [Color::Red, Color::Blue];
}

impl std::fmt::Display for Color {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Color::Red => write!(f, "red"),
            Color::Blue => write!(f, "blue"),
        }
    }
}

/// Sorted list of distinct vertex ids.
pub type VertexSet = Vec<usize>;

/// Path given by its vertex sequence. Empty and single-vertex sequences are
/// valid paths; `color: None` means the path may use edges of any color.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathSeq {
    pub vertices: Vec<usize>,
    pub color: Option<Color>,
}

/// Cycle given by its vertex sequence; the last vertex is implicitly joined
/// to the first. Empty, single-vertex and two-vertex (single edge) sequences
/// are valid cycles by convention.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleSeq {
    pub vertices: Vec<usize>,
    pub color: Option<Color>,
}

impl PathSeq {
    pub fn empty(color: Option<Color>) -> Self {
        PathSeq { vertices: Vec::new(), color }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Checks distinctness and that consecutive vertices are joined by an
    /// edge of the stated color (any color when `None`).
    pub fn validate(&self, g: &ColoredGraph) -> Result<()> {
        validate_seq(g, &self.vertices, self.color, false, "path")
    }
}

impl CycleSeq {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn validate(&self, g: &ColoredGraph) -> Result<()> {
        validate_seq(g, &self.vertices, self.color, true, "cycle")
    }
}

fn validate_seq(
    g: &ColoredGraph,
    vs: &[usize],
    color: Option<Color>,
    closed: bool,
    what: &str,
) -> Result<()> {
    let mut seen = vec![false; g.n()];
    for &v in vs {
        if v >= g.n() {
            return Err(Error::contradiction(format!("{what} vertex {v} out of range")));
        }
        if seen[v] {
            return Err(Error::contradiction(format!("{what} repeats vertex {v}")));
        }
        seen[v] = true;
    }
    let ok = |u: usize, v: usize| match color {
        Some(c) => g.color_of(u, v) == Some(c),
        None => g.has_edge(u, v),
    };
    for w in vs.windows(2) {
        if !ok(w[0], w[1]) {
            return Err(Error::contradiction(format!(
                "{what} step {}-{} is not a {} edge",
                w[0],
                w[1],
                color.map(|c| c.to_string()).unwrap_or_else(|| "colored".into())
            )));
        }
    }
    if closed && vs.len() >= 3 {
        let (u, v) = (vs[vs.len() - 1], vs[0]);
        if !ok(u, v) {
            return Err(Error::contradiction(format!("{what} closing step {u}-{v} missing")));
        }
    }
    Ok(())
}

/// Patterns tested against the complement of the colored edge set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pattern {
    /// A four-cycle (equivalently the complete bipartite graph on 2+2).
    C4,
    /// Complete bipartite graph with `p` vertices on each side, p <= 3.
    Kpp(usize),
}

/// Default cap for exact independence-number computation.
pub const DEFAULT_ALPHA_CAP: usize = 40;

/// An undirected graph with every edge colored red or blue. Immutable after
/// construction; all operations are pure, so values can be shared freely
/// across threads.
#[derive(Clone, Debug)]
pub struct ColoredGraph {
    n: usize,
    red: Vec<Bitset>,
    blue: Vec<Bitset>,
    both: Vec<Bitset>,
    edges: Vec<(usize, usize, Color)>,
}

impl ColoredGraph {
    /// Builds a graph from an edge list. Rejects self-loops, out-of-range
    /// ids and duplicate pairs (regardless of color).
    pub fn from_edges(n: usize, edges: &[(usize, usize, Color)]) -> Result<Self> {
        let mut g = ColoredGraph {
            n,
            red: vec![Bitset::new(n); n],
            blue: vec![Bitset::new(n); n],
            both: vec![Bitset::new(n); n],
            edges: Vec::with_capacity(edges.len()),
        };
        for &(u, v, c) in edges {
            g.insert_edge(u, v, c)?;
        }
        g.edges.sort_unstable_by_key(|&(u, v, _)| (u, v));
        Ok(g)
    }

    fn insert_edge(&mut self, u: usize, v: usize, c: Color) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidParams(format!(
                "edge ({u},{v}) out of range for n={}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::InvalidParams(format!("self-loop at {u}")));
        }
        if self.both[u].test(v) {
            return Err(Error::InvalidParams(format!("duplicate edge ({u},{v})")));
        }
        let rows = match c {
            Color::Red => &mut self.red,
            Color::Blue => &mut self.blue,
        };
        rows[u].set(v);
        rows[v].set(u);
        self.both[u].set(v);
        self.both[v].set(u);
        self.edges.push((u.min(v), u.max(v), c));
        Ok(())
    }

    /// Complete graph with every edge colored by `color_fn(u, v)` (u < v).
    pub fn complete(n: usize, mut color_fn: impl FnMut(usize, usize) -> Color) -> Self {
        let mut edges = Vec::with_capacity(n * (n - 1) / 2);
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v, color_fn(u, v)));
            }
        }
        ColoredGraph::from_edges(n, &edges).expect("complete graph edges are valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges as (u, v, color) with u < v, sorted.
    pub fn edges(&self) -> &[(usize, usize, Color)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.both[u].test(v)
    }

    pub fn color_of(&self, u: usize, v: usize) -> Option<Color> {
        if u == v {
            None
        } else if self.red[u].test(v) {
            Some(Color::Red)
        } else if self.blue[u].test(v) {
            Some(Color::Blue)
        } else {
            None
        }
    }

    /// True when the pair is a non-edge of the colored graph (an edge of
    /// the complement), u != v.
    pub fn is_black(&self, u: usize, v: usize) -> bool {
        u != v && !self.both[u].test(v)
    }

    pub fn adjacency_row(&self, v: usize, color: Color) -> &Bitset {
        match color {
            Color::Red => &self.red[v],
            Color::Blue => &self.blue[v],
        }
    }

    pub fn union_row(&self, v: usize) -> &Bitset {
        &self.both[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.both[v].count()
    }

    pub fn color_degree(&self, v: usize, color: Color) -> usize {
        self.adjacency_row(v, color).count()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn count_edges(&self, color: Color) -> usize {
        self.edges.iter().filter(|&&(_, _, c)| c == color).count()
    }

    /// Connected components of the subgraph spanned by one color's edges.
    /// Vertices isolated in that color form singleton components. The
    /// returned sets are sorted and ordered by their minimum vertex, so they
    /// partition `0..n` deterministically.
    pub fn monochromatic_components(&self, color: Color) -> Vec<VertexSet> {
        let rows = match color {
            Color::Red => &self.red,
            Color::Blue => &self.blue,
        };
        components_of_rows(self.n, |v| &rows[v])
    }

    /// Component id per vertex for one color, ids in order of minimum vertex.
    pub fn component_ids(&self, color: Color) -> Vec<usize> {
        let comps = self.monochromatic_components(color);
        let mut ids = vec![0; self.n];
        for (i, comp) in comps.iter().enumerate() {
            for &v in comp {
                ids[v] = i;
            }
        }
        ids
    }

    /// Exact independence number over the union of both colors' edges,
    /// by branch and bound with a greedy clique-cover bound.
    pub fn independence_number(&self) -> Result<usize> {
        self.independence_number_with_cap(DEFAULT_ALPHA_CAP)
    }

    pub fn independence_number_with_cap(&self, cap: usize) -> Result<usize> {
        if self.n > cap {
            return Err(Error::CapExceeded { what: "independence_number", n: self.n, cap });
        }
        Ok(max_independent_set_size(self.n, |v| &self.both[v]))
    }

    /// True iff the complement of the colored edge set contains the pattern
    /// as a subgraph. K_{p,p} is found iff some p-set of vertices has at
    /// least p common complement-neighbors.
    pub fn complement_contains(&self, pattern: Pattern) -> Result<bool> {
        let p = match pattern {
            Pattern::C4 => 2,
            Pattern::Kpp(p) => p,
        };
        if p == 0 {
            return Err(Error::InvalidParams("Kpp with p = 0".into()));
        }
        if p > 3 {
            return Err(Error::precondition(format!("Kpp pattern capped at p <= 3, got {p}")));
        }
        // Complement adjacency rows.
        let mut comp = Vec::with_capacity(self.n);
        for v in 0..self.n {
            let mut row = Bitset::new(self.n);
            for u in 0..self.n {
                if u != v && !self.both[v].test(u) {
                    row.set(u);
                }
            }
            comp.push(row);
        }
        if p == 1 {
            return Ok(comp.iter().any(|r| !r.is_empty()));
        }
        for a in 0..self.n {
            for b in a + 1..self.n {
                let common = comp[a].intersection(&comp[b]);
                if p == 2 {
                    if common.count() >= 2 {
                        return Ok(true);
                    }
                } else {
                    // p == 3: extend {a, b} with every common neighbor c > b
                    // to avoid re-checking permutations of the same side.
                    for c in common.iter() {
                        if c <= b {
                            continue;
                        }
                        if common.intersection(&comp[c]).count() >= 3 {
                            return Ok(true);
                        }
                    }
                }
            }
        }
        Ok(false)
    }

    /// View of one color's subgraph (or the union when `color` is `None`)
    /// as an uncolored graph on the same vertex ids.
    pub fn view(&self, color: Option<Color>) -> SimpleGraph {
        let row = |v: usize| match color {
            Some(Color::Red) => &self.red[v],
            Some(Color::Blue) => &self.blue[v],
            None => &self.both[v],
        };
        SimpleGraph::from_rows(self.n, row)
    }

    /// Uncolored view induced on `verts` (graph ids), restricted to one
    /// color (or the union). Returns the view plus the label map from view
    /// ids back to graph ids.
    pub fn induced_view(&self, verts: &[usize], color: Option<Color>) -> (SimpleGraph, Vec<usize>) {
        let labels: Vec<usize> = verts.to_vec();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in labels.iter().enumerate() {
            index[v] = i;
        }
        let mut adj = vec![Vec::new(); labels.len()];
        for (i, &v) in labels.iter().enumerate() {
            let row = match color {
                Some(c) => self.adjacency_row(v, c),
                None => &self.both[v],
            };
            for u in row.iter() {
                if index[u] != usize::MAX {
                    adj[i].push(index[u]);
                }
            }
        }
        (SimpleGraph::from_adj(labels.len(), adj), labels)
    }

    /// The same graph with the listed edges removed.
    pub fn without_edges(&self, removed: &[(usize, usize)]) -> ColoredGraph {
        let gone: std::collections::HashSet<(usize, usize)> = removed
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        let edges: Vec<_> = self
            .edges
            .iter()
            .copied()
            .filter(|&(u, v, _)| !gone.contains(&(u, v)))
            .collect();
        ColoredGraph::from_edges(self.n, &edges).expect("edge removal preserves validity")
    }

    /// Induced colored subgraph on `verts`, relabeled to 0..k. Returns the
    /// subgraph and the label map from new ids back to original ids.
    pub fn induced_colored(&self, verts: &[usize]) -> (ColoredGraph, Vec<usize>) {
        let labels: Vec<usize> = verts.to_vec();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in labels.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        for &(u, v, c) in &self.edges {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                edges.push((index[u], index[v], c));
            }
        }
        (
            ColoredGraph::from_edges(labels.len(), &edges).expect("induced subgraph is valid"),
            labels,
        )
    }
}

/// Uncolored working graph used by matching, path and cycle routines.
#[derive(Clone, Debug)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<Vec<usize>>,
    rows: Vec<Bitset>,
}

impl SimpleGraph {
    pub fn from_adj(n: usize, mut adj: Vec<Vec<usize>>) -> Self {
        let mut rows = vec![Bitset::new(n); n];
        for (v, nbrs) in adj.iter_mut().enumerate() {
            nbrs.sort_unstable();
            nbrs.dedup();
            for &u in nbrs.iter() {
                rows[v].set(u);
            }
        }
        SimpleGraph { n, adj, rows }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        SimpleGraph::from_adj(n, adj)
    }

    fn from_rows<'a>(n: usize, row: impl Fn(usize) -> &'a Bitset) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (v, nbrs) in adj.iter_mut().enumerate() {
            nbrs.extend(row(v).iter());
        }
        SimpleGraph::from_adj(n, adj)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn row(&self, v: usize) -> &Bitset {
        &self.rows[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.rows[u].test(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for v in 0..self.n {
            for &u in &self.adj[v] {
                if v < u {
                    out.push((v, u));
                }
            }
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        components_of_rows(self.n, |v| &self.rows[v])
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Subgraph induced on `verts`, with the new-to-old label map.
    pub fn induced(&self, verts: &[usize]) -> (SimpleGraph, Vec<usize>) {
        let labels: Vec<usize> = verts.to_vec();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in labels.iter().enumerate() {
            index[v] = i;
        }
        let mut adj = vec![Vec::new(); labels.len()];
        for (i, &v) in labels.iter().enumerate() {
            for &u in &self.adj[v] {
                if index[u] != usize::MAX {
                    adj[i].push(index[u]);
                }
            }
        }
        (SimpleGraph::from_adj(labels.len(), adj), labels)
    }

    pub fn max_independent_set_size(&self) -> usize {
        max_independent_set_size(self.n, |v| &self.rows[v])
    }
}

fn components_of_rows<'a>(n: usize, row: impl Fn(usize) -> &'a Bitset) -> Vec<VertexSet> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            for u in row(v).iter() {
                if !seen[u] {
                    seen[u] = true;
                    comp.push(u);
                    stack.push(u);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Exact maximum independent set size by branch and bound. The upper bound
/// is a greedy clique cover of the candidate set; branching picks the
/// highest-degree candidate. Deterministic.
fn max_independent_set_size<'a>(n: usize, row: impl Fn(usize) -> &'a Bitset + Copy) -> usize {
    if n == 0 {
        return 0;
    }
    let mut all = Bitset::new(n);
    for v in 0..n {
        all.set(v);
    }
    let mut best = 0;
    branch_mis(n, row, &all, 0, &mut best);
    best
}

fn greedy_clique_cover_bound<'a>(
    n: usize,
    row: impl Fn(usize) -> &'a Bitset + Copy,
    cands: &Bitset,
) -> usize {
    // Greedily peel cliques; the number of cliques bounds the MIS size.
    let mut rest = cands.clone();
    let mut cliques = 0;
    while let Some(v) = rest.first() {
        cliques += 1;
        rest.clear(v);
        // Grow a clique from v within rest.
        let mut clique_common = rest.intersection(row(v));
        while let Some(u) = clique_common.first() {
            rest.clear(u);
            clique_common.clear(u);
            clique_common.intersect_with(row(u));
        }
        let _ = n;
    }
    cliques
}

fn branch_mis<'a>(
    n: usize,
    row: impl Fn(usize) -> &'a Bitset + Copy,
    cands: &Bitset,
    size: usize,
    best: &mut usize,
) {
    let cnt = cands.count();
    if cnt == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + greedy_clique_cover_bound(n, row, cands) <= *best {
        return;
    }
    // Branch on the candidate with the most candidate-neighbors.
    let v = cands
        .iter()
        .max_by_key(|&v| (row(v).intersection(cands).count(), std::cmp::Reverse(v)))
        .unwrap();
    // Include v.
    let mut with_v = cands.clone();
    with_v.clear(v);
    with_v.subtract(row(v));
    branch_mis(n, row, &with_v, size + 1, best);
    // Exclude v.
    let mut without_v = cands.clone();
    without_v.clear(v);
    branch_mis(n, row, &without_v, size, best);
}
