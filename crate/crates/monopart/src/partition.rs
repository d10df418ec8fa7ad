//! Partitions of the vertex set into monochromatic pieces.
//!
//! Two engines live here. `posa_partition` splits any uncolored graph into
//! at most alpha parts, each a spanning cycle, an edge or a vertex, by
//! repeatedly cutting a cycle (or less) off the front of a maximal path.
//! `connected_matching_partition` combines a minimum component cover with
//! largest matchings inside the chosen components, then runs the Pósa
//! engine on the leftover, staying within 2*alpha pieces overall.

use crate::bitset::Bitset;
use crate::cover::component_cover;
use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph, SimpleGraph, VertexSet, DEFAULT_ALPHA_CAP};
use crate::matching::{max_matching, Matching};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PieceKind {
    ConnectedMatching,
    SpanningCycle,
    SingleEdge,
    SingleVertex,
}

/// One part of a partition. `vertices` is sorted; for spanning cycles the
/// `edges` list walks the cycle in order (closing edge included), for
/// matchings it lists the matching edges.
#[derive(Clone, Debug, Serialize)]
pub struct PartitionPiece {
    pub kind: PieceKind,
    pub color: Option<Color>,
    pub vertices: VertexSet,
    pub edges: Vec<(usize, usize)>,
    /// For connected matchings: index of the monochromatic component (in
    /// component order of `color`) certifying connectedness.
    pub witness_component: Option<usize>,
}

impl PartitionPiece {
    pub fn single_vertex(v: usize) -> Self {
        PartitionPiece {
            kind: PieceKind::SingleVertex,
            color: None,
            vertices: vec![v],
            edges: Vec::new(),
            witness_component: None,
        }
    }

    /// Validates the piece's internal invariants against the graph.
    pub fn validate(&self, g: &ColoredGraph) -> Result<()> {
        let check_color = |u: usize, v: usize| -> Result<()> {
            let ok = match self.color {
                Some(c) => g.color_of(u, v) == Some(c),
                None => g.has_edge(u, v),
            };
            if ok {
                Ok(())
            } else {
                Err(Error::contradiction(format!(
                    "piece edge ({u},{v}) missing or miscolored"
                )))
            }
        };
        let mut vs = self.vertices.clone();
        vs.sort_unstable();
        vs.dedup();
        if vs.len() != self.vertices.len() {
            return Err(Error::contradiction("piece repeats a vertex"));
        }
        match self.kind {
            PieceKind::SingleVertex => {
                if self.vertices.len() != 1 || !self.edges.is_empty() {
                    return Err(Error::contradiction("malformed single-vertex piece"));
                }
            }
            PieceKind::SingleEdge => {
                if self.edges.len() != 1 || self.vertices.len() != 2 {
                    return Err(Error::contradiction("malformed single-edge piece"));
                }
                let (u, v) = self.edges[0];
                check_color(u, v)?;
                if vs != { let mut e = vec![u, v]; e.sort_unstable(); e } {
                    return Err(Error::contradiction("edge piece vertices mismatch"));
                }
            }
            PieceKind::SpanningCycle => {
                if self.edges.len() != self.vertices.len() || self.vertices.len() < 3 {
                    return Err(Error::contradiction("malformed cycle piece"));
                }
                for &(u, v) in &self.edges {
                    check_color(u, v)?;
                }
                // The edge list must walk a single closed cycle through
                // exactly the piece's vertices.
                let mut deg = std::collections::HashMap::new();
                for &(u, v) in &self.edges {
                    *deg.entry(u).or_insert(0) += 1;
                    *deg.entry(v).or_insert(0) += 1;
                }
                if !vs.iter().all(|v| deg.get(v) == Some(&2)) || deg.len() != vs.len() {
                    return Err(Error::contradiction("cycle piece is not a 2-regular walk"));
                }
                for w in self.edges.windows(2) {
                    if w[0].1 != w[1].0 {
                        return Err(Error::contradiction("cycle edges out of order"));
                    }
                }
                let first = self.edges.first().unwrap().0;
                let last = self.edges.last().unwrap().1;
                if first != last {
                    return Err(Error::contradiction("cycle does not close"));
                }
            }
            PieceKind::ConnectedMatching => {
                let color = self
                    .color
                    .ok_or_else(|| Error::contradiction("matching piece lacks a color"))?;
                if self.edges.is_empty() {
                    return Err(Error::contradiction("empty matching piece"));
                }
                let mut ends: Vec<usize> = Vec::new();
                for &(u, v) in &self.edges {
                    check_color(u, v)?;
                    ends.push(u);
                    ends.push(v);
                }
                ends.sort_unstable();
                if ends.windows(2).any(|w| w[0] == w[1]) {
                    return Err(Error::contradiction("matching edges share a vertex"));
                }
                if ends != vs {
                    return Err(Error::contradiction("matching piece vertices mismatch"));
                }
                // All endpoints inside one monochromatic component.
                let ids = g.component_ids(color);
                let comp = ids[ends[0]];
                if !ends.iter().all(|&v| ids[v] == comp) {
                    return Err(Error::contradiction(
                        "matching endpoints span several components",
                    ));
                }
                if let Some(w) = self.witness_component {
                    if w != comp {
                        return Err(Error::contradiction("wrong witness component"));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Checks that `pieces` are pairwise disjoint, internally valid, and cover
/// `ground` exactly (all of V when `ground` is `None`).
pub fn validate_partition(
    g: &ColoredGraph,
    pieces: &[PartitionPiece],
    ground: Option<&[usize]>,
) -> Result<()> {
    let mut covered = vec![false; g.n()];
    for piece in pieces {
        piece.validate(g)?;
        for &v in &piece.vertices {
            if covered[v] {
                return Err(Error::contradiction(format!("vertex {v} in two pieces")));
            }
            covered[v] = true;
        }
    }
    let expect: Vec<usize> = match ground {
        Some(gs) => gs.to_vec(),
        None => (0..g.n()).collect(),
    };
    let got: Vec<usize> = (0..g.n()).filter(|&v| covered[v]).collect();
    let mut expect_sorted = expect;
    expect_sorted.sort_unstable();
    if got != expect_sorted {
        return Err(Error::contradiction("pieces do not cover the ground set"));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Pósa engine
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub(crate) enum RawPieceKind {
    Vertex,
    Edge,
    Cycle,
}

/// A piece in view-id space, with vertices in path/cycle order.
#[derive(Clone, Debug)]
pub(crate) struct RawPiece {
    pub kind: RawPieceKind,
    pub order: Vec<usize>,
}

pub(crate) struct PosaOutcome {
    pub pieces: Vec<RawPiece>,
    pub discarded: Vec<usize>,
    pub steps: usize,
}

/// Maximal path in `view` restricted to `alive`: grown from the lowest
/// alive vertex, extended at the back then the front, always taking the
/// lowest-id unused neighbor. Deterministic.
fn grow_maximal_path(view: &SimpleGraph, alive: &Bitset) -> Option<std::collections::VecDeque<usize>> {
    let start = alive.first()?;
    let mut on = Bitset::new(view.n());
    on.set(start);
    let mut path = std::collections::VecDeque::from([start]);
    loop {
        let back = *path.back().unwrap();
        match view.neighbors(back).iter().copied().find(|&u| alive.test(u) && !on.test(u)) {
            Some(u) => {
                path.push_back(u);
                on.set(u);
            }
            None => break,
        }
    }
    loop {
        let front = *path.front().unwrap();
        match view.neighbors(front).iter().copied().find(|&u| alive.test(u) && !on.test(u)) {
            Some(u) => {
                path.push_front(u);
                on.set(u);
            }
            None => break,
        }
    }
    Some(path)
}

/// Runs the step loop: take a maximal path with front endpoint x; emit {x}
/// if x is isolated, the edge to its path neighbor if it has degree one,
/// else the cycle through x and its furthest path neighbor. After each step
/// `extra_discards(x, alive)` may name additional vertices to drop without
/// emitting them (used by the perturbed variant); they are reported in
/// `discarded`.
pub(crate) fn posa_run(
    view: &SimpleGraph,
    mut alive: Bitset,
    mut extra_discards: impl FnMut(usize, &Bitset) -> Vec<usize>,
) -> PosaOutcome {
    let mut pieces = Vec::new();
    let mut discarded = Vec::new();
    let mut steps = 0;
    while let Some(path) = grow_maximal_path(view, &alive) {
        steps += 1;
        let x = *path.front().unwrap();
        let seq: Vec<usize> = path.iter().copied().collect();
        let alive_deg = view.neighbors(x).iter().filter(|&&u| alive.test(u)).count();
        let raw = if alive_deg == 0 {
            RawPiece { kind: RawPieceKind::Vertex, order: vec![x] }
        } else if alive_deg == 1 {
            RawPiece { kind: RawPieceKind::Edge, order: vec![x, seq[1]] }
        } else {
            // Furthest neighbor of x along the path; maximality puts every
            // alive neighbor of x on the path.
            let far = (0..seq.len())
                .rev()
                .find(|&j| view.has_edge(x, seq[j]))
                .expect("endpoint neighbors lie on the maximal path");
            RawPiece { kind: RawPieceKind::Cycle, order: seq[..=far].to_vec() }
        };
        for &v in &raw.order {
            alive.clear(v);
        }
        // Discards may name vertices outside this run's alive set (the
        // perturbed variant removes them from sibling residues); record
        // them all, clear the local ones.
        for v in extra_discards(x, &alive) {
            if alive.test(v) {
                alive.clear(v);
            }
            discarded.push(v);
        }
        pieces.push(raw);
    }
    discarded.sort_unstable();
    discarded.dedup();
    PosaOutcome { pieces, discarded, steps }
}

pub(crate) fn stamp_piece(
    raw: &RawPiece,
    labels: &[usize],
    color: Option<Color>,
) -> PartitionPiece {
    let order: Vec<usize> = raw.order.iter().map(|&v| labels[v]).collect();
    let mut vertices = order.clone();
    vertices.sort_unstable();
    match raw.kind {
        RawPieceKind::Vertex => PartitionPiece {
            kind: PieceKind::SingleVertex,
            color: None,
            vertices,
            edges: Vec::new(),
            witness_component: None,
        },
        RawPieceKind::Edge => PartitionPiece {
            kind: PieceKind::SingleEdge,
            color,
            vertices,
            edges: vec![(order[0], order[1])],
            witness_component: None,
        },
        RawPieceKind::Cycle => {
            let mut edges: Vec<(usize, usize)> =
                order.windows(2).map(|w| (w[0], w[1])).collect();
            edges.push((*order.last().unwrap(), order[0]));
            PartitionPiece {
                kind: PieceKind::SpanningCycle,
                color,
                vertices,
                edges,
                witness_component: None,
            }
        }
    }
}

/// Partitions the vertex set of an uncolored graph into at most alpha
/// parts, each a spanning cycle, a single edge, or a single vertex.
pub fn posa_partition(view: &SimpleGraph) -> Vec<PartitionPiece> {
    let mut alive = Bitset::new(view.n());
    for v in 0..view.n() {
        alive.set(v);
    }
    let labels: Vec<usize> = (0..view.n()).collect();
    let outcome = posa_run(view, alive, |_, _| Vec::new());
    outcome.pieces.iter().map(|r| stamp_piece(r, &labels, None)).collect()
}

// ---------------------------------------------------------------------------
// Connected matching partition
// ---------------------------------------------------------------------------

/// Largest matching of `color` inside the induced subgraph on `verts`,
/// reported in graph ids.
pub(crate) fn colored_matching_in(g: &ColoredGraph, verts: &[usize], color: Color) -> Matching {
    let (view, labels) = g.induced_view(verts, Some(color));
    let m = max_matching(&view);
    let edges = m
        .edges
        .iter()
        .map(|&(a, b)| {
            let (u, v) = (labels[a], labels[b]);
            (u.min(v), u.max(v))
        })
        .collect();
    Matching { edges }
}

/// After the matchings are removed, maximality forces the residue into
/// three quiet zones: the doubly covered part is isolated, the red-only
/// part carries blue edges only, the blue-only part red edges only, and no
/// edge crosses between them. Violations mean a bug upstream.
pub(crate) fn check_residue_structure(
    g: &ColoredGraph,
    doubly: &[usize],
    red_only: &[usize],
    blue_only: &[usize],
) -> Result<()> {
    let n = g.n();
    let residual: Vec<usize> = doubly.iter().chain(red_only).chain(blue_only).copied().collect();
    let mut side = vec![0u8; n]; // 1 = doubly, 2 = red-only, 3 = blue-only
    for &v in doubly {
        side[v] = 1;
    }
    for &v in red_only {
        side[v] = 2;
    }
    for &v in blue_only {
        side[v] = 3;
    }
    for &u in &residual {
        for &w in &residual {
            if u < w && g.has_edge(u, w) {
                let (a, b) = (side[u], side[w]);
                if a == 1 || b == 1 {
                    return Err(Error::contradiction(format!(
                        "doubly covered residue vertex has edge ({u},{w})"
                    )));
                }
                if a != b {
                    return Err(Error::contradiction(format!(
                        "edge ({u},{w}) runs between the color-residues"
                    )));
                }
                if a == 2 && g.color_of(u, w) != Some(Color::Blue) {
                    return Err(Error::contradiction(format!(
                        "red edge ({u},{w}) survived the red matchings"
                    )));
                }
                if a == 3 && g.color_of(u, w) != Some(Color::Red) {
                    return Err(Error::contradiction(format!(
                        "blue edge ({u},{w}) survived the blue matchings"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Partitions V into at most 2*alpha monochromatic pieces: largest red
/// matchings inside the cover's red components, then largest blue matchings
/// in the blue components minus those, then single vertices for the doubly
/// covered residue and Pósa pieces for the singly covered residue.
pub fn connected_matching_partition(g: &ColoredGraph) -> Result<Vec<PartitionPiece>> {
    let n = g.n();
    let cover = component_cover(g)?;
    let red_ids = g.component_ids(Color::Red);
    let blue_ids = g.component_ids(Color::Blue);

    let mut pieces: Vec<PartitionPiece> = Vec::new();
    let mut consumed = Bitset::new(n);

    // Fix largest red matchings first (cover order), then blue matchings in
    // what is left of the blue components; the proof's bound depends on the
    // red-before-blue order.
    for (color, comp) in &cover.components {
        if *color != Color::Red {
            continue;
        }
        let m = colored_matching_in(g, comp, Color::Red);
        if !m.is_empty() {
            for &v in &m.vertices() {
                consumed.set(v);
            }
            pieces.push(PartitionPiece {
                kind: PieceKind::ConnectedMatching,
                color: Some(Color::Red),
                vertices: m.vertices(),
                witness_component: Some(red_ids[m.edges[0].0]),
                edges: m.edges,
            });
        }
    }
    for (color, comp) in &cover.components {
        if *color != Color::Blue {
            continue;
        }
        let avail: Vec<usize> = comp.iter().copied().filter(|&v| !consumed.test(v)).collect();
        if avail.is_empty() {
            continue;
        }
        let m = colored_matching_in(g, &avail, Color::Blue);
        if !m.is_empty() {
            for &v in &m.vertices() {
                consumed.set(v);
            }
            pieces.push(PartitionPiece {
                kind: PieceKind::ConnectedMatching,
                color: Some(Color::Blue),
                vertices: m.vertices(),
                witness_component: Some(blue_ids[m.edges[0].0]),
                edges: m.edges,
            });
        }
    }

    // Classify the residue by which chosen components cover it.
    let mut in_red_chosen = Bitset::new(n);
    let mut in_blue_chosen = Bitset::new(n);
    for (color, comp) in &cover.components {
        let target = match color {
            Color::Red => &mut in_red_chosen,
            Color::Blue => &mut in_blue_chosen,
        };
        for &v in comp {
            target.set(v);
        }
    }
    let mut doubly = Vec::new(); // in a chosen red and a chosen blue component
    let mut red_only = Vec::new();
    let mut blue_only = Vec::new();
    for v in 0..n {
        if consumed.test(v) {
            continue;
        }
        match (in_red_chosen.test(v), in_blue_chosen.test(v)) {
            (true, true) => doubly.push(v),
            (true, false) => red_only.push(v),
            (false, true) => blue_only.push(v),
            (false, false) => {
                return Err(Error::contradiction(format!("vertex {v} outside the cover")))
            }
        }
    }

    check_residue_structure(g, &doubly, &red_only, &blue_only)?;

    // Doubly covered residue: isolated points, one piece each.
    for &v in &doubly {
        pieces.push(PartitionPiece::single_vertex(v));
    }

    // Pósa pieces on the singly covered residues.
    let mut run_posa = |verts: &[usize], color: Color| -> Result<usize> {
        if verts.is_empty() {
            return Ok(0);
        }
        let (view, labels) = g.induced_view(verts, Some(color));
        let mut alive = Bitset::new(view.n());
        for v in 0..view.n() {
            alive.set(v);
        }
        let outcome = posa_run(&view, alive, |_, _| Vec::new());
        let count = outcome.pieces.len();
        for raw in &outcome.pieces {
            pieces.push(stamp_piece(raw, &labels, Some(color)));
        }
        // Per-residual bound from the underlying alpha-partition argument.
        if view.n() <= DEFAULT_ALPHA_CAP {
            let alpha = view.max_independent_set_size();
            if count > alpha {
                return Err(Error::contradiction(format!(
                    "Pósa produced {count} pieces on a residue with alpha {alpha}"
                )));
            }
        }
        Ok(count)
    };
    run_posa(&red_only, Color::Blue)?;
    run_posa(&blue_only, Color::Red)?;

    validate_partition(g, &pieces, None)?;
    if n <= DEFAULT_ALPHA_CAP {
        let alpha = g.independence_number()?;
        if pieces.len() > 2 * alpha {
            return Err(Error::contradiction(format!(
                "{} pieces exceed the 2*alpha bound ({alpha})",
                pieces.len()
            )));
        }
    }
    Ok(pieces)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn as_simple(edges: &[(usize, usize)], n: usize) -> SimpleGraph {
        SimpleGraph::from_edges(n, edges)
    }

    #[test]
    fn posa_cycle_graph_is_one_piece() {
        let c5 = as_simple(&[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)], 5);
        let pieces = posa_partition(&c5);
        assert_eq!(pieces.len(), 1);
        assert_eq!(pieces[0].kind, PieceKind::SpanningCycle);
        assert_eq!(pieces[0].vertices, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn posa_path_graph_two_edges() {
        let p4 = as_simple(&[(0, 1), (1, 2), (2, 3)], 4);
        let pieces = posa_partition(&p4);
        assert_eq!(pieces.len(), 2);
        assert!(pieces.iter().all(|p| p.kind == PieceKind::SingleEdge));
    }

    #[test]
    fn posa_star_three_pieces() {
        let star = as_simple(&[(0, 1), (0, 2), (0, 3)], 4);
        let pieces = posa_partition(&star);
        assert_eq!(pieces.len(), 3);
        let kinds: Vec<_> = pieces.iter().map(|p| p.kind).collect();
        assert_eq!(
            kinds,
            vec![PieceKind::SingleEdge, PieceKind::SingleVertex, PieceKind::SingleVertex]
        );
    }

    #[test]
    fn posa_piece_count_bounded_by_alpha() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(5);
        for _ in 0..100 {
            let n = rng.gen_range(1..=12);
            let mut e = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.35) {
                        e.push((u, v));
                    }
                }
            }
            let g = as_simple(&e, n);
            let pieces = posa_partition(&g);
            assert!(pieces.len() <= g.max_independent_set_size());
            let mut covered: Vec<usize> =
                pieces.iter().flat_map(|p| p.vertices.clone()).collect();
            covered.sort_unstable();
            assert_eq!(covered, (0..n).collect::<Vec<_>>());
        }
    }

    #[test]
    fn single_vertex_partition() {
        let g = ColoredGraph::from_edges(1, &[]).unwrap();
        let pieces = connected_matching_partition(&g).unwrap();
        assert_eq!(pieces.len(), 1);
        assert_eq!(pieces[0].kind, PieceKind::SingleVertex);
    }

    #[test]
    fn all_red_k4_single_matching_piece() {
        let g = ColoredGraph::complete(4, |_, _| Color::Red);
        let pieces = connected_matching_partition(&g).unwrap();
        assert_eq!(pieces.len(), 1);
        assert_eq!(pieces[0].kind, PieceKind::ConnectedMatching);
        assert_eq!(pieces[0].color, Some(Color::Red));
        assert_eq!(pieces[0].edges.len(), 2);
        assert_eq!(pieces[0].vertices, vec![0, 1, 2, 3]);
    }

    #[test]
    fn ks_blocks_exactly_two_pieces_per_block() {
        for (k, s) in [(1usize, 3usize), (2, 3), (3, 4), (2, 5)] {
            let g = crate::generators::ks_blocks(k, s).unwrap();
            let pieces = connected_matching_partition(&g).unwrap();
            assert_eq!(pieces.len(), 2 * k, "k={k} s={s}");
        }
    }

    #[test]
    fn random_partitions_respect_bound_and_disjointness() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(99);
        for _ in 0..150 {
            let n = rng.gen_range(1..=12);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        let c = if rng.gen_bool(0.5) { Color::Red } else { Color::Blue };
                        edges.push((u, v, c));
                    }
                }
            }
            let g = ColoredGraph::from_edges(n, &edges).unwrap();
            let pieces = connected_matching_partition(&g).unwrap();
            validate_partition(&g, &pieces, None).unwrap();
            let alpha = g.independence_number().unwrap();
            assert!(pieces.len() <= 2 * alpha, "n={n} pieces={} alpha={alpha}", pieces.len());
        }
    }
}
