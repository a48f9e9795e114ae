//! Ribbon graphs as signed rotation systems, chord diagrams, and their
//! delta-matroids.
//!
//! Half-edges are numbered `0..2|E|`. Each vertex lists its half-edges in
//! cyclic order and each ribbon pairs two half-edges with a sign; a `Minus`
//! ribbon carries a half-twist.
//!
//! Boundary circles are traced on the sides of half-edges: half-edge `h` has
//! sides `s1(h)` and `s2(h)`, met in that order when walking around its
//! vertex. Consecutive half-edges `h, h'` at a vertex join `s2(h)` to
//! `s1(h')`; a `Plus` ribbon `{h, h'}` joins `s1(h)–s2(h')` and
//! `s2(h)–s1(h')`, a `Minus` ribbon joins `s1(h)–s1(h')` and `s2(h)–s2(h')`.
//! Every side has degree two, so the components are the boundary circles.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::f2::MatrixF2;
use crate::graph::FramedGraph;
use crate::setsystem::{SetSystem, MAX_ELEMENTS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RibbonEdge {
    pub ends: [usize; 2],
    pub sign: Sign,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RibbonGraph {
    rotations: Vec<Vec<usize>>,
    edges: Vec<RibbonEdge>,
    edge_of: Vec<usize>,
    vertex_of: Vec<usize>,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

impl RibbonGraph {
    /// Validates that every half-edge id in `0..2|E|` occurs once among the
    /// rotations and once among the ribbon ends.
    pub fn new(rotations: Vec<Vec<usize>>, edges: Vec<RibbonEdge>) -> Result<Self> {
        let halves = 2 * edges.len();
        let mut vertex_of = vec![usize::MAX; halves];
        for (v, rot) in rotations.iter().enumerate() {
            for &h in rot {
                if h >= halves {
                    return Err(Error::InvalidRibbon(format!(
                        "half-edge {h} out of range 0..{halves}"
                    )));
                }
                if vertex_of[h] != usize::MAX {
                    return Err(Error::InvalidRibbon(format!(
                        "half-edge {h} appears twice in rotations"
                    )));
                }
                vertex_of[h] = v;
            }
        }
        if let Some(h) = vertex_of.iter().position(|&v| v == usize::MAX) {
            return Err(Error::InvalidRibbon(format!(
                "half-edge {h} is missing from the rotations"
            )));
        }
        let mut edge_of = vec![usize::MAX; halves];
        for (j, e) in edges.iter().enumerate() {
            if e.ends[0] == e.ends[1] {
                return Err(Error::InvalidRibbon(format!(
                    "ribbon {j} uses half-edge {} twice",
                    e.ends[0]
                )));
            }
            for &h in &e.ends {
                if h >= halves || edge_of[h] != usize::MAX {
                    return Err(Error::InvalidRibbon(format!(
                        "half-edge {h} is not paired exactly once"
                    )));
                }
                edge_of[h] = j;
            }
        }
        Ok(Self {
            rotations,
            edges,
            edge_of,
            vertex_of,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotations
    }

    pub fn edges(&self) -> &[RibbonEdge] {
        &self.edges
    }

    /// Ribbon containing half-edge `h`.
    pub fn edge_of(&self, h: usize) -> usize {
        self.edge_of[h]
    }

    pub fn vertex_of(&self, h: usize) -> usize {
        self.vertex_of[h]
    }

    fn check_edge_mask(&self, mask: u32) -> Result<()> {
        let e = self.edges.len();
        if e < 32 && mask >> e != 0 {
            return Err(Error::MaskOutOfRange { mask, n: e });
        }
        Ok(())
    }

    /// Number of boundary circles of the spanning subgraph on `edge_subset`.
    pub fn boundary_components(&self, edge_subset: u32) -> Result<usize> {
        self.check_edge_mask(edge_subset)?;
        let visible = |h: usize| edge_subset >> self.edge_of[h] & 1 == 1;
        let side1 = |h: usize| 2 * h;
        let side2 = |h: usize| 2 * h + 1;
        let mut uf = UnionFind::new(4 * self.edges.len());
        let mut isolated = 0;
        let mut seen: Vec<usize> = Vec::new();
        for rot in &self.rotations {
            seen.clear();
            seen.extend(rot.iter().copied().filter(|&h| visible(h)));
            if seen.is_empty() {
                isolated += 1;
                continue;
            }
            for (i, &h) in seen.iter().enumerate() {
                let next = seen[(i + 1) % seen.len()];
                uf.union(side2(h), side1(next));
            }
        }
        for (j, e) in self.edges.iter().enumerate() {
            if edge_subset >> j & 1 == 0 {
                continue;
            }
            let [h, k] = e.ends;
            match e.sign {
                Sign::Plus => {
                    uf.union(side1(h), side2(k));
                    uf.union(side2(h), side1(k));
                }
                Sign::Minus => {
                    uf.union(side1(h), side1(k));
                    uf.union(side2(h), side2(k));
                }
            }
        }
        let mut circles = isolated;
        for h in 0..2 * self.edges.len() {
            if !visible(h) {
                continue;
            }
            for s in [side1(h), side2(h)] {
                if uf.find(s) == s {
                    circles += 1;
                }
            }
        }
        Ok(circles)
    }

    /// Vertex classes of the graph, each sorted; classes ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.rotations.len());
        for e in &self.edges {
            uf.union(self.vertex_of[e.ends[0]], self.vertex_of[e.ends[1]]);
        }
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut root_class: Vec<(usize, usize)> = Vec::new();
        for v in 0..self.rotations.len() {
            let r = uf.find(v);
            match root_class.iter().find(|(root, _)| *root == r) {
                Some(&(_, c)) => classes[c].push(v),
                None => {
                    root_class.push((r, classes.len()));
                    classes.push(vec![v]);
                }
            }
        }
        classes
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Quasi-tree delta-matroid: the edge subsets whose spanning subgraph has
    /// one boundary circle.
    pub fn delta_matroid(&self) -> Result<SetSystem> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let e = self.edges.len();
        if e > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge {
                n: e,
                bound: MAX_ELEMENTS,
            });
        }
        let mut phi = Vec::new();
        for u in 0..1u32 << e {
            if self.boundary_components(u)? == 1 {
                phi.push(u);
            }
        }
        SetSystem::new(e, phi)
    }

    /// Keeps the vertices in `vertices` (in that order) and the ribbons in
    /// `edge_subset` whose ends both lie there; ribbons and half-edges are
    /// renumbered in increasing original order.
    pub fn subgraph(&self, vertices: &[usize], edge_subset: u32) -> Result<RibbonGraph> {
        self.check_edge_mask(edge_subset)?;
        let keep_vertex = |v: usize| vertices.contains(&v);
        let kept: Vec<usize> = (0..self.edges.len())
            .filter(|&j| {
                edge_subset >> j & 1 == 1
                    && self.edges[j]
                        .ends
                        .iter()
                        .all(|&h| keep_vertex(self.vertex_of[h]))
            })
            .collect();
        let mut new_half = vec![usize::MAX; 2 * self.edges.len()];
        let mut edges = Vec::with_capacity(kept.len());
        for (k, &j) in kept.iter().enumerate() {
            let e = self.edges[j];
            new_half[e.ends[0]] = 2 * k;
            new_half[e.ends[1]] = 2 * k + 1;
            edges.push(RibbonEdge {
                ends: [2 * k, 2 * k + 1],
                sign: e.sign,
            });
        }
        let rotations = vertices
            .iter()
            .map(|&v| {
                self.rotations[v]
                    .iter()
                    .filter_map(|&h| Some(new_half[h]).filter(|&x| x != usize::MAX))
                    .collect()
            })
            .collect();
        RibbonGraph::new(rotations, edges)
    }

    /// Spanning subgraph on `edge_subset`.
    pub fn spanning_subgraph(&self, edge_subset: u32) -> Result<RibbonGraph> {
        let all: Vec<usize> = (0..self.rotations.len()).collect();
        self.subgraph(&all, edge_subset)
    }

    /// Swaps the half-edges at positions `p` and `p + 1` (cyclically) of
    /// vertex `v`; they must belong to different ribbons.
    pub fn end_exchange(&self, v: usize, p: usize) -> Result<RibbonGraph> {
        let rot = self.rotations.get(v).ok_or(Error::IndexOutOfRange {
            index: v,
            n: self.rotations.len(),
        })?;
        let len = rot.len();
        if len < 2 || p >= len {
            return Err(Error::IndexOutOfRange { index: p, n: len });
        }
        let q = (p + 1) % len;
        let (h, k) = (rot[p], rot[q]);
        if self.edge_of[h] == self.edge_of[k] {
            return Err(Error::SameEdge(self.edge_of[h]));
        }
        let mut out = self.clone();
        out.rotations[v].swap(p, q);
        Ok(out)
    }
}

/// Joins vertex `v1` of `g1` and vertex `v2` of `g2` into one vertex whose
/// rotation is `g1`'s read from break point `p1`, followed by `g2`'s read
/// from `p2`. Ribbons of `g2` are numbered after those of `g1`; the merged
/// vertex takes the place of `v1`, and `v2` is dropped from `g2`'s list.
pub fn vertex_gluing(
    g1: &RibbonGraph,
    v1: usize,
    p1: usize,
    g2: &RibbonGraph,
    v2: usize,
    p2: usize,
) -> Result<RibbonGraph> {
    let rot1 = g1.rotations.get(v1).ok_or(Error::IndexOutOfRange {
        index: v1,
        n: g1.vertex_count(),
    })?;
    let rot2 = g2.rotations.get(v2).ok_or(Error::IndexOutOfRange {
        index: v2,
        n: g2.vertex_count(),
    })?;
    if p1 > rot1.len() || (p1 == rot1.len() && p1 != 0) {
        return Err(Error::IndexOutOfRange {
            index: p1,
            n: rot1.len(),
        });
    }
    if p2 > rot2.len() || (p2 == rot2.len() && p2 != 0) {
        return Err(Error::IndexOutOfRange {
            index: p2,
            n: rot2.len(),
        });
    }
    let shift = 2 * g1.edge_count();
    let mut merged: Vec<usize> = rot1[p1..].iter().chain(&rot1[..p1]).copied().collect();
    merged.extend(rot2[p2..].iter().chain(&rot2[..p2]).map(|h| h + shift));
    let mut rotations = g1.rotations.clone();
    rotations[v1] = merged;
    for (v, rot) in g2.rotations.iter().enumerate() {
        if v != v2 {
            rotations.push(rot.iter().map(|h| h + shift).collect());
        }
    }
    let mut edges = g1.edges.clone();
    edges.extend(g2.edges.iter().map(|e| RibbonEdge {
        ends: [e.ends[0] + shift, e.ends[1] + shift],
        sign: e.sign,
    }));
    RibbonGraph::new(rotations, edges)
}

/// Which end of a chord, in the current reading order of the diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChordEnd {
    First,
    Second,
}

/// A ribbon graph with a single vertex. Chord `j` is ribbon `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChordDiagram {
    graph: RibbonGraph,
}

impl ChordDiagram {
    /// `word` lists the chord at each position around the vertex; every chord
    /// `0..signs.len()` must appear exactly twice.
    pub fn new(word: &[usize], signs: &[Sign]) -> Result<Self> {
        let n = signs.len();
        if word.len() != 2 * n {
            return Err(Error::InvalidRibbon(format!(
                "{} positions for {n} chords",
                word.len()
            )));
        }
        let mut ends = vec![[usize::MAX; 2]; n];
        for (pos, &c) in word.iter().enumerate() {
            let slot = ends
                .get_mut(c)
                .ok_or_else(|| Error::InvalidRibbon(format!("chord {c} has no sign")))?;
            if slot[0] == usize::MAX {
                slot[0] = pos;
            } else if slot[1] == usize::MAX {
                slot[1] = pos;
            } else {
                return Err(Error::InvalidRibbon(format!(
                    "chord {c} appears more than twice"
                )));
            }
        }
        if let Some(c) = ends.iter().position(|e| e[1] == usize::MAX) {
            return Err(Error::InvalidRibbon(format!(
                "chord {c} does not appear twice"
            )));
        }
        let edges = ends
            .iter()
            .zip(signs)
            .map(|(&ends, &sign)| RibbonEdge { ends, sign })
            .collect();
        let graph = RibbonGraph::new(vec![(0..2 * n).collect()], edges)?;
        Ok(Self { graph })
    }

    pub fn from_ribbon(graph: RibbonGraph) -> Result<Self> {
        if graph.vertex_count() != 1 {
            return Err(Error::InvalidRibbon(format!(
                "{} vertices in a chord diagram",
                graph.vertex_count()
            )));
        }
        Ok(Self { graph })
    }

    pub fn ribbon(&self) -> &RibbonGraph {
        &self.graph
    }

    pub fn chord_count(&self) -> usize {
        self.graph.edge_count()
    }

    fn rotation(&self) -> &[usize] {
        &self.graph.rotations[0]
    }

    /// Chord at each position around the vertex.
    pub fn word(&self) -> Vec<usize> {
        self.rotation()
            .iter()
            .map(|&h| self.graph.edge_of[h])
            .collect()
    }

    pub fn signs(&self) -> Vec<Sign> {
        self.graph.edges.iter().map(|e| e.sign).collect()
    }

    /// Positions of the two ends of each chord, in increasing order.
    fn end_positions(&self) -> Vec<[usize; 2]> {
        let mut pos = vec![[usize::MAX; 2]; self.chord_count()];
        for (i, c) in self.word().into_iter().enumerate() {
            if pos[c][0] == usize::MAX {
                pos[c][0] = i;
            } else {
                pos[c][1] = i;
            }
        }
        pos
    }

    /// Framed intersection graph: chords are adjacent iff their ends
    /// alternate; a chord is framed iff its ribbon is twisted.
    pub fn intersection_graph(&self) -> FramedGraph {
        let n = self.chord_count();
        let pos = self.end_positions();
        let mut adj = MatrixF2::zero(n, n);
        for (i, &[lo, hi]) in pos.iter().enumerate() {
            adj.set(i, i, self.graph.edges[i].sign == Sign::Minus);
            for (j, ends) in pos.iter().enumerate().skip(i + 1) {
                let inside = ends.iter().filter(|&&p| lo < p && p < hi).count();
                if inside == 1 {
                    adj.set(i, j, true);
                    adj.set(j, i, true);
                }
            }
        }
        FramedGraph::new(adj).expect("intersection matrix is symmetric")
    }

    pub fn delta_matroid(&self) -> Result<SetSystem> {
        self.graph.delta_matroid()
    }

    /// First move on the ends at positions `p` and `p + 1`.
    pub fn end_exchange(&self, p: usize) -> Result<ChordDiagram> {
        Ok(Self {
            graph: self.graph.end_exchange(0, p)?,
        })
    }

    /// Slides the chosen end of chord `a` along chord `b`.
    ///
    /// The end must sit next to an end of `b` (the following position is
    /// tried first). It travels along the ribbon `b` and is reinserted next
    /// to the far end of `b`: on the opposite side for a `Plus` ribbon and on
    /// the same side for a `Minus` one. The sign of `a` is multiplied by the
    /// sign of `b`.
    pub fn slide(&self, a: usize, b: usize, end: ChordEnd) -> Result<ChordDiagram> {
        let n = self.chord_count();
        if a == b {
            return Err(Error::SameElement(a));
        }
        if a >= n || b >= n {
            return Err(Error::IndexOutOfRange { index: a.max(b), n });
        }
        let g = &self.graph;
        let rot = self.rotation();
        let len = rot.len();
        let pos = self.end_positions()[a][match end {
            ChordEnd::First => 0,
            ChordEnd::Second => 1,
        }];
        let moving = rot[pos];
        let next = rot[(pos + 1) % len];
        let prev = rot[(pos + len - 1) % len];
        let (near, before) = if g.edge_of[next] == b {
            (next, true)
        } else if g.edge_of[prev] == b {
            (prev, false)
        } else {
            return Err(Error::NotAdjacent { a, b });
        };
        let far = g.edges[b]
            .ends
            .into_iter()
            .find(|&h| h != near)
            .expect("ribbon has two ends");
        let twisted = g.edges[b].sign == Sign::Minus;
        let mut new_rot: Vec<usize> = rot.iter().copied().filter(|&h| h != moving).collect();
        let j = new_rot
            .iter()
            .position(|&h| h == far)
            .expect("far end present");
        let insert_after = before != twisted;
        new_rot.insert(if insert_after { j + 1 } else { j }, moving);
        let mut edges = g.edges.clone();
        edges[a].sign = edges[a].sign.times(edges[b].sign);
        Ok(Self {
            graph: RibbonGraph::new(vec![new_rot], edges)?,
        })
    }
}

/// Every arrangement of `n` chords on a circle, chords labelled by order of
/// first appearance; there are `(2n - 1)!!` of them.
pub fn chord_words(n: usize) -> Vec<Vec<usize>> {
    fn extend(word: &mut Vec<usize>, next_label: usize, out: &mut Vec<Vec<usize>>) {
        let Some(first_free) = word.iter().position(|&c| c == usize::MAX) else {
            out.push(word.clone());
            return;
        };
        word[first_free] = next_label;
        for k in first_free + 1..word.len() {
            if word[k] == usize::MAX {
                word[k] = next_label;
                extend(word, next_label + 1, out);
                word[k] = usize::MAX;
            }
        }
        word[first_free] = usize::MAX;
    }
    let mut out = Vec::new();
    extend(&mut vec![usize::MAX; 2 * n], 0, &mut out);
    out
}

/// All `2^n` sign vectors, bit `j` of the index giving `Minus` for chord `j`.
pub fn sign_vectors(n: usize) -> impl Iterator<Item = Vec<Sign>> {
    (0..1u32 << n).map(move |bits| {
        (0..n)
            .map(|j| {
                if bits >> j & 1 == 1 {
                    Sign::Minus
                } else {
                    Sign::Plus
                }
            })
            .collect()
    })
}
