//! Graphs, polygons and tessellations.
//!
//! A tessellation is a partition of the vertex set into cliques. Each clique
//! (a polygon) carries a unit vector whose support is exactly the polygon, so
//! the vectors of one tessellation are orthonormal by construction.

use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::ops::Range;

use num_complex::Complex64;

use crate::{Error, Result, NORM_TOLERANCE};

/// Undirected edge stored as `(min, max)`.
pub type Edge = (usize, usize);

/// Simple undirected graph.
///
/// Edges are deduplicated and kept sorted; the index of an edge in
/// [`Graph::edges`] is its label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<usize>>,
    incident: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut canonical = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::OutOfRangeVertex { vertex: w, vertex_count });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            canonical.insert((u.min(v), u.max(v)));
        }
        let edges: Vec<Edge> = canonical.into_iter().collect();

        let mut adjacency = vec![Vec::new(); vertex_count];
        let mut incident = vec![Vec::new(); vertex_count];
        for (label, &(u, v)) in edges.iter().enumerate() {
            adjacency[u].push(v);
            adjacency[v].push(u);
            incident[u].push(label);
            incident[v].push(label);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }

        Ok(Self { vertex_count, edges, adjacency, incident, labels: None })
    }

    /// Attaches opaque vertex labels, one per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.vertex_count {
            return Err(Error::LabelMismatch { labels: labels.len(), dimension: self.vertex_count });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|v| (v - 1, v))).expect("path edges are in range")
    }

    /// Cycle on `n ≥ 3` vertices; smaller `n` degrades to a path.
    pub fn cycle(n: usize) -> Self {
        let closing = (n >= 3).then(|| (n - 1, 0));
        Self::new(n, (1..n).map(|v| (v - 1, v)).chain(closing)).expect("cycle edges are in range")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::new(n, edges).expect("complete-graph edges are in range")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Sorted neighbours of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Labels of the edges incident on `v`, ascending.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn edge_label(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// True when every pair of the given vertices is adjacent.
    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }
}

/// Builds a graph from a vertex count and an edge list, normalising the edges.
pub fn build_graph(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    Graph::new(vertex_count, edges.iter().copied())
}

/// One element of a tessellation together with its unit vector.
///
/// Vertices are kept sorted; `amplitudes[i]` belongs to `vertices[i]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    vertices: Vec<usize>,
    amplitudes: Vec<Complex64>,
}

impl Polygon {
    /// Builds a polygon from `(vertex, amplitude)` pairs.
    ///
    /// Every amplitude must be nonzero and the vector must have unit norm
    /// within [`NORM_TOLERANCE`]. Inputs are never renormalised.
    pub fn new(entries: impl IntoIterator<Item = (usize, Complex64)>) -> Result<Self> {
        let mut entries: Vec<(usize, Complex64)> = entries.into_iter().collect();
        if entries.is_empty() {
            return Err(Error::EmptyPolygon);
        }
        entries.sort_by_key(|&(v, _)| v);
        for pair in entries.windows(2) {
            if pair[0].0 == pair[1].0 {
                return Err(Error::DuplicateVertex(pair[0].0));
            }
        }
        if let Some(&(v, _)) = entries.iter().find(|(_, a)| a.norm() <= f64::EPSILON) {
            return Err(Error::ZeroAmplitude(v));
        }
        let norm = entries.iter().map(|(_, a)| a.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::NotNormalized { norm, tolerance: NORM_TOLERANCE });
        }
        let (vertices, amplitudes) = entries.into_iter().unzip();
        Ok(Self { vertices, amplitudes })
    }

    /// Uniform superposition `1/√|polygon|` over the given vertices.
    pub fn uniform(vertices: &[usize]) -> Result<Self> {
        let amplitude = Complex64::new(1.0 / (vertices.len() as f64).sqrt(), 0.0);
        Self::new(vertices.iter().map(|&v| (v, amplitude)))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, Complex64)> + '_ {
        self.vertices.iter().copied().zip(self.amplitudes.iter().copied())
    }

    pub fn amplitude(&self, v: usize) -> Option<Complex64> {
        self.vertices.binary_search(&v).ok().map(|i| self.amplitudes[i])
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &Polygon) -> Complex64 {
        self.iter()
            .filter_map(|(v, a)| other.amplitude(v).map(|b| a.conj() * b))
            .sum()
    }
}

pub fn uniform_polygon(vertices: &[usize]) -> Result<Polygon> {
    Polygon::uniform(vertices)
}

/// Ordered list of polygons meant to partition a graph's vertices into cliques.
///
/// Construction does not check the partition; use [`validate_tessellation`].
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Tessellation {
    polygons: Vec<Polygon>,
}

impl Tessellation {
    pub fn new(polygons: Vec<Polygon>) -> Self {
        Self { polygons }
    }

    /// Every vertex its own polygon. Induces the identity reflection.
    pub fn singletons(vertex_count: usize) -> Self {
        Self::new((0..vertex_count).map(|v| Polygon::uniform(&[v]).expect("singleton is valid")).collect())
    }

    pub fn polygons(&self) -> &[Polygon] {
        &self.polygons
    }

    pub fn len(&self) -> usize {
        self.polygons.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polygons.is_empty()
    }

    /// Polygon index of every vertex, or the first partition violation.
    pub(crate) fn owners(&self, g: &Graph) -> Result<Vec<usize>> {
        let n = g.vertex_count();
        let mut owner = vec![usize::MAX; n];
        for (index, polygon) in self.polygons.iter().enumerate() {
            if let Some(&v) = polygon.vertices().iter().find(|&&v| v >= n) {
                return Err(Error::OutOfRangeVertex { vertex: v, vertex_count: n });
            }
            if !g.is_clique(polygon.vertices()) {
                return Err(Error::NotAClique(index));
            }
            for &v in polygon.vertices() {
                if owner[v] != usize::MAX {
                    return Err(Error::OverlappingPolygons(v));
                }
                owner[v] = index;
            }
        }
        if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(Error::UncoveredVertex(v));
        }
        Ok(owner)
    }
}

/// Checks that `t` partitions the vertices of `g` into cliques.
pub fn validate_tessellation(g: &Graph, t: &Tessellation) -> Result<()> {
    t.owners(g).map(|_| ())
}

/// Edges of `g` that lie inside no polygon of any of the tessellations.
///
/// An empty result means the family covers the graph. Tessellations are
/// expected to be valid; vertices outside every polygon simply cover nothing.
pub fn union_covers_edges(g: &Graph, ts: &[Tessellation]) -> BTreeSet<Edge> {
    let owners: Vec<Vec<Option<usize>>> = ts
        .iter()
        .map(|t| {
            let mut owner = vec![None; g.vertex_count()];
            for (index, polygon) in t.polygons().iter().enumerate() {
                for &v in polygon.vertices() {
                    if let Some(slot) = owner.get_mut(v) {
                        *slot = Some(index);
                    }
                }
            }
            owner
        })
        .collect();

    g.edges()
        .iter()
        .copied()
        .filter(|&(u, v)| !owners.iter().any(|owner| owner[u].is_some() && owner[u] == owner[v]))
        .collect()
}

/// The two tessellations of a ring of `ring_size` sites used for the walk on
/// the line.
///
/// The first pairs `{2x, 2x+1}` with amplitudes `(cos α/2, e^{iφ₀} sin α/2)`,
/// the second pairs `{2x+1, 2x+2}` (indices mod `ring_size`) with
/// `(cos β/2, e^{iφ₁} sin β/2)`.
pub fn line_tessellations(
    ring_size: usize,
    alpha: f64,
    beta: f64,
    phi0: f64,
    phi1: f64,
) -> Result<(Tessellation, Tessellation)> {
    if ring_size < 4 || !ring_size.is_multiple_of(2) {
        return Err(Error::OddRingSize(ring_size));
    }
    for angle in [alpha, beta] {
        if !(angle > 0.0 && angle < PI) {
            return Err(Error::DegenerateAngle(angle));
        }
    }
    let pairs = |offset: usize, angle: f64, phase: f64| -> Result<Tessellation> {
        let first = Complex64::new((angle / 2.0).cos(), 0.0);
        let second = Complex64::from_polar((angle / 2.0).sin(), phase);
        let polygons = (0..ring_size / 2)
            .map(|x| {
                let v = 2 * x + offset;
                Polygon::new([(v, first), ((v + 1) % ring_size, second)])
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Tessellation::new(polygons))
    };
    Ok((pairs(0, alpha, phi0)?, pairs(1, beta, phi1)?))
}

/// Vertex of the expanded graph: original vertex `vertex` seen through its
/// incident edge `edge`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub vertex: usize,
    pub edge: usize,
}

/// Result of replacing every degree-`d` vertex by a `d`-clique.
///
/// Expanded vertex `i` is the arc `arcs()[i]`; arcs are sorted by vertex, then
/// by edge label. The same numbering indexes the arc space of a coined walk.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpansionMap {
    original: Graph,
    expanded: Graph,
    arcs: Vec<Arc>,
    offsets: Vec<usize>,
}

impl ExpansionMap {
    pub fn original(&self) -> &Graph {
        &self.original
    }

    pub fn expanded(&self) -> &Graph {
        &self.expanded
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc(&self, index: usize) -> Arc {
        self.arcs[index]
    }

    pub fn arc_index(&self, vertex: usize, edge: usize) -> Option<usize> {
        let incident = self.original.incident_edges(vertex);
        incident.binary_search(&edge).ok().map(|i| self.offsets[vertex] + i)
    }

    /// Expanded vertices that came from original vertex `v`.
    pub fn vertex_arcs(&self, v: usize) -> Range<usize> {
        self.offsets[v]..self.offsets[v] + self.original.degree(v)
    }

    /// The arc at the other end of the same edge.
    pub fn partner(&self, index: usize) -> usize {
        let Arc { vertex, edge } = self.arcs[index];
        let (u, v) = self.original.edges()[edge];
        let other = if vertex == u { v } else { u };
        self.arc_index(other, edge).expect("both endpoints carry the edge")
    }
}

/// Replaces each degree-`d` vertex of `g` by a `d`-clique; the two arcs of
/// every original edge become adjacent.
pub fn clique_expansion(g: &Graph) -> Result<ExpansionMap> {
    if let Some(v) = (0..g.vertex_count()).find(|&v| g.degree(v) == 0) {
        return Err(Error::IsolatedVertex(v));
    }

    let mut arcs = Vec::with_capacity(2 * g.edge_count());
    let mut offsets = Vec::with_capacity(g.vertex_count());
    for v in 0..g.vertex_count() {
        offsets.push(arcs.len());
        arcs.extend(g.incident_edges(v).iter().map(|&edge| Arc { vertex: v, edge }));
    }

    let mut edges = Vec::new();
    for (v, &start) in offsets.iter().enumerate() {
        let range = start..start + g.degree(v);
        for i in range.clone() {
            edges.extend((i + 1..range.end).map(|j| (i, j)));
        }
    }
    let arc_of = |vertex: usize, edge: usize| {
        offsets[vertex] + g.incident_edges(vertex).binary_search(&edge).expect("edge is incident")
    };
    for (label, &(u, v)) in g.edges().iter().enumerate() {
        edges.push((arc_of(u, label), arc_of(v, label)));
    }

    let labels = arcs.iter().map(|arc| format!("{},{}", arc.vertex, arc.edge)).collect();
    let expanded = Graph::new(arcs.len(), edges)?.with_labels(labels)?;
    Ok(ExpansionMap { original: g.clone(), expanded, arcs, offsets })
}
