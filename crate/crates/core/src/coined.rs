//! Flip-flop coined walks as staggered walks with Hamiltonians.
//!
//! The coined walk lives on arcs `|v⟩|a⟩`, one per (vertex, incident edge)
//! pair. After replacing every degree-`d` vertex by a `d`-clique the arcs are
//! the vertices of a larger graph, on which
//!
//! * the flip-flop shift `S|v⟩|a⟩ = |v'⟩|a⟩` is the reflection induced by the
//!   tessellation pairing the two arcs of every edge, and
//! * a coin `e^{iθ₀H₀}` is local when `H₀` is induced by a tessellation whose
//!   polygons stay inside the cliques.
//!
//! Since `iS = e^{iπS/2}`, one coined step is `e^{iπS/2} e^{iθ₀H₀}`.

use std::f64::consts::FRAC_PI_2;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::document::PolygonDocument;
use crate::graph::{clique_expansion, validate_tessellation, ExpansionMap, Graph, Polygon, Tessellation};
use crate::operators::{compose, EvolutionOperator, OrthogonalReflection};
use crate::{Angle, Error, Result, WalkState};

/// Tessellation of the expanded graph pairing the two arcs of each edge.
pub fn shift_tessellation(map: &ExpansionMap) -> Tessellation {
    let polygons = (0..map.original().edge_count())
        .map(|edge| {
            let (u, v) = map.original().edges()[edge];
            let arcs = [map.arc_index(u, edge), map.arc_index(v, edge)].map(|a| a.expect("edge is incident"));
            Polygon::uniform(&arcs).expect("two distinct arcs")
        })
        .collect();
    Tessellation::new(polygons)
}

/// One uniform polygon over all arcs of each vertex: the Grover coin.
pub fn grover_tessellation(map: &ExpansionMap) -> Tessellation {
    let polygons = (0..map.original().vertex_count())
        .map(|v| Polygon::uniform(&map.vertex_arcs(v).collect::<Vec<_>>()).expect("vertex has arcs"))
        .collect();
    Tessellation::new(polygons)
}

/// Arcs of each vertex paired in order, a leftover arc on its own. On
/// degree-2 vertices this is the Pauli-X coin.
pub fn x_block_tessellation(map: &ExpansionMap) -> Tessellation {
    let mut polygons = Vec::new();
    for v in 0..map.original().vertex_count() {
        let arcs: Vec<usize> = map.vertex_arcs(v).collect();
        for chunk in arcs.chunks(2) {
            polygons.push(Polygon::uniform(chunk).expect("non-empty chunk"));
        }
    }
    Tessellation::new(polygons)
}

/// The flip-flop shift as an orthogonal reflection on the arc space.
pub fn flipflop_shift(g: &Graph) -> Result<OrthogonalReflection> {
    let map = clique_expansion(g)?;
    OrthogonalReflection::from_tessellation(map.expanded(), &shift_tessellation(&map))
}

/// `2/d·J − I` on the arcs of every degree-`d` vertex.
pub fn grover_coin_reflection(g: &Graph) -> Result<OrthogonalReflection> {
    let map = clique_expansion(g)?;
    OrthogonalReflection::from_tessellation(map.expanded(), &grover_tessellation(&map))
}

/// Flip-flop coined walk with coin `e^{iθ₀H₀}`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoinedWalk {
    map: ExpansionMap,
    coin_angle: f64,
    coin_tessellation: Tessellation,
    coin_reflection: OrthogonalReflection,
    shift_tessellation: Tessellation,
    shift: OrthogonalReflection,
}

impl CoinedWalk {
    /// `coin` is a tessellation of the arc space; each polygon must stay
    /// within the arcs of a single vertex.
    pub fn new(graph: &Graph, coin_angle: f64, coin: Tessellation) -> Result<Self> {
        let map = clique_expansion(graph)?;
        validate_tessellation(map.expanded(), &coin)?;
        for (index, polygon) in coin.polygons().iter().enumerate() {
            let owner = map.arc(polygon.vertices()[0]).vertex;
            if polygon.vertices().iter().any(|&a| map.arc(a).vertex != owner) {
                return Err(Error::UnsupportedCoin(format!(
                    "polygon {index} mixes arcs of different vertices, so it is not a coin"
                )));
            }
        }
        let coin_reflection = OrthogonalReflection::from_tessellation(map.expanded(), &coin)?;
        let shift_tessellation = shift_tessellation(&map);
        let shift = OrthogonalReflection::from_tessellation(map.expanded(), &shift_tessellation)?;
        Ok(Self { map, coin_angle, coin_tessellation: coin, coin_reflection, shift_tessellation, shift })
    }

    pub fn grover(graph: &Graph, coin_angle: f64) -> Result<Self> {
        let map = clique_expansion(graph)?;
        Self::new(graph, coin_angle, grover_tessellation(&map))
    }

    pub fn x_blocks(graph: &Graph, coin_angle: f64) -> Result<Self> {
        let map = clique_expansion(graph)?;
        Self::new(graph, coin_angle, x_block_tessellation(&map))
    }

    pub fn graph(&self) -> &Graph {
        self.map.original()
    }

    pub fn map(&self) -> &ExpansionMap {
        &self.map
    }

    pub fn coin_angle(&self) -> f64 {
        self.coin_angle
    }

    pub fn coin_tessellation(&self) -> &Tessellation {
        &self.coin_tessellation
    }

    pub fn coin_reflection(&self) -> &OrthogonalReflection {
        &self.coin_reflection
    }

    pub fn shift_tessellation(&self) -> &Tessellation {
        &self.shift_tessellation
    }

    pub fn shift(&self) -> &OrthogonalReflection {
        &self.shift
    }

    /// Arc-space dimension, `2|E|`.
    pub fn dimension(&self) -> usize {
        self.map.arcs().len()
    }

    /// The coined step assembled directly on arcs: dense coin blocks per
    /// vertex followed by `i` times the arc swap.
    pub fn direct_operator(&self) -> DirectCoinedStep {
        let (sin, cos) = self.coin_angle.sin_cos();
        let blocks = (0..self.graph().vertex_count())
            .map(|v| {
                let arcs = self.map.vertex_arcs(v);
                let d = arcs.len();
                let mut reflection = -DMatrix::<Complex64>::identity(d, d);
                for polygon in self.coin_tessellation.polygons().iter().filter(|p| arcs.contains(&p.vertices()[0])) {
                    for (a, x) in polygon.iter() {
                        for (b, y) in polygon.iter() {
                            reflection[(a - arcs.start, b - arcs.start)] += 2.0 * x * y.conj();
                        }
                    }
                }
                (arcs.start, DMatrix::identity(d, d) * Complex64::new(cos, 0.0) + reflection * Complex64::new(0.0, sin))
            })
            .collect();
        let partner = (0..self.dimension()).map(|a| self.map.partner(a)).collect();
        DirectCoinedStep { blocks, partner }
    }
}

/// Coined step `iS · C` with `C` block-diagonal over vertices and `S` an arc
/// permutation.
#[derive(Debug, Clone)]
pub struct DirectCoinedStep {
    blocks: Vec<(usize, DMatrix<Complex64>)>,
    partner: Vec<usize>,
}

impl DirectCoinedStep {
    pub fn step(&self, psi: &WalkState) -> Result<WalkState> {
        psi.check_dimension(self.partner.len())?;
        let mut coined = vec![Complex64::new(0.0, 0.0); self.partner.len()];
        for (start, block) in &self.blocks {
            let d = block.nrows();
            let local = DVector::from_column_slice(&psi.amplitudes()[*start..start + d]);
            coined[*start..start + d].copy_from_slice((block * local).as_slice());
        }
        let shifted = self.partner.iter().map(|&p| Complex64::i() * coined[p]).collect();
        Ok(WalkState::from_unitary_image(shifted))
    }

    pub fn to_dense(&self) -> DMatrix<Complex64> {
        let n = self.partner.len();
        let mut m = DMatrix::zeros(n, n);
        for j in 0..n {
            let column = self.step(&WalkState::basis(n, j).expect("in range")).expect("dimension matches");
            for (i, a) in column.amplitudes().iter().enumerate() {
                m[(i, j)] = *a;
            }
        }
        m
    }
}

/// `e^{iπS/2} e^{iθ₀H₀}` on the expanded graph, from its two tessellations.
pub fn embed_coined_as_sqw(cw: &CoinedWalk) -> Result<EvolutionOperator> {
    let expanded = cw.map.expanded();
    compose(vec![
        (cw.coin_angle, OrthogonalReflection::from_tessellation(expanded, &cw.coin_tessellation)?),
        (FRAC_PI_2, OrthogonalReflection::from_tessellation(expanded, &cw.shift_tessellation)?),
    ])
}

#[derive(Debug, Clone, PartialEq)]
pub struct EquivalenceReport {
    /// Largest phase-insensitive distance between the two evolutions.
    pub max_state_deviation: f64,
    pub steps_checked: usize,
    pub bijection_used: ExpansionMap,
}

/// Runs the coined walk on arcs and the staggered walk on the expanded graph
/// side by side and records how far apart the states drift.
pub fn certify_equivalence(cw: &CoinedWalk, steps: usize, psi0: &WalkState) -> Result<EquivalenceReport> {
    psi0.check_dimension(cw.dimension())?;
    let direct = cw.direct_operator();
    let staggered = embed_coined_as_sqw(cw)?;

    // arc (v, a) sits at expanded vertex map.arc_index(v, a)
    let to_expanded: Vec<usize> = cw
        .map
        .arcs()
        .iter()
        .map(|arc| cw.map.arc_index(arc.vertex, arc.edge).expect("arc is listed"))
        .collect();
    let mut on_arcs = psi0.clone();
    let mut expanded_amps = vec![Complex64::new(0.0, 0.0); cw.dimension()];
    for (arc, &vertex) in to_expanded.iter().enumerate() {
        expanded_amps[vertex] = psi0[arc];
    }
    let mut on_graph = WalkState::from_unitary_image(expanded_amps);

    let mut max_state_deviation: f64 = 0.0;
    for _ in 0..steps {
        on_arcs = direct.step(&on_arcs)?;
        on_graph = staggered.step(&on_graph)?;
        let pulled_back = WalkState::from_unitary_image(to_expanded.iter().map(|&v| on_graph[v]).collect());
        max_state_deviation = max_state_deviation.max(on_arcs.phase_distance(&pulled_back));
    }
    Ok(EquivalenceReport { max_state_deviation, steps_checked: steps, bijection_used: cw.map.clone() })
}

/// Coin as written in a graph file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum CoinDescriptor {
    /// Grover coin; `theta` defaults to π/2.
    Grover {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        theta: Option<Angle>,
    },
    /// Pauli-X blocks on consecutive arcs of every vertex.
    XBlocks { theta: Angle },
    /// Explicit polygons on arc indices.
    Reflection { theta: Angle, polygons: Vec<PolygonDocument> },
}

const KNOWN_COINS: [&str; 3] = ["grover", "x-blocks", "reflection"];

impl CoinDescriptor {
    /// Parses a coin object, reporting unknown coin types as
    /// [`Error::UnsupportedCoin`].
    pub fn from_value(value: &serde_json::Value) -> Result<Self> {
        let kind = value.get("type").and_then(|t| t.as_str()).unwrap_or("<missing type>");
        if !KNOWN_COINS.contains(&kind) {
            return Err(Error::UnsupportedCoin(format!(
                "{kind:?}; only coins of the form e^(i theta H) with H an orthogonal reflection are accepted"
            )));
        }
        Self::deserialize(value).map_err(|e| Error::UnsupportedCoin(e.to_string()))
    }

    pub fn build(&self, graph: &Graph) -> Result<CoinedWalk> {
        match self {
            Self::Grover { theta } => CoinedWalk::grover(graph, theta.map_or(FRAC_PI_2, Angle::radians)),
            Self::XBlocks { theta } => CoinedWalk::x_blocks(graph, theta.radians()),
            Self::Reflection { theta, polygons } => {
                let polygons = polygons.iter().map(PolygonDocument::to_polygon).collect::<Result<_>>()?;
                CoinedWalk::new(graph, theta.radians(), Tessellation::new(polygons))
            }
        }
    }
}
