//! JSON document for graphs and their tessellations.
//!
//! ```json
//! {"vertices": 4, "edges": [[0,1],[1,2],[2,3]],
//!  "tessellations": [{"polygons": [{"vertices": [0,1], "amplitudes": [[0.6,0],[0,0.8]]},
//!                                  {"vertices": [2,3]}]}]}
//! ```
//!
//! Amplitudes are `[re, im]` pairs; a polygon without them is uniform.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::graph::{Graph, Polygon, Tessellation};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolygonDocument {
    pub vertices: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub amplitudes: Option<Vec<[f64; 2]>>,
}

impl PolygonDocument {
    pub fn to_polygon(&self) -> Result<Polygon> {
        match &self.amplitudes {
            None => Polygon::uniform(&self.vertices),
            Some(amps) if amps.len() != self.vertices.len() => Err(Error::DomainError(format!(
                "polygon lists {} vertices but {} amplitudes",
                self.vertices.len(),
                amps.len()
            ))),
            Some(amps) => Polygon::new(
                self.vertices.iter().zip(amps).map(|(&v, &[re, im])| (v, Complex64::new(re, im))),
            ),
        }
    }

    pub fn from_polygon(p: &Polygon) -> Self {
        Self {
            vertices: p.vertices().to_vec(),
            amplitudes: Some(p.amplitudes().iter().map(|a| [a.re, a.im]).collect()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TessellationDocument {
    pub polygons: Vec<PolygonDocument>,
}

impl TessellationDocument {
    pub fn to_tessellation(&self) -> Result<Tessellation> {
        Ok(Tessellation::new(self.polygons.iter().map(PolygonDocument::to_polygon).collect::<Result<_>>()?))
    }

    pub fn from_tessellation(t: &Tessellation) -> Self {
        Self { polygons: t.polygons().iter().map(PolygonDocument::from_polygon).collect() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub vertices: usize,
    #[serde(default)]
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tessellations: Vec<TessellationDocument>,
}

impl GraphDocument {
    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serialises")
    }

    pub fn graph(&self) -> Result<Graph> {
        let g = Graph::new(self.vertices, self.edges.iter().map(|&[u, v]| (u, v)))?;
        match &self.labels {
            Some(labels) => g.with_labels(labels.clone()),
            None => Ok(g),
        }
    }

    pub fn tessellations(&self) -> Result<Vec<Tessellation>> {
        self.tessellations.iter().map(TessellationDocument::to_tessellation).collect()
    }

    pub fn from_parts(g: &Graph, tessellations: &[Tessellation]) -> Self {
        Self {
            vertices: g.vertex_count(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
            labels: g.labels().map(<[String]>::to_vec),
            tessellations: tessellations.iter().map(TessellationDocument::from_tessellation).collect(),
        }
    }
}
