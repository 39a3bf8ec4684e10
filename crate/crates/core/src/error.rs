use thiserror::Error;

/// Errors raised anywhere in the toolkit.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph with {vertex_count} vertices")]
    OutOfRangeVertex { vertex: usize, vertex_count: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("polygon has no vertices")]
    EmptyPolygon,

    #[error("vertex {0} appears twice in one polygon")]
    DuplicateVertex(usize),

    #[error("amplitude on vertex {0} is zero")]
    ZeroAmplitude(usize),

    #[error("vector norm {norm} differs from 1 by more than {tolerance:e}")]
    NotNormalized { norm: f64, tolerance: f64 },

    #[error("polygon {0} is not a clique")]
    NotAClique(usize),

    #[error("vertex {0} belongs to more than one polygon")]
    OverlappingPolygons(usize),

    #[error("vertex {0} is not covered by any polygon")]
    UncoveredVertex(usize),

    #[error("ring size {0} must be even and at least 4")]
    OddRingSize(usize),

    #[error("angle {0} leaves a polygon amplitude at zero; it must lie strictly inside (0, pi)")]
    DegenerateAngle(f64),

    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("evolution operator needs at least one factor")]
    EmptyFactorList,

    #[error("dimension {dimension} exceeds the dense-matrix cap {cap}")]
    DimensionCapExceeded { dimension: usize, cap: usize },

    #[error("{labels} position labels given for {dimension} vertices")]
    LabelMismatch { labels: usize, dimension: usize },

    #[error("wavefront reached the antipode of the ring at step {0}")]
    WavefrontWrapped(usize),

    #[error("reduced block is degenerate (B or sin(lambda) vanishes); its eigenvectors are the basis vectors")]
    DegenerateBlock,

    #[error("quadrature did not converge: successive grids differ by {difference:e} at {nodes} nodes")]
    QuadratureNotConverged { nodes: usize, difference: f64 },

    #[error("integrand is singular at k = {0}")]
    SingularIntegrand(f64),

    #[error("{0}")]
    DomainError(String),

    #[error("unsupported coin: {0}")]
    UnsupportedCoin(String),

    #[error("invalid angle {0:?}")]
    InvalidAngle(String),
}

pub type Result<T> = std::result::Result<T, Error>;
