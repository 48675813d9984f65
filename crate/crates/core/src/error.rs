use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {0} vertices, capacity is 64")]
    TooManyVertices(usize),
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {0} is not active")]
    InactiveVertex(usize),
    #[error("adjacency is not symmetric between {u} and {v}")]
    Asymmetric { u: usize, v: usize },
    #[error("graph is not a forest")]
    NotAForest,
    #[error("order {n} outside the supported range {min}..={max}")]
    OrderOutOfRange { n: usize, min: usize, max: usize },
    #[error("family parameter {0} is invalid")]
    BadFamilyParameter(String),
    #[error("graph6 parse error: {0}")]
    Graph6(String),
    #[error("edge list parse error: {0}")]
    EdgeList(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomial is constant")]
    Constant,
    #[error("coefficient {index} is not positive")]
    NonPositiveCoefficient { index: usize },
    #[error("no closed form for family {0}")]
    UnsupportedFamily(String),
    #[error("malformed polynomial: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RootError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("root iteration did not converge after {iterations} iterations (max step {max_step:e})")]
    NoConvergence { iterations: usize, max_step: f64 },
    #[error("residual {residual:e} exceeds the threshold {threshold:e}")]
    ResidualTooLarge { residual: f64, threshold: f64 },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SurveyError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("root finding failed for {graph6}: {source}")]
    Roots { graph6: String, source: RootError },
    #[error("{0}")]
    Unsupported(String),
}
