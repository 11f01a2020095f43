use thiserror::Error;

fn at_line(line: &Option<usize>) -> String {
    match line {
        Some(l) => format!("line {l}: "),
        None => String::new(),
    }
}

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty edge list")]
    EmptyInput,
    #[error("line {line}: expected \"u v\" with non-negative integer ids, got {text:?}")]
    Parse { line: usize, text: String },
    #[error("{}self-loop at vertex {vertex}", at_line(.line))]
    SelfLoop { line: Option<usize>, vertex: usize },
    #[error("{}duplicate edge {u}-{v}", at_line(.line))]
    DuplicateEdge {
        line: Option<usize>,
        u: usize,
        v: usize,
    },
    #[error("graph is disconnected: vertex {unreachable} cannot be reached from vertex 0 ({components} components)")]
    Disconnected {
        unreachable: usize,
        components: usize,
    },
    #[error("vertex {vertex} out of range (graph has {n} vertices)")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{u}-{v} is not an edge")]
    NotAnEdge { u: usize, v: usize },
    #[error("invalid point: {0}")]
    InvalidPoint(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("unknown generator family {0:?}")]
    UnknownFamily(String),
    #[error("empty point set")]
    EmptyPointSet,
    #[error("vertex {0} is not on the cycle")]
    NotOnCycle(usize),
    #[error("invalid cycle: {0}")]
    InvalidCycle(String),
    #[error("endpoint {0} lies inside the separator set")]
    EndpointInSeparator(usize),
    #[error("{0} does not separate the endpoints")]
    NotSeparating(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid geodesic: {0}")]
    InvalidGeodesic(String),
    #[error("certificate is not minimal")]
    NotMinimal,
    #[error("internal consistency violation: {0}")]
    Consistency(String),
    #[error("unknown check id {0:?}")]
    UnknownCheck(String),
    #[error("graph {graph_id}: {source}")]
    InGraph {
        graph_id: String,
        source: Box<Error>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
