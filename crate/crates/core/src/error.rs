use thiserror::Error;

/// Errors raised by graph construction and the solver operations.
///
/// Every variant corresponds to a violated precondition or a malformed
/// input; none of them signal internal solver failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph order must be at least 1")]
    EmptyGraph,
    #[error("cycle requires at least 3 vertices, got {0}")]
    CycleTooSmall(usize),
    #[error("complete multipartite graph requires at least one part")]
    NoParts,
    #[error("complete multipartite part sizes must be at least 1")]
    ZeroPart,
    #[error("Kneser graph KG({k},{r}) outside the supported regime (requires k >= 2r+1, r >= 1)")]
    KneserRegime { k: usize, r: usize },
    #[error("line graph of an edgeless graph is empty")]
    LineGraphOfEdgeless,
    #[error("graph is disconnected: {context}")]
    Disconnected { context: &'static str },
    #[error("twin check requires two distinct vertices, got {0} twice")]
    TwinOfItself(usize),
    #[error("gap decomposition requires a landmark set of size at least 2, got {0}")]
    GapSetTooSmall(usize),
    #[error("duplicate vertex {0} in landmark set")]
    DuplicateLandmark(usize),
    #[error("{side} graph must have order at least 2 for the product engine")]
    ProductOrderTooSmall { side: &'static str },
    #[error("the path/cycle product formula is undefined for m = {0} (m must not be 2 or 3)")]
    FamilyOrderExcluded(usize),
    #[error("family pair not covered by any closed-form table: {0}")]
    TableNotCovered(String),
    #[error("invalid family descriptor: {0}")]
    BadFamily(String),
    #[error("edge list parse error at line {line}: {msg}")]
    EdgeListParse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
