use thiserror::Error;

/// Errors produced by heap construction, rank checking and the Coxeter tooling.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown piece `{0}`")]
    UnknownPiece(String),
    #[error("duplicate piece `{0}`")]
    DuplicatePiece(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("heaps are built over different alphabets")]
    AlphabetMismatch,
    #[error("relation closure contains a cycle through `{0}`")]
    CycleDetected(String),
    #[error("elements `{0}` and `{1}` have concurrent labels but are incomparable")]
    Axiom1Violation(String, String),
    #[error("cover `{0}` < `{1}` joins non-concurrent labels")]
    Axiom2Violation(String, String),
    #[error("elements `{0}` and `{1}` are not comparable")]
    NotComparable(String, String),
    #[error("concurrency subgraph contains the circuit {}", .0.join(" "))]
    CircuitInConcurrencySubgraph(Vec<String>),
    #[error("generators `{0}` and `{1}` are not adjacent")]
    NotAdjacent(String, String),
    #[error("generator `{0}` has degree {1}, need at least 2")]
    DegreeTooSmall(String, usize),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("invalid bond {0}: bonds must be at least 3 or infinite")]
    InvalidBond(u32),
    #[error("generator `{0}` cannot be bonded to itself")]
    SelfBond(String),
    #[error("Coxeter group is not FC-finite")]
    NotFcFinite,
    #[error("heap is not the heap of a fully commutative element")]
    NotFcHeap,
    #[error("[{0}, {1}] is not a minimal balanced subinterval")]
    NotMinimalBalanced(String, String),
    #[error("all S-set labels coincide")]
    NotApplicable,
    #[error("no S-set member carries label `{0}`")]
    NoSuchLabel(String),
    #[error("enumeration over a group that is not FC-finite needs a size bound")]
    BoundRequired,
    #[error("unknown family `{0}` or unsupported rank {1}")]
    UnknownFamily(String, u32),
    /// `line` is 1-based; 0 marks a problem with the file as a whole.
    #[error("{}", located(*.line, .msg))]
    Parse { line: usize, msg: String },
}

fn located(line: usize, msg: &str) -> String {
    if line == 0 {
        msg.to_string()
    } else {
        format!("line {line}: {msg}")
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
