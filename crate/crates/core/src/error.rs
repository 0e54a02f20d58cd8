use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("order relation has a cycle through `{0}`")]
    CycleDetected(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("size parameter must be at least 1")]
    ZeroSize,
    #[error("the empty poset has no length")]
    EmptyPoset,
    #[error("{what} too large: {size} exceeds bound {bound}")]
    TooLarge {
        what: &'static str,
        size: usize,
        bound: usize,
    },
    #[error("set is not D-closed: `{0}` is forced but missing")]
    NotDClosed(String),
    #[error("set is not order-convex")]
    NotConvex,
    #[error("not a lattice: `{0}` and `{1}` have no {2}")]
    NotALattice(String, String, &'static str),
    #[error("sublattice generation exceeded cap {cap} (partial size {partial})")]
    CapExceeded { cap: usize, partial: usize },
    #[error("no seed elements given")]
    NoSeeds,
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
    #[error("bad arity: {0}")]
    BadArity(String),
    #[error("assignment budget exceeded: {needed} > {budget} (try `--method structural`)")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("no Udav-Bond partition for `{0}`")]
    NoPartition(String),
    #[error("lattice is not in SUB2: {0}")]
    NotInSub2(String),
    #[error("internal consistency failure: join-irreducible `{0}` has no Udav-Bond partition")]
    PartitionMissing(String),
    #[error("map is not a lattice homomorphism at ({0}, {1})")]
    NotAHomomorphism(String, String),
    #[error("need at least 2 generators, got {0}")]
    TooFewGenerators(usize),
    #[error("image of `{0}` lies outside the lattice generated by the generator images")]
    OutsideGeneratedRange(String),
    #[error("host poset is not of the form P(I,J)")]
    NotPij,
    #[error("invalid reconstruction: {0}")]
    InvalidReconstruction(String),
    #[error("structural method not applicable: {0}")]
    StructuralInapplicable(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}
