use alloc::string::String;

use crate::ast::NodeKind;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("unsupported node kind `{0}`")]
    UnsupportedKind(String),
    #[error("malformed AST at {0}")]
    MalformedAst(String),
    #[error("AST still contains stubs")]
    IncompleteAst,

    #[error("fragment {0} does not match the kind of the stub it should fill")]
    ReassemblyTypeError(usize),
    #[error("fragment sequence and stubs do not line up")]
    ReassemblyArityError,
    #[error("no fragment sequences to build a vocabulary from")]
    EmptyCorpus,

    #[error("invalid hyperparameters: {0}")]
    InvalidHyperparams(&'static str),
    #[error("fragment id {0} is outside the vocabulary")]
    VocabRangeError(u32),
    #[error("reserved id used as a prediction target")]
    ReservedTarget,
    #[error("training diverged (non-finite value) in batch {batch}")]
    DivergedError { batch: usize },
    #[error("empty dataset")]
    EmptyDataset,

    #[error("seed has no removable subtree")]
    NothingToRemove,
    #[error("cannot append a {found} fragment to a {expected} stub")]
    AppendTypeError { expected: NodeKind, found: NodeKind },
    #[error("AST has no stub to append to")]
    NothingToAppend,
}
