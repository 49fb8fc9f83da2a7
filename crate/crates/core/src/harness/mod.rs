//! Corpora of explicit groups, theorem runners over them, and table export.
//!
//! A [`Corpus`] is an ordered, label-unique list of groups. The built-in
//! corpora are the small-group catalog and a set of family sweeps; external
//! corpora are read from JSON Lines files, one group per line:
//!
//! ```text
//! {"label": "S3", "degree": 3, "generators": [[1, 2, 0], [1, 0, 2]]}
//! ```

mod checks;
mod corpus;
mod table;

pub use checks::{check_theorem, run_all, Counterexample, TheoremCheckResult, TheoremId};
pub use corpus::{
    build_family, load_corpus, read_corpus, write_corpus, Corpus, CorpusEntry, CorpusSource,
    STANDARD_MAX_ORDER,
};
pub use table::{emit_table, table_rows, write_table, TableFormat, TableRow, TableSummary};

use std::path::PathBuf;

use thiserror::Error;

use crate::analysis::AnalysisError;
use crate::permgroup::GroupError;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {field}: {message}")]
    Parse {
        line: usize,
        field: String,
        message: String,
    },
    #[error("duplicate label {label:?} (line {line})")]
    DuplicateLabel { line: usize, label: String },
    #[error("{label}: {source}")]
    Group {
        label: String,
        #[source]
        source: GroupError,
    },
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error("unknown theorem identifier {0:?}")]
    UnknownTheorem(String),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("bad parameters for {family}: {message}")]
    BadParameters { family: String, message: String },
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Write(#[from] std::io::Error),
}
