//! Group files, per-group reports, and corpus verification.

mod file;
mod report;
mod verify;

pub use file::{load_group, GeneratorSpec, GroupFile, Metadata};
pub use report::{analyze, analyze_full, Analysis, CoprimeReport, WeissVerdict, CSV_HEADER};
pub use verify::{EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, builtin_corpus, verify_corpus, AggregateReport, BuiltinEntry, LoadFailure, VerifyOptions};
