use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::file::load_group;
use super::report::{analyze, CoprimeReport};
use crate::constructions::construct;
use crate::error::{Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// A constructible corpus entry: family name and parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuiltinEntry {
    pub family: &'static str,
    pub params: Vec<usize>,
}

impl BuiltinEntry {
    fn new(family: &'static str, params: &[usize]) -> Self {
        BuiltinEntry {
            family,
            params: params.to_vec(),
        }
    }

    pub fn name(&self) -> String {
        let params: Vec<String> = self.params.iter().map(|p| p.to_string()).collect();
        format!("{}({})", self.family, params.join(","))
    }
}

pub fn builtin_corpus() -> Vec<BuiltinEntry> {
    let mut out = Vec::new();
    for n in 5..=9 {
        out.push(BuiltinEntry::new("alt", &[n]));
    }
    for (n, k) in [(5, 2), (6, 2), (7, 2), (7, 3), (8, 2), (8, 3), (9, 2), (9, 4), (10, 3), (12, 2)] {
        out.push(BuiltinEntry::new("ksubsets", &[n, k]));
    }
    for (n, k) in [(6, 2), (6, 3), (8, 2), (8, 4), (9, 3)] {
        out.push(BuiltinEntry::new("partitions", &[n, k]));
    }
    for (d, p) in [(1, 5), (1, 7), (1, 13), (2, 2), (2, 3), (3, 2), (2, 5), (4, 2), (2, 7), (3, 3)] {
        out.push(BuiltinEntry::new("agl", &[d, p]));
    }
    for q in [4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 37, 41, 43, 47, 49, 53, 59, 61] {
        out.push(BuiltinEntry::new("psl2", &[q]));
    }
    for n in 2..=12 {
        out.push(BuiltinEntry::new("cyclic", &[n]));
    }
    for n in 3..=12 {
        out.push(BuiltinEntry::new("dihedral", &[n]));
    }
    out
}

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    pub dir: Option<PathBuf>,
    pub builtin: bool,
    /// Worker threads; 0 lets the pool decide.
    pub jobs: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoadFailure {
    pub name: String,
    pub error: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AggregateReport {
    pub groups: Vec<CoprimeReport>,
    pub load_failures: Vec<LoadFailure>,
    pub violations: Vec<String>,
}

impl AggregateReport {
    pub fn exit_code(&self) -> i32 {
        if self.violations.is_empty() {
            EXIT_OK
        } else {
            EXIT_VIOLATION
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }
}

enum Job {
    File(PathBuf),
    Builtin(BuiltinEntry),
}

impl Job {
    fn name(&self) -> String {
        match self {
            Job::File(p) => p.display().to_string(),
            Job::Builtin(b) => b.name(),
        }
    }

    fn run(&self) -> std::result::Result<CoprimeReport, LoadFailure> {
        let group = match self {
            Job::File(p) => load_group(p),
            Job::Builtin(b) => construct(b.family, &b.params),
        };
        match group {
            Ok(g) => Ok(analyze(&g, 0)),
            Err(e) => Err(LoadFailure {
                name: self.name(),
                error: e.to_string(),
            }),
        }
    }
}

fn corpus_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let io = |source| Error::Io {
        path: dir.display().to_string(),
        source,
    };
    let mut files = Vec::new();
    for entry in std::fs::read_dir(dir).map_err(io)? {
        let path = entry.map_err(io)?.path();
        if path.is_file() && path.extension().is_some_and(|e| e == "json") {
            files.push(path);
        }
    }
    files.sort();
    Ok(files)
}

/// Analyzes every `*.json` group file in `dir` and, if requested, the
/// built-in constructions. Entries that fail to load are recorded and skipped.
/// Errors only when the directory itself cannot be read.
pub fn verify_corpus(options: &VerifyOptions) -> Result<AggregateReport> {
    let mut jobs = Vec::new();
    if let Some(dir) = &options.dir {
        jobs.extend(corpus_files(dir)?.into_iter().map(Job::File));
    }
    if options.builtin {
        jobs.extend(builtin_corpus().into_iter().map(Job::Builtin));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.jobs)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
    let results: Vec<_> = pool.install(|| jobs.par_iter().map(Job::run).collect());

    let mut groups = Vec::new();
    let mut load_failures = Vec::new();
    for r in results {
        match r {
            Ok(report) => groups.push(report),
            Err(f) => load_failures.push(f),
        }
    }
    groups.sort_by(|a, b| a.name.cmp(&b.name).then_with(|| a.degree.cmp(&b.degree)));
    load_failures.sort_by(|a, b| a.name.cmp(&b.name));
    let violations = groups
        .iter()
        .filter(|r| r.is_violation())
        .map(|r| r.name.clone())
        .collect();
    Ok(AggregateReport {
        groups,
        load_failures,
        violations,
    })
}
