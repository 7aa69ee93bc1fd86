#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

use fraggen::adapter::Adapter;

pub fn repo_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..").canonicalize().unwrap()
}

pub fn fixtures() -> PathBuf {
    repo_root().join("fixtures")
}

pub fn node_available() -> bool {
    Command::new("node").arg("--version").output().map(|o| o.status.success()).unwrap_or(false)
}

/// The acorn-backed test adapter, when node and acorn are installed.
pub fn acorn_adapter() -> Option<Adapter> {
    let dir = repo_root().join("tools/estree-dump");
    if !node_available() || !dir.join("node_modules/acorn").exists() {
        eprintln!("node or acorn missing, skipping");
        return None;
    }
    Some(Adapter::spawn(&format!("node {}", dir.join("adapter.mjs").display())).unwrap())
}

/// Writes an executable shell script standing in for an engine.
pub fn stub_engine(dir: &Path, name: &str, body: &str) -> PathBuf {
    use std::os::unix::fs::PermissionsExt;
    let path = dir.join(name);
    std::fs::write(&path, format!("#!/bin/sh\n{body}\n")).unwrap();
    std::fs::set_permissions(&path, std::fs::Permissions::from_mode(0o755)).unwrap();
    path
}

/// Normalized toy seeds and their corpus, built like `ingest` does.
pub fn toy_corpus() -> (Vec<(String, fraggen_core::AstNode)>, fraggen::ingest::Corpus) {
    use fraggen::ingest::{build_corpus, ingest_fixtures, IngestOptions};
    let builtins = fraggen::registry::bundled_builtins("node").unwrap();
    let (mut seeds, mut report) =
        ingest_fixtures(&fixtures().join("toy/ast"), &builtins, None, &IngestOptions::default()).unwrap();
    let corpus = build_corpus(&mut seeds, &mut report, 1).unwrap();
    (seeds, corpus)
}
