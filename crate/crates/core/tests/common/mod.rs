//! Shared test support: fixture loading, random corpora, and brute-force
//! oracles that do not call into the code under test.
#![allow(dead_code)]

pub mod gen;
pub mod oracle;

use std::path::PathBuf;

use rtvis_core::{parse_corpus_csv, PaperRecord};

pub fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/fixtures")
}

pub fn fixture_bytes(name: &str) -> Vec<u8> {
    std::fs::read(fixture_dir().join(name)).unwrap_or_else(|e| panic!("read fixture {name}: {e}"))
}

pub fn fixture_a() -> Vec<PaperRecord> {
    let (records, issues) = parse_corpus_csv(&fixture_bytes("fixture_a.csv")).expect("fixture parses");
    assert!(issues.is_empty(), "{issues:?}");
    records
}

pub fn by_title<'a>(records: &'a [PaperRecord], title: &str) -> &'a PaperRecord {
    records
        .iter()
        .find(|r| r.title == title)
        .unwrap_or_else(|| panic!("no paper {title}"))
}
