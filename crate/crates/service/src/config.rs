//! `key = value` service configuration.

use std::path::{Path, PathBuf};

use rtvis_core::CorpusFormat;
use thiserror::Error;

pub const DEFAULT_PORT: u16 = 8080;
pub const DEFAULT_CACHE_CAPACITY: usize = 256;
pub const PORT_ENV: &str = "RTV_PORT";

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read config {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("line {line}: expected `key = value`")]
    Syntax { line: usize },
    #[error("line {line}: unknown key \"{key}\"")]
    UnknownKey { line: usize, key: String },
    #[error("missing required key \"{0}\"")]
    Missing(&'static str),
    #[error("invalid value for {key}: {value}")]
    Invalid { key: &'static str, value: String },
    #[error("{key} does not exist: {path}")]
    NoSuchPath { key: &'static str, path: PathBuf },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ServiceConfig {
    pub corpus_path: PathBuf,
    pub corpus_format: CorpusFormat,
    /// `None` selects the bundled English list.
    pub stopwords_path: Option<PathBuf>,
    pub port: u16,
    pub cache_capacity: usize,
    /// Directory served at `/`.
    pub static_dir: Option<PathBuf>,
}

impl ServiceConfig {
    /// Reads and validates a config file. Relative paths resolve against the
    /// file's directory.
    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Read {
            path: path.to_path_buf(),
            source,
        })?;
        let base = path.parent().unwrap_or(Path::new("."));
        let config = Self::parse(&text, base)?;
        config.check_paths()?;
        Ok(config)
    }

    pub fn parse(text: &str, base: &Path) -> Result<Self, ConfigError> {
        let mut corpus_path = None;
        let mut corpus_format = None;
        let mut stopwords_path = None;
        let mut port = DEFAULT_PORT;
        let mut cache_capacity = DEFAULT_CACHE_CAPACITY;
        let mut static_dir = None;

        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or(ConfigError::Syntax { line: i + 1 })?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "corpus_path" => corpus_path = Some(base.join(value)),
                "corpus_format" => {
                    corpus_format = Some(value.parse().map_err(|_| ConfigError::Invalid {
                        key: "corpus_format",
                        value: value.to_string(),
                    })?)
                }
                "stopwords_path" => stopwords_path = Some(base.join(value)),
                "port" => port = parse_port(value)?,
                "cache_capacity" => {
                    cache_capacity =
                        value
                            .parse()
                            .ok()
                            .filter(|&c: &usize| c > 0)
                            .ok_or_else(|| ConfigError::Invalid {
                                key: "cache_capacity",
                                value: value.to_string(),
                            })?
                }
                "static_dir" => static_dir = Some(base.join(value)),
                other => {
                    return Err(ConfigError::UnknownKey {
                        line: i + 1,
                        key: other.to_string(),
                    })
                }
            }
        }

        let corpus_path = corpus_path.ok_or(ConfigError::Missing("corpus_path"))?;
        let corpus_format = corpus_format.unwrap_or_else(|| format_for_path(&corpus_path));
        Ok(ServiceConfig {
            corpus_path,
            corpus_format,
            stopwords_path,
            port,
            cache_capacity,
            static_dir,
        })
    }

    /// Applies an `RTV_PORT` value, if set.
    pub fn apply_port_override(&mut self, value: Option<&str>) -> Result<(), ConfigError> {
        if let Some(v) = value {
            self.port = parse_port(v)?;
        }
        Ok(())
    }

    pub fn check_paths(&self) -> Result<(), ConfigError> {
        let check = |key, p: &Path| {
            if p.exists() {
                Ok(())
            } else {
                Err(ConfigError::NoSuchPath {
                    key,
                    path: p.to_path_buf(),
                })
            }
        };
        check("corpus_path", &self.corpus_path)?;
        if let Some(p) = &self.stopwords_path {
            check("stopwords_path", p)?;
        }
        if let Some(p) = &self.static_dir {
            check("static_dir", p)?;
        }
        Ok(())
    }
}

fn parse_port(value: &str) -> Result<u16, ConfigError> {
    value
        .trim()
        .parse::<u16>()
        .ok()
        .filter(|&p| p > 0)
        .ok_or_else(|| ConfigError::Invalid {
            key: "port",
            value: value.to_string(),
        })
}

/// `.json` and `.jsonl` are Semantic Scholar exports; everything else is CSV.
pub fn format_for_path(path: &Path) -> CorpusFormat {
    match path.extension().and_then(|e| e.to_str()) {
        Some("json" | "jsonl") => CorpusFormat::SemanticScholar,
        _ => CorpusFormat::Csv,
    }
}
