use std::ffi::OsString;
use std::io::Write;
use std::num::NonZeroUsize;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rtvis_core::{Corpus, CorpusFormat, StopwordSet};

use crate::config::{format_for_path, ServiceConfig, PORT_ENV};
use crate::engine::ViewEngine;
use crate::http::{router, AppState};
use crate::request::{RawParams, ViewKind};

type BoxError = Box<dyn std::error::Error + Send + Sync>;

#[derive(Debug, Parser)]
#[command(
    name = "rtvis",
    version,
    about = "Research-trend analytics over scholarly paper corpora"
)]
#[command(arg_required_else_help = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse a corpus file and print its ingest report.
    Validate {
        path: PathBuf,
        /// csv or s2; inferred from the file extension when omitted
        #[arg(long)]
        format: Option<String>,
    },
    /// Start the HTTP service.
    Serve {
        #[arg(long)]
        config: PathBuf,
    },
    /// Write one view's data to a file without serving.
    Export {
        /// themeriver, coauthors, venues or words
        view: String,
        #[arg(long)]
        out: PathBuf,
        /// Service config naming the corpus (alternative to --corpus)
        #[arg(long, conflicts_with = "corpus")]
        config: Option<PathBuf>,
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long, requires = "corpus")]
        format: Option<String>,
        #[arg(long, requires = "corpus")]
        stopwords: Option<PathBuf>,
        #[arg(long)]
        from: Option<String>,
        #[arg(long)]
        to: Option<String>,
        /// Number of authors or venues, or bars for the words view
        #[arg(long, visible_alias = "k")]
        n: Option<String>,
        #[arg(long)]
        granularity: Option<String>,
        #[arg(long)]
        mode: Option<String>,
    },
}

/// Runs the command line and returns the process exit code: 0 on success,
/// 1 on validation or runtime failure, 2 on usage errors.
pub fn run_cli<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() || e.kind() == clap::error::ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand {
                2
            } else {
                0
            };
        }
    };
    let result = match cli.command {
        Command::Validate { path, format } => validate(&path, format.as_deref()),
        Command::Serve { config } => serve(&config).map(|_| 0),
        Command::Export {
            view,
            out,
            config,
            corpus,
            format,
            stopwords,
            from,
            to,
            n,
            granularity,
            mode,
        } => {
            let params = RawParams {
                from,
                to,
                granularity,
                k: None,
                n,
                mode,
            };
            let source = match (config, corpus) {
                (Some(c), _) => Source::Config(c),
                (None, Some(path)) => Source::Corpus {
                    path,
                    format,
                    stopwords,
                },
                (None, None) => {
                    eprintln!("error: export needs --config or --corpus");
                    return 2;
                }
            };
            export(&view, &params, &source, &out).map(|_| 0)
        }
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn parse_format(format: Option<&str>, path: &Path) -> Result<CorpusFormat, BoxError> {
    match format {
        Some(f) => Ok(f.parse()?),
        None => Ok(format_for_path(path)),
    }
}

pub fn load_corpus(path: &Path, format: CorpusFormat) -> Result<Corpus, BoxError> {
    let bytes = std::fs::read(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    Ok(Corpus::from_bytes(&bytes, format, path.display().to_string())?)
}

fn load_stopwords(path: Option<&Path>) -> Result<StopwordSet, BoxError> {
    match path {
        Some(p) => StopwordSet::from_file(p).map_err(|e| format!("cannot read {}: {e}", p.display()).into()),
        None => Ok(StopwordSet::english()),
    }
}

/// Builds an engine from a validated config.
pub fn engine_from_config(config: &ServiceConfig) -> Result<ViewEngine, BoxError> {
    let corpus = load_corpus(&config.corpus_path, config.corpus_format)?;
    let stopwords = load_stopwords(config.stopwords_path.as_deref())?;
    Ok(ViewEngine::new(
        corpus,
        stopwords,
        NonZeroUsize::new(config.cache_capacity),
    ))
}

fn validate(path: &Path, format: Option<&str>) -> Result<i32, BoxError> {
    let corpus = load_corpus(path, parse_format(format, path)?)?;
    let mut out = std::io::stdout().lock();
    for issue in corpus.ingest_report() {
        writeln!(out, "{issue}")?;
    }
    let rejected = corpus.rejected_count();
    write!(out, "{} records, {} issues", corpus.len(), corpus.ingest_report().len())?;
    if rejected > 0 {
        write!(out, " ({rejected} rejected)")?;
    }
    writeln!(out)?;
    Ok(if rejected == 0 { 0 } else { 1 })
}

enum Source {
    Config(PathBuf),
    Corpus {
        path: PathBuf,
        format: Option<String>,
        stopwords: Option<PathBuf>,
    },
}

fn export(view: &str, params: &RawParams, source: &Source, out: &Path) -> Result<(), BoxError> {
    let engine = match source {
        Source::Config(path) => engine_from_config(&ServiceConfig::load(path)?)?,
        Source::Corpus {
            path,
            format,
            stopwords,
        } => {
            let corpus = load_corpus(path, parse_format(format.as_deref(), path)?)?;
            ViewEngine::new(corpus, load_stopwords(stopwords.as_deref())?, None)
        }
    };
    let kind: ViewKind = view.parse()?;
    let req = engine.resolve(kind, params)?;
    let data = engine.data(&req)?;
    std::fs::write(out, serde_json::to_vec(&data)?)?;
    Ok(())
}

fn serve(config_path: &Path) -> Result<(), BoxError> {
    let _ = env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info")).try_init();
    let mut config = ServiceConfig::load(config_path)?;
    config.apply_port_override(std::env::var(PORT_ENV).ok().as_deref())?;

    let runtime = tokio::runtime::Builder::new_multi_thread().enable_all().build()?;
    runtime.block_on(async move {
        let state = AppState::default();
        let app = router(state.clone(), config.static_dir.clone());
        let listener = tokio::net::TcpListener::bind(("0.0.0.0", config.port)).await?;
        log::info!("listening on {}", listener.local_addr()?);

        let loader = state.clone();
        let loading = tokio::task::spawn_blocking(move || engine_from_config(&config));
        tokio::spawn(async move {
            match loading.await {
                Ok(Ok(engine)) => {
                    log::info!(
                        "loaded {} papers ({} ingest issues)",
                        engine.corpus().len(),
                        engine.corpus().ingest_report().len()
                    );
                    loader.install(engine);
                }
                Ok(Err(e)) => {
                    log::error!("corpus load failed: {e}");
                    std::process::exit(1);
                }
                Err(e) => {
                    log::error!("corpus loader panicked: {e}");
                    std::process::exit(1);
                }
            }
        });

        axum::serve(listener, app)
            .with_graceful_shutdown(async {
                let _ = tokio::signal::ctrl_c().await;
            })
            .await?;
        Ok::<_, BoxError>(())
    })
}
