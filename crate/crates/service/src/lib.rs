//! HTTP service and command line for the analytics views.
//!
//! The [`engine::ViewEngine`] owns one immutable corpus and turns a validated
//! [`request::ViewRequest`] into a JSON envelope. The HTTP layer and the
//! `export` subcommand both go through it, so their outputs agree.

pub mod cache;
pub mod cli;
pub mod config;
pub mod engine;
pub mod http;
pub mod request;

pub use cli::run_cli;
pub use engine::ViewEngine;
