//! Core library for the GNN-driven cache prefetching toolchain.
//!
//! The pipeline turns a navigable domain (a website or a directory tree)
//! into a directed graph, simulates user sessions on it with biased random
//! walks, trains a graph neural network to predict the next access, and
//! replays traces through a cache simulator to measure prefetch quality.
//!
//! Modules follow the pipeline stages:
//!
//! - [`mapper`]: crawl a site or scan a filesystem into a mirrored snapshot
//! - [`synth`]: generate deterministic synthetic directory trees
//! - [`graph`]: build the feature-rich [`graph::DomainGraph`] and serialize it
//! - [`walks`]: node2vec-style walk sessions and supervised datasets
//! - [`gnn`]: dense linear algebra, GCN/GraphSAGE layers, training, PCA
//! - [`sim`]: cache replay with GNN, Markov, and no-prefetch predictors

pub mod error;
pub mod graph;
pub mod html;
pub mod mapper;
pub mod seed;
pub mod sim;
pub mod synth;
pub mod walks;

pub mod gnn;

pub use error::{Error, Result};
