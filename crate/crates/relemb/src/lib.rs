//! Local embeddings for relational data integration.
//!
//! The library ingests one or two delimited-text relations, folds them into a
//! tripartite token/record-id/column-id graph, materializes random walks over
//! that graph as a sentence corpus, trains word embeddings on the corpus and
//! finally uses the vectors for unsupervised schema matching, entity
//! resolution, token matching and embedding-quality evaluation.
//!
//! Modules follow the stages of the pipeline:
//!
//! * [`dataset`] — ingestion, normalization, tokenization, null handling
//! * [`graph`] — tripartite graph construction and node merging
//! * [`walks`] — walk budgets, random walks, sentence corpus
//! * [`trainer`] — skip-gram / CBOW training and the embedding store
//! * [`align`] — orthogonal Procrustes alignment of two spaces
//! * [`integrate`] — schema / entity / token matching
//! * [`evalharness`] — odd-one-out test generation and P/R/F scoring
//! * [`pipeline`] — configuration and end-to-end orchestration
//! * [`synth`] — deterministic benchmark-scale dataset generators

pub mod align;
pub mod dataset;
pub mod error;
pub mod evalharness;
pub mod graph;
pub mod integrate;
pub mod pipeline;
pub mod synth;
pub mod trainer;
pub mod walks;

pub use error::{Error, Result};
