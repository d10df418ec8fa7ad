//! Algorithms for 2-edge-colored graphs: covering the vertex set by few
//! monochromatic components, partitioning it into connected matchings and
//! cycles, splitting perfect matchings across the colors under degree
//! conditions, and covering almost all vertices by two monochromatic paths
//! when the complement excludes a small complete bipartite graph.
//!
//! Every constructive routine is paired with exponential exact oracles for
//! small instances, seeded extremal and random instance generators, and an
//! experiment/falsification harness, so the structural bounds are checked
//! on every run rather than assumed.
//!
//! Entry points:
//! - [`graph::ColoredGraph`]: the universal input type.
//! - [`cover::component_cover`]: minimum monochromatic-component cover via
//!   the bipartite dual and its König certificate.
//! - [`partition::connected_matching_partition`]: at most twice the
//!   independence number of monochromatic pieces.
//! - [`degree::degmatch_split`]: perfect matching split into connected
//!   matchings of the two colors when the minimum degree reaches 3n/4.
//! - [`twopaths::c4free_two_paths`]: all but one vertex covered by two
//!   paths when the complement has no C4.
//! - [`oracle`]: exact small-instance ground truth.
//! - [`harness`]: experiment runner and conjecture falsifier.
//!
//! The `examples/` directory demonstrates each capability end to end; the
//! `monopart` binary exposes them as subcommands over a simple text format
//! for graphs (see [`io`]).

pub mod bitset;
pub mod cover;
pub mod degree;
pub mod error;
pub mod extremal;
pub mod generators;
pub mod graph;
pub mod harness;
pub mod io;
pub mod matching;
pub mod oracle;
pub mod partition;
pub mod perturbed;
pub mod twopaths;

pub use error::{Error, Result};
pub use graph::{Color, ColoredGraph, CycleSeq, PathSeq, Pattern, SimpleGraph, VertexSet};
