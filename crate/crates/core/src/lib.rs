//! Structural analysis of overlapping pattern copies in uniform hypergraphs,
//! and colorings that avoid monochromatic or rainbow copies.
//!
//! The library revolves around a few objects:
//!
//! * [`Hypergraph`] — an immutable ℓ-uniform hypergraph with canonically
//!   sorted edges.
//! * [`CopyIndex`](copies::CopyIndex) — all subgraph copies of a pattern `F`
//!   inside a host `G`, with the edge → copies incidence.
//! * closedness and block decomposition of the copy structure
//!   ([`copies`]), grow sequences for blocks ([`growseq`]),
//! * stripping algorithms and block colorers that produce proper, 2-bounded
//!   or r-colorings without rainbow (resp. monochromatic) `F`-copies
//!   ([`colorings`]),
//! * exhaustive decision procedures and an obstruction searcher ([`decide`]),
//! * random hypergraph experiments around the `n^{-1/m_ell(F)}` threshold
//!   ([`experiments`]).
//!
//! All densities are exact rationals; nothing in the decision or density
//! paths uses floating point.

pub mod colorings;
pub mod copies;
pub mod corpus;
pub mod decide;
pub mod density;
pub mod error;
pub mod experiments;
mod flow;
pub mod growseq;
pub mod hypergraph;
pub mod iso;
pub mod oracle;
pub mod rat;

pub use error::{Error, Result};
pub use hypergraph::{EdgeRef, Hypergraph, VertexId};
pub use rat::Rat;
