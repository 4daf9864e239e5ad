//! Graphs as Euclidean two-distance sets.
//!
//! Every simple graph on `n` vertices embeds as a two-distance set with edge
//! length 1 and non-edge length `sqrt(tau1)`, in dimension `n - mu - 1`, where
//! `mu` is the multiplicity of the smallest root `tau1 > 1` of the bordered
//! Cayley–Menger polynomial `C_G(t)`. Comparing `theta(G) + mu(G)` with `n`
//! decides whether that embedding violates Borsuk's conjecture.

pub mod canon;
pub mod cover;
pub mod det;
pub mod embedding;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod io;
pub mod multidist;
pub mod par;
pub mod poly;
pub mod roots;
pub mod search;

pub use error::{Error, Result};
pub use graph::{CliquePartition, Graph};
pub use poly::IntPolynomial;

/// Seed of the named substream `stream` derived from a run-level seed.
pub fn derive_seed(seed: u64, stream: &str) -> u64 {
    use sha2::{Digest, Sha256};
    let mut h = Sha256::new();
    h.update(seed.to_le_bytes());
    h.update(stream.as_bytes());
    u64::from_le_bytes(h.finalize()[..8].try_into().expect("digest has 32 bytes"))
}
