//! Saturated fusion systems over finite p-groups, built from ambient finite
//! groups or from generating automorphisms, together with every known
//! group-theoretic nilpotency criterion and an independent brute-force
//! p-nilpotency oracle to cross-check them.
//!
//! Layering, bottom up:
//!
//! - [`group`]: exhaustive finite group arithmetic on dense element handles.
//! - [`fusion`]: fusion systems, saturation, Alperin generation, focal and
//!   hyperfocal subgroups, normalizer and centralizer subsystems.
//! - [`nilpotency`]: nilpotency criteria returning verdicts with witnesses.
//! - [`oracle`]: fusion-free ground truth for group-induced systems.
//! - [`harness`]: group spec files, the built-in corpus, reports.

pub mod fusion;
pub mod group;
pub mod harness;
pub mod nilpotency;
pub mod oracle;
