//! Record types and per-line computation shared by the `statesurf` binary
//! and its integration tests.

pub mod record;
