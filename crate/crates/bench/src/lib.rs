//! Benchmark-only crate; see benches/trellis_algorithms.rs.
