//! Benchmark harness crate; see `benches/benchmarks.rs`.
