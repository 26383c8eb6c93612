//! Benchmark-only crate; the instances live in `benches/kernels.rs`.
