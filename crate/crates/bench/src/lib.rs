//! Criterion benchmarks for the exact kernels. See `benches/kernels.rs`.
