//! Criterion benchmarks for the combinatorial kernels; see `benches/`.
