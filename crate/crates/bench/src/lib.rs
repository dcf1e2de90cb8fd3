//! Criterion benchmarks for the `gtorsion` kernels; see `benches/`.
