//! Criterion benchmarks for the levelsplit kernels live in `benches/`.
