//! Criterion benchmarks for the face-LP and row-LP solvers; see `benches/`.
