//! Criterion benchmarks for veerkit; see `benches/`.
