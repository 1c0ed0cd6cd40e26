//! Criterion benchmarks for the series engine; see `benches/`.
