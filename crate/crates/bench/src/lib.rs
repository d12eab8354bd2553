//! Criterion benchmarks for skewlab; see `benches/`.
