//! Criterion benchmarks for `deltashift`. See `benches/`.
