//! Criterion benchmarks for the `infcone` engine live in `benches/`.
