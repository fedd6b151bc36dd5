//! Criterion benchmarks for the qcoop engine live in `benches/`.
