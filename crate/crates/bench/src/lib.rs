//! Criterion benchmarks for `regpart`; see `benches/regpart.rs`.
