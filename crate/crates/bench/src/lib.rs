//! Criterion benchmarks for `qng-core`; see `benches/engine.rs`.
