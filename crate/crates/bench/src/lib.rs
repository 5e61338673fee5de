//! Placeholder library target; the crate exists for its Criterion
//! benchmarks under `benches/`. Run them with `cargo bench -p symcy-bench`.
