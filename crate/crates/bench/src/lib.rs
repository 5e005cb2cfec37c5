//! Criterion benchmarks for `coxorbit`; run with `cargo bench -p coxorbit-bench`.
