//! Shared input helpers for the criterion benchmarks under `benches/`.

use consarith::timing::{generate_inputs, BenchOp};
use consarith::BinPos;

/// Seeded random operands for `op` at one size.
pub fn operands(op: BenchOp, digits: usize, seed: u64) -> Vec<BinPos> {
    generate_inputs(op, &[digits], seed)
        .expect("positive size")
        .remove(0)
        .iter()
        .map(|s| s.parse().expect("generated decimal"))
        .collect()
}
