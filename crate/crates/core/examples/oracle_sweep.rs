//! Checks the symbolic tensor rules against Jordan types computed over F_p.
//!
//! ```bash
//! cargo run --release --example oracle_sweep -- 5 3
//! ```

use std::time::Instant;

use greenring::oracle::{verify_engine, DEFAULT_BUDGET};
use greenring::GroupSpec;

fn main() {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer"))
        .collect();
    let cases = match args.as_slice() {
        [p, alpha] => vec![(*p, *alpha as u32)],
        _ => vec![(2, 3), (3, 3), (5, 2), (5, 3)],
    };
    for (p, alpha) in cases {
        let group = GroupSpec::new(p, alpha).expect("valid group");
        let start = Instant::now();
        let report = verify_engine(group, DEFAULT_BUDGET);
        println!(
            "{group}: {} pairs, {} mismatches, {:.2?}",
            report.pairs_checked,
            report.mismatches.len(),
            start.elapsed()
        );
        for m in report.mismatches.iter().take(5) {
            println!(
                "  V{} x V{}: oracle {:?}, engine {}",
                m.r,
                m.s,
                m.expected.blocks(),
                m.got
            );
        }
    }
}
