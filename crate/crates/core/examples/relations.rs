//! Evaluates the quantum-number relations F_j inside the ring and shows
//! they vanish, along with a few powers of chi.
//!
//! ```bash
//! cargo run --example relations -- 3 3
//! ```

use greenring::quantum::{all_relations, eval_at_element};
use greenring::tensor::{chi, chi_power};
use greenring::GroupSpec;

fn main() {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer"))
        .collect();
    let (p, alpha) = match args.as_slice() {
        [p, alpha] => (*p, *alpha as u32),
        _ => (3, 3),
    };
    let group = GroupSpec::new(p, alpha).expect("valid group");
    println!("{group}");
    for (j, f) in all_relations(group).iter().enumerate() {
        println!("  F{j} = {f}");
    }
    for i in 0..alpha {
        let x = chi(group, i).unwrap();
        println!("  [p] at chi_{i} = {}", eval_at_element(p, &x));
        println!("  chi_{i}^2 = {}", chi_power(group, i, 2).unwrap());
    }
}
