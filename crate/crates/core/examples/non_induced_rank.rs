//! Rank of the representation ring modulo induced representations, in
//! characteristics 2, 3 and 5, next to Euler's phi and the cyclotomic polynomial.
//!
//! ```bash
//! cargo run --release --example non_induced_rank -- 360
//! ```

use greenring::ideals::{cyclotomic, euler_phi, rank_report, CyclicGroupSpec};

fn main() {
    let limit: u64 = std::env::args()
        .nth(1)
        .map_or(24, |a| a.parse().expect("integer"));
    println!(
        "{:>4} {:>4} {:>5} {:>5} {:>5}  free  Phi_n",
        "n", "phi", "p=2", "p=3", "p=5"
    );
    for n in 1..=limit {
        let reports: Vec<_> = [2, 3, 5]
            .map(|p| rank_report(CyclicGroupSpec::new(n, p).unwrap()))
            .into();
        let free = reports.iter().all(|r| r.torsion_free());
        let phi_poly = if n <= 30 {
            cyclotomic(n).unwrap().to_string()
        } else {
            String::new()
        };
        println!(
            "{n:>4} {:>4} {:>5} {:>5} {:>5}  {:<5} {phi_poly}",
            euler_phi(n),
            reports[0].quotient_rank,
            reports[1].quotient_rank,
            reports[2].quotient_rank,
            free
        );
    }
}
