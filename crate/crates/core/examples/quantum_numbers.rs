//! The first quantum numbers, their closed form and their values at 2.

use greenring::quantum::{quantum_closed_form, quantum_number};
use num_bigint::BigInt;

fn main() {
    let limit: u64 = std::env::args()
        .nth(1)
        .map_or(10, |a| a.parse().expect("integer"));
    for n in 0..=limit {
        let poly = quantum_number(n);
        let closed = n == 0 || quantum_closed_form(n).unwrap() == poly;
        println!(
            "[{n}] = {poly}   at 2: {}   closed form agrees: {closed}",
            poly.eval(&BigInt::from(2))
        );
    }
}
