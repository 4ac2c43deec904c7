//! The digit identity: pick a number n and a base b; the recursion yields
//! indices j whose digit products (d_i + 1) of j - 1 add up to n.
//!
//! ```bash
//! cargo run --example pick_a_number -- 62 5
//! ```

use greenring::digits::{trick_certificate, verify_trick_range};

fn main() {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer"))
        .collect();
    let (n, base) = match args.as_slice() {
        [n, base] => (*n, *base),
        _ => (62, 5),
    };
    let cert = trick_certificate(n, base).expect("identity holds");
    println!("{cert}");
    for t in &cert.terms {
        let digits: Vec<String> = t.digits.iter().rev().map(u64::to_string).collect();
        println!(
            "  j = {:>6}, j - 1 = ({}) in base {base}, product {}",
            t.j,
            digits.join(" "),
            t.product
        );
    }
    println!("{}", cert.to_json_string());

    for b in [2, 3, 4, 6, 10, 12] {
        let ok = verify_trick_range(5000, b).is_ok();
        println!("base {b:>2}: identity for every n <= 5000: {ok}");
    }
}
