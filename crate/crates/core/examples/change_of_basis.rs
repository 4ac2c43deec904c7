//! Moves between the V-basis and the U-basis.
//!
//! ```bash
//! cargo run --example change_of_basis -- 5 3 62
//! ```

use greenring::ubasis::{cousins, curly_u, u_element, v_in_u};
use greenring::{GroupSpec, RingElement};

fn main() {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer"))
        .collect();
    let (p, alpha, r) = match args.as_slice() {
        [p, alpha, r] => (*p, *alpha as u32, *r),
        _ => (5, 3, 62),
    };
    let group = GroupSpec::new(p, alpha).expect("valid group");
    let q = group.q();

    let u = u_element(group, r).expect("index in 1..=q");
    println!("U{r} = {u}   (dim {})", u.dim());

    let js = v_in_u(group, r).unwrap();
    println!(
        "V{r} = {}",
        js.iter()
            .rev()
            .map(|j| format!("U{j}"))
            .collect::<Vec<_>>()
            .join(" + ")
    );
    println!("  q - r = {} is a cousin of q - j for each j:", q - r);
    for j in js.iter().rev() {
        let c: Vec<String> = cousins(q - j, p)
            .unwrap()
            .iter()
            .map(u64::to_string)
            .collect();
        println!("    cous({}) = {{{}}}", q - j, c.join(", "));
    }
    for beta in (0..=alpha).rev() {
        println!("  level {beta}: {{{}}}", curly_u(group, r, beta).unwrap());
    }

    let mut back = RingElement::zero(group);
    for j in js.iter() {
        back = back.add(&u_element(group, j).unwrap()).unwrap();
    }
    println!("expanding the U terms again gives {back}");
}
