//! Decomposes tensor products of indecomposables and shows the reduction data.
//!
//! ```bash
//! cargo run --example tensor_products -- 5 3 2 11
//! ```

use greenring::tensor::{chi, reduction_parameters, tensor};
use greenring::GroupSpec;

fn main() {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer"))
        .collect();
    let (p, alpha, pairs) = match args.as_slice() {
        [p, alpha, r, s] => (*p, *alpha as u32, vec![(*r, *s)]),
        _ => (5, 3, vec![(2, 11), (3, 3), (7, 18), (12, 40), (26, 99)]),
    };
    let group = GroupSpec::new(p, alpha).expect("valid group");
    println!("{group}");
    for k in 0..alpha {
        println!("  chi_{k} = {}", chi(group, k).unwrap());
    }
    for (r, s) in pairs {
        let product = tensor(group, r, s).expect("indices in 1..=q");
        println!("V{r} x V{s} = {product}   (dim {})", product.dim());
        if let Some(params) = reduction_parameters(group, r, s).unwrap() {
            println!(
                "  beta {}, r = {}*p^beta + {}, s = {}*p^beta + {}",
                params.beta, params.r0, params.r1, params.s0, params.s1
            );
        }
    }
}
