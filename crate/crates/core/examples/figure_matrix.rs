//! Renders the V-to-U change of basis matrix. The p = 3, alpha = 3 case
//! shows the self-similar pattern.
//!
//! ```bash
//! cargo run --example figure_matrix -- 3 3 > v_to_u.txt
//! cargo run --example figure_matrix -- 3 4 pbm > v_to_u.pbm
//! ```

use std::io::Write;

use greenring::matrix::RenderFormat;
use greenring::ubasis::{change_of_basis, Direction};
use greenring::GroupSpec;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let p = args.first().map_or(3, |a| a.parse().expect("prime"));
    let alpha = args.get(1).map_or(3, |a| a.parse().expect("exponent"));
    let format: RenderFormat = args
        .get(2)
        .map_or("text", String::as_str)
        .parse()
        .expect("text, csv or pbm");

    let group = GroupSpec::new(p, alpha).expect("valid group");
    let m = change_of_basis(group, Direction::VToU).unwrap();
    std::io::stdout()
        .write_all(&m.render(format).unwrap())
        .unwrap();
}
