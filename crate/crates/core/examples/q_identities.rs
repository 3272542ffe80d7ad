//! The two-variable q-identities and the product-ideal identity, checked
//! coefficientwise.

use qflag::verify::{check_identity_313_316, check_identity_35, check_identity_36};

fn main() {
    for (a, b) in [(1, 1), (3, 4), (5, 2)] {
        println!("{}", check_identity_35(a, b, 12).line());
        println!("{}", check_identity_36(a, b, 12).line());
    }
    for m in [vec![2, 3], vec![1, 1, 1], vec![2, 1, 1, 1]] {
        println!("{}", check_identity_313_316(&m, 10).line());
    }
}
