//! Modified Hall-Littlewood polynomials from the fermionic sum.

use qflag::hl::modified_hl;
use qflag::lie::{LieAlgebra, Weight};

fn main() -> qflag::Result<()> {
    for (alg, lambda) in [("sl2", vec![4]), ("sl3", vec![2, 1]), ("so5", vec![2, 1]), ("so7", vec![1, 0, 1])] {
        let g = LieAlgebra::named(alg)?;
        println!("{alg}, λ = {:?}", lambda);
        for (mu, p) in modified_hl(&g, &Weight(lambda))? {
            println!("  M_{mu} = {p}");
        }
    }
    Ok(())
}
