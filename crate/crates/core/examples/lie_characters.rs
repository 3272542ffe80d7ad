//! Weights of the fundamental representations of so7, Weyl dimensions and
//! the decomposition of a tensor square.

use qflag::lie::{LieAlgebra, Weight};

fn main() -> qflag::Result<()> {
    let so7 = LieAlgebra::named("so7")?;
    // coordinates exist for the vector and spinor representations only
    for i in [1, 3] {
        let names: Vec<String> = so7.rep_weights(i)?.into_iter().map(|(n, w)| format!("{n}{w}")).collect();
        println!("L(Λ{i}): {}", names.join(" "));
    }
    for lambda in [[1, 0, 1], [2, 0, 0], [0, 0, 2]] {
        println!("dim L{:?} = {}", lambda, so7.weyl_dim(&Weight(lambda.to_vec()))?);
    }
    let spinor = so7.rep_character(3)?;
    let square = spinor.mul(&spinor);
    println!("spinor ⊗ spinor:");
    for (w, m) in so7.decompose_character(&square)? {
        println!("  {m} × L{w}");
    }
    Ok(())
}
