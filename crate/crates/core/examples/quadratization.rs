//! Quadratizing leading-term ideals: stored substitutions against the
//! greedy choice, and the product ideal ⟨x1⋯x5⟩.

use qflag::affine::{hilbert_affinized, product_ideal_model};
use qflag::fixtures::Fixture;

fn main() -> qflag::Result<()> {
    let chain = product_ideal_model(5)?;
    println!("⟨x1⋯x5⟩ → {}", chain.model.pair_monomials().join(", "));

    for name in ["so5", "so7"] {
        let fx = Fixture::load(name)?;
        let stored = fx.quadratized()?;
        let greedy = fx.quadratized_greedy()?;
        println!("{name}: stored {} aux / {} pairs, greedy {} aux / {} pairs",
            stored.model.aux.len(), stored.model.pairs.len(),
            greedy.model.aux.len(), greedy.model.pairs.len());
        let m: Vec<u32> = (0..fx.algebra.rank).map(|i| if i == 0 || i + 1 == fx.algebra.rank { 1 } else { 0 }).collect();
        let same = hilbert_affinized(&stored.model, &m, 8) == hilbert_affinized(&greedy.model, &m, 8);
        println!("  Hilbert series at M={m:?} agree through q^8: {same}");
    }
    Ok(())
}
