//! Character-valued Hilbert series of the affinized sl3 flag variety at a
//! few multidegrees, with the q = 0 layer as a finite character.

use qflag::affine::hilbert_affinized;
use qflag::fixtures::Fixture;

fn main() -> qflag::Result<()> {
    let fx = Fixture::load("sl3")?;
    let model = fx.quadratized()?.model;
    for m in [[1u32, 0], [1, 1], [2, 1]] {
        let h = hilbert_affinized(&model, &m, 6);
        println!("M = {m:?}: {} weights", h.terms().len());
        for (w, s) in h.terms() {
            println!("  {w}: {s}");
        }
        let dims = h.constant_layer();
        println!("  q^0 layer mass {}", dims.mass());
    }
    Ok(())
}
