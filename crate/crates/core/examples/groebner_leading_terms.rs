//! Reduced Gröbner basis of the so5 quadrics over ℚ(√2) and its
//! leading-term ideal, compared with the stored expectation.

use qflag::fixtures::Fixture;

fn main() -> qflag::Result<()> {
    for name in ["sl3", "so5", "sl4"] {
        let fx = Fixture::load(name)?;
        let names = fx.names();
        let gb = fx.groebner()?;
        println!("{name}: {} basis elements", gb.polys.len());
        if name == "so5" {
            for p in &gb.polys {
                println!("  {}", p.format(&names, &gb.order));
            }
        }
        let lt = fx.lt_ideal()?;
        println!("  LT = ⟨{}⟩", lt.format(&names).join(", "));
        println!("  matches expected: {}", lt == fx.expected_lt()?);
    }
    Ok(())
}
