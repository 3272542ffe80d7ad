//! Manifest-character identities, the Hall-Littlewood conjecture and the
//! duality of the flag resolutions.

use qflag::fixtures::Fixture;
use qflag::verify::{
    check_conjecture_21, check_conjecture_51_in, check_dim_243, check_euler_poincare, check_manifest_in, ManifestCase,
    ModelContext,
};

fn main() -> qflag::Result<()> {
    let so5 = ModelContext::load("so5")?;
    for m in [[3u32, 0], [2, 1], [0, 3]] {
        println!("{}", check_manifest_in(&so5, ManifestCase::So5, None, &m, 8)?.line());
    }
    for m in [[2u32, 0], [1, 1]] {
        println!("{}", check_conjecture_51_in(&so5, &m, 8)?.line());
    }
    println!("{}", check_dim_243(2, 3)?.line());
    for name in ["sl3", "sl4", "so5"] {
        let fx = Fixture::load(name)?;
        let res = fx.resolution().expect("fixture carries a resolution");
        println!("{}", check_conjecture_21(&res, &fx.algebra, &fx.file.reps)?.line());
        let m = vec![1; fx.algebra.rank];
        println!("{}", check_euler_poincare(&fx, &m)?.line());
    }
    Ok(())
}
