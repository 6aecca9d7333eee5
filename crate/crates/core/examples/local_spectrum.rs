//! Local spectra of a few plane germs and of a surface singularity.

use conespec::{milnor_wh, wh_spectrum, LocalBranch, Result, SingularPoint, WeightSystem};

fn main() -> Result<()> {
    // cusp x^2 + y^3, E6 x^3 + y^4 and the ordinary triple point
    for (w, d) in [(vec![3, 2], 6), (vec![4, 3], 12), (vec![1, 1], 3)] {
        let ws = WeightSystem::new(w.clone(), d)?;
        println!("weights {w:?}, degree {d}: mu = {}, spectrum {}", milnor_wh(&ws)?, wh_spectrum(&ws)?);
    }

    // a tacnode is a point with weights (1,2) and two branches y = ±x^2
    let tacnode = SingularPoint::new((1, 2), vec![LocalBranch::new(2, 1), LocalBranch::new(2, 1)])?;
    println!("tacnode: mu = {}, spectrum {}", tacnode.milnor()?, tacnode.local_spectrum()?);

    // the A1 surface singularity x^2 + y^2 + z^2 and its Thom-Sebastiani factors
    let a1 = wh_spectrum(&WeightSystem::new(vec![1, 1, 1], 2)?)?;
    let single = wh_spectrum(&WeightSystem::new(vec![1], 2)?)?;
    let product = single.product(&single)?.product(&single)?;
    println!("A1 surface: {a1}, product of one-variable spectra: {product}");
    assert_eq!(a1, product);
    Ok(())
}
