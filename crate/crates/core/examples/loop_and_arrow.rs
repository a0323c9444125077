// Skeletons, charts and radical layerings for a loop `w` with `w² = 0`
// and an arrow `a: 1 → 2`.

use qgrass::catalogue;
use qgrass::chart::chart_ideal;
use qgrass::representation::quotient_rep;
use qgrass::skeleton::enumerate_skeletons;

pub fn run_example() -> qgrass::Result<()> {
    let entry = catalogue::loop_and_arrow();
    let cover = entry.cover();
    let quiver = entry.algebra.quiver();
    println!("basis of Λ: {:?}", entry.algebra.basis().iter().map(|p| quiver.path_name(p)).collect::<Vec<_>>());
    println!("dim P = {}, dim JP = {}", cover.dim(), cover.radical_dim());

    let raw = enumerate_skeletons(&cover, 3, false)?;
    let skeletons = enumerate_skeletons(&cover, 3, true)?;
    println!("{} candidate skeletons, {} after pruning", raw.len(), skeletons.len());
    for sigma in &skeletons {
        let ideal = chart_ideal(&cover, sigma)?;
        println!(
            "  {}: {} variables, {} equations",
            sigma.display(quiver),
            ideal.num_variables(),
            ideal.polynomials().len()
        );
        // the point with all coordinates zero lies on every chart without equations
        let origin = vec![entry.algebra.field().zero(); ideal.num_variables()];
        let c = qgrass::chart::submodule_from_point(&cover, &ideal, &origin)?;
        let m = quotient_rep(&cover, &c)?;
        println!("    origin has layering {}", m.radical_layering(entry.algebra.loewy()).display(quiver));
    }
    Ok(())
}

fn main() -> qgrass::Result<()> {
    run_example()
}
