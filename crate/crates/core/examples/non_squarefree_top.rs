// The oracle with top `S1²`, where charts are not available.

use qgrass::catalogue;
use qgrass::moduli::cover_over_prime;
use qgrass::oracle::{iso_classes, orbits, OracleScene, DEFAULT_BUDGET};
use qgrass::ProjectiveCover;

pub fn run_example() -> qgrass::Result<()> {
    let e = catalogue::doubled_vee();
    let quiver = e.algebra.quiver();
    let cover = cover_over_prime(&e.algebra, &e.top, 2)?;
    let scene = OracleScene::new(cover, 4, DEFAULT_BUDGET)?;
    let part = orbits(&scene, DEFAULT_BUDGET)?;
    let classes = iso_classes(&scene, DEFAULT_BUDGET)?;
    println!("{} points, {} orbits, {} iso classes", scene.len(), part.orbits.len(), classes.len());
    for (s, members) in scene.layering_classes() {
        let n = classes.iter().filter(|c| members.contains(&c[0])).count();
        println!("  {}: {} points, {} classes", s.display(quiver), members.len(), n);
    }
    match ProjectiveCover::new(e.algebra.clone(), &e.top) {
        Err(err) => println!("charts: {err}"),
        Ok(_) => println!("charts: unexpectedly accepted"),
    }
    Ok(())
}

fn main() -> qgrass::Result<()> {
    run_example()
}
