// Brute-force points, orbits and layering classes over small prime fields.

use qgrass::catalogue;
use qgrass::moduli::cover_over_prime;
use qgrass::oracle::{iso_classes, orbits, OracleScene, DEFAULT_BUDGET};

pub fn run_example() -> qgrass::Result<()> {
    let first = catalogue::three_parallel_arrows();
    for q in [2, 3] {
        let cover = cover_over_prime(&first.algebra, &first.top, q)?;
        for d in [2, 3] {
            let scene = OracleScene::new(cover.clone(), d, DEFAULT_BUDGET)?;
            println!("three parallel arrows, F{q}, d = {d}: {} points", scene.len());
        }
    }

    let second = catalogue::three_and_three_arrows();
    let quiver = second.algebra.quiver();
    let cover = cover_over_prime(&second.algebra, &second.top, 2)?;
    let scene = OracleScene::new(cover, 4, DEFAULT_BUDGET)?;
    println!("three and three arrows, F2, d = 4: {} points", scene.len());
    for (s, members) in scene.layering_classes() {
        println!("  {}: {}", s.display(quiver), members.len());
    }

    let e = catalogue::loop_and_arrow();
    let cover = cover_over_prime(&e.algebra, &e.top, 3)?;
    let scene = OracleScene::new(cover.clone(), 3, DEFAULT_BUDGET)?;
    let part = orbits(&scene, DEFAULT_BUDGET)?;
    let classes = iso_classes(&scene, DEFAULT_BUDGET)?;
    println!(
        "loop and arrow, F3, d = 3: {} points, orbit sizes {:?} ({}), {} iso classes",
        scene.len(),
        part.sizes(),
        part.method.as_str(),
        classes.len()
    );
    Ok(())
}

fn main() -> qgrass::Result<()> {
    run_example()
}
