// Full invariance, orbit dimensions and the moduli criteria on the
// truncated loop `w³ = 0` with an arrow to 2.

use qgrass::catalogue;
use qgrass::moduli::{
    check_corollary_4_5, cover_over_prime, finite_local_type_check, is_fully_invariant, orbit_dim,
    unipotent_orbit_dim,
};
use qgrass::oracle::{orbits, OracleScene, DEFAULT_BUDGET};

pub fn run_example() -> qgrass::Result<()> {
    let e = catalogue::truncated_loop(2);
    let quiver = e.algebra.quiver();
    let cover = cover_over_prime(&e.algebra, &e.top, 2)?;
    let scene = OracleScene::new(cover.clone(), 4, DEFAULT_BUDGET)?;
    let part = orbits(&scene, DEFAULT_BUDGET)?;
    println!("d = 4 over F2: {} points in {} orbits", scene.len(), part.orbits.len());
    for orbit in &part.orbits {
        let c = &scene.points()[orbit[0]];
        let (inv, _) = is_fully_invariant(&cover, c)?;
        println!(
            "  orbit of size {} with dimension vector {:?}, layering {}: orbit dim {}, unipotent {}, fully invariant {}",
            orbit.len(),
            scene.quotient(orbit[0]).dims(),
            scene.layering(orbit[0]).display(quiver),
            orbit_dim(&cover, c)?,
            unipotent_orbit_dim(&cover, c)?,
            inv
        );
    }

    let cor = check_corollary_4_5(&e.algebra, 0, 2, DEFAULT_BUDGET)?;
    println!("moduli test: {} [{}] ({})", cor.holds, cor.reason, cor.provenance);
    let local = finite_local_type_check(&e.algebra, 0, 2, DEFAULT_BUDGET)?;
    println!("finite local type over F2: {}", local.verdict);

    let a2 = qgrass::AlgebraPresentation::build(
        qgrass::Quiver::new(["1", "2"], [("a", "1", "2")])?,
        vec![],
        1,
        qgrass::Field::Rational,
    )?;
    let r = check_corollary_4_5(&a2, 0, 2, DEFAULT_BUDGET)?;
    println!("A2: {}: moduli space exists for all d", r.reason);
    Ok(())
}

fn main() -> qgrass::Result<()> {
    run_example()
}
