// Every chart of every dimension against the brute-force oracle.

use qgrass::catalogue;
use qgrass::moduli::cover_over_prime;
use qgrass::oracle::{cross_validate_chart, OracleScene, DEFAULT_BUDGET};
use qgrass::skeleton::enumerate_skeletons;

pub fn run_example() -> qgrass::Result<()> {
    let entry = catalogue::two_loops_two_arrows();
    let cover = cover_over_prime(&entry.algebra, &entry.top, 3)?;
    let quiver = entry.algebra.quiver();
    for d in 1..=cover.dim() {
        let scene = OracleScene::new(cover.clone(), d, DEFAULT_BUDGET)?;
        let mut bad = 0;
        let skeletons = enumerate_skeletons(&cover, d, true)?;
        for sigma in &skeletons {
            let report = cross_validate_chart(&scene, sigma, DEFAULT_BUDGET)?;
            if !report.is_ok() {
                bad += 1;
                println!("  {}: {:?}", sigma.display(quiver), report.mismatches);
            }
        }
        println!("d = {d}: {} points, {} charts, {bad} mismatching", scene.len(), skeletons.len());
    }
    Ok(())
}

fn main() -> qgrass::Result<()> {
    run_example()
}
