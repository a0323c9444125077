// A chart with a nontrivial equation: two loops, two arrows and the
// relation `a1*w1 = a2*w2`.

use qgrass::catalogue;
use qgrass::chart::{chart_ideal, module_from_point, point_from_submodule, submodule_from_point, ChartIdeal};
use qgrass::skeleton::Skeleton;
use qgrass::{Field, Scalar};

fn show(ideal: &ChartIdeal, quiver: &qgrass::Quiver) {
    for i in 0..ideal.num_variables() {
        println!("  X{} = {}", i + 1, ideal.describe_variable(quiver, i));
    }
    for i in 0..ideal.polynomials().len() {
        println!("  {} = 0", ideal.render_polynomial(i));
    }
}

pub fn run_example() -> qgrass::Result<()> {
    let entry = catalogue::two_loops_two_arrows();
    let algebra = &entry.algebra;
    let quiver = algebra.quiver();
    let cover = entry.cover();
    let path = |names: &[&str]| {
        let arrows: Vec<usize> = names.iter().rev().map(|n| quiver.arrow_by_name(n).unwrap()).collect();
        quiver.path_from_arrows(0, &arrows).unwrap()
    };
    let sigma = Skeleton::new(
        algebra,
        &entry.top,
        vec![path(&[]), path(&["w1"]), path(&["a1", "w1"]), path(&["a2"])],
    )?;
    let ideal = chart_ideal(&cover, &sigma)?;
    println!("chart {}:", sigma.display(quiver));
    show(&ideal, quiver);

    // a point on the chart: X1 * X4 = 1
    let f = Field::Rational;
    let half = Scalar::Q(num_rational::BigRational::new(1.into(), 2.into()));
    let c = vec![f.from_i64(2), f.from_i64(3), f.from_i64(-1), half];
    let sub = submodule_from_point(&cover, &ideal, &c)?;
    let back = point_from_submodule(&cover, &ideal, &sub)?;
    println!("round trip: {:?}", back.iter().map(|x| x.to_string()).collect::<Vec<_>>());
    let m = module_from_point(&cover, &ideal, &c)?;
    println!("module dimension vector {:?}, is a Λ-module: {}", m.dims(), m.is_module_over(algebra));

    // off the chart
    let bad = vec![f.from_i64(1), f.from_i64(0), f.from_i64(0), f.from_i64(2)];
    match submodule_from_point(&cover, &ideal, &bad) {
        Err(e) => println!("(1, 0, 0, 2): {e}"),
        Ok(_) => println!("(1, 0, 0, 2) unexpectedly on the chart"),
    }
    Ok(())
}

fn main() -> qgrass::Result<()> {
    run_example()
}
