// Parsing a problem file and running commands on it, as the binary does.

use qgrass::cli::{exit_code, parse_problem, render_problem, run_command, Command, Options};

const PROBLEM: &str = "\
# two loops and two arrows
field: Q
loewy: 2
top: 1
dim: 4
quiver
  vertices: 1 2
  arrows: w1: 1 -> 1, w2: 1 -> 1, a1: 1 -> 2, a2: 1 -> 2
relations
  w1^2, w1*w2, w2*w1, w2^2
  a1*w1 - a2*w2
";

pub fn run_example() -> qgrass::Result<()> {
    let problem = parse_problem(PROBLEM)?;
    print!("{}", render_problem(&problem));

    let options = Options {
        skeleton: Some("e1,w1,a1*w1,a2".into()),
        ..Options::default()
    };
    let out = run_command(&problem, Command::Chart, &options)?;
    print!("{}", out.text);

    let options = Options {
        sub: Some("a1*w1".into()),
        ..Options::default()
    };
    let result = run_command(&problem, Command::InvariantCheck, &options);
    if let Ok(out) = &result {
        print!("{}", out.text);
    }
    println!("exit code {}", exit_code(&result));
    Ok(())
}

fn main() -> qgrass::Result<()> {
    run_example()
}
