// Exhaustive comatching searches: partners of single graphs and a batched
// uniqueness sweep over the friendship graphs.

use matchroots::families::{describe, parse_graph_input};
use matchroots::verify::{find_comatching_partners, find_comatching_partners_batch};

fn run_example() -> matchroots::Result<String> {
    let mut out = String::new();
    for input in ["F(2)", "K(4,3;1)", "L(6,2)", "K_3"] {
        let g = parse_graph_input(input)?;
        let partners: Vec<String> = find_comatching_partners(&g, 10)?.iter().map(describe).collect();
        out += &format!("{input}: [{}]\n", partners.join(", "));
    }

    let friendship: Vec<_> = (1..=4).map(|n| parse_graph_input(&format!("F({n})"))).collect::<Result<_, _>>()?;
    for (n, partners) in (1..).zip(find_comatching_partners_batch(&friendship, 9)?) {
        out += &format!("F_{n} matching unique: {}\n", partners.is_empty());
    }
    Ok(out)
}

fn main() -> matchroots::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
