// Isomorph-free enumeration: class counts, an edge-count filter, and
// grouping by matching polynomial to expose comatching classes.

use matchroots::enumerate::{count_graphs, enumerate_graphs, enumerate_with_invariant, EnumSpec};
use matchroots::matching_polynomial;

fn run_example() -> matchroots::Result<String> {
    let mut out = String::new();
    let all: Vec<u64> = (1..=7).map(|n| count_graphs(EnumSpec::all(n))).collect::<Result<_, _>>()?;
    let connected: Vec<u64> = (1..=7).map(|n| count_graphs(EnumSpec::connected(n))).collect::<Result<_, _>>()?;
    out += &format!("graphs on 1..7 vertices: {all:?}\nconnected: {connected:?}\n");

    let trees: Vec<String> = enumerate_graphs(EnumSpec::connected(6).with_edges(5))?.map(|g| g.to_string()).collect();
    out += &format!("trees on 6 vertices ({}): {}\n", trees.len(), trees.join(" "));

    let groups = enumerate_with_invariant(EnumSpec::connected(6), |g| matching_polynomial(g).to_string())?;
    let shared = groups.values().filter(|gs| gs.len() > 1).count();
    out += &format!("connected 6-vertex graphs: {} polynomials, {shared} shared by several graphs\n", groups.len());
    Ok(out)
}

fn main() -> matchroots::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
