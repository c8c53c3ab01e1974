// Matching polynomial, matching vector and characteristic polynomial of a
// few small graphs, including one named by a family descriptor.

use matchroots::families::parse_graph_input;
use matchroots::{characteristic_polynomial, matching_polynomial, matching_vector, Graph};

fn run_example() -> matchroots::Result<String> {
    let mut out = String::new();
    let petersen = Graph::from_edges(
        10,
        [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (1, 6), (2, 7), (3, 8), (4, 9), (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)],
    )?;
    let v = matching_vector(&petersen);
    out += &format!("Petersen: {}\n", matching_polynomial(&petersen));
    out += &format!("  matchings by size: {:?}\n", v.to_u64s().expect("small counts"));

    // The characteristic polynomial agrees with the matching polynomial exactly on forests.
    for input in ["S(2,4)", "T(2,2)"] {
        let g = parse_graph_input(input)?;
        let mu = matching_polynomial(&g);
        let phi = characteristic_polynomial(&g);
        out += &format!("{input}: mu = {mu}, charpoly = {phi}, forest = {}\n", g.is_forest());
    }
    Ok(out)
}

fn main() -> matchroots::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
