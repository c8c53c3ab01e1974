// Exact root structure: distinct-root count, isolating intervals,
// interlacing under vertex deletion, and a Gallai witness for a repeated
// root.

use matchroots::families::parse_graph_input;
use matchroots::spectrum::{gallai_witness, interlaces, multiplicity_of, root_summary};

fn run_example() -> matchroots::Result<String> {
    let mut out = String::new();
    for input in ["L(1,2)", "T(2,3)", "K_{2,3}"] {
        let g = parse_graph_input(input)?;
        let summary = root_summary(&g)?;
        out += &format!("{input}: {summary}\n");
        for (iv, m) in summary.roots() {
            out += &format!("    {iv} x{m}\n");
        }
    }

    let g = parse_graph_input("T(3,2)")?;
    let summary = root_summary(&g)?;
    let all_interlace = (0..g.order()).map(|u| interlaces(&g, u)).collect::<Result<Vec<_>, _>>()?;
    out += &format!("T(3,2) interlaces at every vertex: {}\n", all_interlace.iter().all(|&b| b));
    for handle in summary.handles() {
        let m = multiplicity_of(&g, handle)?;
        if m >= 2 {
            let u = gallai_witness(&g, handle)?.expect("connected graphs have a witness");
            out += &format!("  root {handle} has multiplicity {m}; deleting vertex {u} raises it\n");
        }
    }
    Ok(out)
}

fn main() -> matchroots::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
