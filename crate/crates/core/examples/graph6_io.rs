// graph6 round trips through a byte buffer, the format used by the
// `enumerate` subcommand and by verification witnesses.

use std::io::Cursor;

use matchroots::enumerate::{enumerate_graphs, EnumSpec};
use matchroots::graph::{read_graph6_stream, write_graph6_stream};
use matchroots::{matching_polynomial, Graph};

fn run_example() -> matchroots::Result<String> {
    let graphs: Vec<Graph> = enumerate_graphs(EnumSpec::connected(5))?.collect();
    let mut buf = Vec::new();
    write_graph6_stream(&mut buf, &graphs).expect("writing to memory");
    let back: Vec<Graph> = read_graph6_stream(Cursor::new(&buf)).collect::<Result<_, _>>()?;
    assert_eq!(back, graphs);

    let mut out = format!("{} connected 5-vertex graphs, {} bytes of graph6\n", graphs.len(), buf.len());
    let petersen = Graph::from_graph6("IheA@GUAo")?;
    out += &format!("IheA@GUAo: {} vertices, mu = {}\n", petersen.order(), matching_polynomial(&petersen));
    out += &format!("K_4 as graph6: {}\n", Graph::complete(4)?.to_graph6()?);
    Ok(out)
}

fn main() -> matchroots::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
