// Building the center-joined families, checking their closed forms,
// listing a whole parameter set, and recognizing a graph by structure.

use matchroots::families::{describe, recognize_all, FamilyDescriptor};
use matchroots::matching_polynomial;

fn run_example() -> matchroots::Result<String> {
    let mut out = String::new();
    for text in ["S(3,5)", "T(2,3)", "K(2,1;1)", "K'(4,2;2)", "L(2,1)", "F(3)"] {
        let d: FamilyDescriptor = text.parse()?;
        let g = d.build()?;
        let engine = matching_polynomial(&g);
        assert_eq!(engine, d.closed_form_mu()?);
        out += &format!("{d}: {} vertices, {} edges, mu = {engine}\n", g.order(), g.edge_count());
    }

    let set: FamilyDescriptor = "G(r=2,k=3,t=1,p=4,q=1)".parse()?;
    let members = set.members()?;
    out += &format!("{set}: {} members sharing {}\n", members.len(), set.closed_form_mu()?);

    let g = "K(4,3;1)".parse::<FamilyDescriptor>()?.build()?;
    let names: Vec<String> = recognize_all(&g).iter().map(|d| d.to_string()).collect();
    out += &format!("K(4,3;1) is also {} ({})\n", names.join(", "), describe(&g));
    Ok(out)
}

fn main() -> matchroots::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
