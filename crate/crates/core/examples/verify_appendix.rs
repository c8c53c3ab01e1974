// Verification reports: the appendix of small connected graphs and the
// listed comatching pairs, printed as JSON lines without timing.

use matchroots::verify::{run_selector, Selector};

fn run_example() -> matchroots::Result<String> {
    let mut out = String::new();
    for selector in ["appendix", "tables"] {
        let selector: Selector = selector.parse()?;
        for report in run_selector(&selector, 9)? {
            out += &format!("{}: {:?}, {} witnesses\n", report.claim, report.status, report.witnesses.len());
            out += &report.without_timing().to_json_line();
            out += "\n";
        }
    }
    Ok(out)
}

fn main() -> matchroots::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
