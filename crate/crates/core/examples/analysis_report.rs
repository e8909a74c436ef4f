//! The full report behind `rankjump analyze`, built in-process, with its
//! JSON form and the planar SVG plot.
//!
//! ```bash
//! cargo run --example analysis_report -- /tmp/f3.svg
//! ```

use rankjump::analysis::{Analyzer, DegreeBox};
use rankjump::cli::{analyze, degree, render_svg};
use rankjump::fixtures;

pub fn run_example() -> rankjump::Result<()> {
    let rows = fixtures::f3();
    let region = DegreeBox::cube(2, -6, 10, 2)?;
    let report = analyze(&rows, &region, Some(7))?;
    print!("{}", report.table());
    let json = report.canonical_json()?;
    println!("{} bytes of JSON, schema {}", json.len(), report.schema);

    let d = degree(&rows, &[1, 2])?;
    print!("{}", d.table());

    let svg = render_svg(&Analyzer::from_rows(&rows)?, &report)?;
    match std::env::args().nth(1) {
        Some(path) => std::fs::write(&path, &svg)?,
        None => println!("SVG: {} bytes", svg.len()),
    }
    Ok(())
}

fn main() -> rankjump::Result<()> {
    run_example()
}
