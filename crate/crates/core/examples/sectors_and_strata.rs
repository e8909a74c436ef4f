//! Sector partition by `∇(β)`, the finer stratification by the tuple of
//! `E_τ(β)`, and the far-degree checks along interior rays of faces.
//!
//! ```bash
//! cargo run --example sectors_and_strata
//! ```

use rankjump::analysis::{Analyzer, DegreeBox};
use rankjump::fixtures;
use rankjump::semigroup::e_table;

pub fn run_example() -> rankjump::Result<()> {
    let f3 = Analyzer::from_rows(&fixtures::f3())?;
    let table = f3.sector_partition(&DegreeBox::cube(2, 0, 2, 0)?)?;
    for s in &table.sectors {
        println!("∇ = {:?}: {:?}", s.nabla, s.degrees);
    }
    for (face, classes) in e_table(f3.semigroup(), &[1, 2])? {
        println!("E_{face:?}(1,2) = {classes:?}");
    }

    let r = f3.saito_refinement_check(&DegreeBox::cube(2, -2, 4, 0)?)?;
    println!(
        "refinement holds: {} ({} strata over {} sectors), properness witness: {:?}",
        r.holds, r.strata, r.sectors, r.properness_witness
    );

    let triangle = Analyzer::from_rows(&[vec![1, 1, 1, 1, 1, 1], vec![1, 2, 0, 1, 0, 0], vec![1, 0, 4, 0, 0, 1]])?;
    let far = triangle.check_far_degrees(&DegreeBox::cube(3, 0, 2, 0)?, 3)?;
    println!("far degrees: {} ({} instances)", far.verdict(), far.instances.len());
    for i in far.instances.iter().take(3) {
        println!("  β = {:?}, ρ = {:?}, α = {:?}, from m = {}", i.degree, i.rho, i.alpha, i.m0);
    }
    Ok(())
}

fn main() -> rankjump::Result<()> {
    run_example()
}
