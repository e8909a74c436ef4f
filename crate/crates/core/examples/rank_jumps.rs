//! The rank-jump criterion for simplices, its certificates, and the
//! comparison of rank-jumping degrees with the fitted slabs.
//!
//! ```bash
//! cargo run --example rank_jumps
//! ```

use num_rational::BigRational;
use rankjump::analysis::{Analyzer, DegreeBox};
use rankjump::fixtures;
use rankjump::Error;

pub fn run_example() -> rankjump::Result<()> {
    let f3 = Analyzer::from_rows(&fixtures::f3())?;
    if let Some(c) = f3.is_rank_jumping(&[1, 2])? {
        println!(
            "(1,2) jumps: σ = {:?}, τ = {:?}, ρ = {:?}, λ = {:?}; revalidates: {}",
            c.sigma,
            c.tau,
            c.rho,
            c.lambda,
            c.revalidate(&f3)?
        );
    }
    println!("(0,0) jumps: {}", f3.is_rank_jumping(&[0, 0])?.is_some());

    let region = DegreeBox::cube(2, -6, 10, 2)?;
    let report = f3.verify_simplicial_theorem(&region)?;
    println!(
        "on {region}: rank jumping {:?}, slab closure {:?}, pass = {}",
        report.rank_jumping, report.closure, report.pass
    );

    let half = BigRational::new(1.into(), 2.into());
    let one = BigRational::from_integer(1.into());
    println!(
        "(1/2, 1) on a slab: {}",
        f3.rank_jump_or_closure_query(&region, &[half, one])?
    );

    let square = Analyzer::from_rows(&fixtures::p4())?;
    match square.is_rank_jumping(&[0, 0, 0]) {
        Err(Error::NotSimplex) => println!("P4: criterion needs a simplex"),
        other => unreachable!("{other:?}"),
    }
    Ok(())
}

fn main() -> rankjump::Result<()> {
    run_example()
}
