//! The cocomplex `∇(β)`, the cohomology of the degree-β piece, and the
//! order-complex cross-check with its index shift.
//!
//! ```bash
//! cargo run --example local_cohomology
//! ```

use rankjump::analysis::Analyzer;
use rankjump::cohomology::{complex_dims_from_relative, cocomplex_dims, relative_cohomology_crosscheck, Cocomplex};
use rankjump::cone::Cone;
use rankjump::fixtures;

pub fn run_example() -> rankjump::Result<()> {
    let f3 = Analyzer::from_rows(&fixtures::f3())?;
    let lattice = f3.cone().faces();
    for beta in [[1, 2], [0, 0], [2, 2], [-1, 3]] {
        let nabla = f3.nabla(&beta)?;
        let report = f3.cohomology(&beta)?;
        let relative = relative_cohomology_crosscheck(lattice, &nabla)?;
        println!(
            "β = {beta:?}: ∇ = {:?}, h = {:?}, exceptional = {}, relative = {relative:?}",
            nabla.labels(lattice),
            report.dims,
            report.exceptional
        );
        assert_eq!(complex_dims_from_relative(lattice, &nabla, &relative), report.dims);
    }

    // two parallel edges of the square plus its interior cell
    let square = Cone::from_rows(&fixtures::p4())?;
    let l = square.faces();
    let members = [l.find(&[0, 1]).unwrap(), l.find(&[2, 3]).unwrap(), l.full()];
    let nabla = Cocomplex::new(l, members)?;
    println!(
        "square cocomplex {:?}: relative {:?}, face complex {:?}",
        nabla.labels(l),
        relative_cohomology_crosscheck(l, &nabla)?,
        cocomplex_dims(l, &nabla)?
    );
    Ok(())
}

fn main() -> rankjump::Result<()> {
    run_example()
}
