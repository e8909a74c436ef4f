//! Validation of `A`, the face lattice of `NA`, incidence signs and the
//! normalized volume.
//!
//! ```bash
//! cargo run --example face_lattice
//! ```

use rankjump::cone::Cone;
use rankjump::fixtures;

fn describe(name: &str, rows: &[Vec<i64>]) -> rankjump::Result<()> {
    let cone = Cone::from_rows(rows)?;
    let faces = cone.faces();
    println!("{name}: d = {}, {} faces, simplex: {}", cone.d(), faces.len(), cone.is_simplex());
    for f in faces.faces() {
        println!("  dim {} columns {:?} functional {:?}", f.dim(), f.labels(), f.functional());
    }
    for (lower, upper) in faces.covers() {
        let sign = faces.sign(upper, lower).expect("signs on every cover");
        println!(
            "  [{:?} : {:?}] = {sign:+}",
            faces.face(upper).labels(),
            faces.face(lower).labels()
        );
    }
    println!("  normalized volume {}", cone.normalized_volume()?);
    Ok(())
}

pub fn run_example() -> rankjump::Result<()> {
    describe("F3", &fixtures::f3())?;
    describe("P4", &fixtures::p4())?;

    // columns spanning an index-2 sublattice are moved to ZA = Z^2
    let cone = Cone::from_rows(&[vec![1, 1], vec![0, 2]])?;
    let n = cone.matrix().normalization().expect("index 2");
    println!("[[1,1],[0,2]] has index {} and becomes {:?}", n.index, cone.matrix().rows());

    match Cone::from_rows(&[vec![1, 2, 1], vec![0, 1, 2]]) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!("first row must be all ones"),
    }
    Ok(())
}

fn main() -> rankjump::Result<()> {
    run_example()
}
