//! Integer linear algebra underneath everything else: Smith normal form,
//! Diophantine solving, quotient maps and coset representatives.
//!
//! ```bash
//! cargo run --example lattice_tools
//! ```

use num_bigint::BigInt;
use rankjump::lattice::{
    big_vec, quotient_map, smith_normal_form, solve_diophantine, CosetSystem, IntMatrix, Lattice,
};

pub fn run_example() -> rankjump::Result<()> {
    let m = IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]])?;
    let snf = smith_normal_form(&m);
    println!("invariant factors of [[2,4],[6,8]]: {:?}", snf.invariant_factors());
    assert_eq!(snf.u.mul(&m)?.mul(&snf.v)?, snf.s);

    // x + y = 2 has the particular solution (2, 0) and kernel (1, -1)
    let row = IntMatrix::from_rows(&[vec![1, 1]])?;
    if let Some((x, kernel)) = solve_diophantine(&row, &big_vec(&[2]))? {
        println!("x + y = 2: particular {x:?}, kernel basis {:?}", kernel.basis());
    }
    let two = IntMatrix::from_rows(&[vec![2]])?;
    assert!(solve_diophantine(&two, &big_vec(&[3]))?.is_none());

    // Z^2 / <(2, 0), (0, 3)>  ≅  Z/2 ⊕ Z/3
    let sub = Lattice::from_generators(2, &[big_vec(&[2, 0]), big_vec(&[0, 3])])?;
    let q = quotient_map(2, &sub)?;
    println!("torsion orders {:?}, free rank {}", q.torsion_orders(), q.free_rank());

    let full = Lattice::full(2);
    let cosets = CosetSystem::new(&sub, &full)?;
    println!("index {} with representatives:", cosets.index());
    for r in cosets.representatives() {
        let r: Vec<BigInt> = r;
        println!("  {r:?}");
    }
    Ok(())
}

fn main() -> rankjump::Result<()> {
    run_example()
}
