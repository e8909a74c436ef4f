use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::ColumnMatrix;
use crate::error::{Error, Result};
use crate::lattice::{determinant, rank, IntMatrix};

fn det_of(a: &ColumnMatrix, cols: &[usize]) -> BigInt {
    let m = IntMatrix::from_columns(a.d(), &a.big_columns(cols)).expect("column length d");
    determinant(&m).expect("square")
}

/// Placing triangulation of the columns in index order: each maximal
/// simplex is a sorted list of `d` column indices.
pub fn placing_triangulation(a: &ColumnMatrix) -> Vec<Vec<usize>> {
    let d = a.d();
    let mut seed = Vec::new();
    for i in 0..a.n() {
        seed.push(i);
        let m = IntMatrix::from_columns(d, &a.big_columns(&seed)).expect("column length d");
        if rank(&m) < seed.len() {
            seed.pop();
        }
        if seed.len() == d {
            break;
        }
    }
    let mut simplices = vec![seed.clone()];

    for p in (0..a.n()).filter(|i| !seed.contains(i)) {
        // boundary facets: (d-1)-subsets lying in exactly one simplex
        let mut owners: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for (si, s) in simplices.iter().enumerate() {
            for f in s.iter().copied().combinations(d - 1) {
                owners.entry(f).or_default().push(si);
            }
        }
        let mut added = Vec::new();
        for (facet, who) in owners {
            if who.len() != 1 {
                continue;
            }
            let s = &simplices[who[0]];
            let opposite = *s.iter().find(|v| !facet.contains(v)).expect("simplex has d vertices");
            let mut with_p = facet.clone();
            with_p.push(p);
            let mut with_q = facet.clone();
            with_q.push(opposite);
            let (dp, dq) = (det_of(a, &with_p), det_of(a, &with_q));
            if !dp.is_zero() && dp.signum() != dq.signum() {
                with_p.sort_unstable();
                added.push(with_p);
            }
        }
        simplices.extend(added);
    }
    simplices.sort();
    simplices
}

/// `(d-1)!`-normalized lattice volume of `conv(A)`: the sum of `|det|` over
/// a placing triangulation.
pub fn normalized_volume(a: &ColumnMatrix) -> Result<u64> {
    let total: BigInt = placing_triangulation(a)
        .iter()
        .map(|s| det_of(a, s).abs())
        .sum();
    total.to_u64().ok_or(Error::Overflow)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn vol(rows: &[Vec<i64>]) -> u64 {
        normalized_volume(&ColumnMatrix::from_rows(rows).unwrap()).unwrap()
    }

    #[test]
    fn fixture_volumes() {
        assert_eq!(vol(&fixtures::f1()), 1);
        assert_eq!(vol(&fixtures::f2()), 2);
        assert_eq!(vol(&fixtures::f3()), 4);
        assert_eq!(vol(&fixtures::p4()), 2);
        // index 3: volume is measured in ZA
        assert_eq!(vol(&[vec![1, 1, 1, 1], vec![0, 1, 3, 0], vec![0, 1, 0, 3]]), 3);
    }

    #[test]
    fn interior_columns_do_not_change_volume() {
        // triangle with vertices 0, 3e1, 3e2, boundary points generating Z^2,
        // with and without the interior point (1,1) placed early
        let with = vol(&[vec![1, 1, 1, 1, 1], vec![0, 1, 3, 0, 1], vec![0, 1, 0, 3, 0]]);
        let without = vol(&[vec![1, 1, 1, 1, 1], vec![0, 3, 0, 1, 0], vec![0, 0, 3, 0, 1]]);
        assert_eq!(with, 9);
        assert_eq!(without, 9);
    }

    #[test]
    fn f3_triangulation() {
        let a = ColumnMatrix::from_rows(&fixtures::f3()).unwrap();
        assert_eq!(placing_triangulation(&a), vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
    }
}
