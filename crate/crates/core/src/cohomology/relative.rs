//! Relative cohomology `H^*(X, Y; Q)` where `X` is the order complex of all
//! nonempty faces and `Y` the order complex of the nonempty faces outside
//! `∇`. Simplices are chains of faces; no orientation data is used.

use std::collections::HashMap;

use super::Cocomplex;
use crate::cone::{FaceId, FaceLattice};
use crate::error::{Error, Result};
use crate::lattice::rank_of_rows;

/// Chains of nonempty faces, bottom to top, grouped by simplex dimension.
fn chains(lattice: &FaceLattice) -> Vec<Vec<Vec<FaceId>>> {
    let nonempty: Vec<FaceId> = lattice.ids().filter(|&f| f != lattice.apex()).collect();
    let mut by_dim: Vec<Vec<Vec<FaceId>>> = vec![nonempty.iter().map(|&f| vec![f]).collect()];
    loop {
        let next: Vec<Vec<FaceId>> = by_dim
            .last()
            .expect("at least the vertices")
            .iter()
            .flat_map(|c| {
                let top = *c.last().expect("nonempty chain");
                nonempty
                    .iter()
                    .filter(move |&&f| f != top && lattice.leq(top, f))
                    .map(move |&f| {
                        let mut e = c.clone();
                        e.push(f);
                        e
                    })
            })
            .collect();
        if next.is_empty() {
            break;
        }
        by_dim.push(next);
    }
    by_dim
}

/// Dimensions of `H^k(X, Y; Q)` for `k = 0..d-1`.
pub fn relative_cohomology_crosscheck(lattice: &FaceLattice, nabla: &Cocomplex) -> Result<Vec<usize>> {
    if !nabla.is_upward_closed(lattice) {
        return Err(Error::NotUpwardClosed);
    }
    // a chain lies in Y iff its top face is outside ∇
    let relative: Vec<Vec<Vec<FaceId>>> = chains(lattice)
        .into_iter()
        .map(|level| {
            level
                .into_iter()
                .filter(|c| nabla.contains(*c.last().expect("nonempty chain")))
                .collect()
        })
        .collect();
    let index: Vec<HashMap<&[FaceId], usize>> = relative
        .iter()
        .map(|level| level.iter().enumerate().map(|(i, c)| (c.as_slice(), i)).collect())
        .collect();

    // boundary ∂_k : C_k → C_{k-1}, one row per k-simplex
    let mut ranks = vec![0usize; relative.len() + 1];
    for k in 1..relative.len() {
        let rows: Vec<Vec<i64>> = relative[k]
            .iter()
            .map(|c| {
                let mut row = vec![0i64; relative[k - 1].len()];
                for skip in 0..c.len() {
                    let face: Vec<FaceId> = c
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != skip)
                        .map(|(_, &f)| f)
                        .collect();
                    if let Some(&j) = index[k - 1].get(face.as_slice()) {
                        row[j] += if skip % 2 == 0 { 1 } else { -1 };
                    }
                }
                row
            })
            .collect();
        ranks[k] = rank_of_rows(&rows);
    }

    let d = lattice.d();
    Ok((0..d)
        .map(|k| match relative.get(k) {
            Some(level) => level.len() - ranks[k] - ranks.get(k + 1).copied().unwrap_or(0),
            None => 0,
        })
        .collect())
}

/// Cohomology of the face complex predicted from relative data: a face of
/// cone dimension `k` is a cell of dimension `k - 1`, so `h^{k} = rel^{k-1}`.
/// When the apex lies in `∇` the cocomplex is everything, the pair is
/// `(X, ∅)` with `X` contractible, and the face complex is exact.
pub fn complex_dims_from_relative(lattice: &FaceLattice, nabla: &Cocomplex, relative: &[usize]) -> Vec<usize> {
    let d = lattice.d();
    if nabla.contains(lattice.apex()) {
        return vec![0; d + 1];
    }
    let mut h = vec![0; d + 1];
    for (k, &r) in relative.iter().enumerate().take(d) {
        h[k + 1] = r;
    }
    h
}
