//! Slow reference implementations used to cross-check the fast paths.
//!
//! `naive_member_mod_face` enumerates every `k ∈ N^{n}` supported off `τ`
//! with `Σ k_i φ_τ(a_i) = φ_τ(β)` and asks whether the residual
//! `β − Σ k_i a_i` is an integer combination of the columns of `τ`. It
//! never forms the quotient `Z^d / Zτ`.

use crate::cone::{Cone, FaceId};
use crate::error::{Error, Result};
use crate::lattice::{big_vec, solve_diophantine, IntMatrix};

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `β ∈ NA + Zτ` by bounded enumeration and a Diophantine solve per
/// candidate.
pub fn naive_member_mod_face(cone: &Cone, face: FaceId, beta: &[i64]) -> Result<bool> {
    let d = cone.d();
    if beta.len() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: beta.len(),
        });
    }
    let lattice = cone.faces();
    if face >= lattice.len() {
        return Err(Error::FaceNotOfA(vec![face]));
    }
    let f = lattice.face(face);
    let a = cone.matrix();
    let phi = f.functional();
    let budget = dot(phi, beta);
    if budget < 0 {
        return Ok(false);
    }
    let off: Vec<(&[i64], i64)> = (0..a.n())
        .filter(|&i| !f.contains_column(i))
        .map(|i| (a.column(i), dot(phi, a.column(i))))
        .collect();
    let tau = if f.columns().is_empty() {
        None
    } else {
        Some(IntMatrix::from_columns(d, &a.big_columns(f.columns()))?)
    };
    let mut found = false;
    enumerate(&off, 0, budget, beta.to_vec(), &mut |rest| {
        let ok = match &tau {
            None => rest.iter().all(|&x| x == 0),
            Some(m) => solve_diophantine(m, &big_vec(rest))?.is_some(),
        };
        found |= ok;
        Ok(ok)
    })?;
    Ok(found)
}

/// Visits every residual `β − Σ k_i a_i` with the exact weight budget
/// spent; stops once `visit` returns true.
fn enumerate(
    gens: &[(&[i64], i64)],
    i: usize,
    budget: i64,
    rest: Vec<i64>,
    visit: &mut dyn FnMut(&[i64]) -> Result<bool>,
) -> Result<bool> {
    if i == gens.len() {
        return if budget == 0 { visit(&rest) } else { Ok(false) };
    }
    let (col, w) = gens[i];
    let mut k = 0;
    let mut rest = rest;
    while k * w <= budget {
        if enumerate(gens, i + 1, budget - k * w, rest.clone(), visit)? {
            return Ok(true);
        }
        for (x, c) in rest.iter_mut().zip(col) {
            *x -= c;
        }
        k += 1;
    }
    Ok(false)
}

/// Faces by brute force: a column set `S` is a face iff some integer
/// functional in the box `[-bound, bound]^d` vanishes on `S` and is
/// positive on every other column. Returns zero-based column sets, sorted.
///
/// Complete only when the box contains a supporting functional for every
/// face; adequate for tiny matrices.
pub fn naive_faces(columns: &[Vec<i64>], bound: i64) -> Vec<Vec<usize>> {
    let d = columns.first().map_or(0, Vec::len);
    let mut found = std::collections::BTreeSet::new();
    let mut phi = vec![-bound; d];
    loop {
        if columns.iter().all(|c| dot(&phi, c) >= 0) {
            let zero: Vec<usize> = (0..columns.len()).filter(|&i| dot(&phi, &columns[i]) == 0).collect();
            found.insert(zero);
        }
        let mut j = 0;
        while j < d && phi[j] == bound {
            phi[j] = -bound;
            j += 1;
        }
        if j == d {
            break;
        }
        phi[j] += 1;
    }
    let mut v: Vec<Vec<usize>> = found.into_iter().collect();
    v.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    v
}
