//! Reference matrices and seeded random generators for valid and simplicial
//! inputs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cone::ColumnMatrix;
use crate::error::Error;

/// Segment with two lattice points; smooth, Cohen–Macaulay.
pub fn f1() -> Vec<Vec<i64>> {
    vec![vec![1, 1], vec![0, 1]]
}

/// Segment of length two; normal, Cohen–Macaulay.
pub fn f2() -> Vec<Vec<i64>> {
    vec![vec![1, 1, 1], vec![0, 1, 2]]
}

/// The monomial curve `{0, 1, 3, 4}`; not Cohen–Macaulay.
pub fn f3() -> Vec<Vec<i64>> {
    vec![vec![1, 1, 1, 1], vec![0, 1, 3, 4]]
}

/// Cone over a unit square; not simplicial.
pub fn p4() -> Vec<Vec<i64>> {
    vec![vec![1, 1, 1, 1], vec![0, 1, 0, 1], vec![0, 0, 1, 1]]
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random valid matrix with `2 ≤ d ≤ max_d`, `d ≤ n ≤ max_n` and entries
/// below the first row drawn from `[-3, 3]`, normalized so that `ZA = Z^d`.
pub fn random_matrix<R: Rng>(rng: &mut R, max_d: usize, max_n: usize) -> ColumnMatrix {
    loop {
        let d = rng.gen_range(2..=max_d);
        let n = rng.gen_range(d..=max_n.max(d));
        let mut rows = vec![vec![1i64; n]];
        for _ in 1..d {
            rows.push((0..n).map(|_| rng.gen_range(-3..=3)).collect());
        }
        match ColumnMatrix::from_rows(&rows) {
            Ok(a) => return a,
            Err(Error::RankDeficient { .. }) => continue,
            Err(e) => panic!("unexpected validation failure: {e}"),
        }
    }
}

/// A random matrix whose `conv(A)` is a `(d-1)`-simplex: vertices `0` and
/// `L_i e_i` (in the last `d - 1` coordinates, `1 ≤ L_i ≤ max_len`) plus up
/// to `max_extra` lattice points of the simplex, in shuffled column order.
pub fn random_simplicial<R: Rng>(rng: &mut R, max_d: usize, max_len: i64, max_extra: usize) -> ColumnMatrix {
    let d = rng.gen_range(2..=max_d);
    let lengths: Vec<i64> = (1..d).map(|_| rng.gen_range(1..=max_len)).collect();
    let mut cols: Vec<Vec<i64>> = vec![vec![0; d - 1]];
    for (i, &l) in lengths.iter().enumerate() {
        let mut v = vec![0; d - 1];
        v[i] = l;
        cols.push(v);
    }
    let extra = rng.gen_range(0..=max_extra);
    for _ in 0..extra * 4 {
        if cols.len() >= d + extra {
            break;
        }
        let p: Vec<i64> = lengths.iter().map(|&l| rng.gen_range(0..=l)).collect();
        // inside iff Σ p_i / L_i ≤ 1
        let denom: i64 = lengths.iter().product();
        let num: i64 = p.iter().zip(&lengths).map(|(x, l)| x * (denom / l)).sum();
        if num <= denom && !cols.contains(&p) {
            cols.push(p);
        }
    }
    cols.shuffle(rng);
    let n = cols.len();
    let mut rows = vec![vec![1i64; n]];
    for r in 0..d - 1 {
        rows.push(cols.iter().map(|c| c[r]).collect());
    }
    ColumnMatrix::from_rows(&rows).expect("simplex vertices are independent")
}
