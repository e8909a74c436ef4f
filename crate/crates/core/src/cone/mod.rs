//! The input matrix `A` and the face lattice of the cone it spans.

mod faces;
mod volume;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{big_vec, rank, small_vec, smith_normal_form, IntMatrix, Lattice, SolvePlan};

pub use faces::{enumerate_faces, incidence_signs, Face, FaceId, FaceLattice};
pub use volume::{normalized_volume, placing_triangulation};

/// Record of the coordinate change applied when the columns generate a
/// proper finite-index sublattice of `Z^d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Normalization {
    /// Rows of the matrix as given.
    pub original_rows: Vec<Vec<i64>>,
    /// `[Z^d : ZA]` before normalization.
    pub index: i64,
    /// Columns of the basis `B` of `ZA`; normalized columns are `B⁻¹·a_i`.
    pub basis: Vec<Vec<i64>>,
}

/// A validated `d × n` matrix whose first row is all ones and whose columns
/// generate `Z^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnMatrix {
    d: usize,
    columns: Vec<Vec<i64>>,
    normalization: Option<Normalization>,
}

impl ColumnMatrix {
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        validate_and_normalize(&IntMatrix::from_rows(rows)?)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, i: usize) -> &[i64] {
        &self.columns[i]
    }

    pub fn columns(&self) -> &[Vec<i64>] {
        &self.columns
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.d)
            .map(|r| self.columns.iter().map(|c| c[r]).collect())
            .collect()
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(&self.rows()).expect("rectangular")
    }

    pub fn normalization(&self) -> Option<&Normalization> {
        self.normalization.as_ref()
    }

    /// Columns with the given indices, as arbitrary-precision vectors.
    pub fn big_columns(&self, idx: &[usize]) -> Vec<Vec<BigInt>> {
        idx.iter().map(|&i| big_vec(&self.columns[i])).collect()
    }
}

/// Checks the matrix conventions and, if `ZA` has finite index in `Z^d`,
/// changes coordinates so that it becomes all of `Z^d` while keeping the
/// first row equal to all ones.
pub fn validate_and_normalize(m: &IntMatrix) -> Result<ColumnMatrix> {
    let (d, n) = (m.rows(), m.cols());
    if d == 0 || n == 0 {
        return Err(Error::EmptyMatrix);
    }
    for j in 0..n {
        if !m[(0, j)].is_one() {
            return Err(Error::NonHomogeneous {
                column: j + 1,
                value: m[(0, j)].to_i64().unwrap_or(i64::MAX),
            });
        }
    }
    let r = rank(m);
    if r < d {
        return Err(Error::RankDeficient { rank: r, d });
    }
    let rows = m.to_i64_rows()?;
    let columns: Vec<Vec<i64>> = (0..n).map(|j| rows.iter().map(|r| r[j]).collect()).collect();

    let index: BigInt = smith_normal_form(m).invariant_factors().iter().product();
    if index.is_one() {
        return Ok(ColumnMatrix {
            d,
            columns,
            normalization: None,
        });
    }

    // b_1 = a_1 and a basis of the degree-zero part ZA ∩ {x_1 = 0}, which is
    // generated by the differences a_i - a_1.
    let first = big_vec(&columns[0]);
    let diffs: Vec<Vec<BigInt>> = columns[1..]
        .iter()
        .map(|c| big_vec(c).into_iter().zip(&first).map(|(x, y)| x - y).collect())
        .collect();
    let degree_zero = Lattice::from_generators(d, &diffs)?;
    let mut basis = vec![first];
    basis.extend(degree_zero.basis().iter().cloned());
    let plan = SolvePlan::new(IntMatrix::from_columns(d, &basis)?);
    let mut normalized = Vec::with_capacity(n);
    for c in &columns {
        let x = plan
            .particular(&big_vec(c))?
            .expect("columns lie in the lattice they generate");
        normalized.push(small_vec(&x)?);
    }
    debug_assert!(normalized.iter().all(|c| c[0] == 1));
    let index = index.to_i64().ok_or(Error::Overflow)?;
    log::warn!(
        "columns generate a sublattice of index {index} in Z^{d}; changed coordinates so that ZA = Z^{d}"
    );
    Ok(ColumnMatrix {
        d,
        columns: normalized,
        normalization: Some(Normalization {
            original_rows: rows,
            index,
            basis: basis.iter().map(|b| small_vec(b)).collect::<Result<_>>()?,
        }),
    })
}

/// A validated matrix together with its signed face lattice.
#[derive(Clone, Debug)]
pub struct Cone {
    matrix: ColumnMatrix,
    faces: FaceLattice,
}

impl Cone {
    pub fn new(matrix: ColumnMatrix) -> Result<Self> {
        let faces = incidence_signs(enumerate_faces(&matrix)?)?;
        Ok(Self { matrix, faces })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(ColumnMatrix::from_rows(rows)?)
    }

    pub fn matrix(&self) -> &ColumnMatrix {
        &self.matrix
    }

    pub fn faces(&self) -> &FaceLattice {
        &self.faces
    }

    pub fn d(&self) -> usize {
        self.matrix.d()
    }

    pub fn is_simplex(&self) -> bool {
        is_simplex(&self.faces)
    }

    pub fn normalized_volume(&self) -> Result<u64> {
        normalized_volume(&self.matrix)
    }

    /// `Σ_{i∈τ} a_i`, which lies in the relative interior of `τ`.
    pub fn interior_point(&self, face: FaceId) -> Vec<i64> {
        interior_point(&self.matrix, self.faces.face(face))
    }
}

/// `Σ_{i∈τ} a_i`; the zero vector for the apex.
pub fn interior_point(a: &ColumnMatrix, face: &Face) -> Vec<i64> {
    let mut p = vec![0i64; a.d()];
    for &i in face.columns() {
        for (x, y) in p.iter_mut().zip(a.column(i)) {
            *x += y;
        }
    }
    p
}

/// True iff `conv(A)` is a `(d-1)`-simplex: exactly `d` rays, linearly
/// independent.
pub fn is_simplex(lattice: &FaceLattice) -> bool {
    let rays: Vec<&Face> = lattice.faces().iter().filter(|f| f.dim() == 1).collect();
    if rays.len() != lattice.d() {
        return false;
    }
    let gens: Vec<Vec<BigInt>> = rays.iter().map(|f| f.lattice().basis()[0].clone()).collect();
    let m = IntMatrix::from_columns(lattice.d(), &gens).expect("ray generators have length d");
    rank(&m) == lattice.d()
}
