//! The cocomplex `∇(β)` and the cohomology of the degree-β piece of
//!
//! ```text
//! 0 → R → ⊕_{rays} R_τ → ⊕_{2-faces} R_τ → … → ⊕_{facets} R_τ → R_m → 0
//! ```
//!
//! where a face of cone dimension `j` sits in cohomological position `j`
//! and contributes one copy of `Q` exactly when it belongs to `∇(β)`.

mod relative;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::cone::{FaceId, FaceLattice};
use crate::error::{Error, Result};
use crate::lattice::rank_of_rows;
use crate::semigroup::Semigroup;

pub use relative::{complex_dims_from_relative, relative_cohomology_crosscheck};

/// An upward-closed family of faces.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cocomplex {
    members: BTreeSet<FaceId>,
}

impl Cocomplex {
    pub fn new(lattice: &FaceLattice, members: impl IntoIterator<Item = FaceId>) -> Result<Self> {
        let c = Self {
            members: members.into_iter().collect(),
        };
        if !c.is_upward_closed(lattice) {
            return Err(Error::NotUpwardClosed);
        }
        Ok(c)
    }

    pub fn is_upward_closed(&self, lattice: &FaceLattice) -> bool {
        self.members
            .iter()
            .all(|&t| lattice.upper_covers(t).iter().all(|s| self.members.contains(s)))
    }

    pub fn contains(&self, face: FaceId) -> bool {
        self.members.contains(&face)
    }

    pub fn members(&self) -> impl Iterator<Item = FaceId> + '_ {
        self.members.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Face labels (one-based column sets), in face order.
    pub fn labels(&self, lattice: &FaceLattice) -> Vec<Vec<usize>> {
        self.members.iter().map(|&f| lattice.face(f).labels()).collect()
    }
}

/// `∇(β) = {τ : β ∈ NA + Zτ}`.
pub fn nabla(sg: &Semigroup, beta: &[i64]) -> Result<Cocomplex> {
    let lattice = sg.cone().faces();
    let mut members = Vec::new();
    for f in lattice.ids() {
        if sg.member_mod_face(f, beta)? {
            members.push(f);
        }
    }
    Cocomplex::new(lattice, members)
}

/// The degree-β piece of the complex: member faces by position and the
/// signed differentials between consecutive positions.
#[derive(Clone, Debug)]
pub struct GradedPiece {
    /// `positions[j]`: member faces of dimension `j`.
    pub positions: Vec<Vec<FaceId>>,
    /// `differentials[j]`: matrix of `C^j → C^{j+1}`, rows indexed by
    /// `positions[j + 1]`, columns by `positions[j]`.
    pub differentials: Vec<Vec<Vec<i64>>>,
}

impl GradedPiece {
    pub fn new(lattice: &FaceLattice, cocomplex: &Cocomplex) -> Result<Self> {
        let d = lattice.d();
        let mut positions = vec![Vec::new(); d + 1];
        for f in cocomplex.members() {
            positions[lattice.face(f).dim()].push(f);
        }
        let mut differentials = Vec::with_capacity(d);
        for j in 0..d {
            let m: Vec<Vec<i64>> = positions[j + 1]
                .iter()
                .map(|&s| {
                    positions[j]
                        .iter()
                        .map(|&t| match lattice.sign(s, t) {
                            Some(e) => e as i64,
                            None => 0,
                        })
                        .collect()
                })
                .collect();
            differentials.push(m);
        }
        if !lattice.has_signs() {
            return Err(Error::OrientationInconsistent {
                lower: Vec::new(),
                upper: Vec::new(),
            });
        }
        Ok(Self {
            positions,
            differentials,
        })
    }

    /// Checks that consecutive differentials compose to zero.
    pub fn is_complex(&self) -> bool {
        self.differentials.windows(2).all(|w| {
            let (first, second) = (&w[0], &w[1]);
            second.iter().all(|row| {
                (0..first.first().map_or(0, Vec::len)).all(|c| {
                    row.iter().zip(first).map(|(a, r)| a * r[c]).sum::<i64>() == 0
                })
            })
        })
    }

    pub fn dims(&self) -> Vec<usize> {
        let ranks: Vec<usize> = self.differentials.iter().map(|m| rank_of_rows(m)).collect();
        (0..self.positions.len())
            .map(|j| {
                let out = ranks.get(j).copied().unwrap_or(0);
                let inc = if j > 0 { ranks[j - 1] } else { 0 };
                self.positions[j].len() - out - inc
            })
            .collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.positions
            .iter()
            .enumerate()
            .map(|(j, p)| if j % 2 == 0 { p.len() as i64 } else { -(p.len() as i64) })
            .sum()
    }
}

/// Dimensions `h^0..h^d` of the degree-β cohomology, with the exceptional
/// flag `∃ j < d: h^j ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyReport {
    pub degree: Vec<i64>,
    pub dims: Vec<usize>,
    pub exceptional: bool,
}

/// Cohomology of a cocomplex in the face-dimension indexing.
pub fn cocomplex_dims(lattice: &FaceLattice, cocomplex: &Cocomplex) -> Result<Vec<usize>> {
    let piece = GradedPiece::new(lattice, cocomplex)?;
    debug_assert!(piece.is_complex());
    Ok(piece.dims())
}

pub fn cohomology_dims(sg: &Semigroup, beta: &[i64]) -> Result<CohomologyReport> {
    let lattice = sg.cone().faces();
    let dims = cocomplex_dims(lattice, &nabla(sg, beta)?)?;
    let d = lattice.d();
    Ok(CohomologyReport {
        degree: beta.to_vec(),
        exceptional: dims[..d].iter().any(|&h| h != 0),
        dims,
    })
}

pub fn is_exceptional_degree(sg: &Semigroup, beta: &[i64]) -> Result<bool> {
    Ok(cohomology_dims(sg, beta)?.exceptional)
}
