//! Box-restricted scans: exceptional degrees, slab components, the
//! rank-jump criterion for simplices and the comparison of the two sets,
//! sector partitions and the `E`-tuple stratification.
//!
//! Every result is relative to a [`DegreeBox`]. Inference only trusts the
//! inner box, which drops `margin` layers from each side.

mod degree_box;
mod far;
mod slabs;
mod strata;
mod theorem;

use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use crate::cohomology::{cohomology_dims, nabla, Cocomplex, CohomologyReport};
use crate::cone::{Cone, FaceId};
use crate::error::Result;
use crate::lattice::QuotientMap;
use crate::semigroup::{DegreeVector, Semigroup};

pub use degree_box::DegreeBox;
pub use far::{translation_bound, FarDegreeInstance, FarDegreeReport};
pub use slabs::SlabComponent;
pub use strata::{RefinementReport, Sector, SectorTable};
pub use theorem::{RankJumpCertificate, TheoremReport};

/// A cone with its membership oracles and, per face `τ`, integer rows whose
/// common kernel is `Qτ`.
#[derive(Debug)]
pub struct Analyzer {
    sg: Semigroup,
    span_rows: Vec<Vec<Vec<i64>>>,
}

impl Analyzer {
    pub fn new(cone: Cone) -> Result<Self> {
        let span_rows = cone
            .faces()
            .faces()
            .iter()
            .map(|f| QuotientMap::new(f.lattice())?.free_part().to_i64_rows())
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            sg: Semigroup::new(cone)?,
            span_rows,
        })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(Cone::from_rows(rows)?)
    }

    pub fn semigroup(&self) -> &Semigroup {
        &self.sg
    }

    pub fn cone(&self) -> &Cone {
        self.sg.cone()
    }

    pub fn d(&self) -> usize {
        self.sg.d()
    }

    pub fn nabla(&self, beta: &[i64]) -> Result<Cocomplex> {
        nabla(&self.sg, beta)
    }

    pub fn cohomology(&self, beta: &[i64]) -> Result<CohomologyReport> {
        cohomology_dims(&self.sg, beta)
    }

    pub fn is_exceptional(&self, beta: &[i64]) -> Result<bool> {
        Ok(self.cohomology(beta)?.exceptional)
    }

    /// `v ∈ Qτ`.
    pub fn in_span(&self, face: FaceId, v: &[i64]) -> bool {
        self.span_rows[face]
            .iter()
            .all(|r| r.iter().zip(v).map(|(a, b)| a * b).sum::<i64>() == 0)
    }

    /// `v ∈ Qτ` for a rational vector.
    pub fn in_span_rational(&self, face: FaceId, v: &[BigRational]) -> bool {
        self.span_rows[face].iter().all(|r| {
            r.iter()
                .zip(v)
                .map(|(a, b)| b * BigRational::from_integer((*a).into()))
                .fold(BigRational::zero(), |acc, x| acc + x)
                .is_zero()
        })
    }

    /// The exceptional degrees of the box, lexicographically sorted.
    pub fn scan_exceptional(&self, region: &DegreeBox) -> Result<Vec<DegreeVector>> {
        self.check_box(region)?;
        let flags = par_map(region.points(), |p| self.is_exceptional(&p).map(|e| (p, e)))?;
        Ok(flags.into_iter().filter(|(_, e)| *e).map(|(p, _)| p).collect())
    }

    fn check_box(&self, region: &DegreeBox) -> Result<()> {
        if region.dim() != self.d() {
            return Err(crate::Error::DimensionMismatch {
                expected: self.d(),
                found: region.dim(),
            });
        }
        Ok(())
    }
}

/// Order-preserving parallel map with early error propagation.
fn par_map<T, U, F>(items: Vec<T>, f: F) -> Result<Vec<U>>
where
    T: Send,
    U: Send,
    F: Fn(T) -> Result<U> + Sync + Send,
{
    items.into_par_iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn scans() {
        let f3 = Analyzer::from_rows(&fixtures::f3()).unwrap();
        let b = DegreeBox::cube(2, -6, 10, 2).unwrap();
        assert_eq!(f3.scan_exceptional(&b).unwrap(), vec![vec![1, 2]]);
        let f2 = Analyzer::from_rows(&fixtures::f2()).unwrap();
        assert!(f2
            .scan_exceptional(&DegreeBox::cube(2, -5, 5, 2).unwrap())
            .unwrap()
            .is_empty());
        let f1 = Analyzer::from_rows(&fixtures::f1()).unwrap();
        assert!(f1
            .scan_exceptional(&DegreeBox::cube(2, -3, 3, 0).unwrap())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn spans() {
        let f3 = Analyzer::from_rows(&fixtures::f3()).unwrap();
        let l = f3.cone().faces();
        assert!(f3.in_span(l.find(&[0]).unwrap(), &[3, 0]));
        assert!(!f3.in_span(l.find(&[0]).unwrap(), &[3, 1]));
        assert!(f3.in_span(l.find(&[3]).unwrap(), &[-2, -8]));
        assert!(f3.in_span(l.full(), &[5, 7]));
        assert!(!f3.in_span(l.apex(), &[0, 1]));
        assert!(f3.in_span(l.apex(), &[0, 0]));
    }

    #[test]
    fn dimension_mismatch() {
        let f3 = Analyzer::from_rows(&fixtures::f3()).unwrap();
        assert!(f3.scan_exceptional(&DegreeBox::cube(3, 0, 1, 0).unwrap()).is_err());
    }
}
