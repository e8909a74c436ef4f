use std::collections::HashSet;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::{Analyzer, DegreeBox};
use crate::cone::FaceId;
use crate::error::Result;
use crate::lattice::rank_of_rows;
use crate::semigroup::DegreeVector;

/// An affine translate `base + Qρ` together with the scanned exceptional
/// degrees lying on it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlabComponent {
    pub base: DegreeVector,
    pub face: FaceId,
    /// One-based column labels of `ρ`.
    pub face_labels: Vec<usize>,
    pub dim: usize,
    pub degrees: Vec<DegreeVector>,
}

fn diff(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

impl Analyzer {
    pub fn on_slab(&self, slab: &SlabComponent, beta: &[i64]) -> bool {
        self.in_span(slab.face, &diff(beta, &slab.base))
    }

    pub fn on_slab_rational(&self, slab: &SlabComponent, beta: &[BigRational]) -> bool {
        let v: Vec<BigRational> = beta
            .iter()
            .zip(&slab.base)
            .map(|(b, e)| b - BigRational::from_integer((*e).into()))
            .collect();
        self.in_span_rational(slab.face, &v)
    }

    /// Greedy fit of face-parallel components to a scanned exceptional set.
    ///
    /// Faces are tried from the largest proper dimension down. A candidate
    /// `e + Qρ` is accepted when its lattice points in the inner box are
    /// nonempty and all exceptional, and the exceptional degrees on it span
    /// an affine space of dimension `dim ρ`. Degrees left over become point
    /// components. A slab whose exceptional part begins inside the inner box
    /// is therefore never merged.
    pub fn infer_slabs(&self, region: &DegreeBox, exceptional: &[DegreeVector]) -> Result<Vec<SlabComponent>> {
        self.check_box(region)?;
        let inner = region.inner()?.points();
        let lookup: HashSet<&[i64]> = exceptional.iter().map(Vec::as_slice).collect();
        let lattice = self.cone().faces();
        let mut order: Vec<FaceId> = lattice
            .ids()
            .filter(|&f| f != lattice.apex() && f != lattice.full())
            .collect();
        order.sort_by_key(|&f| (std::cmp::Reverse(lattice.face(f).dim()), f));

        let mut assigned = vec![false; exceptional.len()];
        let mut out = Vec::new();
        for rho in order {
            let dim = lattice.face(rho).dim();
            for (i, e) in exceptional.iter().enumerate() {
                if assigned[i] {
                    continue;
                }
                let mut hits = inner.iter().filter(|p| self.in_span(rho, &diff(p, e))).peekable();
                if hits.peek().is_none() || !hits.all(|p| lookup.contains(p.as_slice())) {
                    continue;
                }
                let members: Vec<usize> = (0..exceptional.len())
                    .filter(|&j| self.in_span(rho, &diff(&exceptional[j], e)))
                    .collect();
                let directions: Vec<Vec<i64>> = members.iter().map(|&j| diff(&exceptional[j], e)).collect();
                if rank_of_rows(&directions) != dim {
                    continue;
                }
                for &j in &members {
                    assigned[j] = true;
                }
                out.push(SlabComponent {
                    base: e.clone(),
                    face: rho,
                    face_labels: lattice.face(rho).labels(),
                    dim,
                    degrees: members.iter().map(|&j| exceptional[j].clone()).collect(),
                });
            }
        }
        for (i, e) in exceptional.iter().enumerate() {
            if !assigned[i] {
                out.push(SlabComponent {
                    base: e.clone(),
                    face: lattice.apex(),
                    face_labels: Vec::new(),
                    dim: 0,
                    degrees: vec![e.clone()],
                });
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn f3_single_point() {
        let a = Analyzer::from_rows(&fixtures::f3()).unwrap();
        let b = DegreeBox::cube(2, -6, 10, 2).unwrap();
        let e = a.scan_exceptional(&b).unwrap();
        let s = a.infer_slabs(&b, &e).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].base, vec![1, 2]);
        assert_eq!(s[0].dim, 0);
        assert!(s[0].face_labels.is_empty());
    }

    #[test]
    fn empty_scan() {
        let a = Analyzer::from_rows(&fixtures::f2()).unwrap();
        let b = DegreeBox::cube(2, -5, 5, 2).unwrap();
        assert!(a.infer_slabs(&b, &[]).unwrap().is_empty());
    }

    #[test]
    fn synthetic_line() {
        // ray {1} of F3 spans (1, 0)
        let a = Analyzer::from_rows(&fixtures::f3()).unwrap();
        let b = DegreeBox::cube(2, -4, 6, 1).unwrap();
        let e: Vec<DegreeVector> = (-4..=6).map(|x| vec![x, 2]).collect();
        let s = a.infer_slabs(&b, &e).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].face_labels, vec![1]);
        assert_eq!(s[0].degrees.len(), 11);
    }

    #[test]
    fn margin_too_large() {
        let a = Analyzer::from_rows(&fixtures::f3()).unwrap();
        let b = DegreeBox::cube(2, 0, 2, 2).unwrap();
        assert!(a.infer_slabs(&b, &[]).is_err());
    }
}
