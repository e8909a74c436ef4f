use std::collections::BTreeSet;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::{par_map, Analyzer, DegreeBox, SlabComponent};
use crate::cone::FaceId;
use crate::error::{Error, Result};
use crate::semigroup::DegreeVector;

/// Faces `σ, τ` with `ρ = σ ∩ τ` and `λ ∈ Z^d ∩ Cρ` such that `β − λ` lies
/// in `NA + Zσ` and `NA + Zτ` but not in `NA + Zρ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankJumpCertificate {
    pub degree: DegreeVector,
    pub sigma: Vec<usize>,
    pub tau: Vec<usize>,
    pub rho: Vec<usize>,
    pub lambda: Vec<i64>,
    pub in_sigma: bool,
    pub in_tau: bool,
    pub in_rho: bool,
}

impl RankJumpCertificate {
    /// Recomputes the three memberships and compares them with the record.
    pub fn revalidate(&self, analyzer: &Analyzer) -> Result<bool> {
        let sg = analyzer.semigroup();
        let id = |labels: &[usize]| sg.face_id(&labels.iter().map(|i| i - 1).collect::<Vec<_>>());
        let (s, t, r) = (id(&self.sigma)?, id(&self.tau)?, id(&self.rho)?);
        let lattice = analyzer.cone().faces();
        if lattice.meet(s, t) != r {
            return Ok(false);
        }
        let shifted: Vec<i64> = self.degree.iter().zip(&self.lambda).map(|(b, l)| b - l).collect();
        Ok(sg.member_mod_face(s, &shifted)? == self.in_sigma
            && sg.member_mod_face(t, &shifted)? == self.in_tau
            && sg.member_mod_face(r, &shifted)? == self.in_rho
            && self.in_sigma
            && self.in_tau
            && !self.in_rho)
    }
}

/// Comparison of the rank-jumping degrees of the inner box with the inner
/// box points on the inferred slabs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub region: DegreeBox,
    pub rank_jumping: Vec<DegreeVector>,
    pub closure: Vec<DegreeVector>,
    pub only_rank_jumping: Vec<DegreeVector>,
    pub only_closure: Vec<DegreeVector>,
    pub pass: bool,
}

impl Analyzer {
    fn require_simplex(&self) -> Result<()> {
        if self.cone().is_simplex() {
            Ok(())
        } else {
            Err(Error::NotSimplex)
        }
    }

    /// Searches `ρ` in face order, then pairs `σ < τ` strictly above `ρ`
    /// meeting in `ρ`, then `λ` among the saturation representatives of
    /// `ρ`; the first hit is returned.
    pub fn is_rank_jumping(&self, beta: &[i64]) -> Result<Option<RankJumpCertificate>> {
        self.require_simplex()?;
        let sg = self.semigroup();
        let lattice = self.cone().faces();
        for rho in lattice.ids() {
            let above: Vec<FaceId> = lattice.ids().filter(|&f| f != rho && lattice.leq(rho, f)).collect();
            let pairs: Vec<(FaceId, FaceId)> = above
                .iter()
                .enumerate()
                .flat_map(|(i, &s)| above[i + 1..].iter().map(move |&t| (s, t)))
                .filter(|&(s, t)| lattice.meet(s, t) == rho)
                .collect();
            if pairs.is_empty() {
                continue;
            }
            for lambda in sg.lambda_candidates(rho)? {
                let shifted: Vec<i64> = beta.iter().zip(&lambda).map(|(b, l)| b - l).collect();
                if sg.member_mod_face(rho, &shifted)? {
                    continue;
                }
                for &(s, t) in &pairs {
                    if sg.member_mod_face(s, &shifted)? && sg.member_mod_face(t, &shifted)? {
                        return Ok(Some(RankJumpCertificate {
                            degree: beta.to_vec(),
                            sigma: lattice.face(s).labels(),
                            tau: lattice.face(t).labels(),
                            rho: lattice.face(rho).labels(),
                            lambda,
                            in_sigma: true,
                            in_tau: true,
                            in_rho: false,
                        }));
                    }
                }
            }
        }
        Ok(None)
    }

    /// Certificates for every rank-jumping degree of the box, sorted.
    pub fn scan_rank_jumping(&self, region: &DegreeBox) -> Result<Vec<RankJumpCertificate>> {
        self.check_box(region)?;
        self.require_simplex()?;
        let found = par_map(region.points(), |p| self.is_rank_jumping(&p))?;
        Ok(found.into_iter().flatten().collect())
    }

    /// True iff `β` lies on the affine span of one of the given components.
    pub fn in_slab_closure(&self, slabs: &[SlabComponent], beta: &[BigRational]) -> bool {
        beta.len() == self.d() && slabs.iter().any(|s| self.on_slab_rational(s, beta))
    }

    /// Scans the box, fits slabs and tests `β` against them.
    pub fn rank_jump_or_closure_query(&self, region: &DegreeBox, beta: &[BigRational]) -> Result<bool> {
        let e = self.scan_exceptional(region)?;
        let slabs = self.infer_slabs(region, &e)?;
        Ok(self.in_slab_closure(&slabs, beta))
    }

    pub fn verify_simplicial_theorem(&self, region: &DegreeBox) -> Result<TheoremReport> {
        self.require_simplex()?;
        let e = self.scan_exceptional(region)?;
        let slabs = self.infer_slabs(region, &e)?;
        Ok(self.compare_with_slabs(region, &slabs)?)
    }

    /// The comparison for already inferred slabs.
    pub fn compare_with_slabs(&self, region: &DegreeBox, slabs: &[SlabComponent]) -> Result<TheoremReport> {
        self.require_simplex()?;
        let inner = region.inner()?;
        let s: BTreeSet<DegreeVector> = self
            .scan_rank_jumping(&inner)?
            .into_iter()
            .map(|c| c.degree)
            .collect();
        let c: BTreeSet<DegreeVector> = inner
            .points()
            .into_iter()
            .filter(|p| slabs.iter().any(|sl| self.on_slab(sl, p)))
            .collect();
        let only_rank_jumping: Vec<DegreeVector> = s.difference(&c).cloned().collect();
        let only_closure: Vec<DegreeVector> = c.difference(&s).cloned().collect();
        Ok(TheoremReport {
            region: region.clone(),
            pass: only_rank_jumping.is_empty() && only_closure.is_empty(),
            rank_jumping: s.into_iter().collect(),
            closure: c.into_iter().collect(),
            only_rank_jumping,
            only_closure,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn f3_certificate() {
        let a = Analyzer::from_rows(&fixtures::f3()).unwrap();
        let c = a.is_rank_jumping(&[1, 2]).unwrap().unwrap();
        assert_eq!(c.sigma, vec![1]);
        assert_eq!(c.tau, vec![4]);
        assert_eq!(c.rho, Vec::<usize>::new());
        assert_eq!(c.lambda, vec![0, 0]);
        assert!(c.revalidate(&a).unwrap());
        assert!(a.is_rank_jumping(&[0, 0]).unwrap().is_none());
    }

    #[test]
    fn cohen_macaulay_has_no_jumps() {
        let a = Analyzer::from_rows(&fixtures::f2()).unwrap();
        assert!(a.is_rank_jumping(&[1, 1]).unwrap().is_none());
    }

    #[test]
    fn rejects_non_simplex() {
        let a = Analyzer::from_rows(&fixtures::p4()).unwrap();
        assert!(matches!(a.is_rank_jumping(&[0, 0, 0]), Err(Error::NotSimplex)));
        let b = DegreeBox::cube(3, -1, 1, 0).unwrap();
        assert!(matches!(a.verify_simplicial_theorem(&b), Err(Error::NotSimplex)));
    }

    #[test]
    fn theorem_on_fixtures() {
        let f3 = Analyzer::from_rows(&fixtures::f3()).unwrap();
        let r = f3.verify_simplicial_theorem(&DegreeBox::cube(2, -6, 10, 2).unwrap()).unwrap();
        assert!(r.pass);
        assert_eq!(r.rank_jumping, vec![vec![1, 2]]);
        assert_eq!(r.closure, vec![vec![1, 2]]);
        for (rows, lo, hi) in [(fixtures::f2(), -5, 5), (fixtures::f1(), -3, 3)] {
            let a = Analyzer::from_rows(&rows).unwrap();
            let r = a.verify_simplicial_theorem(&DegreeBox::cube(2, lo, hi, 2).unwrap()).unwrap();
            assert!(r.pass && r.rank_jumping.is_empty() && r.closure.is_empty());
        }
    }

    #[test]
    fn closure_queries() {
        let f3 = Analyzer::from_rows(&fixtures::f3()).unwrap();
        let b = DegreeBox::cube(2, -6, 10, 2).unwrap();
        assert!(f3.rank_jump_or_closure_query(&b, &[q(1, 1), q(2, 1)]).unwrap());
        assert!(!f3.rank_jump_or_closure_query(&b, &[q(1, 2), q(1, 1)]).unwrap());
        let f2 = Analyzer::from_rows(&fixtures::f2()).unwrap();
        let b = DegreeBox::cube(2, -5, 5, 2).unwrap();
        assert!(!f2.rank_jump_or_closure_query(&b, &[q(1, 3), q(7, 2)]).unwrap());
    }
}
