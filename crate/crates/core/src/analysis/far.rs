//! Pointwise checks of two statements about degrees far along `−α` rays,
//! `α` interior to a face `ρ`: beyond an explicit bound every face not
//! containing `ρ` drops out of `∇(β − mα)`, and when `ρ` is a maximal
//! non-member of `∇(β)` of dimension at most `d − 2`, every such degree is
//! exceptional.

use serde::{Deserialize, Serialize};

use super::{Analyzer, DegreeBox};
use crate::cone::FaceId;
use crate::error::Result;
use crate::semigroup::DegreeVector;

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Smallest `m₀ ≥ 1` with `φ_μ(β − mα) < 0` for every `m ≥ m₀` and every
/// face `μ ⊉ ρ`, where `α = interior_point(ρ)`.
pub fn translation_bound(analyzer: &Analyzer, rho: FaceId, beta: &[i64]) -> i64 {
    let lattice = analyzer.cone().faces();
    let alpha = analyzer.cone().interior_point(rho);
    let mut m0 = 1;
    for mu in lattice.ids().filter(|&mu| !lattice.leq(rho, mu)) {
        let phi = lattice.face(mu).functional();
        let (pb, pa) = (dot(phi, beta), dot(phi, &alpha));
        debug_assert!(pa > 0, "interior point of ρ is positive off μ");
        m0 = m0.max(pb.div_euclid(pa) + 1);
    }
    m0
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FarDegreeInstance {
    pub degree: DegreeVector,
    pub rho: Vec<usize>,
    pub alpha: Vec<i64>,
    pub m0: i64,
    pub failures: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FarDegreeReport {
    pub instances: Vec<FarDegreeInstance>,
    /// Instances with `ρ` the apex, where `α = 0`.
    pub trivial: usize,
}

impl FarDegreeReport {
    pub fn is_vacuous(&self) -> bool {
        self.instances.is_empty()
    }

    pub fn holds(&self) -> bool {
        self.instances.iter().all(|i| i.failures.is_empty())
    }

    pub fn verdict(&self) -> &'static str {
        match (self.is_vacuous(), self.holds()) {
            (true, _) => "vacuous",
            (false, true) => "pass",
            (false, false) => "fail",
        }
    }
}

impl Analyzer {
    /// Maximal faces outside `∇(β)`.
    pub fn maximal_nonmembers(&self, beta: &[i64]) -> Result<Vec<FaceId>> {
        let nabla = self.nabla(beta)?;
        let lattice = self.cone().faces();
        Ok(lattice
            .ids()
            .filter(|&f| !nabla.contains(f) && lattice.upper_covers(f).iter().all(|&s| nabla.contains(s)))
            .collect())
    }

    /// For every degree of the box and every maximal non-member `ρ` of its
    /// cocomplex with `dim ρ ≤ d − 2`, checks `β − mα` exceptional for
    /// `m₀ ≤ m < m₀ + steps`.
    pub fn check_far_degrees(&self, region: &DegreeBox, steps: i64) -> Result<FarDegreeReport> {
        self.check_box(region)?;
        let d = self.d();
        let lattice = self.cone().faces();
        let mut instances = Vec::new();
        let mut trivial = 0;
        for beta in region.points() {
            for rho in self.maximal_nonmembers(&beta)? {
                if lattice.face(rho).dim() + 2 > d {
                    continue;
                }
                if rho == lattice.apex() {
                    trivial += 1;
                    continue;
                }
                let alpha = self.cone().interior_point(rho);
                let m0 = translation_bound(self, rho, &beta);
                let mut failures = Vec::new();
                for m in m0..m0 + steps {
                    let far: Vec<i64> = beta.iter().zip(&alpha).map(|(b, a)| b - m * a).collect();
                    if !self.is_exceptional(&far)? {
                        failures.push(m);
                    }
                }
                instances.push(FarDegreeInstance {
                    degree: beta.clone(),
                    rho: lattice.face(rho).labels(),
                    alpha,
                    m0,
                    failures,
                });
            }
        }
        Ok(FarDegreeReport { instances, trivial })
    }
}
