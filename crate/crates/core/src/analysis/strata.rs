use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{par_map, Analyzer, DegreeBox};
use crate::error::Result;
use crate::semigroup::DegreeVector;

/// Degrees sharing one cocomplex `∇`, encoded by its member face labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sector {
    pub nabla: Vec<Vec<usize>>,
    pub degrees: Vec<DegreeVector>,
}

/// The box partitioned by `∇(β)`, sectors ordered by encoding.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectorTable {
    pub region: DegreeBox,
    pub sectors: Vec<Sector>,
}

impl SectorTable {
    pub fn len(&self) -> usize {
        self.sectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sectors.is_empty()
    }

    pub fn sector_of(&self, beta: &[i64]) -> Option<&Sector> {
        self.sectors.iter().find(|s| s.degrees.iter().any(|d| d == beta))
    }
}

/// Outcome of comparing the stratification by `(E_τ(β))_τ` with the
/// sector partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefinementReport {
    pub region: DegreeBox,
    pub strata: usize,
    pub sectors: usize,
    /// Pairs with equal `E`-tuples but different `∇`.
    pub violations: Vec<(DegreeVector, DegreeVector)>,
    /// A pair with equal `∇` but different `E`-tuples, if one is in the box.
    pub properness_witness: Option<(DegreeVector, DegreeVector)>,
    pub holds: bool,
}

type ETuple = Vec<Vec<Vec<i64>>>;

impl Analyzer {
    pub fn sector_partition(&self, region: &DegreeBox) -> Result<SectorTable> {
        self.check_box(region)?;
        let lattice = self.cone().faces();
        let labelled = par_map(region.points(), |p| {
            let n = self.nabla(&p)?;
            Ok((n.labels(lattice), p))
        })?;
        let mut map: BTreeMap<Vec<Vec<usize>>, Vec<DegreeVector>> = BTreeMap::new();
        for (n, p) in labelled {
            map.entry(n).or_default().push(p);
        }
        Ok(SectorTable {
            region: region.clone(),
            sectors: map
                .into_iter()
                .map(|(nabla, degrees)| Sector { nabla, degrees })
                .collect(),
        })
    }

    pub fn saito_refinement_check(&self, region: &DegreeBox) -> Result<RefinementReport> {
        self.check_box(region)?;
        let lattice = self.cone().faces();
        let sg = self.semigroup();
        let rows = par_map(region.points(), |p| {
            let tuple: ETuple = sg.e_tuple(&p)?.into_iter().map(|e| e.classes).collect();
            let n = self.nabla(&p)?.labels(lattice);
            Ok((p, tuple, n))
        })?;

        let mut strata: BTreeMap<&ETuple, (&DegreeVector, &Vec<Vec<usize>>)> = BTreeMap::new();
        let mut sectors: BTreeMap<&Vec<Vec<usize>>, (&DegreeVector, &ETuple)> = BTreeMap::new();
        let mut violations = Vec::new();
        let mut properness_witness = None;
        for (p, tuple, n) in &rows {
            let (q, m) = *strata.entry(tuple).or_insert((p, n));
            if m != n {
                violations.push((q.clone(), p.clone()));
            }
            let (q, t) = *sectors.entry(n).or_insert((p, tuple));
            if properness_witness.is_none() && t != tuple {
                properness_witness = Some((q.clone(), p.clone()));
            }
        }
        Ok(RefinementReport {
            region: region.clone(),
            strata: strata.len(),
            sectors: sectors.len(),
            holds: violations.is_empty(),
            violations,
            properness_witness,
        })
    }
}
