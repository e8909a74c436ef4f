use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::analysis::{Analyzer, DegreeBox, RankJumpCertificate, RefinementReport, SlabComponent, TheoremReport};
use crate::cone::Normalization;
use crate::error::{Error, Result};
use crate::fixtures;
use crate::oracle::naive_member_mod_face;
use crate::semigroup::{e_table, DegreeVector};

pub const SCHEMA: u32 = 1;

pub const SKIPPED_NOT_SIMPLEX: &str = "skipped: not a simplex";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceSummary {
    pub count: usize,
    pub by_dimension: Vec<usize>,
    /// One-based column labels, in face order.
    pub faces: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefinementSummary {
    pub holds: bool,
    pub strata: usize,
    pub sectors: usize,
    pub violations: Vec<(DegreeVector, DegreeVector)>,
    /// A pair with equal cocomplexes and different `E`-tuples, or
    /// "not found in box".
    pub properness: String,
}

impl From<RefinementReport> for RefinementSummary {
    fn from(r: RefinementReport) -> Self {
        Self {
            holds: r.holds,
            strata: r.strata,
            sectors: r.sectors,
            violations: r.violations,
            properness: match r.properness_witness {
                Some((a, b)) => format!("witness {a:?} ~ {b:?}"),
                None => "not found in box".into(),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FarDegreeSummary {
    pub verdict: String,
    pub instances: usize,
    pub trivial: usize,
    pub failures: usize,
}

/// Seeded comparison of the fast membership test with the enumeration
/// oracle at random faces and degrees of the box.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpotCheck {
    pub seed: u64,
    pub samples: usize,
    pub disagreements: Vec<(Vec<usize>, DegreeVector)>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub total_ms: f64,
    pub cached: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub input_rows: Vec<Vec<i64>>,
    pub rows: Vec<Vec<i64>>,
    pub normalization: Option<Normalization>,
    pub faces: FaceSummary,
    pub simplex: bool,
    pub normalized_volume: u64,
    pub region: DegreeBox,
    pub exceptional: Vec<DegreeVector>,
    pub slabs: Vec<SlabComponent>,
    /// Absent for non-simplices.
    pub rank_jumping: Option<Vec<RankJumpCertificate>>,
    pub sector_count: usize,
    pub refinement: RefinementSummary,
    pub far_degrees: FarDegreeSummary,
    pub theorem_verdict: String,
    pub theorem: Option<TheoremReport>,
    pub spot_check: Option<SpotCheck>,
    pub timing: Timing,
}

impl AnalysisReport {
    /// True unless some verification inside the report failed.
    pub fn verified(&self) -> bool {
        self.theorem_verdict != "fail"
            && self.refinement.holds
            && self.far_degrees.verdict != "fail"
            && self.spot_check.as_ref().map_or(true, |s| s.disagreements.is_empty())
    }

    /// Pretty JSON with the timing block reset, the form used for caching
    /// and comparisons.
    pub fn canonical_json(&self) -> Result<String> {
        let mut r = self.clone();
        r.timing = Timing::default();
        Ok(serde_json::to_string_pretty(&r)?)
    }

    pub fn table(&self) -> String {
        let mut s = String::new();
        let line = |s: &mut String, k: &str, v: String| s.push_str(&format!("{k:<20} {v}\n"));
        line(&mut s, "matrix", format!("{:?}", self.rows));
        if let Some(n) = &self.normalization {
            line(&mut s, "normalized", format!("index {} from {:?}", n.index, n.original_rows));
        }
        line(&mut s, "faces", format!("{} {:?}", self.faces.count, self.faces.by_dimension));
        line(&mut s, "simplex", self.simplex.to_string());
        line(&mut s, "volume", self.normalized_volume.to_string());
        line(&mut s, "box", format!("{} margin {}", self.region, self.region.margin()));
        line(&mut s, "exceptional", format!("{:?}", self.exceptional));
        for c in &self.slabs {
            line(&mut s, "slab", format!("{:?} + Q{:?} ({} degrees)", c.base, c.face_labels, c.degrees.len()));
        }
        match &self.rank_jumping {
            Some(r) => line(
                &mut s,
                "rank jumping",
                format!("{:?}", r.iter().map(|c| &c.degree).collect::<Vec<_>>()),
            ),
            None => line(&mut s, "rank jumping", "n/a".into()),
        }
        line(&mut s, "sectors", self.sector_count.to_string());
        line(
            &mut s,
            "refinement",
            format!(
                "{} ({} strata, {} sectors; properness {})",
                if self.refinement.holds { "holds" } else { "violated" },
                self.refinement.strata,
                self.refinement.sectors,
                self.refinement.properness
            ),
        );
        line(&mut s, "far degrees", self.far_degrees.verdict.clone());
        line(&mut s, "theorem", self.theorem_verdict.clone());
        if let Some(c) = &self.spot_check {
            line(
                &mut s,
                "spot check",
                format!("seed {} samples {} disagreements {}", c.seed, c.samples, c.disagreements.len()),
            );
        }
        line(&mut s, "time", format!("{:.1} ms", self.timing.total_ms));
        s
    }
}

fn spot_check(analyzer: &Analyzer, region: &DegreeBox, seed: u64, samples: usize) -> Result<SpotCheck> {
    let mut rng = fixtures::rng(seed);
    let lattice = analyzer.cone().faces();
    let mut disagreements = Vec::new();
    for _ in 0..samples {
        let face = rng.gen_range(0..lattice.len());
        let beta: Vec<i64> = region
            .lower()
            .iter()
            .zip(region.upper())
            .map(|(&l, &u)| rng.gen_range(l..=u))
            .collect();
        let fast = analyzer.semigroup().member_mod_face(face, &beta)?;
        if fast != naive_member_mod_face(analyzer.cone(), face, &beta)? {
            disagreements.push((lattice.face(face).labels(), beta));
        }
    }
    Ok(SpotCheck {
        seed,
        samples,
        disagreements,
    })
}

pub fn analyze(input_rows: &[Vec<i64>], region: &DegreeBox, seed: Option<u64>) -> Result<AnalysisReport> {
    let started = std::time::Instant::now();
    let analyzer = Analyzer::from_rows(input_rows)?;
    let cone = analyzer.cone();
    let lattice = cone.faces();
    let mut by_dimension = vec![0; cone.d() + 1];
    for f in lattice.faces() {
        by_dimension[f.dim()] += 1;
    }
    let faces = FaceSummary {
        count: lattice.len(),
        by_dimension,
        faces: lattice.faces().iter().map(|f| f.labels()).collect(),
    };

    let exceptional = analyzer.scan_exceptional(region)?;
    let slabs = analyzer.infer_slabs(region, &exceptional)?;
    let inner = region.inner()?;
    let simplex = cone.is_simplex();
    let (rank_jumping, theorem, theorem_verdict) = if simplex {
        let t = analyzer.compare_with_slabs(region, &slabs)?;
        let certs = analyzer.scan_rank_jumping(&inner)?;
        let verdict = if t.pass { "pass" } else { "fail" }.to_string();
        (Some(certs), Some(t), verdict)
    } else {
        (None, None, SKIPPED_NOT_SIMPLEX.to_string())
    };
    let far = analyzer.check_far_degrees(&inner, 2)?;
    let report = AnalysisReport {
        schema: SCHEMA,
        input_rows: input_rows.to_vec(),
        rows: cone.matrix().rows(),
        normalization: cone.matrix().normalization().cloned(),
        faces,
        simplex,
        normalized_volume: cone.normalized_volume()?,
        region: region.clone(),
        exceptional,
        slabs,
        rank_jumping,
        sector_count: analyzer.sector_partition(region)?.len(),
        refinement: analyzer.saito_refinement_check(region)?.into(),
        far_degrees: FarDegreeSummary {
            verdict: far.verdict().into(),
            instances: far.instances.len(),
            trivial: far.trivial,
            failures: far.instances.iter().filter(|i| !i.failures.is_empty()).count(),
        },
        theorem_verdict,
        theorem,
        spot_check: seed.map(|s| spot_check(&analyzer, region, s, 64)).transpose()?,
        timing: Timing {
            total_ms: started.elapsed().as_secs_f64() * 1e3,
            cached: false,
        },
    };
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ETableEntry {
    pub face: Vec<usize>,
    pub classes: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeReport {
    pub schema: u32,
    pub degree: DegreeVector,
    pub nabla: Vec<Vec<usize>>,
    pub cohomology: Vec<usize>,
    pub exceptional: bool,
    pub e_table: Vec<ETableEntry>,
    /// Absent for non-simplices.
    pub rank_jumping: Option<bool>,
    pub certificate: Option<RankJumpCertificate>,
}

impl DegreeReport {
    pub fn table(&self) -> String {
        let mut s = format!(
            "degree      {:?}\nnabla       {:?}\ncohomology  {:?}\nexceptional {}\n",
            self.degree, self.nabla, self.cohomology, self.exceptional
        );
        let labels: Vec<String> = self.e_table.iter().map(|e| format!("E{:?}", e.face)).collect();
        let width = labels.iter().map(|l| l.chars().count()).max().unwrap_or(0).max(11);
        for (label, e) in labels.iter().zip(&self.e_table) {
            s.push_str(&format!("{label:<width$} {:?}\n", e.classes));
        }
        match (self.rank_jumping, &self.certificate) {
            (None, _) => s.push_str(&format!("rank jump   {SKIPPED_NOT_SIMPLEX}\n")),
            (Some(true), Some(c)) => s.push_str(&format!(
                "rank jump   true: sigma {:?} tau {:?} lambda {:?}\n",
                c.sigma, c.tau, c.lambda
            )),
            (Some(_), _) => s.push_str("rank jump   false\n"),
        }
        s
    }
}

pub fn degree(rows: &[Vec<i64>], beta: &[i64]) -> Result<DegreeReport> {
    let analyzer = Analyzer::from_rows(rows)?;
    if beta.len() != analyzer.d() {
        return Err(Error::DimensionMismatch {
            expected: analyzer.d(),
            found: beta.len(),
        });
    }
    let lattice = analyzer.cone().faces();
    let h = analyzer.cohomology(beta)?;
    let (rank_jumping, certificate) = if analyzer.cone().is_simplex() {
        let c = analyzer.is_rank_jumping(beta)?;
        (Some(c.is_some()), c)
    } else {
        (None, None)
    };
    Ok(DegreeReport {
        schema: SCHEMA,
        degree: beta.to_vec(),
        nabla: analyzer.nabla(beta)?.labels(lattice),
        cohomology: h.dims,
        exceptional: h.exceptional,
        e_table: {
            let mut rows: Vec<ETableEntry> = e_table(analyzer.semigroup(), beta)?
                .into_iter()
                .map(|(face, classes)| ETableEntry { face, classes })
                .collect();
            rows.sort_by(|a, b| (a.face.len(), &a.face).cmp(&(b.face.len(), &b.face)));
            rows
        },
        rank_jumping,
        certificate,
    })
}
