//! Membership in `NA` and its localizations `NA + Zτ`, and the finite
//! invariants `E_τ(β)`.
//!
//! `member_mod_face` passes to the quotient `Z^d / Zτ`, where the images of
//! the columns off `τ` generate the target semigroup. The supporting
//! functional `φ_τ` descends to the quotient and is positive on every
//! generator, so any representation `q(β) = Σ k_i q(a_i)` satisfies
//! `Σ k_i φ_τ(a_i) = φ_τ(β)` and the search is finite.

use std::collections::{BTreeMap, HashSet};

use dashmap::DashMap;
use serde::{Deserialize, Serialize};

use crate::cone::{Cone, FaceId};
use crate::error::{Error, Result};
use crate::lattice::{big_vec, small_vec, to_i64, CosetSystem, QuotientMap, SolvePlan};

/// An integer degree `β ∈ Z^d`.
pub type DegreeVector = Vec<i64>;

/// Certificate for `β ∈ NA + Zτ`: `Σ k_i a_i + Σ_{j∈τ} c_j a_j = β`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipWitness {
    /// `k_1..k_n`, all nonnegative.
    pub multiplicities: Vec<u64>,
    /// `(j, c_j)` for columns `j` of the face, zero-based.
    pub shifts: Vec<(usize, i64)>,
}

impl MembershipWitness {
    pub fn evaluate(&self, cone: &Cone) -> Vec<i64> {
        let a = cone.matrix();
        let mut v = vec![0i64; a.d()];
        for (i, &k) in self.multiplicities.iter().enumerate() {
            for (x, y) in v.iter_mut().zip(a.column(i)) {
                *x += k as i64 * y;
            }
        }
        for &(j, c) in &self.shifts {
            for (x, y) in v.iter_mut().zip(a.column(j)) {
                *x += c * y;
            }
        }
        v
    }
}

/// `E_τ(β)` for integer `β`: classes in `(Z^d ∩ Cτ)/Zτ`, each carried by its
/// canonical representative, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EtauSet {
    pub face: FaceId,
    pub classes: Vec<Vec<i64>>,
}

impl EtauSet {
    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn contains_zero(&self) -> bool {
        self.classes.iter().any(|c| c.iter().all(|&x| x == 0))
    }
}

#[derive(Clone, Debug)]
struct QuotientImage {
    free: Vec<i64>,
    torsion: Vec<i64>,
}

#[derive(Debug)]
struct FaceData {
    free_rows: Vec<Vec<i64>>,
    torsion_rows: Vec<(Vec<i64>, i64)>,
    functional: Vec<i64>,
    /// Columns off the face, with their images and functional values.
    generators: Vec<(usize, QuotientImage, i64)>,
    cosets: CosetSystem,
    shift_plan: SolvePlan,
    columns: Vec<usize>,
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl FaceData {
    fn new(cone: &Cone, id: FaceId) -> Result<Self> {
        let face = cone.faces().face(id);
        let q = QuotientMap::new(face.lattice())?;
        let free_rows = q.free_part().to_i64_rows()?;
        let torsion_rows = q
            .torsion_part()
            .to_i64_rows()?
            .into_iter()
            .zip(q.torsion_orders().iter().map(to_i64))
            .map(|(r, t)| t.map(|t| (r, t)))
            .collect::<Result<Vec<_>>>()?;
        let mut data = Self {
            free_rows,
            torsion_rows,
            functional: face.functional().to_vec(),
            generators: Vec::new(),
            cosets: CosetSystem::new(face.lattice(), face.saturation())?,
            shift_plan: SolvePlan::new(crate::lattice::IntMatrix::from_columns(
                cone.d(),
                &cone.matrix().big_columns(face.columns()),
            )?),
            columns: face.columns().to_vec(),
        };
        let a = cone.matrix();
        let mut generators: Vec<(usize, QuotientImage, i64)> = (0..a.n())
            .filter(|&i| !face.contains_column(i))
            .map(|i| (i, data.image(a.column(i)), dot(&data.functional, a.column(i))))
            .collect();
        // heavy generators first keeps the branching small
        generators.sort_by(|x, y| y.2.cmp(&x.2).then(x.0.cmp(&y.0)));
        data.generators = generators;
        Ok(data)
    }

    fn image(&self, v: &[i64]) -> QuotientImage {
        QuotientImage {
            free: self.free_rows.iter().map(|r| dot(r, v)).collect(),
            torsion: self
                .torsion_rows
                .iter()
                .map(|(r, t)| dot(r, v).rem_euclid(*t))
                .collect(),
        }
    }

    /// Multiplicities for the generators, in `self.generators` order.
    fn search(&self, beta: &[i64]) -> Option<Vec<u64>> {
        let budget = dot(&self.functional, beta);
        if budget < 0 {
            return None;
        }
        let target = self.image(beta);
        let mut ks = vec![0u64; self.generators.len()];
        let mut dead = HashSet::new();
        self.descend(0, target, budget, &mut ks, &mut dead).then_some(ks)
    }

    fn descend(
        &self,
        i: usize,
        rest: QuotientImage,
        budget: i64,
        ks: &mut [u64],
        dead: &mut HashSet<(usize, Vec<i64>, Vec<i64>)>,
    ) -> bool {
        if budget == 0 {
            return rest.free.iter().chain(&rest.torsion).all(|&x| x == 0);
        }
        if i == self.generators.len() {
            return false;
        }
        let key = (i, rest.free.clone(), rest.torsion.clone());
        if dead.contains(&key) {
            return false;
        }
        let (_, img, w) = &self.generators[i];
        let max_k = budget / w;
        let last = i + 1 == self.generators.len();
        let ks_range: Box<dyn Iterator<Item = i64>> = if last {
            if budget % w != 0 {
                dead.insert(key);
                return false;
            }
            Box::new(std::iter::once(max_k))
        } else {
            Box::new((0..=max_k).rev())
        };
        for k in ks_range {
            let next = QuotientImage {
                free: rest.free.iter().zip(&img.free).map(|(x, g)| x - k * g).collect(),
                torsion: rest
                    .torsion
                    .iter()
                    .zip(&img.torsion)
                    .zip(&self.torsion_rows)
                    .map(|((x, g), (_, t))| (x - k * g).rem_euclid(*t))
                    .collect(),
            };
            if self.descend(i + 1, next, budget - k * w, ks, dead) {
                ks[i] = k as u64;
                return true;
            }
        }
        dead.insert(key);
        false
    }
}

/// Membership oracles for one cone, with a concurrent memo keyed by
/// `(face, β)`.
#[derive(Debug)]
pub struct Semigroup {
    cone: Cone,
    faces: Vec<FaceData>,
    memo: DashMap<(FaceId, Vec<i64>), bool>,
}

impl Semigroup {
    pub fn new(cone: Cone) -> Result<Self> {
        let faces = cone
            .faces()
            .ids()
            .map(|id| FaceData::new(&cone, id))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            cone,
            faces,
            memo: DashMap::new(),
        })
    }

    pub fn cone(&self) -> &Cone {
        &self.cone
    }

    pub fn d(&self) -> usize {
        self.cone.d()
    }

    /// Resolves a zero-based column set to a face.
    pub fn face_id(&self, columns: &[usize]) -> Result<FaceId> {
        self.cone
            .faces()
            .find(columns)
            .ok_or_else(|| Error::FaceNotOfA(columns.iter().map(|i| i + 1).collect()))
    }

    fn check(&self, face: FaceId, beta: &[i64]) -> Result<()> {
        if face >= self.faces.len() {
            return Err(Error::FaceNotOfA(vec![face]));
        }
        if beta.len() != self.d() {
            return Err(Error::DimensionMismatch {
                expected: self.d(),
                found: beta.len(),
            });
        }
        Ok(())
    }

    /// `β ∈ NA`, deciding by exhaustive search over representations with
    /// `Σ k_i = β_1`.
    pub fn member_na(&self, beta: &[i64]) -> Result<Option<MembershipWitness>> {
        self.check(0, beta)?;
        let a = self.cone.matrix();
        if beta[0] < 0 {
            return Ok(None);
        }
        let facets: Vec<&[i64]> = self
            .cone
            .faces()
            .faces()
            .iter()
            .filter(|f| f.dim() + 1 == a.d())
            .map(|f| f.functional())
            .collect();
        let mut ks = vec![0u64; a.n()];
        let mut dead = HashSet::new();
        let found = na_search(a.columns(), &facets, 0, beta.to_vec(), &mut ks, &mut dead);
        Ok(found.then_some(MembershipWitness {
            multiplicities: ks,
            shifts: Vec::new(),
        }))
    }

    /// `β ∈ NA + Zτ`.
    pub fn member_mod_face(&self, face: FaceId, beta: &[i64]) -> Result<bool> {
        self.check(face, beta)?;
        let key = (face, beta.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return Ok(*v);
        }
        let v = self.faces[face].search(beta).is_some();
        self.memo.insert(key, v);
        Ok(v)
    }

    /// `β ∈ NA + Zτ` with an explicit witness.
    pub fn member_mod_face_witness(&self, face: FaceId, beta: &[i64]) -> Result<Option<MembershipWitness>> {
        self.check(face, beta)?;
        let data = &self.faces[face];
        let Some(ks) = data.search(beta) else {
            return Ok(None);
        };
        let a = self.cone.matrix();
        let mut multiplicities = vec![0u64; a.n()];
        let mut rest = beta.to_vec();
        for ((col, _, _), k) in data.generators.iter().zip(&ks) {
            multiplicities[*col] = *k;
            for (x, y) in rest.iter_mut().zip(a.column(*col)) {
                *x -= *k as i64 * y;
            }
        }
        let coeffs = data
            .shift_plan
            .particular(&big_vec(&rest))?
            .expect("residual lies in Zτ by construction");
        let shifts = data.columns.iter().copied().zip(small_vec(&coeffs)?).collect();
        Ok(Some(MembershipWitness {
            multiplicities,
            shifts,
        }))
    }

    /// The saturation representatives `(Z^d ∩ Cρ)/Zρ`.
    pub fn lambda_candidates(&self, face: FaceId) -> Result<Vec<Vec<i64>>> {
        self.check(face, &vec![0; self.d()])?;
        self.faces[face]
            .cosets
            .representatives()
            .iter()
            .map(|v| small_vec(v))
            .collect()
    }

    /// Canonical representative of `λ + Zτ` for `λ ∈ Z^d ∩ Cτ`.
    pub fn canonical_class(&self, face: FaceId, lambda: &[i64]) -> Result<Option<Vec<i64>>> {
        self.check(face, lambda)?;
        self.faces[face]
            .cosets
            .canonical(&big_vec(lambda))?
            .map(|v| small_vec(&v))
            .transpose()
    }

    /// `E_τ(β) = {λ ∈ (Z^d ∩ Cτ)/Zτ : β - λ ∈ NA + Zτ}`.
    pub fn e_tau(&self, face: FaceId, beta: &[i64]) -> Result<EtauSet> {
        self.check(face, beta)?;
        let mut classes = Vec::new();
        for lambda in self.lambda_candidates(face)? {
            let shifted: Vec<i64> = beta.iter().zip(&lambda).map(|(b, l)| b - l).collect();
            if self.member_mod_face(face, &shifted)? {
                classes.push(lambda);
            }
        }
        classes.sort();
        Ok(EtauSet { face, classes })
    }

    /// `(E_τ(β))_τ` over all faces, in face order.
    pub fn e_tuple(&self, beta: &[i64]) -> Result<Vec<EtauSet>> {
        self.cone.faces().ids().map(|f| self.e_tau(f, beta)).collect()
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }
}

fn na_search(
    columns: &[Vec<i64>],
    facets: &[&[i64]],
    i: usize,
    rest: Vec<i64>,
    ks: &mut [u64],
    dead: &mut HashSet<(usize, Vec<i64>)>,
) -> bool {
    let count = rest[0];
    if count == 0 {
        return rest.iter().all(|&x| x == 0);
    }
    if i == columns.len() || facets.iter().any(|f| dot(f, &rest) < 0) {
        return false;
    }
    let key = (i, rest);
    if dead.contains(&key) {
        return false;
    }
    let rest = &key.1;
    let range: Vec<i64> = if i + 1 == columns.len() {
        vec![count]
    } else {
        (0..=count).rev().collect()
    };
    for k in range {
        let next: Vec<i64> = rest.iter().zip(&columns[i]).map(|(x, c)| x - k * c).collect();
        if na_search(columns, facets, i + 1, next, ks, dead) {
            ks[i] = k as u64;
            return true;
        }
    }
    dead.insert(key);
    false
}

/// Per-face summary used in reports: `face labels → E_τ(β)`.
pub fn e_table(sg: &Semigroup, beta: &[i64]) -> Result<BTreeMap<Vec<usize>, Vec<Vec<i64>>>> {
    let mut out = BTreeMap::new();
    for e in sg.e_tuple(beta)? {
        out.insert(sg.cone().faces().face(e.face).labels(), e.classes);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn f3() -> Semigroup {
        Semigroup::new(Cone::from_rows(&fixtures::f3()).unwrap()).unwrap()
    }

    #[test]
    fn member_na_examples() {
        let sg = f3();
        assert!(sg.member_na(&[1, 2]).unwrap().is_none());
        let w = sg.member_na(&[2, 2]).unwrap().unwrap();
        assert_eq!(w.multiplicities, vec![0, 2, 0, 0]);
        assert_eq!(w.evaluate(sg.cone()), vec![2, 2]);
        let f1 = Semigroup::new(Cone::from_rows(&fixtures::f1()).unwrap()).unwrap();
        assert!(f1.member_na(&[0, -1]).unwrap().is_none());
        assert!(f1.member_na(&[0, 0]).unwrap().is_some());
    }

    #[test]
    fn member_mod_face_examples() {
        let sg = f3();
        let ray1 = sg.face_id(&[0]).unwrap();
        let ray4 = sg.face_id(&[3]).unwrap();
        let w = sg.member_mod_face_witness(ray1, &[1, 2]).unwrap().unwrap();
        assert_eq!(w.multiplicities, vec![0, 2, 0, 0]);
        assert_eq!(w.shifts, vec![(0, -1)]);
        let w = sg.member_mod_face_witness(ray4, &[1, 2]).unwrap().unwrap();
        assert_eq!(w.evaluate(sg.cone()), vec![1, 2]);
        assert_eq!(w.multiplicities, vec![0, 0, 2, 0]);
        assert_eq!(w.shifts, vec![(3, -1)]);
        assert!(!sg.member_mod_face(0, &[1, 2]).unwrap());
        let full = sg.cone().faces().full();
        assert!(sg.member_mod_face(full, &[-7, 3]).unwrap());
    }

    #[test]
    fn face_not_of_a() {
        let sg = f3();
        assert!(matches!(sg.face_id(&[1]), Err(Error::FaceNotOfA(_))));
        assert!(matches!(sg.member_mod_face(17, &[0, 0]), Err(Error::FaceNotOfA(_))));
    }

    #[test]
    fn e_tau_examples() {
        let sg = f3();
        assert!(sg.e_tau(0, &[1, 2]).unwrap().is_empty());
        assert_eq!(sg.e_tau(0, &[0, 0]).unwrap().classes, vec![vec![0, 0]]);
        let ray1 = sg.face_id(&[0]).unwrap();
        assert_eq!(sg.e_tau(ray1, &[1, 2]).unwrap().classes, vec![vec![0, 0]]);
    }

    #[test]
    fn lambda_candidates_examples() {
        let sg = f3();
        assert_eq!(sg.lambda_candidates(0).unwrap(), vec![vec![0, 0]]);
        let ray1 = sg.face_id(&[0]).unwrap();
        assert_eq!(sg.lambda_candidates(ray1).unwrap(), vec![vec![0, 0]]);
    }

    #[test]
    fn non_saturated_face_has_two_candidates() {
        // triangle (0,0),(2,0),(0,3) with interior point (1,1); the edge
        // through (0,0) and (2,0) misses its midpoint
        let cone = Cone::from_rows(&[vec![1, 1, 1, 1], vec![0, 2, 0, 1], vec![0, 0, 3, 1]]).unwrap();
        assert!(cone.matrix().normalization().is_none());
        let sg = Semigroup::new(cone).unwrap();
        let edge = sg.face_id(&[0, 1]).unwrap();
        let face = sg.cone().faces().face(edge);
        assert_eq!(face.dim(), 2);
        assert_eq!(sg.lambda_candidates(edge).unwrap().len(), 2);
    }

    #[test]
    fn oracle_is_shareable() {
        fn is_sync<T: Sync + Send>() {}
        is_sync::<Semigroup>();
    }

    #[test]
    fn memo_is_populated() {
        let sg = f3();
        sg.member_mod_face(1, &[3, 3]).unwrap();
        sg.member_mod_face(1, &[3, 3]).unwrap();
        assert_eq!(sg.memo_len(), 1);
    }
}
