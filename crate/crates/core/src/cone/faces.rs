use std::collections::{BTreeMap, BTreeSet, HashMap};

use itertools::Itertools;
use num_bigint::{BigInt, Sign};

use super::ColumnMatrix;
use crate::error::{Error, Result};
use crate::lattice::{big_vec, determinant, rank, IntMatrix, Lattice, SolvePlan};

pub type FaceId = usize;

/// A face of the cone `NA`, identified with the set of column indices lying
/// on it.
#[derive(Clone, Debug)]
pub struct Face {
    columns: Vec<usize>,
    dim: usize,
    functional: Vec<i64>,
    lattice: Lattice,
    saturation: Lattice,
    orientation: Vec<usize>,
}

impl Face {
    /// Zero-based column indices, ascending.
    pub fn columns(&self) -> &[usize] {
        &self.columns
    }

    /// One-based column labels, as used in reports.
    pub fn labels(&self) -> Vec<usize> {
        self.columns.iter().map(|i| i + 1).collect()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Integer functional vanishing exactly on this face's columns and
    /// positive on every other column. Zero for the full face.
    pub fn functional(&self) -> &[i64] {
        &self.functional
    }

    /// `Zτ`.
    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    /// `Z^d ∩ Qτ`.
    pub fn saturation(&self) -> &Lattice {
        &self.saturation
    }

    /// Column indices of the ordered basis used to orient this face.
    pub fn orientation_basis(&self) -> &[usize] {
        &self.orientation
    }

    pub fn contains_column(&self, i: usize) -> bool {
        self.columns.binary_search(&i).is_ok()
    }

    pub fn is_subset_of(&self, other: &Face) -> bool {
        self.columns.iter().all(|&i| other.contains_column(i))
    }

    pub fn evaluate(&self, v: &[i64]) -> i64 {
        self.functional.iter().zip(v).map(|(a, b)| a * b).sum()
    }
}

/// All faces of `NA` with covering relations and, once filled in, incidence
/// signs on covering pairs.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    d: usize,
    columns: Vec<Vec<i64>>,
    faces: Vec<Face>,
    index: HashMap<Vec<usize>, FaceId>,
    up: Vec<Vec<FaceId>>,
    down: Vec<Vec<FaceId>>,
    signs: Option<BTreeMap<(FaceId, FaceId), i8>>,
    simplex: bool,
}

impl FaceLattice {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Faces sorted by dimension, then by column set.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, id: FaceId) -> &Face {
        &self.faces[id]
    }

    pub fn ids(&self) -> std::ops::Range<FaceId> {
        0..self.faces.len()
    }

    pub fn apex(&self) -> FaceId {
        0
    }

    pub fn full(&self) -> FaceId {
        self.faces.len() - 1
    }

    /// Looks up a face by its zero-based column set.
    pub fn find(&self, columns: &[usize]) -> Option<FaceId> {
        let mut key = columns.to_vec();
        key.sort_unstable();
        key.dedup();
        self.index.get(&key).copied()
    }

    /// Faces covering `id` (one dimension higher).
    pub fn upper_covers(&self, id: FaceId) -> &[FaceId] {
        &self.up[id]
    }

    /// Faces covered by `id` (one dimension lower).
    pub fn lower_covers(&self, id: FaceId) -> &[FaceId] {
        &self.down[id]
    }

    /// All covering pairs `(lower, upper)`.
    pub fn covers(&self) -> Vec<(FaceId, FaceId)> {
        self.ids()
            .flat_map(|t| self.up[t].iter().map(move |&s| (t, s)))
            .collect()
    }

    /// `ε(upper, lower)` on a covering pair, once signs are computed.
    pub fn sign(&self, upper: FaceId, lower: FaceId) -> Option<i8> {
        self.signs.as_ref()?.get(&(upper, lower)).copied()
    }

    pub fn has_signs(&self) -> bool {
        self.signs.is_some()
    }

    pub fn is_simplex(&self) -> bool {
        self.simplex
    }

    pub fn leq(&self, a: FaceId, b: FaceId) -> bool {
        self.faces[a].is_subset_of(&self.faces[b])
    }

    /// `σ ∩ τ` as column sets; always a face.
    pub fn meet(&self, a: FaceId, b: FaceId) -> FaceId {
        let cols: Vec<usize> = self.faces[a]
            .columns
            .iter()
            .copied()
            .filter(|&i| self.faces[b].contains_column(i))
            .collect();
        self.index[&cols]
    }

    pub fn matrix_columns(&self) -> &[Vec<i64>] {
        &self.columns
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Facets as (column set, inward normal). For `d = 1` the apex is the only
/// facet.
fn facets(a: &ColumnMatrix) -> Result<BTreeMap<Vec<usize>, Vec<i64>>> {
    let d = a.d();
    let mut found: BTreeMap<Vec<usize>, Vec<i64>> = BTreeMap::new();
    for combo in (0..a.n()).combinations(d - 1) {
        if found.keys().any(|f| combo.iter().all(|i| f.binary_search(i).is_ok())) {
            continue;
        }
        let rows: Vec<Vec<i64>> = combo.iter().map(|&i| a.column(i).to_vec()).collect();
        let m = if rows.is_empty() {
            IntMatrix::zeros(0, d)
        } else {
            IntMatrix::from_rows(&rows)?
        };
        if rank(&m) != d - 1 {
            continue;
        }
        let kernel = SolvePlan::new(m).kernel();
        let mut normal = crate::lattice::small_vec(&kernel.basis()[0])?;
        let values: Vec<i64> = a.columns().iter().map(|c| dot(&normal, c)).collect();
        let (pos, neg) = values.iter().fold((false, false), |(p, n), &v| (p || v > 0, n || v < 0));
        if pos && neg {
            continue;
        }
        if neg {
            normal.iter_mut().for_each(|x| *x = -*x);
        }
        let zeros: Vec<usize> = (0..a.n()).filter(|&j| values[j] == 0).collect();
        found.entry(zeros).or_insert(normal);
    }
    Ok(found)
}

fn greedy_basis(a: &ColumnMatrix, columns: &[usize]) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    for &c in columns {
        let mut trial = chosen.clone();
        trial.push(c);
        let m = IntMatrix::from_columns(a.d(), &a.big_columns(&trial)).expect("column length d");
        if rank(&m) == trial.len() {
            chosen = trial;
        }
    }
    chosen
}

/// Enumerates every face of `NA` with a certified supporting functional.
///
/// Facets come from hyperplanes through `d - 1` independent columns with all
/// columns weakly on one side; every face of a pointed polyhedral cone is an
/// intersection of facets.
pub fn enumerate_faces(a: &ColumnMatrix) -> Result<FaceLattice> {
    let d = a.d();
    let n = a.n();
    let facet_map = facets(a)?;

    let mut sets: BTreeSet<Vec<usize>> = facet_map.keys().cloned().collect();
    loop {
        let current: Vec<Vec<usize>> = sets.iter().cloned().collect();
        let mut grew = false;
        for (x, y) in current.iter().tuple_combinations() {
            let meet: Vec<usize> = x.iter().copied().filter(|i| y.binary_search(i).is_ok()).collect();
            grew |= sets.insert(meet);
        }
        if !grew {
            break;
        }
    }
    sets.insert((0..n).collect());
    sets.insert(Vec::new());

    let mut faces = Vec::with_capacity(sets.len());
    for cols in sets {
        let mut functional = vec![0i64; d];
        for (fcols, normal) in &facet_map {
            if cols.iter().all(|i| fcols.binary_search(i).is_ok()) {
                for (x, y) in functional.iter_mut().zip(normal) {
                    *x += y;
                }
            }
        }
        for j in 0..n {
            let v = dot(&functional, a.column(j));
            let on_face = cols.binary_search(&j).is_ok();
            assert!(
                if on_face { v == 0 } else { v > 0 },
                "supporting functional certificate failed for {cols:?}"
            );
        }
        let lattice = Lattice::from_generators(d, &a.big_columns(&cols))?;
        let saturation = lattice.saturation();
        let orientation = greedy_basis(a, &cols);
        faces.push(Face {
            dim: lattice.rank(),
            columns: cols,
            functional,
            lattice,
            saturation,
            orientation,
        });
    }
    faces.sort_by(|x, y| (x.dim, &x.columns).cmp(&(y.dim, &y.columns)));

    let index: HashMap<Vec<usize>, FaceId> = faces
        .iter()
        .enumerate()
        .map(|(i, f)| (f.columns.clone(), i))
        .collect();
    let mut up = vec![Vec::new(); faces.len()];
    let mut down = vec![Vec::new(); faces.len()];
    for t in 0..faces.len() {
        for s in 0..faces.len() {
            if faces[s].dim == faces[t].dim + 1 && faces[t].is_subset_of(&faces[s]) {
                up[t].push(s);
                down[s].push(t);
            }
        }
    }

    let mut lattice = FaceLattice {
        d,
        columns: a.columns().to_vec(),
        faces,
        index,
        up,
        down,
        signs: None,
        simplex: false,
    };
    lattice.simplex = super::is_simplex(&lattice);
    Ok(lattice)
}

fn sign_of(x: &BigInt) -> i8 {
    match x.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

fn cover_sign(lattice: &FaceLattice, lower: FaceId, upper: FaceId) -> Result<i8> {
    let d = lattice.d;
    let (lo, hi) = (&lattice.faces[lower], &lattice.faces[upper]);
    let outward = hi
        .columns
        .iter()
        .copied()
        .find(|&c| !lo.contains_column(c))
        .expect("upper face has a column off the lower face");
    let col = |i: usize| big_vec(&lattice.columns[i]);
    let mut frame: Vec<Vec<BigInt>> = lo.orientation.iter().map(|&i| col(i)).collect();
    frame.push(col(outward));
    let reference: Vec<Vec<BigInt>> = hi.orientation.iter().map(|&i| col(i)).collect();
    let frame = IntMatrix::from_columns(d, &frame)?;
    let reference = IntMatrix::from_columns(d, &reference)?;

    // Compare orientations on a set of coordinate rows where the reference
    // basis restricts to an invertible matrix.
    let k = reference.cols();
    let all: Vec<usize> = (0..k).collect();
    let mut rows: Vec<usize> = Vec::new();
    for r in 0..d {
        rows.push(r);
        if rank(&reference.select(&rows, &all)) < rows.len() {
            rows.pop();
        }
        if rows.len() == k {
            break;
        }
    }
    let s = sign_of(&determinant(&frame.select(&rows, &all))?)
        * sign_of(&determinant(&reference.select(&rows, &all))?);
    debug_assert!(s != 0);
    Ok(s)
}

/// Orients every face by its ordered basis and fills `ε(σ, τ)` on covering
/// pairs: `+1` iff (basis of τ, a column of σ off τ) is positively oriented
/// relative to the basis of σ. Verifies `d² = 0` on every length-two chain.
pub fn incidence_signs(mut lattice: FaceLattice) -> Result<FaceLattice> {
    let mut signs = BTreeMap::new();
    for (lower, upper) in lattice.covers() {
        signs.insert((upper, lower), cover_sign(&lattice, lower, upper)?);
    }
    for t in lattice.ids() {
        for s in lattice.ids() {
            if lattice.faces[s].dim != lattice.faces[t].dim + 2 || !lattice.leq(t, s) {
                continue;
            }
            let total: i32 = lattice.up[t]
                .iter()
                .filter(|m| lattice.down[s].contains(m))
                .map(|&m| (signs[&(s, m)] * signs[&(m, t)]) as i32)
                .sum();
            if total != 0 {
                return Err(Error::OrientationInconsistent {
                    lower: lattice.faces[t].labels(),
                    upper: lattice.faces[s].labels(),
                });
            }
        }
    }
    lattice.signs = Some(signs);
    Ok(lattice)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn lattice(rows: &[Vec<i64>]) -> FaceLattice {
        incidence_signs(enumerate_faces(&ColumnMatrix::from_rows(rows).unwrap()).unwrap()).unwrap()
    }

    fn labels(l: &FaceLattice) -> Vec<Vec<usize>> {
        l.faces().iter().map(Face::labels).collect()
    }

    #[test]
    fn f3_faces() {
        let l = lattice(&fixtures::f3());
        assert_eq!(labels(&l), vec![vec![], vec![1], vec![4], vec![1, 2, 3, 4]]);
        assert_eq!(l.face(1).functional(), &[0, 1]);
        assert_eq!(l.face(2).functional(), &[4, -1]);
        assert_eq!(l.covers().len(), 4);
    }

    #[test]
    fn f1_faces() {
        let l = lattice(&fixtures::f1());
        assert_eq!(labels(&l), vec![vec![], vec![1], vec![2], vec![1, 2]]);
        assert_eq!(l.covers().len(), 4);
        assert!(l.is_simplex());
    }

    #[test]
    fn p4_faces() {
        let l = lattice(&fixtures::p4());
        assert_eq!(l.len(), 10);
        let by_dim: Vec<usize> = (0..=3).map(|k| l.faces().iter().filter(|f| f.dim() == k).count()).collect();
        assert_eq!(by_dim, vec![1, 4, 4, 1]);
        assert_eq!(l.covers().len(), 16);
        assert!(!l.is_simplex());
    }

    #[test]
    fn collinear_columns_share_a_ray() {
        let l = lattice(&[vec![1, 1, 1], vec![0, 0, 1]]);
        assert_eq!(labels(&l), vec![vec![], vec![1, 2], vec![3], vec![1, 2, 3]]);
        assert_eq!(l.face(1).orientation_basis(), &[0]);
    }

    #[test]
    fn signs_on_every_cover() {
        for rows in [fixtures::f1(), fixtures::f3(), fixtures::p4()] {
            let l = lattice(&rows);
            for (lo, hi) in l.covers() {
                assert!(matches!(l.sign(hi, lo), Some(1) | Some(-1)));
            }
        }
    }

    #[test]
    fn meet_is_intersection() {
        let l = lattice(&fixtures::p4());
        let facets: Vec<FaceId> = l.ids().filter(|&i| l.face(i).dim() == 2).collect();
        for &x in &facets {
            for &y in &facets {
                let m = l.meet(x, y);
                assert!(l.leq(m, x) && l.leq(m, y));
            }
        }
    }
}
