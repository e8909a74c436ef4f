//! Exact integer linear algebra: Smith normal form, integer solving,
//! quotients `Z^d / L` with torsion, and coset enumeration for finite-index
//! sublattices.

mod matrix;
mod smith;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use matrix::{big_vec, determinant, normalize_sign, rank, rank_of_rows, small_vec, to_i64, IntMatrix};
pub use smith::{smith_normal_form, SmithForm};

/// A sublattice of `Z^d` given by a basis of linearly independent vectors.
/// An empty basis is the zero lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    ambient: usize,
    basis: Vec<Vec<BigInt>>,
}

impl Lattice {
    pub fn new(ambient: usize, basis: Vec<Vec<BigInt>>) -> Result<Self> {
        if let Some(v) = basis.iter().find(|v| v.len() != ambient) {
            return Err(Error::DimensionMismatch {
                expected: ambient,
                found: v.len(),
            });
        }
        let m = IntMatrix::from_columns(ambient, &basis)?;
        if rank(&m) != basis.len() {
            return Err(Error::NotIndependent);
        }
        Ok(Self { ambient, basis })
    }

    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| {
                (0..ambient)
                    .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                    .collect()
            })
            .collect();
        Self { ambient, basis }
    }

    /// The lattice generated by arbitrary (possibly dependent) vectors.
    pub fn from_generators(ambient: usize, generators: &[Vec<BigInt>]) -> Result<Self> {
        let g = IntMatrix::from_columns(ambient, generators)?;
        let f = smith_normal_form(&g);
        // G·V = U⁻¹·S, so the lattice is spanned by s_i times column i of U⁻¹.
        let basis = f
            .invariant_factors()
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let mut v: Vec<BigInt> = f.u_inv.column(i).into_iter().map(|x| x * s).collect();
                normalize_sign(&mut v);
                v
            })
            .collect();
        Ok(Self { ambient, basis })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    pub fn basis_matrix(&self) -> IntMatrix {
        IntMatrix::from_columns(self.ambient, &self.basis).expect("basis vectors have ambient length")
    }

    /// Integer coordinates of `v` in this basis, if `v` lies in the lattice.
    pub fn coordinates(&self, v: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
        Ok(SolvePlan::new(self.basis_matrix())
            .particular(v)?)
    }

    pub fn contains(&self, v: &[BigInt]) -> Result<bool> {
        Ok(self.coordinates(v)?.is_some())
    }

    /// `Z^d ∩ Q·L`, computed as the kernel of the free part of the quotient map.
    pub fn saturation(&self) -> Lattice {
        let q = QuotientMap::new(self).expect("lattice basis is independent");
        solve_diophantine(&q.free_rows, &vec![BigInt::zero(); q.free_rows.rows()])
            .expect("zero right-hand side has matching length")
            .expect("homogeneous systems are solvable")
            .1
    }
}

/// Precomputed Smith form for repeatedly solving `M·x = b` over `Z`.
#[derive(Clone, Debug)]
pub struct SolvePlan {
    m: IntMatrix,
    form: SmithForm,
    rank: usize,
}

impl SolvePlan {
    pub fn new(m: IntMatrix) -> Self {
        let form = smith_normal_form(&m);
        let rank = form.rank();
        Self { m, form, rank }
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.m
    }

    /// One integer solution, or `None` if the system has no integer solution.
    pub fn particular(&self, b: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
        if b.len() != self.m.rows() {
            return Err(Error::DimensionMismatch {
                expected: self.m.rows(),
                found: b.len(),
            });
        }
        let c = self.form.u.mul_vec(b)?;
        let mut y = vec![BigInt::zero(); self.m.cols()];
        for (i, ci) in c.iter().enumerate() {
            if i < self.rank {
                let (q, r) = ci.div_rem(&self.form.s[(i, i)]);
                if !r.is_zero() {
                    return Ok(None);
                }
                y[i] = q;
            } else if !ci.is_zero() {
                return Ok(None);
            }
        }
        Ok(Some(self.form.v.mul_vec(&y)?))
    }

    /// Basis of the integer kernel `{x : M·x = 0}`.
    pub fn kernel(&self) -> Lattice {
        let basis = (self.rank..self.m.cols())
            .map(|j| {
                let mut v = self.form.v.column(j);
                normalize_sign(&mut v);
                v
            })
            .collect();
        Lattice {
            ambient: self.m.cols(),
            basis,
        }
    }
}

/// Solves `M·x = b` over the integers, returning a particular solution and
/// the integer kernel, or `None` when no integer solution exists.
pub fn solve_diophantine(m: &IntMatrix, b: &[BigInt]) -> Result<Option<(Vec<BigInt>, Lattice)>> {
    let plan = SolvePlan::new(m.clone());
    Ok(plan.particular(b)?.map(|x| (x, plan.kernel())))
}

/// Image of a vector under `Z^d → Z^r ⊕ ⊕ Z/t_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuotientImage {
    pub free: Vec<BigInt>,
    /// Residues in `[0, t_i)`.
    pub torsion: Vec<BigInt>,
}

impl QuotientImage {
    pub fn is_zero(&self) -> bool {
        self.free.iter().chain(&self.torsion).all(Zero::is_zero)
    }
}

/// The projection `Z^d → Z^d / L`, presented on Smith coordinates.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    source_dim: usize,
    sublattice: Lattice,
    free_rows: IntMatrix,
    torsion_rows: IntMatrix,
    torsion_orders: Vec<BigInt>,
}

impl QuotientMap {
    pub fn new(sublattice: &Lattice) -> Result<Self> {
        let d = sublattice.ambient();
        let k = sublattice.rank();
        let f = smith_normal_form(&sublattice.basis_matrix());
        if f.rank() != k {
            return Err(Error::NotIndependent);
        }
        let factors = f.invariant_factors();
        let free_idx: Vec<usize> = (k..d).collect();
        let tors_idx: Vec<usize> = (0..k).filter(|&i| !factors[i].is_one()).collect();
        let all_cols: Vec<usize> = (0..d).collect();
        Ok(Self {
            source_dim: d,
            sublattice: sublattice.clone(),
            free_rows: f.u.select(&free_idx, &all_cols),
            torsion_rows: f.u.select(&tors_idx, &all_cols),
            torsion_orders: tors_idx.iter().map(|&i| factors[i].clone()).collect(),
        })
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn sublattice(&self) -> &Lattice {
        &self.sublattice
    }

    pub fn free_rank(&self) -> usize {
        self.free_rows.rows()
    }

    pub fn torsion_orders(&self) -> &[BigInt] {
        &self.torsion_orders
    }

    /// Rows of the forward map onto the free part `Z^r`.
    pub fn free_part(&self) -> &IntMatrix {
        &self.free_rows
    }

    /// Rows of the forward map onto the torsion summands, before reduction.
    pub fn torsion_part(&self) -> &IntMatrix {
        &self.torsion_rows
    }

    pub fn apply(&self, v: &[BigInt]) -> Result<QuotientImage> {
        let free = self.free_rows.mul_vec(v)?;
        let torsion = self
            .torsion_rows
            .mul_vec(v)?
            .into_iter()
            .zip(&self.torsion_orders)
            .map(|(x, t)| x.mod_floor(t))
            .collect();
        Ok(QuotientImage { free, torsion })
    }
}

/// Builds the quotient map `Z^d → Z^d / L`.
pub fn quotient_map(d: usize, l: &Lattice) -> Result<QuotientMap> {
    if l.ambient() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: l.ambient(),
        });
    }
    QuotientMap::new(l)
}

/// Canonical coset arithmetic for a finite-index inclusion `L ⊆ S`.
#[derive(Clone, Debug)]
pub struct CosetSystem {
    ambient: usize,
    super_plan: SolvePlan,
    u: IntMatrix,
    u_inv: IntMatrix,
    divisors: Vec<BigInt>,
}

impl CosetSystem {
    pub fn new(sub: &Lattice, sup: &Lattice) -> Result<Self> {
        if sub.ambient() != sup.ambient() {
            return Err(Error::DimensionMismatch {
                expected: sup.ambient(),
                found: sub.ambient(),
            });
        }
        if sub.rank() != sup.rank() {
            return Err(Error::UnequalRank {
                sub: sub.rank(),
                sup: sup.rank(),
            });
        }
        let super_plan = SolvePlan::new(sup.basis_matrix());
        let k = sup.rank();
        let mut coords = Vec::with_capacity(k);
        for v in sub.basis() {
            coords.push(super_plan.particular(v)?.ok_or(Error::NotSublattice)?);
        }
        let c = IntMatrix::from_columns(k, &coords)?;
        let f = smith_normal_form(&c);
        Ok(Self {
            ambient: sup.ambient(),
            super_plan,
            divisors: f.s.diagonal(),
            u: f.u,
            u_inv: f.u_inv,
        })
    }

    /// `[S : L]`, the product of the elementary divisors of `L` in `S`.
    pub fn index(&self) -> BigInt {
        self.divisors.iter().product()
    }

    pub fn elementary_divisors(&self) -> &[BigInt] {
        &self.divisors
    }

    fn from_smith_coords(&self, y: &[BigInt]) -> Vec<BigInt> {
        let c = self.u_inv.mul_vec(y).expect("coordinate length");
        self.super_plan.matrix().mul_vec(&c).expect("coordinate length")
    }

    /// The canonical representative of `v + L`, or `None` if `v ∉ S`.
    pub fn canonical(&self, v: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
        let Some(c) = self.super_plan.particular(v)? else {
            return Ok(None);
        };
        let y: Vec<BigInt> = self
            .u
            .mul_vec(&c)?
            .into_iter()
            .zip(&self.divisors)
            .map(|(x, t)| x.mod_floor(t))
            .collect();
        Ok(Some(self.from_smith_coords(&y)))
    }

    /// All canonical representatives, in lexicographic order of their Smith
    /// coordinates.
    pub fn representatives(&self) -> Vec<Vec<BigInt>> {
        let k = self.divisors.len();
        let mut out = Vec::new();
        let mut y = vec![BigInt::zero(); k];
        loop {
            out.push(self.from_smith_coords(&y));
            // odometer, last coordinate fastest
            let mut i = k;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                y[i] += 1;
                if y[i] < self.divisors[i] {
                    break;
                }
                y[i] = BigInt::zero();
            }
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }
}

/// A complete, pairwise incongruent list of representatives of `S / L`.
pub fn coset_representatives(l: &Lattice, s: &Lattice) -> Result<Vec<Vec<BigInt>>> {
    Ok(CosetSystem::new(l, s)?.representatives())
}

/// Exact test for `v ∈ Q·L` on an integer vector.
pub fn in_rational_span(l: &Lattice, v: &[BigInt]) -> Result<bool> {
    let q = QuotientMap::new(l)?;
    Ok(q.free_part().mul_vec(v)?.iter().all(Zero::is_zero))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lat(d: usize, basis: &[&[i64]]) -> Lattice {
        Lattice::new(d, basis.iter().map(|v| big_vec(v)).collect()).unwrap()
    }

    #[test]
    fn solve_unimodular() {
        let m = IntMatrix::from_rows(&[vec![1, 1], vec![0, 1]]).unwrap();
        let (x, ker) = solve_diophantine(&m, &big_vec(&[3, 1])).unwrap().unwrap();
        assert_eq!(x, big_vec(&[2, 1]));
        assert_eq!(ker.rank(), 0);
    }

    #[test]
    fn solve_parity_obstruction() {
        let m = IntMatrix::from_rows(&[vec![2]]).unwrap();
        assert!(solve_diophantine(&m, &big_vec(&[3])).unwrap().is_none());
    }

    #[test]
    fn solve_single_equation() {
        let m = IntMatrix::from_rows(&[vec![1, 1]]).unwrap();
        let (x, ker) = solve_diophantine(&m, &big_vec(&[2])).unwrap().unwrap();
        assert_eq!(x, big_vec(&[2, 0]));
        assert_eq!(ker.basis(), &[big_vec(&[1, -1])]);
    }

    #[test]
    fn solve_dimension_mismatch() {
        let m = IntMatrix::from_rows(&[vec![1, 1]]).unwrap();
        assert!(matches!(
            solve_diophantine(&m, &big_vec(&[1, 2])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn quotient_saturated() {
        let q = quotient_map(2, &lat(2, &[&[1, 0]])).unwrap();
        assert_eq!(q.free_rank(), 1);
        assert!(q.torsion_orders().is_empty());
        assert!(q.apply(&big_vec(&[5, 0])).unwrap().is_zero());
        assert!(!q.apply(&big_vec(&[0, 1])).unwrap().is_zero());
    }

    #[test]
    fn quotient_with_torsion() {
        let q = quotient_map(2, &lat(2, &[&[2, 0]])).unwrap();
        assert_eq!(q.free_rank(), 1);
        assert_eq!(q.torsion_orders(), &[BigInt::from(2)]);
        assert!(q.apply(&big_vec(&[4, 0])).unwrap().is_zero());
        assert!(!q.apply(&big_vec(&[1, 0])).unwrap().is_zero());
    }

    #[test]
    fn quotient_by_zero_lattice() {
        let q = quotient_map(2, &Lattice::zero(2)).unwrap();
        assert_eq!(q.free_rank(), 2);
        let img = q.apply(&big_vec(&[3, -1])).unwrap();
        assert_eq!(img.free.len(), 2);
        assert!(!img.is_zero());
        assert!(quotient_map(3, &Lattice::zero(2)).is_err());
    }

    #[test]
    fn rejects_dependent_basis() {
        assert!(matches!(
            Lattice::new(2, vec![big_vec(&[1, 2]), big_vec(&[2, 4])]),
            Err(Error::NotIndependent)
        ));
    }

    #[test]
    fn cosets_index_one_and_two() {
        let reps = coset_representatives(&lat(2, &[&[1, 0]]), &lat(2, &[&[1, 0]])).unwrap();
        assert_eq!(reps, vec![big_vec(&[0, 0])]);
        let reps = coset_representatives(&lat(2, &[&[2, 0]]), &lat(2, &[&[1, 0]])).unwrap();
        assert_eq!(reps, vec![big_vec(&[0, 0]), big_vec(&[1, 0])]);
    }

    #[test]
    fn cosets_of_2z_squared() {
        let l = lat(2, &[&[2, 0], &[0, 2]]);
        let reps = coset_representatives(&l, &Lattice::full(2)).unwrap();
        assert_eq!(reps.len(), 4);
        for (i, a) in reps.iter().enumerate() {
            for b in &reps[i + 1..] {
                let diff: Vec<BigInt> = a.iter().zip(b).map(|(x, y)| x - y).collect();
                assert!(!l.contains(&diff).unwrap());
            }
        }
    }

    #[test]
    fn coset_errors() {
        assert!(matches!(
            coset_representatives(&lat(2, &[&[1, 0]]), &lat(2, &[&[0, 1]])),
            Err(Error::NotSublattice)
        ));
        assert!(matches!(
            coset_representatives(&lat(2, &[&[1, 0]]), &Lattice::full(2)),
            Err(Error::UnequalRank { .. })
        ));
    }

    #[test]
    fn saturation_of_non_primitive_ray() {
        let s = lat(2, &[&[0, 2]]).saturation();
        assert_eq!(s.rank(), 1);
        assert!(s.contains(&big_vec(&[0, 1])).unwrap());
        assert_eq!(Lattice::zero(3).saturation().rank(), 0);
        assert_eq!(Lattice::full(2).saturation().rank(), 2);
    }

    #[test]
    fn generators_to_basis() {
        let l = Lattice::from_generators(2, &[big_vec(&[2, 0]), big_vec(&[0, 2]), big_vec(&[2, 2])]).unwrap();
        assert_eq!(l.rank(), 2);
        assert!(l.contains(&big_vec(&[2, 0])).unwrap());
        assert!(!l.contains(&big_vec(&[1, 1])).unwrap());
        let c = CosetSystem::new(&l, &Lattice::full(2)).unwrap();
        assert_eq!(c.index(), BigInt::from(4));
    }
}
