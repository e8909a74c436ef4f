//! Structural checks shared by the acceptance run and the property suite.
//! Each returns `Err(description)` on the first violation.
#![allow(dead_code)]

use rand::Rng;
use rankjump::analysis::{translation_bound, Analyzer};
use rankjump::cohomology::{cohomology_dims, complex_dims_from_relative, relative_cohomology_crosscheck, Cocomplex};
use rankjump::cone::{FaceId, FaceLattice};
use rankjump::lattice::small_vec;
use rankjump::semigroup::Semigroup;

pub type Check = Result<(), String>;

pub fn random_degree<R: Rng>(rng: &mut R, d: usize, bound: i64) -> Vec<i64> {
    (0..d).map(|_| rng.gen_range(-bound..=bound)).collect()
}

/// `Σ_μ ε(σ, μ) ε(μ, τ) = 0` whenever `dim σ = dim τ + 2`.
pub fn incidence_squares_to_zero(l: &FaceLattice) -> Check {
    for s in l.ids() {
        for t in l.ids() {
            if l.face(s).dim() != l.face(t).dim() + 2 || !l.leq(t, s) {
                continue;
            }
            let total: i64 = l
                .lower_covers(s)
                .iter()
                .filter(|&&m| l.leq(t, m))
                .map(|&m| l.sign(s, m).unwrap() as i64 * l.sign(m, t).unwrap() as i64)
                .sum();
            if total != 0 {
                return Err(format!("d² ≠ 0 between {:?} and {:?}", l.face(s).labels(), l.face(t).labels()));
            }
        }
    }
    Ok(())
}

/// Functionals vanish exactly on their faces and are positive elsewhere.
pub fn functionals_certify_faces(l: &FaceLattice) -> Check {
    for f in l.faces() {
        if l.face(l.full()).columns() == f.columns() {
            continue;
        }
        for (i, c) in l.matrix_columns().iter().enumerate() {
            let v = f.evaluate(c);
            if (v == 0) != f.contains_column(i) || v < 0 {
                return Err(format!("functional of {:?} gives {v} on column {}", f.labels(), i + 1));
            }
        }
    }
    Ok(())
}

pub fn nabla_upward_and_euler(sg: &Semigroup, beta: &[i64]) -> Check {
    let l = sg.cone().faces();
    let nabla = rankjump::cohomology::nabla(sg, beta).map_err(|e| e.to_string())?;
    if !nabla.is_upward_closed(l) {
        return Err(format!("∇({beta:?}) not upward closed"));
    }
    let r = cohomology_dims(sg, beta).map_err(|e| e.to_string())?;
    let chi_h: i64 = r.dims.iter().enumerate().map(|(j, &h)| if j % 2 == 0 { h as i64 } else { -(h as i64) }).sum();
    let chi_c: i64 = nabla
        .members()
        .map(|f| if l.face(f).dim() % 2 == 0 { 1 } else { -1 })
        .sum();
    if chi_h != chi_c {
        return Err(format!("Euler characteristic at {beta:?}: {chi_h} vs {chi_c}"));
    }
    if r.exceptional != r.dims[..l.d()].iter().any(|&h| h > 0) {
        return Err("exceptional flag inconsistent".into());
    }
    Ok(())
}

/// `E_τ(β + α) = E_τ(β) + α` for `α ∈ Z^d ∩ Qτ`.
pub fn e_tau_translation<R: Rng>(sg: &Semigroup, rng: &mut R, tau: FaceId, beta: &[i64]) -> Check {
    let face = sg.cone().faces().face(tau);
    let mut alpha = vec![0i64; sg.d()];
    for b in face.saturation().basis() {
        let b = small_vec(b).map_err(|e| e.to_string())?;
        let k = rng.gen_range(-2..=2);
        for (x, y) in alpha.iter_mut().zip(b) {
            *x += k * y;
        }
    }
    let moved: Vec<i64> = beta.iter().zip(&alpha).map(|(b, a)| b + a).collect();
    let before = sg.e_tau(tau, beta).map_err(|e| e.to_string())?;
    let after = sg.e_tau(tau, &moved).map_err(|e| e.to_string())?;
    let mut shifted = Vec::new();
    for lambda in &before.classes {
        let l: Vec<i64> = lambda.iter().zip(&alpha).map(|(x, a)| x + a).collect();
        shifted.push(sg.canonical_class(tau, &l).map_err(|e| e.to_string())?.ok_or("class outside Cτ")?);
    }
    shifted.sort();
    if shifted != after.classes {
        return Err(format!(
            "E_{:?}: {beta:?} + {alpha:?} gives {:?}, expected {shifted:?}",
            face.labels(),
            after.classes
        ));
    }
    Ok(())
}

/// Beyond the bound, only faces containing `ρ` remain in `∇(β − mα)`.
pub fn translation_bound_holds(analyzer: &Analyzer, rho: FaceId, beta: &[i64]) -> Check {
    let l = analyzer.cone().faces();
    let m0 = translation_bound(analyzer, rho, beta);
    let alpha = analyzer.cone().interior_point(rho);
    for m in [m0, m0 + 1, m0 + 3] {
        let far: Vec<i64> = beta.iter().zip(&alpha).map(|(b, a)| b - m * a).collect();
        let nabla = analyzer.nabla(&far).map_err(|e| e.to_string())?;
        let stray = nabla.members().find(|&mu| !l.leq(rho, mu));
        if let Some(mu) = stray {
            return Err(format!(
                "{:?} ∈ ∇({far:?}) does not contain {:?} (m = {m})",
                l.face(mu).labels(),
                l.face(rho).labels()
            ));
        }
    }
    Ok(())
}

/// `τ ⊆ σ` and `β ∈ NA + Zτ` imply `β ∈ NA + Zσ`.
pub fn membership_monotone(sg: &Semigroup, beta: &[i64]) -> Check {
    let l = sg.cone().faces();
    for (lower, upper) in l.covers() {
        if sg.member_mod_face(lower, beta).unwrap() && !sg.member_mod_face(upper, beta).unwrap() {
            return Err(format!(
                "{beta:?} in NA + Z{:?} but not NA + Z{:?}",
                l.face(lower).labels(),
                l.face(upper).labels()
            ));
        }
    }
    Ok(())
}

/// The face complex and the order-complex computation agree under the
/// fixed shift on `∇`.
pub fn crosscheck(l: &FaceLattice, nabla: &Cocomplex) -> Check {
    let rel = relative_cohomology_crosscheck(l, nabla).map_err(|e| e.to_string())?;
    let expected = complex_dims_from_relative(l, nabla, &rel);
    let got = rankjump::cohomology::cocomplex_dims(l, nabla).map_err(|e| e.to_string())?;
    if expected != got {
        return Err(format!("∇ = {:?}: complex {got:?}, relative {rel:?}", nabla.labels(l)));
    }
    Ok(())
}

/// The upward closure of a random set of faces.
pub fn random_cocomplex<R: Rng>(l: &FaceLattice, rng: &mut R) -> Cocomplex {
    let seeds: Vec<FaceId> = l.ids().filter(|_| rng.gen_bool(0.3)).collect();
    let members: Vec<FaceId> = l.ids().filter(|&f| seeds.iter().any(|&s| l.leq(s, f)) || f == l.full()).collect();
    Cocomplex::new(l, members).expect("upward closure")
}
