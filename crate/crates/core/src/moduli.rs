//! Full invariance, the quiver-level moduli test, orbit dimensions and the
//! finite-local-type check.

use std::fmt;
use std::sync::Arc;

use crate::algebra::{AlgElement, AlgebraPresentation, ProjectiveCover, Top};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{Matrix, Subspace, Vector};
use crate::oracle::{iso_classes, orbits, OracleScene};
use crate::quiver::Path;
use crate::representation::{hom_dim, multiplicity_mu, quotient_rep, submodule_rep, Representation};
use crate::skeleton::enumerate_skeletons;

/// How a verdict was reached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Exact linear algebra over the base field.
    Symbolic,
    /// Exhaustive check over `F_p`; evidence, not a proof over `K`.
    FiniteField(u32),
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Symbolic => f.write_str("symbolic"),
            Provenance::FiniteField(p) => write!(f, "finite-field evidence over F{p}"),
        }
    }
}

/// The endomorphism of `P` sending slot generator `e_s` to `images[s]`.
pub fn endomorphism_from_images(cover: &ProjectiveCover, images: &[Vector]) -> Matrix {
    let cols: Vec<Vector> = cover
        .basis()
        .iter()
        .map(|b| {
            let mut v = images[b.slot].clone();
            for &a in b.path.arrows() {
                v = cover.arrow_action(a).mul_vec(&v);
            }
            v
        })
        .collect();
    Matrix::from_columns(cover.field(), cover.dim(), &cols)
}

/// A basis endomorphism: `e_slot ↦ b_image`, other generators to 0.
#[derive(Clone, Debug)]
pub struct Endomorphism {
    pub slot: usize,
    pub image: usize,
    pub matrix: Matrix,
}

/// The basis of `End_Λ(P) ≅ ⊕_s e_{v(s)} P`, ordered by slot and then by
/// the image's position in the basis of `P`.
pub fn endomorphism_basis(cover: &ProjectiveCover) -> Vec<Endomorphism> {
    let n = cover.dim();
    let field = cover.field();
    let slots = cover.top().len();
    let mut out = Vec::new();
    for s in 0..slots {
        for k in (0..n).filter(|&k| cover.vertex_of(k) == cover.slot_vertex(s)) {
            let mut images = vec![crate::linalg::zero_vector(field, n); slots];
            images[s] = crate::linalg::unit_vector(field, n, k);
            out.push(Endomorphism {
                slot: s,
                image: k,
                matrix: endomorphism_from_images(cover, &images),
            });
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct InvarianceWitness {
    pub endomorphism: Endomorphism,
    /// A basis vector of `C` whose image leaves `C`.
    pub element: Vector,
    pub image: Vector,
}

impl InvarianceWitness {
    pub fn describe(&self, cover: &ProjectiveCover) -> String {
        let gen = cover.render(&crate::linalg::unit_vector(cover.field(), cover.dim(), self.endomorphism.image));
        format!(
            "f: e{} ↦ {gen} sends {} to {}, which is not in C",
            self.endomorphism.slot + 1,
            cover.render(&self.element),
            cover.render(&self.image)
        )
    }
}

/// Whether `C` is stable under all of `End_Λ(P)`; the witness is the first
/// basis endomorphism that moves `C`.
pub fn is_fully_invariant(cover: &ProjectiveCover, c: &Subspace) -> Result<(bool, Option<InvarianceWitness>)> {
    cover.top().check_squarefree(cover.algebra().quiver())?;
    check_point(cover, c)?;
    for f in endomorphism_basis(cover) {
        for b in c.basis() {
            let img = f.matrix.mul_vec(b);
            if !c.contains(&img) {
                return Ok((
                    false,
                    Some(InvarianceWitness {
                        endomorphism: f,
                        element: b.clone(),
                        image: img,
                    }),
                ));
            }
        }
    }
    Ok((true, None))
}

fn check_point(cover: &ProjectiveCover, c: &Subspace) -> Result<()> {
    if !cover.is_submodule(c) || !cover.radical_power(1).contains_subspace(c) {
        return Err(Error::NotSubmodule("C must be a submodule of JP".into()));
    }
    Ok(())
}

/// `dim End(P) − dim Hom(P, C) − dim End(P/C)`.
pub fn orbit_dim(cover: &ProjectiveCover, c: &Subspace) -> Result<usize> {
    check_point(cover, c)?;
    let p = Representation::of_projective(cover);
    let sub = submodule_rep(cover, c)?;
    let m = quotient_rep(cover, c)?;
    let total = hom_dim(&p, &p);
    let used = hom_dim(&p, &sub) + hom_dim(&m, &m);
    total
        .checked_sub(used)
        .ok_or_else(|| Error::InvalidInput("negative orbit dimension".into()))
}

/// `dim Hom(P, JM) − dim Hom(M, JM)` for `M = P/C`.
pub fn unipotent_orbit_dim(cover: &ProjectiveCover, c: &Subspace) -> Result<usize> {
    cover.top().check_squarefree(cover.algebra().quiver())?;
    check_point(cover, c)?;
    let quiver = cover.algebra().quiver();
    let p = Representation::of_projective(cover);
    let m = quotient_rep(cover, c)?;
    let jm = m.radical(quiver);
    let a = hom_dim(&p, &jm);
    let b = hom_dim(&m, &jm);
    a.checked_sub(b)
        .ok_or_else(|| Error::InvalidInput("negative unipotent orbit dimension".into()))
}

/// The numeric identity `μ_T(M) = t + dim Hom(M, JM)` for `M = P/C`.
pub fn thm_4_2_condition_5(cover: &ProjectiveCover, c: &Subspace) -> Result<bool> {
    cover.top().check_squarefree(cover.algebra().quiver())?;
    check_point(cover, c)?;
    let m = quotient_rep(cover, c)?;
    let jm = m.radical(cover.algebra().quiver());
    Ok(multiplicity_mu(&m, cover.top()) == cover.top().len() + hom_dim(&m, &jm))
}

/// A pair `(λ, ω)` with `λω ∉ Λλ`.
#[derive(Clone, Debug)]
pub struct CorollaryWitness {
    pub lambda: AlgElement,
    pub omega: Path,
}

#[derive(Clone, Debug)]
pub struct CorollaryReport {
    pub holds: bool,
    pub reason: String,
    pub provenance: Provenance,
    pub witness: Option<CorollaryWitness>,
}

/// Basis paths of positive length starting at `e` (the space `Je`).
fn je_paths(algebra: &AlgebraPresentation, e: usize) -> Vec<Path> {
    algebra.basis().iter().filter(|p| p.start() == e && p.len() > 0).cloned().collect()
}

/// The test "λω ∈ Λλ for all λ ∈ Je and ω in a basis of eJe". Tried first
/// via the sufficient conditions `eJe = 0` and `(Je)² = 0`, otherwise by
/// exhausting `Je(F_p)`.
pub fn check_corollary_4_5(algebra: &AlgebraPresentation, e: usize, p: u32, budget: u128) -> Result<CorollaryReport> {
    let quiver = algebra.quiver();
    if e >= quiver.num_vertices() {
        return Err(Error::InvalidInput(format!("no vertex {}", e + 1)));
    }
    let je = je_paths(algebra, e);
    let cycles: Vec<Path> = je.iter().filter(|q| q.end() == e).cloned().collect();
    if cycles.is_empty() {
        return Ok(CorollaryReport {
            holds: true,
            reason: "eJe = 0".into(),
            provenance: Provenance::Symbolic,
            witness: None,
        });
    }
    let field = algebra.field();
    let square_zero = je.iter().all(|u| {
        je.iter().all(|v| {
            algebra
                .mul(&AlgElement::path(field, u.clone()), &AlgElement::path(field, v.clone()))
                .is_zero()
        })
    });
    if square_zero {
        return Ok(CorollaryReport {
            holds: true,
            reason: "(Je)^2 = 0".into(),
            provenance: Provenance::Symbolic,
            witness: None,
        });
    }

    let fp = match field {
        Field::Prime(q) => {
            if q != p {
                return Err(Error::FieldMismatch(format!("algebra is over F{q}, check requested over F{p}")));
            }
            None
        }
        Field::Rational => Some(reduced_algebra(algebra, p)?),
    };
    let alg = fp.as_ref().unwrap_or(algebra);
    let f = alg.field();
    let q = p as u128;
    let needed = q.saturating_pow(je.len() as u32);
    if needed > budget {
        return Err(Error::OracleScale {
            what: "search over Je".into(),
            needed,
            budget,
        });
    }
    let nonzero: Vec<Scalar> = f.elements().expect("finite field").into_iter().skip(1).collect();
    let omegas: Vec<AlgElement> = cycles.iter().map(|c| AlgElement::path(f, c.clone())).collect();
    // by support size, then support positions, then values
    for size in 1..=je.len() {
        let mut support: Vec<usize> = (0..size).collect();
        loop {
            let mut digits = vec![0usize; size];
            loop {
                let lambda = AlgElement::from_terms(
                    f,
                    support.iter().zip(&digits).map(|(&i, &d)| (je[i].clone(), nonzero[d].clone())),
                );
                let ideal = left_ideal(alg, &lambda);
                for (omega, path) in omegas.iter().zip(&cycles) {
                    let prod = alg.mul(&lambda, omega);
                    if !ideal.contains(&alg.coordinates(&prod)) {
                        return Ok(CorollaryReport {
                            holds: false,
                            reason: format!(
                                "{}·{} is not in Λ{}",
                                lambda.display(quiver),
                                quiver.path_name(path),
                                lambda.display(quiver)
                            ),
                            provenance: Provenance::FiniteField(p),
                            witness: Some(CorollaryWitness {
                                lambda,
                                omega: path.clone(),
                            }),
                        });
                    }
                }
                if !bump(&mut digits, nonzero.len()) {
                    break;
                }
            }
            if !next_subset(&mut support, je.len()) {
                break;
            }
        }
    }
    Ok(CorollaryReport {
        holds: true,
        reason: format!("λω ∈ Λλ for every λ in Je over F{p}"),
        provenance: Provenance::FiniteField(p),
        witness: None,
    })
}

fn bump(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

fn next_subset(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// `Λλ` as a subspace of `Λ`.
fn left_ideal(algebra: &AlgebraPresentation, lambda: &AlgElement) -> Subspace {
    let field = algebra.field();
    Subspace::span(
        field,
        algebra.dim(),
        algebra
            .basis()
            .iter()
            .map(|u| algebra.coordinates(&algebra.mul(&AlgElement::path(field, u.clone()), lambda))),
    )
}

/// The algebra over `F_p`, refusing primes where the dimension drops.
pub fn reduced_algebra(algebra: &AlgebraPresentation, p: u32) -> Result<AlgebraPresentation> {
    let red = algebra.over_prime(p)?;
    if red.dim() != algebra.dim() {
        return Err(Error::FieldMismatch(format!(
            "reduction modulo {p} changes dim Λ from {} to {}",
            algebra.dim(),
            red.dim()
        )));
    }
    Ok(red)
}

/// The projective cover of `T` over `F_q`. Non-squarefree tops are allowed.
pub fn cover_over_prime(algebra: &Arc<AlgebraPresentation>, top: &Top, q: u32) -> Result<ProjectiveCover> {
    let alg = match algebra.field() {
        Field::Prime(p) if p == q => algebra.clone(),
        Field::Prime(p) => {
            return Err(Error::FieldMismatch(format!("algebra is over F{p}, oracle requested over F{q}")));
        }
        Field::Rational => Arc::new(reduced_algebra(algebra, q)?),
    };
    Ok(ProjectiveCover::with_multiplicities(alg, top))
}

/// The finite-field evidence for one dimension `d`.
#[derive(Clone, Debug)]
pub struct LocalTypeEntry {
    pub d: usize,
    pub points: usize,
    pub layering_classes: usize,
    pub iso_classes: usize,
    pub orbits: usize,
    /// Points with equal layering are isomorphic.
    pub layering_determines_iso: bool,
    /// Every nonempty `Grass(σ)` is a single orbit.
    pub charts_single_orbit: bool,
    pub failing_skeleton: Option<String>,
}

#[derive(Clone, Debug)]
pub struct LocalTypeReport {
    pub q: u32,
    pub entries: Vec<LocalTypeEntry>,
    pub verdict: bool,
    pub provenance: Provenance,
}

/// The finite-local-type criteria at `F_q` scale for every `d ≤ dim P`.
pub fn finite_local_type_check(
    algebra: &Arc<AlgebraPresentation>,
    e: usize,
    q: u32,
    budget: u128,
) -> Result<LocalTypeReport> {
    let top = Top::new(vec![e]);
    let cover = cover_over_prime(algebra, &top, q)?;
    let quiver = cover.algebra().quiver().clone();
    let mut entries = Vec::new();
    for d in 1..=cover.dim() {
        let scene = OracleScene::new(cover.clone(), d, budget)?;
        if scene.is_empty() {
            continue;
        }
        let classes = iso_classes(&scene, budget)?;
        let orbit_part = orbits(&scene, budget)?;
        let layering_classes = scene.layering_classes();
        let layering_determines_iso = layering_classes.len() == classes.len();
        let skeletons = enumerate_skeletons(&cover, d, true)?;
        let sets = scene.skeleton_sets(&skeletons);
        let mut charts_single_orbit = true;
        let mut failing_skeleton = None;
        for (s, sigma) in skeletons.iter().enumerate() {
            let mut seen = None;
            for (i, set) in sets.iter().enumerate() {
                if !set.contains(&s) {
                    continue;
                }
                let o = orbit_part.orbit_of[i];
                match seen {
                    None => seen = Some(o),
                    Some(prev) if prev != o => {
                        charts_single_orbit = false;
                    }
                    _ => {}
                }
            }
            if !charts_single_orbit {
                failing_skeleton = Some(sigma.display(&quiver).to_string());
                break;
            }
        }
        entries.push(LocalTypeEntry {
            d,
            points: scene.len(),
            layering_classes: layering_classes.len(),
            iso_classes: classes.len(),
            orbits: orbit_part.orbits.len(),
            layering_determines_iso,
            charts_single_orbit,
            failing_skeleton,
        });
    }
    let verdict = entries.iter().all(|e| e.layering_determines_iso && e.charts_single_orbit);
    Ok(LocalTypeReport {
        q,
        entries,
        verdict,
        provenance: Provenance::FiniteField(q),
    })
}

/// All moduli-related verdicts for one point.
#[derive(Clone, Debug)]
pub struct ModuliReport {
    pub fully_invariant: bool,
    pub invariance_witness: Option<String>,
    pub orbit_dim: usize,
    pub unipotent_orbit_dim: usize,
    pub condition_5: bool,
    /// The "direct sum of local modules" half, decided only for simple tops.
    pub local_summands_checked: bool,
    pub provenance: Provenance,
}

pub fn moduli_report(cover: &ProjectiveCover, c: &Subspace) -> Result<ModuliReport> {
    let (fully_invariant, witness) = is_fully_invariant(cover, c)?;
    Ok(ModuliReport {
        fully_invariant,
        invariance_witness: witness.map(|w| w.describe(cover)),
        orbit_dim: orbit_dim(cover, c)?,
        unipotent_orbit_dim: unipotent_orbit_dim(cover, c)?,
        condition_5: thm_4_2_condition_5(cover, c)?,
        local_summands_checked: cover.top().is_simple(),
        provenance: Provenance::Symbolic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;

    fn ex24() -> Arc<AlgebraPresentation> {
        let quiver = Quiver::new(["1", "2"], [("w", "1", "1"), ("a", "1", "2")]).unwrap();
        let ww = quiver.path_from_arrows(0, &[0, 0]).unwrap();
        Arc::new(AlgebraPresentation::build(quiver, vec![AlgElement::path(Field::Rational, ww)], 2, Field::Rational).unwrap())
    }

    fn sub(cover: &ProjectiveCover, paths: &[&[usize]]) -> Subspace {
        let q = cover.algebra().quiver();
        cover.generated_submodule(paths.iter().map(|a| cover.embed_path(&q.path_from_arrows(0, a).unwrap()).unwrap()))
    }

    #[test]
    fn invariance_on_ex24() {
        let cover = ProjectiveCover::new(ex24(), &Top::new(vec![0])).unwrap();
        let c_alpha = sub(&cover, &[&[1]]);
        let c_alpha_omega = sub(&cover, &[&[0, 1]]);
        let (ok, w) = is_fully_invariant(&cover, &c_alpha).unwrap();
        assert!(!ok);
        let w = w.unwrap();
        assert_eq!(cover.render(&crate::linalg::unit_vector(cover.field(), cover.dim(), w.endomorphism.image)), "w");
        assert_eq!(cover.render(&w.image), "a*w");
        assert!(is_fully_invariant(&cover, &c_alpha_omega).unwrap().0);
        assert!(is_fully_invariant(&cover, &cover.radical_power(1)).unwrap().0);
        assert_eq!(orbit_dim(&cover, &c_alpha).unwrap(), 1);
        assert_eq!(unipotent_orbit_dim(&cover, &c_alpha).unwrap(), 1);
        assert_eq!(orbit_dim(&cover, &c_alpha_omega).unwrap(), 0);
        assert_eq!(unipotent_orbit_dim(&cover, &c_alpha_omega).unwrap(), 0);
        assert!(thm_4_2_condition_5(&cover, &c_alpha_omega).unwrap());
        assert!(!thm_4_2_condition_5(&cover, &c_alpha).unwrap());
        assert!(thm_4_2_condition_5(&cover, &cover.radical_power(1)).unwrap());
    }

    #[test]
    fn endomorphism_basis_has_hom_dimension() {
        let cover = ProjectiveCover::new(ex24(), &Top::new(vec![0])).unwrap();
        let p = Representation::of_projective(&cover);
        assert_eq!(endomorphism_basis(&cover).len(), hom_dim(&p, &p));
    }

    #[test]
    fn corollary_on_ex24_and_a2() {
        let report = check_corollary_4_5(&ex24(), 0, 2, 1_000).unwrap();
        assert!(!report.holds);
        let w = report.witness.unwrap();
        let q = ex24();
        assert_eq!(w.lambda.display(q.quiver()).to_string(), "a");
        assert_eq!(q.quiver().path_name(&w.omega), "w");

        let a2 = Quiver::new(["1", "2"], [("a", "1", "2")]).unwrap();
        let alg = AlgebraPresentation::build(a2, vec![], 1, Field::Rational).unwrap();
        let r = check_corollary_4_5(&alg, 0, 2, 1_000).unwrap();
        assert!(r.holds);
        assert_eq!(r.reason, "eJe = 0");
        assert_eq!(r.provenance, Provenance::Symbolic);
    }
}
