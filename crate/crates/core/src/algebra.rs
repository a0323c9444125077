//! Path-algebra elements and the finite-dimensional algebra `Λ = KQ/I`.
//!
//! The ideal is handled by truncated linear algebra: everything lives in the
//! span of paths of length at most `L + 1`, longer paths are dropped, and the
//! span of all two-sided multiples of the relations is row-reduced once. The
//! columns are ordered by *descending* path order, so each pivot is the
//! largest path of its row and the non-pivot paths form the basis of `Λ`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{is_zero_vector, zero_vector, Matrix, Subspace, Vector};
use crate::quiver::{Path, Quiver};

/// A finite linear combination of paths with nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AlgElement {
    field: Field,
    terms: BTreeMap<Path, Scalar>,
}

impl AlgElement {
    pub fn zero(field: Field) -> AlgElement {
        AlgElement {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn path(field: Field, p: Path) -> AlgElement {
        AlgElement::monomial(field.one(), p)
    }

    pub fn monomial(c: Scalar, p: Path) -> AlgElement {
        let mut x = AlgElement::zero(c.field());
        x.add_term(p, c);
        x
    }

    pub fn from_terms(field: Field, terms: impl IntoIterator<Item = (Path, Scalar)>) -> AlgElement {
        let mut x = AlgElement::zero(field);
        for (p, c) in terms {
            x.add_term(p, c);
        }
        x
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in global path order.
    pub fn terms(&self) -> impl Iterator<Item = (&Path, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, p: &Path) -> Scalar {
        self.terms.get(p).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn add_term(&mut self, p: Path, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&p) {
            Some(existing) => {
                *existing += &c;
                if existing.is_zero() {
                    self.terms.remove(&p);
                }
            }
            None => {
                self.terms.insert(p, c);
            }
        }
    }

    pub fn add(&self, other: &AlgElement) -> AlgElement {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &AlgElement) -> AlgElement {
        self.add(&other.scale(&-&other.field.one()))
    }

    pub fn scale(&self, c: &Scalar) -> AlgElement {
        if c.is_zero() {
            return AlgElement::zero(self.field);
        }
        AlgElement {
            field: self.field,
            terms: self.terms.iter().map(|(p, x)| (p.clone(), x * c)).collect(),
        }
    }

    pub fn min_len(&self) -> Option<usize> {
        self.terms.keys().map(Path::len).min()
    }

    pub fn max_len(&self) -> Option<usize> {
        self.terms.keys().map(Path::len).max()
    }

    /// Drops every term longer than `max_len`.
    pub fn truncate(&self, max_len: usize) -> AlgElement {
        AlgElement {
            field: self.field,
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.len() <= max_len)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    /// `u · self` in `KQ`.
    pub fn left_mul(&self, quiver: &Quiver, u: &Path) -> AlgElement {
        AlgElement::from_terms(
            self.field,
            self.terms
                .iter()
                .filter_map(|(p, c)| quiver.compose(u, p).map(|up| (up, c.clone()))),
        )
    }

    /// `self · v` in `KQ`.
    pub fn right_mul(&self, quiver: &Quiver, v: &Path) -> AlgElement {
        AlgElement::from_terms(
            self.field,
            self.terms
                .iter()
                .filter_map(|(p, c)| quiver.compose(p, v).map(|pv| (pv, c.clone()))),
        )
    }

    /// The product `self · other` in `KQ`.
    pub fn mul(&self, quiver: &Quiver, other: &AlgElement) -> AlgElement {
        let mut out = AlgElement::zero(self.field);
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                if let Some(pq) = quiver.compose(p, q) {
                    out.add_term(pq, a * b);
                }
            }
        }
        out
    }

    /// Keeps only the terms starting at vertex `v` (right multiplication by `e_v`).
    pub fn starting_at(&self, v: usize) -> AlgElement {
        AlgElement {
            field: self.field,
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.start() == v)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    /// Maps the coefficients into another field.
    pub fn map_field(&self, field: Field, f: impl Fn(&Scalar) -> Result<Scalar>) -> Result<AlgElement> {
        let mut out = AlgElement::zero(field);
        for (p, c) in &self.terms {
            out.add_term(p.clone(), f(c)?);
        }
        Ok(out)
    }

    pub fn display<'a>(&'a self, quiver: &'a Quiver) -> ElementDisplay<'a> {
        ElementDisplay { quiver, element: self }
    }
}

pub struct ElementDisplay<'a> {
    quiver: &'a Quiver,
    element: &'a AlgElement,
}

impl fmt::Display for ElementDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.element.is_zero() {
            return f.write_str("0");
        }
        for (i, (p, c)) in self.element.terms().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            f.write_str(&self.quiver.path_name(p))?;
        }
        Ok(())
    }
}

/// `Λ = KQ/I` with an explicit path basis and normal form.
#[derive(Debug)]
pub struct AlgebraPresentation {
    quiver: Quiver,
    relations: Vec<AlgElement>,
    loewy: usize,
    field: Field,
    /// All paths of length at most `L + 1`, in path order.
    ambient: Vec<Path>,
    ambient_index: HashMap<Path, usize>,
    /// The ideal span in reversed coordinates (column `c` is path `n - 1 - c`).
    ideal: Subspace,
    basis: Vec<Path>,
    basis_index: HashMap<Path, usize>,
}

impl AlgebraPresentation {
    /// Builds `Λ` and checks admissibility against the Loewy bound `L`.
    pub fn build(quiver: Quiver, relations: Vec<AlgElement>, loewy: usize, field: Field) -> Result<AlgebraPresentation> {
        for r in &relations {
            if r.field() != field {
                return Err(Error::FieldMismatch(format!(
                    "relation {} is over {}, algebra over {field}",
                    r.display(&quiver),
                    r.field()
                )));
            }
            if let Some((p, _)) = r.terms().find(|(p, _)| p.len() < 2) {
                return Err(Error::Admissibility {
                    relation: r.display(&quiver).to_string(),
                    length: p.len(),
                });
            }
        }
        let ambient = quiver.all_paths(loewy + 1);
        let ambient_index: HashMap<Path, usize> =
            ambient.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let n = ambient.len();
        let col = |i: usize| n - 1 - i;

        let to_vec = |x: &AlgElement| -> Vector {
            let mut v = zero_vector(field, n);
            for (p, c) in x.terms() {
                if let Some(&i) = ambient_index.get(p) {
                    v[col(i)] = c.clone();
                }
            }
            v
        };

        // Seed: e_i · trunc(ρ v) for every relation ρ and path v.
        let mut seeds = Vec::new();
        for r in &relations {
            let m = r.min_len().unwrap_or(0);
            if m > loewy + 1 {
                continue;
            }
            for v in quiver.all_paths(loewy + 1 - m) {
                let rv = r.right_mul(&quiver, &v).truncate(loewy + 1);
                for i in 0..quiver.num_vertices() {
                    let part = rv.left_mul(&quiver, &Path::vertex(i));
                    if !part.is_zero() {
                        seeds.push(to_vec(&part));
                    }
                }
            }
        }
        let left = left_multiplication_matrices(&quiver, &ambient, &ambient_index, field);
        let mut ideal = Subspace::span(field, n, seeds);
        loop {
            let grown = ideal.with_vectors(
                left.iter()
                    .flat_map(|m| ideal.basis().iter().map(move |b| m.mul_vec(b))),
            );
            if grown.dim() == ideal.dim() {
                break;
            }
            ideal = grown;
        }

        for (i, p) in ambient.iter().enumerate() {
            if p.len() == loewy + 1 {
                let mut v = zero_vector(field, n);
                v[col(i)] = field.one();
                if !ideal.contains(&v) {
                    return Err(Error::LoewyBound {
                        path: quiver.path_name(p),
                        length: p.len(),
                        loewy,
                    });
                }
            }
        }

        let mut basis: Vec<Path> = ideal
            .non_pivots()
            .into_iter()
            .map(|c| ambient[n - 1 - c].clone())
            .collect();
        basis.sort();
        debug_assert!(basis.iter().all(|p| p.len() <= loewy));
        let basis_index = basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();

        Ok(AlgebraPresentation {
            quiver,
            relations,
            loewy,
            field,
            ambient,
            ambient_index,
            ideal,
            basis,
            basis_index,
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[AlgElement] {
        &self.relations
    }

    pub fn loewy(&self) -> usize {
        self.loewy
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// The Λ-basis, in path order.
    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_index(&self, p: &Path) -> Option<usize> {
        self.basis_index.get(p).copied()
    }

    /// The unique representative of `x + I` in the span of the basis. Terms
    /// longer than `L + 1` lie in `I` and are dropped.
    pub fn normal_form(&self, x: &AlgElement) -> AlgElement {
        assert_eq!(x.field(), self.field, "element over the wrong field");
        let n = self.ambient.len();
        let mut v = zero_vector(self.field, n);
        for (p, c) in x.terms() {
            if let Some(&i) = self.ambient_index.get(p) {
                v[n - 1 - i] = c.clone();
            }
        }
        let v = self.ideal.reduce(&v);
        AlgElement::from_terms(
            self.field,
            v.into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(c, s)| (self.ambient[n - 1 - c].clone(), s)),
        )
    }

    pub fn path_normal_form(&self, p: &Path) -> AlgElement {
        self.normal_form(&AlgElement::path(self.field, p.clone()))
    }

    pub fn in_ideal(&self, x: &AlgElement) -> bool {
        self.normal_form(x).is_zero()
    }

    /// The product in `Λ`, in normal form.
    pub fn mul(&self, x: &AlgElement, y: &AlgElement) -> AlgElement {
        let prod = x
            .truncate(self.loewy + 1)
            .mul(&self.quiver, &y.truncate(self.loewy + 1))
            .truncate(self.loewy + 1);
        self.normal_form(&prod)
    }

    /// Coordinates of a normal-form element on the Λ-basis.
    pub fn coordinates(&self, x: &AlgElement) -> Vector {
        let nf = self.normal_form(x);
        let mut v = zero_vector(self.field, self.basis.len());
        for (p, c) in nf.terms() {
            v[self.basis_index[p]] = c.clone();
        }
        v
    }

    pub fn element_from_coordinates(&self, v: &[Scalar]) -> AlgElement {
        AlgElement::from_terms(
            self.field,
            v.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (self.basis[i].clone(), c.clone())),
        )
    }

    /// The same presentation with coefficients reduced modulo `p`.
    pub fn over_prime(&self, p: u32) -> Result<AlgebraPresentation> {
        let field = Field::prime(p)?;
        if self.field == field {
            return AlgebraPresentation::build(self.quiver.clone(), self.relations.clone(), self.loewy, field);
        }
        let relations = self
            .relations
            .iter()
            .map(|r| {
                r.map_field(field, |c| match c {
                    Scalar::Q(q) => field.from_rational(q),
                    Scalar::Fp { .. } => Err(Error::FieldMismatch(
                        "cannot change the characteristic of a prime-field algebra".into(),
                    )),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        AlgebraPresentation::build(self.quiver.clone(), relations, self.loewy, field)
    }

    /// The same presentation with a different Loewy bound.
    pub fn with_loewy(&self, loewy: usize) -> Result<AlgebraPresentation> {
        AlgebraPresentation::build(self.quiver.clone(), self.relations.clone(), loewy, self.field)
    }
}

fn left_multiplication_matrices(
    quiver: &Quiver,
    ambient: &[Path],
    index: &HashMap<Path, usize>,
    field: Field,
) -> Vec<Matrix> {
    let n = ambient.len();
    (0..quiver.num_arrows())
        .map(|a| {
            let mut m = Matrix::zeros(field, n, n);
            for (i, p) in ambient.iter().enumerate() {
                if let Some(ap) = quiver.extend(p, a) {
                    if let Some(&j) = index.get(&ap) {
                        m.set(n - 1 - j, n - 1 - i, field.one());
                    }
                }
            }
            m
        })
        .collect()
}

/// The top `T` of a problem, as a list of vertices (repetitions allowed).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Top(Vec<usize>);

impl Top {
    pub fn new(mut vertices: Vec<usize>) -> Top {
        vertices.sort_unstable();
        Top(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1])
    }

    pub fn is_simple(&self) -> bool {
        self.0.len() == 1
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn check_squarefree(&self, quiver: &Quiver) -> Result<()> {
        match self.0.windows(2).find(|w| w[0] == w[1]) {
            Some(w) => Err(Error::TopNotSquarefree {
                vertex: quiver.vertex_label(w[0]).to_string(),
            }),
            None => Ok(()),
        }
    }

    /// Multiplicity of each vertex.
    pub fn multiplicities(&self, n: usize) -> Vec<usize> {
        let mut m = vec![0; n];
        for &v in &self.0 {
            m[v] += 1;
        }
        m
    }
}

/// A basis element of `P = ⊕_r Λ e_r`: slot `r` (one per top vertex, with
/// multiplicity) and a Λ-basis path starting at that slot's vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectiveBasisElement {
    pub slot: usize,
    pub path: Path,
}

/// The projective cover `P` of a semisimple top, with its basis and the left
/// action of every arrow.
#[derive(Debug, Clone)]
pub struct ProjectiveCover {
    algebra: Arc<AlgebraPresentation>,
    top: Top,
    basis: Vec<ProjectiveBasisElement>,
    index: HashMap<ProjectiveBasisElement, usize>,
    arrow_action: Vec<Matrix>,
    radical_powers: Vec<Subspace>,
}

impl ProjectiveCover {
    /// The projective cover of a squarefree top.
    pub fn new(algebra: Arc<AlgebraPresentation>, top: &Top) -> Result<ProjectiveCover> {
        top.check_squarefree(algebra.quiver())?;
        Ok(ProjectiveCover::with_multiplicities(algebra, top))
    }

    /// The projective cover of an arbitrary semisimple top.
    pub fn with_multiplicities(algebra: Arc<AlgebraPresentation>, top: &Top) -> ProjectiveCover {
        let mut basis = Vec::new();
        for (slot, &v) in top.vertices().iter().enumerate() {
            for p in algebra.basis().iter().filter(|p| p.start() == v) {
                basis.push(ProjectiveBasisElement {
                    slot,
                    path: p.clone(),
                });
            }
        }
        let index: HashMap<_, _> = basis.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
        let field = algebra.field();
        let n = basis.len();
        let quiver = algebra.quiver();
        let arrow_action = (0..quiver.num_arrows())
            .map(|a| {
                let mut m = Matrix::zeros(field, n, n);
                for (j, b) in basis.iter().enumerate() {
                    if let Some(ap) = quiver.extend(&b.path, a) {
                        let nf = algebra.path_normal_form(&ap);
                        for (p, c) in nf.terms() {
                            let i = index[&ProjectiveBasisElement {
                                slot: b.slot,
                                path: p.clone(),
                            }];
                            m.set(i, j, c.clone());
                        }
                    }
                }
                m
            })
            .collect::<Vec<Matrix>>();
        let mut radical_powers = vec![Subspace::full(field, n)];
        while radical_powers.last().unwrap().dim() > 0 {
            let cur = radical_powers.last().unwrap();
            let next = Subspace::span(
                field,
                n,
                arrow_action
                    .iter()
                    .flat_map(|m| cur.basis().iter().map(move |b| m.mul_vec(b))),
            );
            radical_powers.push(next);
        }
        ProjectiveCover {
            algebra,
            top: top.clone(),
            basis,
            index,
            arrow_action,
            radical_powers,
        }
    }

    pub fn algebra(&self) -> &Arc<AlgebraPresentation> {
        &self.algebra
    }

    pub fn top(&self) -> &Top {
        &self.top
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn basis(&self) -> &[ProjectiveBasisElement] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates belonging to `JP` (paths of length at least one).
    pub fn radical_coordinates(&self) -> Vec<usize> {
        (0..self.basis.len())
            .filter(|&i| !self.basis[i].path.is_vertex())
            .collect()
    }

    pub fn radical_dim(&self) -> usize {
        self.radical_coordinates().len()
    }

    pub fn is_radical(&self, k: usize) -> bool {
        !self.basis[k].path.is_vertex()
    }

    /// The vertex `e_i` with `e_i b = b` for the basis element.
    pub fn vertex_of(&self, k: usize) -> usize {
        self.basis[k].path.end()
    }

    pub fn slot_vertex(&self, slot: usize) -> usize {
        self.top.vertices()[slot]
    }

    pub fn index_of(&self, b: &ProjectiveBasisElement) -> Option<usize> {
        self.index.get(b).copied()
    }

    pub fn arrow_action(&self, arrow: usize) -> &Matrix {
        &self.arrow_action[arrow]
    }

    pub fn arrow_actions(&self) -> &[Matrix] {
        &self.arrow_action
    }

    /// The element `x · e_r` placed in slot `slot`, as a coordinate vector.
    pub fn embed(&self, slot: usize, x: &AlgElement) -> Vector {
        let v = self.slot_vertex(slot);
        let nf = self.algebra.normal_form(&x.starting_at(v));
        let mut out = zero_vector(self.field(), self.dim());
        for (p, c) in nf.terms() {
            let i = self.index[&ProjectiveBasisElement {
                slot,
                path: p.clone(),
            }];
            out[i] = c.clone();
        }
        out
    }

    /// The path `p` (starting at a top vertex) as an element of `P`, using the
    /// first slot for its start vertex.
    pub fn embed_path(&self, p: &Path) -> Option<Vector> {
        let slot = self.top.vertices().iter().position(|&v| v == p.start())?;
        Some(self.embed(slot, &AlgElement::path(self.field(), p.clone())))
    }

    /// Reads a coordinate vector back as a list of per-slot elements.
    pub fn to_elements(&self, v: &[Scalar]) -> Vec<AlgElement> {
        let mut out = vec![AlgElement::zero(self.field()); self.top.len()];
        for (k, c) in v.iter().enumerate() {
            if !c.is_zero() {
                let b = &self.basis[k];
                out[b.slot].add_term(b.path.clone(), c.clone());
            }
        }
        out
    }

    /// Renders an element of `P`; slots are shown as `[..]` components when
    /// the top is not simple.
    pub fn render(&self, v: &[Scalar]) -> String {
        let q = self.algebra.quiver();
        let parts = self.to_elements(v);
        if parts.len() == 1 {
            return parts[0].display(q).to_string();
        }
        let inner: Vec<String> = parts.iter().map(|x| x.display(q).to_string()).collect();
        format!("({})", inner.join(", "))
    }

    /// The Λ-submodule generated by the given vectors.
    pub fn generated_submodule(&self, generators: impl IntoIterator<Item = Vector>) -> Subspace {
        let mut s = Subspace::span(self.field(), self.dim(), generators);
        loop {
            let grown = s.with_vectors(
                self.arrow_action
                    .iter()
                    .flat_map(|m| s.basis().iter().map(move |b| m.mul_vec(b)))
                    .filter(|v| !is_zero_vector(v)),
            );
            if grown.dim() == s.dim() {
                return s;
            }
            s = grown;
        }
    }

    /// `J^l P`, as a subspace of coordinates.
    pub fn radical_power(&self, l: usize) -> Subspace {
        self.radical_powers
            .get(l)
            .cloned()
            .unwrap_or_else(|| Subspace::zero(self.field(), self.dim()))
    }

    /// Whether a subspace of coordinates is a Λ-submodule: stable under the
    /// vertex idempotents and every arrow.
    pub fn is_submodule(&self, s: &Subspace) -> bool {
        let n = self.dim();
        let nv = self.algebra.quiver().num_vertices();
        let graded = s.basis().iter().all(|b| {
            (0..nv).all(|v| {
                let part: Vector = (0..n)
                    .map(|k| if self.vertex_of(k) == v { b[k].clone() } else { self.field().zero() })
                    .collect();
                s.contains(&part)
            })
        });
        graded && self.arrow_action.iter().all(|m| s.is_invariant_under(m))
    }
}

/// Summary of `projective_basis`.
#[derive(Debug, Clone)]
pub struct ProjectiveBasis {
    pub elements: Vec<(usize, Path, bool)>,
    pub dim: usize,
    pub radical_dim: usize,
}

/// The ordered basis of `P = ⊕_{r ∈ T} Λ e_r` for a squarefree top, each
/// entry flagged when it belongs to `JP`.
pub fn projective_basis(algebra: &Arc<AlgebraPresentation>, top: &Top) -> Result<ProjectiveBasis> {
    let cover = ProjectiveCover::new(algebra.clone(), top)?;
    let elements = cover
        .basis()
        .iter()
        .map(|b| (cover.slot_vertex(b.slot), b.path.clone(), !b.path.is_vertex()))
        .collect();
    Ok(ProjectiveBasis {
        elements,
        dim: cover.dim(),
        radical_dim: cover.radical_dim(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Scalar {
        Field::Rational.from_i64(n)
    }

    fn ex24() -> AlgebraPresentation {
        let quiver = Quiver::new(["1", "2"], [("w", "1", "1"), ("a", "1", "2")]).unwrap();
        let ww = quiver.path_from_arrows(0, &[0, 0]).unwrap();
        AlgebraPresentation::build(quiver, vec![AlgElement::path(Field::Rational, ww)], 2, Field::Rational).unwrap()
    }

    #[test]
    fn ex24_basis() {
        let a = ex24();
        let names: Vec<String> = a.basis().iter().map(|p| a.quiver().path_name(p)).collect();
        assert_eq!(names, ["e1", "w", "a", "a*w", "e2"]);
    }

    #[test]
    fn loewy_bound_too_small() {
        let quiver = Quiver::new(["1", "2"], [("w", "1", "1"), ("a", "1", "2")]).unwrap();
        let ww = quiver.path_from_arrows(0, &[0, 0]).unwrap();
        let err = AlgebraPresentation::build(quiver, vec![AlgElement::path(Field::Rational, ww)], 1, Field::Rational)
            .unwrap_err();
        assert!(matches!(err, Error::LoewyBound { length: 2, .. }));
    }

    #[test]
    fn relation_of_length_one_rejected() {
        let quiver = Quiver::new(["1", "2"], [("a", "1", "2")]).unwrap();
        let a = quiver.path_from_arrows(0, &[0]).unwrap();
        let err = AlgebraPresentation::build(quiver, vec![AlgElement::path(Field::Rational, a)], 1, Field::Rational)
            .unwrap_err();
        assert!(matches!(err, Error::Admissibility { length: 1, .. }));
    }

    #[test]
    fn normal_form_kills_relation() {
        let a = ex24();
        let quiver = a.quiver();
        let ww = quiver.path_from_arrows(0, &[0, 0]).unwrap();
        assert!(a.path_normal_form(&ww).is_zero());
        let e1 = Path::vertex(0);
        assert_eq!(a.path_normal_form(&e1), AlgElement::path(Field::Rational, e1.clone()));
        // length L + 1 = 3 always lies in I
        let aww = quiver.path_from_arrows(0, &[0, 0, 1]).unwrap();
        assert!(a.path_normal_form(&aww).is_zero());
    }

    #[test]
    fn product_in_quotient() {
        let a = ex24();
        let quiver = a.quiver();
        let w = AlgElement::path(Field::Rational, quiver.path_from_arrows(0, &[0]).unwrap());
        let al = AlgElement::path(Field::Rational, quiver.path_from_arrows(0, &[1]).unwrap());
        let aw = a.mul(&al, &w);
        assert_eq!(aw.display(quiver).to_string(), "a*w");
        assert!(a.mul(&w, &w).is_zero());
        let x = w.scale(&q(2)).add(&al);
        assert_eq!(a.mul(&al, &x).display(quiver).to_string(), "2*a*w");
    }

    #[test]
    fn projective_cover_ex24() {
        let a = Arc::new(ex24());
        let pb = projective_basis(&a, &Top::new(vec![0])).unwrap();
        assert_eq!(pb.dim, 4);
        assert_eq!(pb.radical_dim, 3);
        let err = projective_basis(&a, &Top::new(vec![0, 0])).unwrap_err();
        assert!(matches!(err, Error::TopNotSquarefree { .. }));
    }
}
