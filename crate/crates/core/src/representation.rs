//! Modules as representations: one matrix per arrow, Hom spaces, radical
//! layerings and semisimple sequences.
//!
//! The total space of a representation is the direct sum of its vertex
//! spaces, vertex 1 first. Subspaces and quotients are taken in total-space
//! coordinates and must be vertex-graded.

use std::cmp::Ordering;
use std::fmt;

use crate::algebra::{AlgElement, AlgebraPresentation, ProjectiveCover, Top};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{is_zero_vector, unit_vector, zero_vector, Matrix, Subspace, Vector};
use crate::quiver::{Path, Quiver};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    field: Field,
    dims: Vec<usize>,
    /// `(source, target)` of each arrow.
    arrows: Vec<(usize, usize)>,
    matrices: Vec<Matrix>,
}

impl Representation {
    pub fn new(quiver: &Quiver, field: Field, dims: Vec<usize>, matrices: Vec<Matrix>) -> Result<Representation> {
        if dims.len() != quiver.num_vertices() || matrices.len() != quiver.num_arrows() {
            return Err(Error::InvalidInput(
                "representation needs one dimension per vertex and one matrix per arrow".into(),
            ));
        }
        let arrows: Vec<(usize, usize)> = quiver.arrows().iter().map(|a| (a.source, a.target)).collect();
        for (a, (m, &(s, t))) in matrices.iter().zip(&arrows).enumerate() {
            if m.rows() != dims[t] || m.cols() != dims[s] || m.field() != field {
                return Err(Error::InvalidInput(format!(
                    "matrix of arrow {} has shape {}x{}, expected {}x{}",
                    quiver.arrow(a).name,
                    m.rows(),
                    m.cols(),
                    dims[t],
                    dims[s]
                )));
            }
        }
        Ok(Representation {
            field,
            dims,
            arrows,
            matrices,
        })
    }

    /// The representation on a vertex-graded space: coordinate `k` lives at
    /// vertex `vertex_of[k]` and `actions[a]` is the action of arrow `a` on
    /// the whole space. Vertex bases keep the relative order of coordinates.
    pub fn from_graded_action(quiver: &Quiver, field: Field, vertex_of: &[usize], actions: &[Matrix]) -> Representation {
        let nv = quiver.num_vertices();
        let mut local = vec![0; vertex_of.len()];
        let mut dims = vec![0; nv];
        for (k, &v) in vertex_of.iter().enumerate() {
            local[k] = dims[v];
            dims[v] += 1;
        }
        let arrows: Vec<(usize, usize)> = quiver.arrows().iter().map(|a| (a.source, a.target)).collect();
        let matrices = arrows
            .iter()
            .zip(actions)
            .map(|(&(s, t), act)| {
                let mut m = Matrix::zeros(field, dims[t], dims[s]);
                for j in (0..vertex_of.len()).filter(|&j| vertex_of[j] == s) {
                    for i in (0..vertex_of.len()).filter(|&i| vertex_of[i] == t) {
                        let x = act.get(i, j);
                        if !x.is_zero() {
                            m.set(local[i], local[j], x.clone());
                        }
                    }
                }
                m
            })
            .collect();
        Representation {
            field,
            dims,
            arrows,
            matrices,
        }
    }

    /// `P` itself as a representation, with vertex bases in projective-basis order.
    pub fn of_projective(cover: &ProjectiveCover) -> Representation {
        let vertex_of: Vec<usize> = (0..cover.dim()).map(|k| cover.vertex_of(k)).collect();
        Representation::from_graded_action(cover.algebra().quiver(), cover.field(), &vertex_of, cover.arrow_actions())
    }

    /// The simple module at vertex `v`.
    pub fn simple(quiver: &Quiver, field: Field, v: usize) -> Representation {
        let mut dims = vec![0; quiver.num_vertices()];
        dims[v] = 1;
        Representation::semisimple_with_dims(quiver, field, dims)
    }

    /// The semisimple module `⊕ S_i^{dims[i]}`.
    pub fn semisimple_with_dims(quiver: &Quiver, field: Field, dims: Vec<usize>) -> Representation {
        let matrices = quiver
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(field, dims[a.target], dims[a.source]))
            .collect();
        Representation::new(quiver, field, dims, matrices).expect("shapes match")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn matrix(&self, arrow: usize) -> &Matrix {
        &self.matrices[arrow]
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    pub fn num_vertices(&self) -> usize {
        self.dims.len()
    }

    /// Start of each vertex block in total-space coordinates.
    pub fn offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.dims.len());
        let mut acc = 0;
        for &d in &self.dims {
            out.push(acc);
            acc += d;
        }
        out
    }

    /// Vertex of each total-space coordinate.
    pub fn vertex_of(&self) -> Vec<usize> {
        self.dims
            .iter()
            .enumerate()
            .flat_map(|(v, &d)| std::iter::repeat_n(v, d))
            .collect()
    }

    /// The action of an arrow on the total space.
    pub fn total_action(&self, arrow: usize) -> Matrix {
        let n = self.dim();
        let off = self.offsets();
        let (s, t) = self.arrows[arrow];
        let m = &self.matrices[arrow];
        let mut out = Matrix::zeros(self.field, n, n);
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                let x = m.get(i, j);
                if !x.is_zero() {
                    out.set(off[t] + i, off[s] + j, x.clone());
                }
            }
        }
        out
    }

    pub fn total_actions(&self) -> Vec<Matrix> {
        (0..self.matrices.len()).map(|a| self.total_action(a)).collect()
    }

    /// The matrix of a path, `dims[end] x dims[start]`.
    pub fn path_matrix(&self, p: &Path) -> Matrix {
        let mut m = Matrix::identity(self.field, self.dims[p.start()]);
        for &a in p.arrows() {
            m = self.matrices[a].mul(&m);
        }
        m
    }

    /// The action of an algebra element on the total space.
    pub fn element_action(&self, x: &AlgElement) -> Matrix {
        let n = self.dim();
        let off = self.offsets();
        let mut out = Matrix::zeros(self.field, n, n);
        for (p, c) in x.terms() {
            let m = self.path_matrix(p);
            let (s, t) = (p.start(), p.end());
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    let y = m.get(i, j);
                    if !y.is_zero() {
                        let cur = out.get(off[t] + i, off[s] + j) + &(y * c);
                        out.set(off[t] + i, off[s] + j, cur);
                    }
                }
            }
        }
        out
    }

    /// Whether every relation and every path of length `L + 1` acts as zero.
    pub fn is_module_over(&self, algebra: &AlgebraPresentation) -> bool {
        algebra.relations().iter().all(|r| self.element_action(r).is_zero())
            && algebra
                .quiver()
                .paths_of_length(algebra.loewy() + 1)
                .iter()
                .all(|p| self.path_matrix(p).is_zero())
    }

    /// Restriction to a vertex-graded, arrow-stable subspace of the total
    /// space. The new vertex bases are the subspace's echelon rows.
    pub fn subrepresentation(&self, quiver: &Quiver, s: &Subspace) -> Result<Representation> {
        let vertex_of = self.vertex_of();
        let basis = s.basis();
        let row_vertex: Vec<usize> = basis
            .iter()
            .zip(s.pivots())
            .map(|(b, &p)| {
                let v = vertex_of[p];
                if b.iter().enumerate().any(|(k, x)| !x.is_zero() && vertex_of[k] != v) {
                    Err(Error::NotSubmodule("subspace is not vertex-graded".into()))
                } else {
                    Ok(v)
                }
            })
            .collect::<Result<_>>()?;
        let actions = self
            .total_actions()
            .iter()
            .map(|m| {
                let cols = basis
                    .iter()
                    .map(|b| {
                        s.coordinates(&m.mul_vec(b))
                            .ok_or_else(|| Error::NotSubmodule("subspace is not arrow-stable".into()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Matrix::from_columns(self.field, basis.len(), &cols))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Representation::from_graded_action(quiver, self.field, &row_vertex, &actions))
    }

    /// The radical filtration `M ⊇ JM ⊇ J²M ⊇ ... ⊇ 0` in total-space
    /// coordinates, ending with the first zero term.
    pub fn radical_filtration(&self) -> Vec<Subspace> {
        let n = self.dim();
        let actions = self.total_actions();
        let mut out = vec![Subspace::full(self.field, n)];
        while out.last().unwrap().dim() > 0 {
            let cur = out.last().unwrap();
            let next = Subspace::span(
                self.field,
                n,
                actions
                    .iter()
                    .flat_map(|m| cur.basis().iter().map(move |b| m.mul_vec(b)))
                    .filter(|v| !is_zero_vector(v)),
            );
            out.push(next);
        }
        out
    }

    /// `JM` as a representation.
    pub fn radical(&self, quiver: &Quiver) -> Representation {
        let filt = self.radical_filtration();
        let jm = filt.get(1).cloned().unwrap_or_else(|| Subspace::zero(self.field, self.dim()));
        self.subrepresentation(quiver, &jm).expect("the radical is a graded submodule")
    }

    /// The sequence of radical layers `J^l M / J^{l+1} M` for `0 <= l <= loewy`.
    pub fn radical_layering(&self, loewy: usize) -> SemisimpleSequence {
        let filt = self.radical_filtration();
        let nv = self.num_vertices();
        let vertex_of = self.vertex_of();
        let graded_dims = |s: &Subspace| {
            let mut d = vec![0; nv];
            for &p in s.pivots() {
                d[vertex_of[p]] += 1;
            }
            d
        };
        let zero = vec![0; nv];
        let dims: Vec<Vec<usize>> = filt.iter().map(graded_dims).collect();
        let layers = (0..=loewy.max(filt.len().saturating_sub(2)))
            .map(|l| {
                let a = dims.get(l).unwrap_or(&zero);
                let b = dims.get(l + 1).unwrap_or(&zero);
                a.iter().zip(b).map(|(x, y)| x - y).collect()
            })
            .collect();
        SemisimpleSequence { layers }
    }

    /// Applies a base change `g_i` at every vertex: the new matrices are
    /// `g_t M_α g_s⁻¹`.
    pub fn base_change(&self, g: &[Matrix]) -> Option<Representation> {
        let inv: Vec<Matrix> = g.iter().map(Matrix::inverse).collect::<Option<_>>()?;
        let matrices = self
            .matrices
            .iter()
            .zip(&self.arrows)
            .map(|(m, &(s, t))| g[t].mul(m).mul(&inv[s]))
            .collect();
        Some(Representation {
            field: self.field,
            dims: self.dims.clone(),
            arrows: self.arrows.clone(),
            matrices,
        })
    }
}

/// A basis of `Hom_Λ(M, N)`, each element a matrix per vertex.
#[derive(Clone, Debug)]
pub struct HomSpace {
    source_dims: Vec<usize>,
    target_dims: Vec<usize>,
    field: Field,
    basis: Vec<Vec<Matrix>>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Matrix>] {
        &self.basis
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// A linear combination of basis elements.
    pub fn combination(&self, coeffs: &[Scalar]) -> Vec<Matrix> {
        let mut out: Vec<Matrix> = self
            .source_dims
            .iter()
            .zip(&self.target_dims)
            .map(|(&m, &n)| Matrix::zeros(self.field, n, m))
            .collect();
        for (c, f) in coeffs.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (o, fi) in out.iter_mut().zip(f) {
                *o = o.add(&fi.scale(c));
            }
        }
        out
    }

    /// A vertex-wise map as one block-diagonal matrix on total spaces.
    pub fn total_matrix(&self, f: &[Matrix]) -> Matrix {
        let n: usize = self.target_dims.iter().sum();
        let m: usize = self.source_dims.iter().sum();
        let mut out = Matrix::zeros(self.field, n, m);
        let (mut ro, mut co) = (0, 0);
        for fi in f {
            for i in 0..fi.rows() {
                for j in 0..fi.cols() {
                    let x = fi.get(i, j);
                    if !x.is_zero() {
                        out.set(ro + i, co + j, x.clone());
                    }
                }
            }
            ro += fi.rows();
            co += fi.cols();
        }
        out
    }
}

/// Solves `f_t M_α = N_α f_s` for all arrows. Unknowns are flattened by
/// vertex, then row, then column; the basis is in reduced echelon form in
/// that order.
pub fn hom(m: &Representation, n: &Representation) -> HomSpace {
    assert_eq!(m.field, n.field, "representations over different fields");
    let field = m.field;
    let nv = m.dims.len();
    let mut off = vec![0; nv + 1];
    for v in 0..nv {
        off[v + 1] = off[v] + n.dims[v] * m.dims[v];
    }
    let unknowns = off[nv];
    let var = |v: usize, r: usize, c: usize| off[v] + r * m.dims[v] + c;
    let mut rows: Vec<Vector> = Vec::new();
    for (a, &(s, t)) in m.arrows.iter().enumerate() {
        let ma = &m.matrices[a];
        let na = &n.matrices[a];
        for r in 0..n.dims[t] {
            for c in 0..m.dims[s] {
                let mut row = zero_vector(field, unknowns);
                for k in 0..m.dims[t] {
                    let x = ma.get(k, c);
                    if !x.is_zero() {
                        row[var(t, r, k)] += x;
                    }
                }
                for k in 0..n.dims[s] {
                    let x = na.get(r, k);
                    if !x.is_zero() {
                        row[var(s, k, c)] -= x;
                    }
                }
                if !is_zero_vector(&row) {
                    rows.push(row);
                }
            }
        }
    }
    let solutions = if rows.is_empty() {
        (0..unknowns).map(|i| unit_vector(field, unknowns, i)).collect()
    } else {
        Matrix::from_rows(field, unknowns, &rows).nullspace()
    };
    let basis = solutions
        .into_iter()
        .map(|x| {
            (0..nv)
                .map(|v| {
                    let mut f = Matrix::zeros(field, n.dims[v], m.dims[v]);
                    for r in 0..n.dims[v] {
                        for c in 0..m.dims[v] {
                            f.set(r, c, x[var(v, r, c)].clone());
                        }
                    }
                    f
                })
                .collect()
        })
        .collect();
    HomSpace {
        source_dims: m.dims.clone(),
        target_dims: n.dims.clone(),
        field,
        basis,
    }
}

pub fn hom_dim(m: &Representation, n: &Representation) -> usize {
    hom(m, n).dim()
}

/// `μ_T(M)`: the multiplicity of the simples of `T` as composition factors.
pub fn multiplicity_mu(m: &Representation, top: &Top) -> usize {
    let mut vs = top.vertices().to_vec();
    vs.dedup();
    vs.iter().map(|&v| m.dims[v]).sum()
}

/// Multiplicities `m[l][i]` of `S_i` in layer `l`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SemisimpleSequence {
    layers: Vec<Vec<usize>>,
}

impl SemisimpleSequence {
    pub fn new(layers: Vec<Vec<usize>>) -> SemisimpleSequence {
        SemisimpleSequence { layers }
    }

    pub fn layers(&self) -> &[Vec<usize>] {
        &self.layers
    }

    pub fn layer(&self, l: usize) -> &[usize] {
        &self.layers[l]
    }

    /// `(dim S_0, ..., dim S_L)`.
    pub fn dim_vector(&self) -> Vec<usize> {
        self.layers.iter().map(|l| l.iter().sum()).collect()
    }

    /// Total multiplicity of each simple, i.e. the dimension vector of the module.
    pub fn totals(&self) -> Vec<usize> {
        let nv = self.layers.first().map_or(0, Vec::len);
        (0..nv).map(|i| self.layers.iter().map(|l| l[i]).sum()).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.layers.iter().flatten().sum()
    }

    /// The partial order on semisimple sequences: equal totals, and at the
    /// first differing layer `S_j` is a proper summand of `S'_j`.
    pub fn leq(&self, other: &SemisimpleSequence) -> bool {
        if self.totals() != other.totals() {
            return false;
        }
        let len = self.layers.len().max(other.layers.len());
        let nv = self.totals().len();
        let zero = vec![0; nv];
        for j in 0..len {
            let a = self.layers.get(j).unwrap_or(&zero);
            let b = other.layers.get(j).unwrap_or(&zero);
            if a != b {
                return a.iter().zip(b).all(|(x, y)| x <= y);
            }
        }
        true
    }

    /// Lexicographic comparison of dimension vectors.
    pub fn cmp_dim_vector(&self, other: &SemisimpleSequence) -> Ordering {
        self.dim_vector().cmp(&other.dim_vector())
    }

    /// Renders as `(S1, S1⊕S2, 0)`, with `S1^2` for multiplicities.
    pub fn display<'a>(&'a self, quiver: &'a Quiver) -> SequenceDisplay<'a> {
        SequenceDisplay { quiver, seq: self }
    }
}

pub struct SequenceDisplay<'a> {
    quiver: &'a Quiver,
    seq: &'a SemisimpleSequence,
}

impl fmt::Display for SequenceDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .seq
            .layers
            .iter()
            .map(|layer| {
                let summands: Vec<String> = layer
                    .iter()
                    .enumerate()
                    .filter(|(_, &m)| m > 0)
                    .map(|(i, &m)| {
                        let label = self.quiver.vertex_label(i);
                        if m == 1 {
                            format!("S{label}")
                        } else {
                            format!("S{label}^{m}")
                        }
                    })
                    .collect();
                if summands.is_empty() {
                    "0".to_string()
                } else {
                    summands.join("⊕")
                }
            })
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `P/C` for a submodule `C` of `P`, on the non-pivot complement of `C`.
pub fn quotient_rep(cover: &ProjectiveCover, c: &Subspace) -> Result<Representation> {
    if !cover.is_submodule(c) {
        return Err(Error::NotSubmodule("subspace is not a Λ-submodule of P".into()));
    }
    let n = cover.dim();
    let complement = c.non_pivots();
    let vertex_of: Vec<usize> = complement.iter().map(|&k| cover.vertex_of(k)).collect();
    let field = cover.field();
    let actions: Vec<Matrix> = cover
        .arrow_actions()
        .iter()
        .map(|m| {
            let cols: Vec<Vector> = complement
                .iter()
                .map(|&k| {
                    let img = c.reduce(&m.mul_vec(&unit_vector(field, n, k)));
                    complement.iter().map(|&j| img[j].clone()).collect()
                })
                .collect();
            Matrix::from_columns(field, complement.len(), &cols)
        })
        .collect();
    Ok(Representation::from_graded_action(
        cover.algebra().quiver(),
        field,
        &vertex_of,
        &actions,
    ))
}

/// `C` as a representation, on a graded basis of `C`.
pub fn submodule_rep(cover: &ProjectiveCover, c: &Subspace) -> Result<Representation> {
    if !cover.is_submodule(c) {
        return Err(Error::NotSubmodule("subspace is not a Λ-submodule of P".into()));
    }
    let graded = graded_basis(cover, c);
    let vertex_of: Vec<usize> = graded.iter().map(|(v, _)| *v).collect();
    let vectors: Vec<Vector> = graded.into_iter().map(|(_, b)| b).collect();
    let field = cover.field();
    let k = vectors.len();
    // coordinates on a non-echelon basis: solve against the basis matrix
    let basis_matrix = Matrix::from_columns(field, cover.dim(), &vectors);
    let actions: Vec<Matrix> = cover
        .arrow_actions()
        .iter()
        .map(|m| {
            let cols: Vec<Vector> = vectors
                .iter()
                .map(|b| basis_matrix.solve(&m.mul_vec(b)).expect("C is arrow-stable"))
                .collect();
            Matrix::from_columns(field, k, &cols)
        })
        .collect();
    Ok(Representation::from_graded_action(
        cover.algebra().quiver(),
        field,
        &vertex_of,
        &actions,
    ))
}

/// A basis of a graded subspace of `P` made of homogeneous vectors.
pub(crate) fn graded_basis(cover: &ProjectiveCover, c: &Subspace) -> Vec<(usize, Vector)> {
    let n = cover.dim();
    let field = cover.field();
    let nv = cover.algebra().quiver().num_vertices();
    let mut out = Vec::new();
    for v in 0..nv {
        let parts = c.basis().iter().map(|b| {
            (0..n)
                .map(|k| if cover.vertex_of(k) == v { b[k].clone() } else { field.zero() })
                .collect::<Vector>()
        });
        for b in Subspace::span(field, n, parts).into_basis() {
            out.push((v, b));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn ex24() -> Arc<AlgebraPresentation> {
        let quiver = Quiver::new(["1", "2"], [("w", "1", "1"), ("a", "1", "2")]).unwrap();
        let ww = quiver.path_from_arrows(0, &[0, 0]).unwrap();
        Arc::new(
            AlgebraPresentation::build(quiver, vec![AlgElement::path(Field::Rational, ww)], 2, Field::Rational)
                .unwrap(),
        )
    }

    fn path_vec(cover: &ProjectiveCover, arrows: &[usize]) -> Vector {
        let p = cover.algebra().quiver().path_from_arrows(0, arrows).unwrap();
        cover.embed_path(&p).unwrap()
    }

    #[test]
    fn layerings_of_ex24_quotients() {
        let a = ex24();
        let cover = ProjectiveCover::new(a.clone(), &Top::new(vec![0])).unwrap();
        let q = a.quiver();
        let c_aw = cover.generated_submodule([path_vec(&cover, &[0, 1])]);
        let c_a = cover.generated_submodule([path_vec(&cover, &[1])]);
        let m1 = quotient_rep(&cover, &c_aw).unwrap();
        let m2 = quotient_rep(&cover, &c_a).unwrap();
        assert_eq!(m1.dims(), &[2, 1]);
        assert_eq!(m1.radical_layering(2).display(q).to_string(), "(S1, S1⊕S2, 0)");
        assert_eq!(m2.radical_layering(2).display(q).to_string(), "(S1, S1, S2)");
        assert!(m1.is_module_over(&a));
        assert!(m2.radical_layering(2).leq(&m1.radical_layering(2)));
        assert!(!m1.radical_layering(2).leq(&m2.radical_layering(2)));
    }

    #[test]
    fn end_of_projective() {
        let a = ex24();
        let cover = ProjectiveCover::new(a.clone(), &Top::new(vec![0])).unwrap();
        let p = Representation::of_projective(&cover);
        assert_eq!(hom_dim(&p, &p), 2);
        let jp = p.radical(a.quiver());
        // Hom(Λe1, JP) ≅ e1·JP = span{ω}
        assert_eq!(hom_dim(&p, &jp), 1);
        let s1 = Representation::simple(a.quiver(), Field::Rational, 0);
        let s2 = Representation::simple(a.quiver(), Field::Rational, 1);
        assert_eq!(hom_dim(&s1, &s1), 1);
        assert_eq!(hom_dim(&s1, &s2), 0);
    }

    #[test]
    fn submodule_rejects_non_stable() {
        let a = ex24();
        let cover = ProjectiveCover::new(a, &Top::new(vec![0])).unwrap();
        let s = Subspace::span(Field::Rational, cover.dim(), [path_vec(&cover, &[0])]);
        assert!(matches!(quotient_rep(&cover, &s), Err(Error::NotSubmodule(_))));
    }
}
