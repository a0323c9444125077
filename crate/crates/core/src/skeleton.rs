//! Skeletons: right-subpath-closed path sets indexing the affine charts.

use std::fmt;

use crate::algebra::{AlgebraPresentation, ProjectiveCover, Top};
use crate::error::{Error, Result};
use crate::linalg::{Subspace, Vector};
use crate::quiver::{Path, Quiver};
use crate::representation::{Representation, SemisimpleSequence};

/// A `d`-dimensional skeleton with top `T`, stored sorted in path order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Skeleton {
    paths: Vec<Path>,
}

impl Skeleton {
    /// Validates the skeleton conditions: every path starts at a top vertex,
    /// has length at most `L`, all top vertex paths are present, and the set
    /// is closed under right subpaths.
    pub fn new(algebra: &AlgebraPresentation, top: &Top, mut paths: Vec<Path>) -> Result<Skeleton> {
        top.check_squarefree(algebra.quiver())?;
        paths.sort();
        paths.dedup();
        let q = algebra.quiver();
        for p in &paths {
            if !top.contains(p.start()) {
                return Err(Error::InvalidInput(format!(
                    "skeleton path {} does not start at a top vertex",
                    q.path_name(p)
                )));
            }
            if p.len() > algebra.loewy() {
                return Err(Error::InvalidInput(format!(
                    "skeleton path {} is longer than the Loewy bound",
                    q.path_name(p)
                )));
            }
            if !p.is_empty() {
                let parent = p.right_subpath(p.len() - 1, q);
                if paths.binary_search(&parent).is_err() {
                    return Err(Error::InvalidInput(format!(
                        "skeleton is not closed under right subpaths: {} is missing",
                        q.path_name(&parent)
                    )));
                }
            }
        }
        for &v in top.vertices() {
            if paths.binary_search(&Path::vertex(v)).is_err() {
                return Err(Error::InvalidInput(format!(
                    "skeleton is missing the top vertex path e{}",
                    q.vertex_label(v)
                )));
            }
        }
        Ok(Skeleton { paths })
    }

    pub(crate) fn from_sorted_unchecked(paths: Vec<Path>) -> Skeleton {
        Skeleton { paths }
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn dim(&self) -> usize {
        self.paths.len()
    }

    pub fn contains(&self, p: &Path) -> bool {
        self.paths.binary_search(p).is_ok()
    }

    pub fn position(&self, p: &Path) -> Option<usize> {
        self.paths.binary_search(p).ok()
    }

    /// The paths of length `l`, in path order.
    pub fn layer(&self, l: usize) -> Vec<&Path> {
        self.paths.iter().filter(|p| p.len() == l).collect()
    }

    pub fn max_len(&self) -> usize {
        self.paths.iter().map(Path::len).max().unwrap_or(0)
    }

    /// Number of paths of each length ending at each vertex.
    pub fn layer_counts(&self, num_vertices: usize, loewy: usize) -> Vec<Vec<usize>> {
        let mut out = vec![vec![0; num_vertices]; loewy.max(self.max_len()) + 1];
        for p in &self.paths {
            out[p.len()][p.end()] += 1;
        }
        out
    }

    /// Whether the path counts per length and end vertex match the layers of `s`.
    pub fn compatible(&self, s: &SemisimpleSequence) -> bool {
        let nv = s.layers().first().map_or(0, Vec::len);
        let counts = self.layer_counts(nv, s.layers().len().saturating_sub(1));
        let zero = vec![0; nv];
        (0..counts.len().max(s.layers().len()))
            .all(|l| counts.get(l).unwrap_or(&zero) == s.layers().get(l).unwrap_or(&zero))
    }

    /// Whether `u` is a route on the skeleton: its itinerary can be shadowed
    /// by skeleton paths of strictly increasing lengths starting from a
    /// vertex path.
    pub fn is_route(&self, quiver: &Quiver, u: &Path) -> bool {
        let itinerary = u.itinerary(quiver);
        if !self.contains(&Path::vertex(itinerary[0])) {
            return false;
        }
        let mut len = 0;
        for &v in &itinerary[1..] {
            match self
                .paths
                .iter()
                .filter(|p| p.end() == v && p.len() > len)
                .map(Path::len)
                .min()
            {
                Some(l) => len = l,
                None => return false,
            }
        }
        true
    }

    /// Whether the skeleton's paths are independent layer by layer modulo
    /// `J^{l+1}P`, the necessary condition for a nonempty chart.
    pub fn is_layer_independent(&self, cover: &ProjectiveCover) -> bool {
        self.is_skeleton_modulo(cover, &Subspace::zero(cover.field(), cover.dim()))
    }

    /// Whether the skeleton is a skeleton of `P/C` with respect to the
    /// generators `e_r + C`.
    pub fn is_skeleton_of_quotient(&self, cover: &ProjectiveCover, c: &Subspace) -> bool {
        cover.dim() - c.dim() == self.dim() && self.is_skeleton_modulo(cover, c)
    }

    fn is_skeleton_modulo(&self, cover: &ProjectiveCover, c: &Subspace) -> bool {
        for l in 0..=self.max_len() {
            let layer = self.layer(l);
            let modulus = cover.radical_power(l + 1).sum(c);
            let vectors: Vec<Vector> = layer
                .iter()
                .map(|p| cover.embed_path(p).expect("skeleton paths start at top vertices"))
                .collect();
            let with = modulus.with_vectors(vectors);
            if with.dim() != modulus.dim() + layer.len() {
                return false;
            }
        }
        true
    }

    pub fn display<'a>(&'a self, quiver: &'a Quiver) -> SkeletonDisplay<'a> {
        SkeletonDisplay { quiver, skeleton: self }
    }
}

pub struct SkeletonDisplay<'a> {
    quiver: &'a Quiver,
    skeleton: &'a Skeleton,
}

impl fmt::Display for SkeletonDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.skeleton.paths.iter().map(|p| self.quiver.path_name(p)).collect();
        write!(f, "{{{}}}", names.join(", "))
    }
}

/// All `d`-dimensional skeletons with top `T`, in canonical order. With
/// `prune`, skeletons whose layers are dependent modulo the next radical
/// power of `P` are dropped.
pub fn enumerate_skeletons(cover: &ProjectiveCover, d: usize, prune: bool) -> Result<Vec<Skeleton>> {
    let algebra = cover.algebra();
    let top = cover.top();
    top.check_squarefree(algebra.quiver())?;
    if d < top.len() {
        return Ok(Vec::new());
    }
    let q = algebra.quiver();
    let loewy = algebra.loewy();
    let chosen: Vec<Path> = top.vertices().iter().map(|&v| Path::vertex(v)).collect();
    let mut frontier: Vec<Path> = chosen.iter().flat_map(|p| children(q, p, loewy)).collect();
    frontier.sort();
    let mut out = Vec::new();
    grow(q, loewy, d, &mut chosen.clone(), &frontier, &mut out);
    for s in &mut out {
        s.sort();
    }
    out.sort();
    let skeletons = out.into_iter().map(Skeleton::from_sorted_unchecked);
    Ok(if prune {
        skeletons.filter(|s| s.is_layer_independent(cover)).collect()
    } else {
        skeletons.collect()
    })
}

fn children(q: &Quiver, p: &Path, loewy: usize) -> Vec<Path> {
    if p.len() >= loewy {
        return Vec::new();
    }
    q.arrows_from(p.end()).filter_map(|a| q.extend(p, a)).collect()
}

/// Include/exclude branching on the first frontier path; every
/// right-subpath-closed set is produced exactly once.
fn grow(q: &Quiver, loewy: usize, d: usize, chosen: &mut Vec<Path>, frontier: &[Path], out: &mut Vec<Vec<Path>>) {
    if chosen.len() == d {
        out.push(chosen.clone());
        return;
    }
    let Some((first, rest)) = frontier.split_first() else {
        return;
    };
    let mut next: Vec<Path> = rest.to_vec();
    next.extend(children(q, first, loewy));
    chosen.push(first.clone());
    grow(q, loewy, d, chosen, &next, out);
    chosen.pop();
    grow(q, loewy, d, chosen, rest, out);
}

/// A σ-critical pair `(α, p)` with its target set `σ(α, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CriticalPair {
    pub arrow: usize,
    pub path: Path,
    /// `αp`.
    pub extended: Path,
    pub targets: Vec<Path>,
}

impl CriticalPair {
    pub fn display(&self, quiver: &Quiver) -> String {
        format!("({}, {})", quiver.arrow(self.arrow).name, quiver.path_name(&self.path))
    }
}

/// The σ-critical pairs ordered by `αp` in path order. With `omit_ideal`,
/// pairs with `αp` zero in `Λ` are dropped.
pub fn critical_pairs(algebra: &AlgebraPresentation, sigma: &Skeleton, omit_ideal: bool) -> Vec<CriticalPair> {
    let q = algebra.quiver();
    let mut out = Vec::new();
    for p in sigma.paths() {
        for a in q.arrows_from(p.end()) {
            let ap = q.extend(p, a).expect("composable");
            if sigma.contains(&ap) {
                continue;
            }
            if omit_ideal && algebra.path_normal_form(&ap).is_zero() {
                continue;
            }
            let targets = sigma
                .paths()
                .iter()
                .filter(|s| s.start() == p.start() && s.end() == ap.end() && s.len() >= ap.len())
                .cloned()
                .collect();
            out.push(CriticalPair {
                arrow: a,
                path: p.clone(),
                extended: ap,
                targets,
            });
        }
    }
    out.sort_by(|x, y| x.extended.cmp(&y.extended));
    out
}

/// The greedy skeleton of a module with top `T`: layer by layer, candidate
/// paths `αp` are scanned in path order and kept when they extend a basis of
/// `J^l M / J^{l+1} M`. The generator at top vertex `r` is the first basis
/// vector of `e_r M` outside `JM`.
pub fn skeleton_of(algebra: &AlgebraPresentation, top: &Top, m: &Representation) -> Result<Skeleton> {
    top.check_squarefree(algebra.quiver())?;
    let q = algebra.quiver();
    let filt = m.radical_filtration();
    let layering = m.radical_layering(algebra.loewy());
    let expected = top.multiplicities(q.num_vertices());
    if layering.layer(0) != expected.as_slice() {
        return Err(Error::TopMismatch(format!(
            "module has top {}, expected a top with multiplicities {:?}",
            layering.display(q),
            expected
        )));
    }
    let n = m.dim();
    let field = m.field();
    let off = m.offsets();
    let jm = filt.get(1).cloned().unwrap_or_else(|| Subspace::zero(field, n));
    let mut generators: Vec<(usize, Vector)> = Vec::new();
    for &r in top.vertices() {
        let x = (off[r]..off[r] + m.dims()[r])
            .map(|k| crate::linalg::unit_vector(field, n, k))
            .find(|v| !jm.contains(v))
            .expect("top vertex has a generator");
        generators.push((r, x));
    }
    let actions = m.total_actions();
    let mut chosen: Vec<Path> = top.vertices().iter().map(|&v| Path::vertex(v)).collect();
    // (path, its image in M)
    let mut current: Vec<(Path, Vector)> = generators.iter().map(|(r, x)| (Path::vertex(*r), x.clone())).collect();
    let mut l = 0;
    while !current.is_empty() {
        let below = filt.get(l + 2).cloned().unwrap_or_else(|| Subspace::zero(field, n));
        let mut candidates: Vec<(Path, Vector)> = current
            .iter()
            .flat_map(|(p, x)| {
                let actions = &actions;
                q.arrows_from(p.end())
                    .map(move |a| (q.extend(p, a).expect("composable"), actions[a].mul_vec(x)))
            })
            .collect();
        candidates.sort_by(|a, b| a.0.cmp(&b.0));
        let mut span = below;
        let mut next = Vec::new();
        for (p, v) in candidates {
            let grown = span.with_vectors([v.clone()]);
            if grown.dim() > span.dim() {
                span = grown;
                chosen.push(p.clone());
                next.push((p, v));
            }
        }
        current = next;
        l += 1;
    }
    Skeleton::new(algebra, top, chosen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgElement;
    use crate::field::Field;
    use crate::representation::quotient_rep;
    use std::sync::Arc;

    fn ex24() -> Arc<AlgebraPresentation> {
        let quiver = Quiver::new(["1", "2"], [("w", "1", "1"), ("a", "1", "2")]).unwrap();
        let ww = quiver.path_from_arrows(0, &[0, 0]).unwrap();
        Arc::new(
            AlgebraPresentation::build(quiver, vec![AlgElement::path(Field::Rational, ww)], 2, Field::Rational)
                .unwrap(),
        )
    }

    #[test]
    fn ex24_skeletons() {
        let a = ex24();
        let cover = ProjectiveCover::new(a.clone(), &Top::new(vec![0])).unwrap();
        let q = a.quiver();
        let raw: Vec<String> = enumerate_skeletons(&cover, 3, false)
            .unwrap()
            .iter()
            .map(|s| s.display(q).to_string())
            .collect();
        assert_eq!(raw, ["{e1, w, a}", "{e1, w, w*w}", "{e1, w, a*w}"]);
        let pruned: Vec<String> = enumerate_skeletons(&cover, 3, true)
            .unwrap()
            .iter()
            .map(|s| s.display(q).to_string())
            .collect();
        assert_eq!(pruned, ["{e1, w, a}", "{e1, w, a*w}"]);
        assert_eq!(enumerate_skeletons(&cover, 1, false).unwrap().len(), 1);
    }

    #[test]
    fn routes_and_pairs() {
        let a = ex24();
        let q = a.quiver();
        let top = Top::new(vec![0]);
        let p = |arrows: &[usize]| q.path_from_arrows(0, arrows).unwrap();
        let s1 = Skeleton::new(&a, &top, vec![p(&[]), p(&[0]), p(&[1])]).unwrap();
        let s2 = Skeleton::new(&a, &top, vec![p(&[]), p(&[0]), p(&[0, 1])]).unwrap();
        assert!(!s1.is_route(q, &p(&[0, 1])));
        assert!(s2.is_route(q, &p(&[0, 1])));
        let pairs1 = critical_pairs(&a, &s1, true);
        assert_eq!(pairs1.len(), 1);
        assert_eq!(pairs1[0].display(q), "(a, w)");
        assert!(pairs1[0].targets.is_empty());
        let pairs2 = critical_pairs(&a, &s2, true);
        assert_eq!(pairs2.len(), 1);
        assert_eq!(pairs2[0].display(q), "(a, e1)");
        assert_eq!(pairs2[0].targets, vec![p(&[0, 1])]);
    }

    #[test]
    fn greedy_skeleton_of_quotients() {
        let a = ex24();
        let top = Top::new(vec![0]);
        let cover = ProjectiveCover::new(a.clone(), &top).unwrap();
        let q = a.quiver();
        let aw = cover.embed_path(&q.path_from_arrows(0, &[0, 1]).unwrap()).unwrap();
        let al = cover.embed_path(&q.path_from_arrows(0, &[1]).unwrap()).unwrap();
        let m1 = quotient_rep(&cover, &cover.generated_submodule([aw])).unwrap();
        let m2 = quotient_rep(&cover, &cover.generated_submodule([al])).unwrap();
        let s1 = skeleton_of(&a, &top, &m1).unwrap();
        let s2 = skeleton_of(&a, &top, &m2).unwrap();
        assert_eq!(s1.display(q).to_string(), "{e1, w, a}");
        assert_eq!(s2.display(q).to_string(), "{e1, w, a*w}");
        assert!(s1.compatible(&m1.radical_layering(2)));
        assert!(!s1.compatible(&m2.radical_layering(2)));
        assert!(s2.compatible(&m2.radical_layering(2)));
    }
}
