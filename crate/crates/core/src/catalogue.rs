//! Small algebras used throughout the examples and tests.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgElement, AlgebraPresentation, ProjectiveCover, Top};
use crate::field::Field;
use crate::moduli::reduced_algebra;
use crate::quiver::Quiver;

#[derive(Clone, Debug)]
pub struct CatalogueEntry {
    pub name: String,
    pub algebra: Arc<AlgebraPresentation>,
    pub top: Top,
}

impl CatalogueEntry {
    fn new(name: impl Into<String>, algebra: AlgebraPresentation, top: Vec<usize>) -> CatalogueEntry {
        CatalogueEntry {
            name: name.into(),
            algebra: Arc::new(algebra),
            top: Top::new(top),
        }
    }

    /// The projective cover of the top; panics for non-squarefree tops.
    pub fn cover(&self) -> ProjectiveCover {
        ProjectiveCover::new(self.algebra.clone(), &self.top).expect("squarefree top")
    }
}

fn path_element(q: &Quiver, start: usize, arrows: &[usize]) -> AlgElement {
    AlgElement::path(Field::Rational, q.path_from_arrows(start, arrows).expect("composable"))
}

/// A loop `w` and an arrow `a: 1 → 2` with `w² = 0`.
pub fn loop_and_arrow() -> CatalogueEntry {
    let q = Quiver::new(["1", "2"], [("w", "1", "1"), ("a", "1", "2")]).unwrap();
    let rels = vec![path_element(&q, 0, &[0, 0])];
    CatalogueEntry::new("loop-and-arrow", AlgebraPresentation::build(q, rels, 2, Field::Rational).unwrap(), vec![0])
}

/// Two loops and two arrows to 2: all products of loops vanish and
/// `a1*w1 = a2*w2`.
pub fn two_loops_two_arrows() -> CatalogueEntry {
    let q = Quiver::new(
        ["1", "2"],
        [("w1", "1", "1"), ("w2", "1", "1"), ("a1", "1", "2"), ("a2", "1", "2")],
    )
    .unwrap();
    let mut rels = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            rels.push(path_element(&q, 0, &[j, i]));
        }
    }
    rels.push(path_element(&q, 0, &[0, 2]).sub(&path_element(&q, 0, &[1, 3])));
    CatalogueEntry::new("two-loops-two-arrows", AlgebraPresentation::build(q, rels, 2, Field::Rational).unwrap(), vec![0])
}

/// Three parallel arrows `1 → 2`, no relations.
pub fn three_parallel_arrows() -> CatalogueEntry {
    let q = Quiver::new(["1", "2"], [("a", "1", "2"), ("b", "1", "2"), ("c", "1", "2")]).unwrap();
    CatalogueEntry::new("three-parallel-arrows", AlgebraPresentation::build(q, vec![], 1, Field::Rational).unwrap(), vec![0])
}

/// Three arrows `1 → 2` and three arrows `1 → 3`, no relations.
pub fn three_and_three_arrows() -> CatalogueEntry {
    let q = Quiver::new(
        ["1", "2", "3"],
        [
            ("a", "1", "2"),
            ("b", "1", "2"),
            ("c", "1", "2"),
            ("x", "1", "3"),
            ("y", "1", "3"),
            ("z", "1", "3"),
        ],
    )
    .unwrap();
    CatalogueEntry::new("three-and-three-arrows", AlgebraPresentation::build(q, vec![], 1, Field::Rational).unwrap(), vec![0])
}

/// A loop `w` at 1 and an arrow `a: 1 → 2` with `w^{m+1} = 0`.
pub fn truncated_loop(m: usize) -> CatalogueEntry {
    let q = Quiver::new(["1", "2"], [("w", "1", "1"), ("a", "1", "2")]).unwrap();
    let rels = vec![path_element(&q, 0, &vec![0; m + 1])];
    CatalogueEntry::new(
        format!("truncated-loop-{m}"),
        AlgebraPresentation::build(q, rels, m + 1, Field::Rational).unwrap(),
        vec![0],
    )
}

/// `2 ← 1 → 3` with top `S1²`.
pub fn doubled_vee() -> CatalogueEntry {
    let q = Quiver::new(["1", "2", "3"], [("a", "1", "2"), ("b", "1", "3")]).unwrap();
    CatalogueEntry::new("doubled-vee", AlgebraPresentation::build(q, vec![], 1, Field::Rational).unwrap(), vec![0, 0])
}

/// A random admissible presentation with at most three vertices and
/// Loewy length at most three, small enough for the oracle. The same seed
/// always gives the same algebra; reductions modulo 2 and 3 keep `dim Λ`.
pub fn random_admissible(seed: u64) -> CatalogueEntry {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        if let Some(entry) = try_random(&mut rng, seed) {
            return entry;
        }
    }
}

fn try_random(rng: &mut ChaCha8Rng, seed: u64) -> Option<CatalogueEntry> {
    let nv = rng.gen_range(2..=3);
    let labels: Vec<String> = (1..=nv).map(|v| v.to_string()).collect();
    let na = rng.gen_range(2..=4);
    let mut arrows = Vec::new();
    let mut loops = 0;
    for i in 0..na {
        let s = rng.gen_range(0..nv);
        let mut t = rng.gen_range(0..nv);
        if s == t {
            loops += 1;
            if loops > 1 {
                t = (s + 1) % nv;
            }
        }
        arrows.push((format!("x{}", i + 1), labels[s].clone(), labels[t].clone()));
    }
    let q = Quiver::new(labels.clone(), arrows).ok()?;
    let loewy = rng.gen_range(2..=3);
    let mut rels: Vec<AlgElement> = q
        .all_paths(loewy + 1)
        .into_iter()
        .filter(|p| p.len() == loewy + 1)
        .map(|p| AlgElement::path(Field::Rational, p))
        .collect();
    let twos: Vec<_> = q.all_paths(2).into_iter().filter(|p| p.len() == 2).collect();
    for _ in 0..rng.gen_range(1..=2) {
        if twos.is_empty() {
            break;
        }
        let p = &twos[rng.gen_range(0..twos.len())];
        let partners: Vec<_> = twos
            .iter()
            .filter(|r| r.start() == p.start() && r.end() == p.end() && *r != p)
            .collect();
        let coefficient = |rng: &mut ChaCha8Rng| {
            let c = [-2, -1, 1, 2][rng.gen_range(0..4)];
            Field::Rational.from_i64(c)
        };
        let mut rel = AlgElement::monomial(coefficient(rng), p.clone());
        if let Some(r) = partners.first() {
            rel.add_term((*r).clone(), coefficient(rng));
        }
        rels.push(rel);
    }
    let algebra = AlgebraPresentation::build(q, rels, loewy, Field::Rational).ok()?;
    let top = Top::new(vec![0]);
    let arc = Arc::new(algebra);
    let dim_p = ProjectiveCover::new(arc.clone(), &top).ok()?.dim();
    if !(4..=7).contains(&dim_p) {
        return None;
    }
    for p in [2, 3] {
        reduced_algebra(&arc, p).ok()?;
    }
    Some(CatalogueEntry {
        name: format!("random-{seed}"),
        algebra: arc,
        top,
    })
}

/// The algebras with squarefree top used by the property suites.
pub fn catalogue() -> Vec<CatalogueEntry> {
    vec![
        loop_and_arrow(),
        two_loops_two_arrows(),
        three_parallel_arrows(),
        three_and_three_arrows(),
        truncated_loop(2),
        random_admissible(7),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogue_dimensions() {
        let dims: Vec<usize> = catalogue().iter().take(5).map(|e| e.cover().dim()).collect();
        assert_eq!(dims, vec![4, 8, 4, 7, 6]);
    }

    #[test]
    fn random_is_deterministic() {
        let a = random_admissible(7);
        let b = random_admissible(7);
        assert_eq!(a.algebra.basis(), b.algebra.basis());
        assert!(a.algebra.loewy() <= 3);
        assert!(a.algebra.quiver().num_vertices() <= 3);
    }
}
