//! Quivers and paths.
//!
//! A path is stored by its start vertex and its arrows in order of
//! application. Products follow the convention that `pq` means "first `q`,
//! then `p`", so the arrows of `pq` are those of `q` followed by those of `p`,
//! and the right subpaths of a path are the prefixes of its arrow sequence.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_index: HashMap<String, usize>,
    arrow_index: HashMap<String, usize>,
}

impl Quiver {
    /// Builds a quiver from vertex labels and `(name, source label, target label)` triples.
    pub fn new<V, A, S>(vertices: V, arrows: A) -> Result<Quiver>
    where
        V: IntoIterator<Item = S>,
        A: IntoIterator<Item = (S, S, S)>,
        S: Into<String>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut vertex_index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if vertex_index.insert(v.clone(), i).is_some() {
                return Err(Error::InvalidInput(format!("duplicate vertex {v}")));
            }
        }
        let mut out = Vec::new();
        let mut arrow_index = HashMap::new();
        for (name, s, t) in arrows {
            let (name, s, t) = (name.into(), s.into(), t.into());
            let source = *vertex_index
                .get(&s)
                .ok_or_else(|| Error::InvalidInput(format!("arrow {name}: unknown source vertex {s}")))?;
            let target = *vertex_index
                .get(&t)
                .ok_or_else(|| Error::InvalidInput(format!("arrow {name}: unknown target vertex {t}")))?;
            if arrow_index.insert(name.clone(), out.len()).is_some() {
                return Err(Error::InvalidInput(format!("duplicate arrow {name}")));
            }
            out.push(Arrow { name, source, target });
        }
        Ok(Quiver {
            vertices,
            arrows: out,
            vertex_index,
            arrow_index,
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.vertex_index.get(label).copied()
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_by_name(&self, name: &str) -> Option<usize> {
        self.arrow_index.get(name).copied()
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.source == v)
            .map(|(i, _)| i)
    }

    /// `αp`, when the arrow starts where `p` ends.
    pub fn extend(&self, p: &Path, arrow: usize) -> Option<Path> {
        let a = &self.arrows[arrow];
        if a.source != p.end {
            return None;
        }
        let mut arrows = p.arrows.clone();
        arrows.push(arrow);
        Some(Path {
            start: p.start,
            end: a.target,
            arrows,
        })
    }

    /// The product `u v` (first `v`, then `u`), when composable.
    pub fn compose(&self, u: &Path, v: &Path) -> Option<Path> {
        if v.end != u.start {
            return None;
        }
        let mut arrows = v.arrows.clone();
        arrows.extend_from_slice(&u.arrows);
        Some(Path {
            start: v.start,
            end: u.end,
            arrows,
        })
    }

    /// Builds a path from arrows in order of application.
    pub fn path_from_arrows(&self, start: usize, arrows: &[usize]) -> Option<Path> {
        let mut p = Path::vertex(start);
        for &a in arrows {
            p = self.extend(&p, a)?;
        }
        Some(p)
    }

    /// All paths of length at most `max_len` starting at `start`, in path order.
    pub fn paths_from(&self, start: usize, max_len: usize) -> Vec<Path> {
        let mut out = vec![Path::vertex(start)];
        let mut frontier = vec![Path::vertex(start)];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for p in &frontier {
                for a in self.arrows_from(p.end) {
                    next.push(self.extend(p, a).expect("composable"));
                }
            }
            next.sort();
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    /// All paths of length at most `max_len`, in path order.
    pub fn all_paths(&self, max_len: usize) -> Vec<Path> {
        (0..self.num_vertices())
            .flat_map(|v| self.paths_from(v, max_len))
            .collect()
    }

    /// All paths of length exactly `len`, in path order.
    pub fn paths_of_length(&self, len: usize) -> Vec<Path> {
        self.all_paths(len)
            .into_iter()
            .filter(|p| p.len() == len)
            .collect()
    }

    /// Renders a path right-to-left, e.g. `a1*w1`, or `e1` for a vertex path.
    pub fn path_name(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            return format!("e{}", self.vertices[p.start]);
        }
        p.arrows
            .iter()
            .rev()
            .map(|&a| self.arrows[a].name.as_str())
            .collect::<Vec<_>>()
            .join("*")
    }

    pub fn display<'a>(&'a self, p: &'a Path) -> PathDisplay<'a> {
        PathDisplay { quiver: self, path: p }
    }
}

pub struct PathDisplay<'a> {
    quiver: &'a Quiver,
    path: &'a Path,
}

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.quiver.path_name(self.path))
    }
}

/// A path in a quiver. The global path order compares start vertex, then
/// length, then the arrow-index sequence lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    start: usize,
    end: usize,
    arrows: Vec<usize>,
}

impl Path {
    pub fn vertex(v: usize) -> Path {
        Path {
            start: v,
            end: v,
            arrows: Vec::new(),
        }
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn end(&self) -> usize {
        self.end
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_vertex(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    /// The right subpath consisting of the first `k` arrows applied.
    pub fn right_subpath(&self, k: usize, quiver: &Quiver) -> Path {
        quiver
            .path_from_arrows(self.start, &self.arrows[..k])
            .expect("prefix of a path is a path")
    }

    /// The vertices passed through, `e(0), ..., e(l)`.
    pub fn itinerary(&self, quiver: &Quiver) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.arrows.len() + 1);
        out.push(self.start);
        for &a in &self.arrows {
            out.push(quiver.arrow(a).target);
        }
        out
    }

    /// The last arrow applied, if any.
    pub fn last_arrow(&self) -> Option<usize> {
        self.arrows.last().copied()
    }
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.start
            .cmp(&other.start)
            .then(self.arrows.len().cmp(&other.arrows.len()))
            .then_with(|| self.arrows.cmp(&other.arrows))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex24() -> Quiver {
        Quiver::new(["1", "2"], [("w", "1", "1"), ("a", "1", "2")]).unwrap()
    }

    #[test]
    fn composition_convention() {
        let q = ex24();
        let w = q.path_from_arrows(0, &[0]).unwrap();
        let a = q.path_from_arrows(0, &[1]).unwrap();
        // a*w: first w, then a
        let aw = q.compose(&a, &w).unwrap();
        assert_eq!(q.path_name(&aw), "a*w");
        assert_eq!(aw.end(), 1);
        // w*a is not composable
        assert!(q.compose(&w, &a).is_none());
        assert_eq!(aw.right_subpath(1, &q), w);
    }

    #[test]
    fn path_order_and_enumeration() {
        let q = ex24();
        let paths = q.all_paths(2);
        let names: Vec<String> = paths.iter().map(|p| q.path_name(p)).collect();
        assert_eq!(names, ["e1", "w", "a", "w*w", "a*w", "e2"]);
        let mut sorted = paths.clone();
        sorted.sort();
        assert_eq!(sorted, paths);
    }

    #[test]
    fn rejects_unknown_vertex() {
        assert!(Quiver::new(["1"], [("a", "1", "2")]).is_err());
        assert!(Quiver::new(["1", "1"], Vec::<(&str, &str, &str)>::new()).is_err());
    }
}
