//! Affine charts `Grass(σ)`: the congruence rewriting that expresses a path
//! combination on the skeleton basis, the chart polynomials, and the maps
//! between chart points, submodules and representations.

use std::collections::{BTreeMap, HashMap};

use rand::Rng;

use crate::algebra::{AlgElement, AlgebraPresentation, ProjectiveCover};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{Matrix, Subspace, Vector};
use crate::poly::{x_name, Poly};
use crate::quiver::{Path, Quiver};
use crate::representation::Representation;
use crate::skeleton::{critical_pairs, CriticalPair, Skeleton};

/// The variable `X_{αp,q}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChartVariable {
    /// Index into the critical pair list.
    pub pair: usize,
    pub target: Path,
}

/// Polynomial coefficients on the skeleton basis, keyed by position in σ.
pub type Reduction = BTreeMap<usize, Poly>;

fn variables_of(pairs: &[CriticalPair]) -> Vec<ChartVariable> {
    pairs
        .iter()
        .enumerate()
        .flat_map(|(i, cp)| {
            cp.targets.iter().map(move |q| ChartVariable {
                pair: i,
                target: q.clone(),
            })
        })
        .collect()
}

/// Rewrites paths modulo the congruence of a skeleton: the shortest right
/// subpath `αp` outside σ is replaced by `Σ_q X_{αp,q} q` until only σ-paths
/// remain. Results are memoized per path.
pub struct Reducer<'a> {
    algebra: &'a AlgebraPresentation,
    sigma: &'a Skeleton,
    pairs: Vec<CriticalPair>,
    variables: Vec<ChartVariable>,
    pair_by_extended: HashMap<Path, usize>,
    first_variable: Vec<usize>,
    prune_routes: bool,
    memo: HashMap<Path, Reduction>,
}

impl<'a> Reducer<'a> {
    pub fn new(algebra: &'a AlgebraPresentation, sigma: &'a Skeleton, omit_ideal: bool, prune_routes: bool) -> Reducer<'a> {
        let pairs = critical_pairs(algebra, sigma, omit_ideal);
        let variables = variables_of(&pairs);
        let pair_by_extended = pairs.iter().enumerate().map(|(i, cp)| (cp.extended.clone(), i)).collect();
        let mut first_variable = Vec::with_capacity(pairs.len());
        let mut acc = 0;
        for cp in &pairs {
            first_variable.push(acc);
            acc += cp.targets.len();
        }
        Reducer {
            algebra,
            sigma,
            pairs,
            variables,
            pair_by_extended,
            first_variable,
            prune_routes,
            memo: HashMap::new(),
        }
    }

    pub fn pairs(&self) -> &[CriticalPair] {
        &self.pairs
    }

    pub fn variables(&self) -> &[ChartVariable] {
        &self.variables
    }

    fn field(&self) -> Field {
        self.algebra.field()
    }

    /// One rewriting step on a path: `Ok(position)` when the path lies in
    /// σ, otherwise the list of `(variable, z'q)` replacing it (empty when the
    /// path is congruent to zero).
    fn step(&self, u: &Path) -> std::result::Result<usize, Vec<(usize, Path)>> {
        let q = self.algebra.quiver();
        if !self.sigma.contains(&Path::vertex(u.start())) {
            return Err(Vec::new());
        }
        if self.prune_routes && !self.sigma.is_route(q, u) {
            return Err(Vec::new());
        }
        let k = (0..=u.len())
            .rev()
            .find(|&k| self.sigma.contains(&u.right_subpath(k, q)))
            .expect("the vertex path at the start lies in σ");
        if k == u.len() {
            return Ok(self.sigma.position(u).expect("in σ"));
        }
        let ap = u.right_subpath(k + 1, q);
        let Some(&pi) = self.pair_by_extended.get(&ap) else {
            return Err(Vec::new());
        };
        let rest = &u.arrows()[k + 1..];
        let out = self.pairs[pi]
            .targets
            .iter()
            .enumerate()
            .map(|(j, target)| {
                let mut w = target.clone();
                for &a in rest {
                    w = q.extend(&w, a).expect("target ends where αp ends");
                }
                (self.first_variable[pi] + j, w)
            })
            .collect();
        Err(out)
    }

    pub fn reduce_path(&mut self, u: &Path) -> Reduction {
        if let Some(r) = self.memo.get(u) {
            return r.clone();
        }
        let field = self.field();
        let out = match self.step(u) {
            Ok(pos) => BTreeMap::from([(pos, Poly::one(field))]),
            Err(replacements) => {
                let mut acc = Reduction::new();
                for (var, w) in replacements {
                    let x = Poly::var(field, var);
                    for (pos, poly) in self.reduce_path(&w) {
                        add_into(&mut acc, pos, &x.mul(&poly));
                    }
                }
                acc
            }
        };
        self.memo.insert(u.clone(), out.clone());
        out
    }

    pub fn reduce(&mut self, z: &AlgElement) -> Reduction {
        let mut acc = Reduction::new();
        for (p, c) in z.terms() {
            for (pos, poly) in self.reduce_path(p) {
                add_into(&mut acc, pos, &poly.scale(c));
            }
        }
        acc
    }

    /// The same reduction computed without memoization, rewriting one
    /// randomly chosen non-σ term at a time.
    pub fn reduce_in_random_order(&self, z: &AlgElement, rng: &mut impl Rng) -> Reduction {
        let field = self.field();
        let mut pending: BTreeMap<Path, Poly> = z.terms().map(|(p, c)| (p.clone(), Poly::constant(c.clone()))).collect();
        let mut done = Reduction::new();
        while !pending.is_empty() {
            let i = rng.gen_range(0..pending.len());
            let key = pending.keys().nth(i).cloned().expect("index in range");
            let coeff = pending.remove(&key).expect("present");
            match self.step(&key) {
                Ok(pos) => add_into(&mut done, pos, &coeff),
                Err(replacements) => {
                    for (var, w) in replacements {
                        let term = Poly::var(field, var).mul(&coeff);
                        let entry = pending.entry(w.clone()).or_insert_with(|| Poly::zero(field));
                        entry.add_assign(&term);
                        if entry.is_zero() {
                            pending.remove(&w);
                        }
                    }
                }
            }
        }
        done
    }
}

fn add_into(acc: &mut Reduction, pos: usize, p: &Poly) {
    if p.is_zero() {
        return;
    }
    let field = p.field();
    let entry = acc.entry(pos).or_insert_with(|| Poly::zero(field));
    entry.add_assign(p);
    if entry.is_zero() {
        acc.remove(&pos);
    }
}

/// `z` expressed on the skeleton basis modulo the congruence of σ, with
/// pairs in `I` omitted and non-routes pruned.
pub fn reduce(algebra: &AlgebraPresentation, sigma: &Skeleton, z: &AlgElement) -> Reduction {
    Reducer::new(algebra, sigma, true, true).reduce(z)
}

/// The generating set `R` of `Ie_1 + ... + Ie_t`: every `ρ u` with `u` a path
/// from a top vertex and `len(u) <= L - minlen(ρ)`.
pub fn relation_generators(cover: &ProjectiveCover) -> Vec<AlgElement> {
    let algebra = cover.algebra();
    let q = algebra.quiver();
    let loewy = algebra.loewy();
    let mut out = Vec::new();
    let mut tops = cover.top().vertices().to_vec();
    tops.dedup();
    for rho in algebra.relations() {
        let m = rho.min_len().unwrap_or(0);
        if m > loewy {
            continue;
        }
        for &r in &tops {
            for u in q.paths_from(r, loewy - m) {
                let x = rho.right_mul(q, &u);
                if !x.is_zero() {
                    out.push(x);
                }
            }
        }
    }
    out
}

/// The chart `Grass(σ)` as an affine variety: variables and polynomials.
#[derive(Clone, Debug)]
pub struct ChartIdeal {
    skeleton: Skeleton,
    pairs: Vec<CriticalPair>,
    variables: Vec<ChartVariable>,
    polynomials: Vec<Poly>,
    field: Field,
}

impl ChartIdeal {
    pub fn skeleton(&self) -> &Skeleton {
        &self.skeleton
    }

    pub fn pairs(&self) -> &[CriticalPair] {
        &self.pairs
    }

    pub fn variables(&self) -> &[ChartVariable] {
        &self.variables
    }

    pub fn num_variables(&self) -> usize {
        self.variables.len()
    }

    pub fn polynomials(&self) -> &[Poly] {
        &self.polynomials
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// `X_{(α, p), q}` with paths in the quiver's notation.
    pub fn describe_variable(&self, quiver: &Quiver, i: usize) -> String {
        let v = &self.variables[i];
        format!(
            "X_{{{}, {}}}",
            self.pairs[v.pair].display(quiver),
            quiver.path_name(&v.target)
        )
    }

    pub fn render_polynomial(&self, i: usize) -> String {
        self.polynomials[i].display(&x_name).to_string()
    }

    /// The first polynomial not vanishing at `c`, with its value.
    pub fn first_violation(&self, c: &[Scalar]) -> Option<(usize, Scalar)> {
        self.polynomials.iter().enumerate().find_map(|(i, p)| {
            let v = p.eval(c);
            (!v.is_zero()).then_some((i, v))
        })
    }

    pub fn contains_point(&self, c: &[Scalar]) -> bool {
        c.len() == self.variables.len() && self.first_violation(c).is_none()
    }
}

/// Builds the chart ideal of σ: the coefficients of every generator of `R`
/// reduced on the skeleton basis, canonicalized and deduplicated.
pub fn chart_ideal(cover: &ProjectiveCover, sigma: &Skeleton) -> Result<ChartIdeal> {
    let algebra = cover.algebra();
    cover.top().check_squarefree(algebra.quiver())?;
    let mut reducer = Reducer::new(algebra, sigma, true, true);
    let mut polys: Vec<Poly> = Vec::new();
    for rho in relation_generators(cover) {
        for (_, p) in reducer.reduce(&rho) {
            polys.push(p.canonical());
        }
    }
    polys.sort_by(|a, b| a.canonical_cmp(b));
    polys.dedup();
    Ok(ChartIdeal {
        skeleton: sigma.clone(),
        pairs: reducer.pairs().to_vec(),
        variables: reducer.variables().to_vec(),
        polynomials: polys,
        field: algebra.field(),
    })
}

fn check_point(ideal: &ChartIdeal, c: &[Scalar]) -> Result<()> {
    if c.len() != ideal.num_variables() {
        return Err(Error::InvalidInput(format!(
            "point has {} coordinates, the chart has {} variables",
            c.len(),
            ideal.num_variables()
        )));
    }
    if let Some((i, v)) = ideal.first_violation(c) {
        return Err(Error::NotOnChart {
            polynomial: ideal.render_polynomial(i),
            value: v.to_string(),
        });
    }
    Ok(())
}

/// `U(c) = Σ Λ(αp - Σ_q c_{αp,q} q)` inside `P`.
pub fn submodule_from_point(cover: &ProjectiveCover, ideal: &ChartIdeal, c: &[Scalar]) -> Result<Subspace> {
    check_point(ideal, c)?;
    let mut generators: Vec<Vector> = Vec::new();
    let mut var = 0;
    for cp in ideal.pairs() {
        let mut g = cover.embed_path(&cp.extended).expect("critical paths start at top vertices");
        for q in &cp.targets {
            let v = cover.embed_path(q).expect("skeleton paths start at top vertices");
            crate::linalg::axpy(&mut g, &-&c[var], &v);
            var += 1;
        }
        generators.push(g);
    }
    let u = cover.generated_submodule(generators);
    let d = ideal.skeleton().dim();
    if u.dim() + d != cover.dim() {
        return Err(Error::Rank {
            expected: d,
            found: cover.dim() - u.dim(),
        });
    }
    Ok(u)
}

/// The σ-basis of `P/C`: expresses elements of `P` modulo `C` on the
/// images of the skeleton paths.
pub struct QuotientBasis {
    c: Subspace,
    complement: Vec<usize>,
    basis: Matrix,
}

impl QuotientBasis {
    pub fn new(cover: &ProjectiveCover, sigma: &Skeleton, c: &Subspace) -> Result<QuotientBasis> {
        if !sigma.is_skeleton_of_quotient(cover, c) {
            return Err(Error::SkeletonMismatch(
                "the skeleton is not a skeleton of P/C".into(),
            ));
        }
        let complement = c.non_pivots();
        let cols: Vec<Vector> = sigma
            .paths()
            .iter()
            .map(|p| {
                let v = c.reduce(&cover.embed_path(p).expect("skeleton paths start at top vertices"));
                complement.iter().map(|&k| v[k].clone()).collect()
            })
            .collect();
        let basis = Matrix::from_columns(cover.field(), complement.len(), &cols);
        Ok(QuotientBasis {
            c: c.clone(),
            complement,
            basis,
        })
    }

    /// Coordinates of `v + C` on the σ-basis.
    pub fn coordinates(&self, v: &[Scalar]) -> Vector {
        let r = self.c.reduce(v);
        let local: Vector = self.complement.iter().map(|&k| r[k].clone()).collect();
        self.basis.solve(&local).expect("the σ-paths form a basis of P/C")
    }
}

/// The chart coordinates of a submodule: the expansion of each `αp` modulo
/// `C` on the σ-basis, restricted to `σ(α, p)`.
pub fn point_from_submodule(cover: &ProjectiveCover, ideal: &ChartIdeal, c: &Subspace) -> Result<Vec<Scalar>> {
    let sigma = ideal.skeleton();
    let qb = QuotientBasis::new(cover, sigma, c)?;
    let mut out = Vec::with_capacity(ideal.num_variables());
    for cp in ideal.pairs() {
        let coords = qb.coordinates(&cover.embed_path(&cp.extended).expect("starts at a top vertex"));
        for q in &cp.targets {
            out.push(coords[sigma.position(q).expect("target in σ")].clone());
        }
    }
    Ok(out)
}

/// The representation on the σ-basis attached to a chart point: `α` sends
/// `p` to `αp` when that lies in σ, and to `Σ_q c_{αp,q} q` otherwise.
pub fn module_from_point(cover: &ProjectiveCover, ideal: &ChartIdeal, c: &[Scalar]) -> Result<Representation> {
    check_point(ideal, c)?;
    let algebra = cover.algebra();
    let q = algebra.quiver();
    let sigma = ideal.skeleton();
    let field = cover.field();
    let d = sigma.dim();
    let mut first = HashMap::new();
    let mut acc = 0;
    for (i, cp) in ideal.pairs().iter().enumerate() {
        first.insert((cp.arrow, cp.path.clone()), (i, acc));
        acc += cp.targets.len();
    }
    let actions: Vec<Matrix> = (0..q.num_arrows())
        .map(|a| {
            let mut m = Matrix::zeros(field, d, d);
            for (j, p) in sigma.paths().iter().enumerate() {
                let Some(ap) = q.extend(p, a) else { continue };
                if let Some(i) = sigma.position(&ap) {
                    m.set(i, j, field.one());
                } else if let Some(&(pi, start)) = first.get(&(a, p.clone())) {
                    for (k, t) in ideal.pairs()[pi].targets.iter().enumerate() {
                        m.set(sigma.position(t).expect("target in σ"), j, c[start + k].clone());
                    }
                }
            }
            m
        })
        .collect();
    let vertex_of: Vec<usize> = sigma.paths().iter().map(Path::end).collect();
    Ok(Representation::from_graded_action(q, field, &vertex_of, &actions))
}

/// The change of basis from the σ'-basis of `P/C` to its σ-basis.
pub fn transition_matrix(cover: &ProjectiveCover, sigma: &Skeleton, sigma2: &Skeleton, c: &Subspace) -> Result<Matrix> {
    let qb = QuotientBasis::new(cover, sigma, c)?;
    if !sigma2.is_skeleton_of_quotient(cover, c) {
        return Err(Error::SkeletonMismatch(
            "the second skeleton is not a skeleton of P/C".into(),
        ));
    }
    let cols: Vec<Vector> = sigma2
        .paths()
        .iter()
        .map(|p| qb.coordinates(&cover.embed_path(p).expect("starts at a top vertex")))
        .collect();
    Ok(Matrix::from_columns(cover.field(), sigma.dim(), &cols))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Top;
    use std::sync::Arc;

    fn ex316() -> Arc<AlgebraPresentation> {
        let q = Quiver::new(
            ["1", "2"],
            [("w1", "1", "1"), ("w2", "1", "1"), ("a1", "1", "2"), ("a2", "1", "2")],
        )
        .unwrap();
        let f = Field::Rational;
        let path = |arrows: &[usize]| q.path_from_arrows(0, arrows).unwrap();
        let mut rels = Vec::new();
        for i in 0..2 {
            for j in 0..2 {
                rels.push(AlgElement::path(f, path(&[j, i])));
            }
        }
        rels.push(AlgElement::path(f, path(&[0, 2])).sub(&AlgElement::path(f, path(&[1, 3]))));
        Arc::new(AlgebraPresentation::build(q, rels, 2, f).unwrap())
    }

    #[test]
    fn ex316_chart() {
        let a = ex316();
        let q = a.quiver();
        let top = Top::new(vec![0]);
        let cover = ProjectiveCover::new(a.clone(), &top).unwrap();
        let path = |arrows: &[usize]| q.path_from_arrows(0, arrows).unwrap();
        let sigma = Skeleton::new(&a, &top, vec![path(&[]), path(&[0]), path(&[0, 2]), path(&[3])]).unwrap();
        let ideal = chart_ideal(&cover, &sigma).unwrap();
        assert_eq!(ideal.num_variables(), 4);
        assert_eq!(ideal.polynomials().len(), 1);
        assert_eq!(ideal.render_polynomial(0), "1 - X1*X4");
        assert_eq!(ideal.describe_variable(q, 0), "X_{(w2, e1), w1}");
        assert_eq!(ideal.describe_variable(q, 3), "X_{(a2, w1), a1*w1}");

        let f = Field::Rational;
        let c: Vec<Scalar> = [2, 5, -1, 1].iter().map(|&n| f.from_i64(n)).collect();
        assert!(matches!(
            submodule_from_point(&cover, &ideal, &c),
            Err(Error::NotOnChart { .. })
        ));
        let half = Scalar::Q(num_rational::BigRational::new(1.into(), 2.into()));
        let c = vec![f.from_i64(2), f.from_i64(5), f.from_i64(-1), half];
        let u = submodule_from_point(&cover, &ideal, &c).unwrap();
        assert_eq!(point_from_submodule(&cover, &ideal, &u).unwrap(), c);
        let m = module_from_point(&cover, &ideal, &c).unwrap();
        assert!(m.is_module_over(&a));
    }

    #[test]
    fn random_order_matches_memoized() {
        use rand::SeedableRng;
        let a = ex316();
        let q = a.quiver();
        let top = Top::new(vec![0]);
        let path = |arrows: &[usize]| q.path_from_arrows(0, arrows).unwrap();
        let sigma = Skeleton::new(&a, &top, vec![path(&[]), path(&[0]), path(&[0, 2]), path(&[3])]).unwrap();
        let rho = a.relations()[4].clone();
        let mut r = Reducer::new(&a, &sigma, true, true);
        let expected = r.reduce(&rho);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            assert_eq!(r.reduce_in_random_order(&rho, &mut rng), expected);
        }
        let mut unpruned = Reducer::new(&a, &sigma, true, false);
        assert_eq!(unpruned.reduce(&rho), expected);
        for rel in &a.relations()[..4] {
            assert!(r.reduce(rel).is_empty());
        }
    }
}
