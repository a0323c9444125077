//! Brute-force ground truth over a prime field: the points of `Grass_d^T`,
//! `Aut_Λ(P)`-orbits, isomorphism classes, and chart cross-checks.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::algebra::ProjectiveCover;
use crate::chart::{chart_ideal, point_from_submodule, submodule_from_point, ChartIdeal};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{unit_vector, zero_vector, Matrix, Subspace, Vector};
use crate::moduli::{endomorphism_from_images, orbit_dim, unipotent_orbit_dim};
use crate::representation::{hom, hom_dim, quotient_rep, Representation, SemisimpleSequence};
use crate::skeleton::Skeleton;

pub const DEFAULT_BUDGET: u128 = 1_000_000;

/// Number of `k`-dimensional subspaces of `F_q^n`.
pub fn gaussian_binomial(n: usize, k: usize, q: u64) -> u128 {
    if k > n {
        return 0;
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num = num.saturating_mul(q.saturating_pow((n - i) as u32).saturating_sub(1));
        den = den.saturating_mul(q.saturating_pow((i + 1) as u32) - 1);
    }
    if num == u128::MAX {
        return u128::MAX;
    }
    num / den
}

fn prime_of(field: Field) -> Result<u32> {
    match field {
        Field::Prime(p) => Ok(p),
        Field::Rational => Err(Error::InvalidInput("the oracle needs a finite field".into())),
    }
}

/// All `k`-dimensional subspaces of the span of the given coordinates, as
/// reduced echelon row sets in the ambient space.
fn subspaces_of_coordinates(field: Field, ambient: usize, coords: &[usize], k: usize) -> Vec<Vec<Vector>> {
    let n = coords.len();
    let elements = field.elements().expect("finite field");
    let mut out = Vec::new();
    let mut pivots: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        // free positions: (row, column) with column > pivot[row] and not a pivot
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|r| {
                let pivots = &pivots;
                ((pivots[r] + 1)..n).filter(move |c| !pivots.contains(c)).map(move |c| (r, c))
            })
            .collect();
        let mut digits = vec![0usize; free.len()];
        loop {
            let mut rows: Vec<Vector> = (0..k)
                .map(|r| unit_vector(field, ambient, coords[pivots[r]]))
                .collect();
            for (&(r, c), &dgt) in free.iter().zip(&digits) {
                rows[r][coords[c]] = elements[dgt].clone();
            }
            out.push(rows);
            if !advance(&mut digits, elements.len()) {
                break;
            }
        }
        if !next_combination(&mut pivots, n) {
            break;
        }
    }
    out
}

/// Odometer increment; false after the last value.
fn advance(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
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

/// The Λ-submodules `C ⊆ JP` with `dim P/C = d`, as vertex-graded subspaces
/// in reduced echelon form. The number of candidate subspaces is checked
/// against the budget first.
pub fn enumerate_points(cover: &ProjectiveCover, d: usize, budget: u128) -> Result<Vec<Subspace>> {
    let field = cover.field();
    let q = prime_of(field)? as u64;
    let n = cover.dim();
    if d > n || d < cover.top().len() {
        return Ok(Vec::new());
    }
    let target = n - d;
    let nv = cover.algebra().quiver().num_vertices();
    let coords: Vec<Vec<usize>> = (0..nv)
        .map(|v| (0..n).filter(|&k| cover.is_radical(k) && cover.vertex_of(k) == v).collect())
        .collect();

    // per-vertex dimension vectors of C summing to `target`
    let mut splits: Vec<Vec<usize>> = Vec::new();
    let mut cur = vec![0; nv];
    fn splits_rec(v: usize, left: usize, coords: &[Vec<usize>], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if v == coords.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for c in 0..=left.min(coords[v].len()) {
            cur[v] = c;
            splits_rec(v + 1, left - c, coords, cur, out);
        }
        cur[v] = 0;
    }
    splits_rec(0, target, &coords, &mut cur, &mut splits);
    let needed = splits.iter().fold(0u128, |acc, s| {
        let prod = s
            .iter()
            .enumerate()
            .fold(1u128, |p, (v, &c)| p.saturating_mul(gaussian_binomial(coords[v].len(), c, q)));
        acc.saturating_add(prod)
    });
    if needed > budget {
        return Err(Error::OracleScale {
            what: format!("subspace enumeration at d = {d}"),
            needed,
            budget,
        });
    }

    let arrows: Vec<(usize, usize)> = cover
        .algebra()
        .quiver()
        .arrows()
        .iter()
        .map(|a| (a.source, a.target))
        .collect();
    let mut out = Vec::new();
    for split in splits {
        let choices: Vec<Vec<Vec<Vector>>> = (0..nv)
            .map(|v| subspaces_of_coordinates(field, n, &coords[v], split[v]))
            .collect();
        let mut chosen: Vec<Subspace> = Vec::with_capacity(nv);
        combine(cover, &arrows, &choices, &mut chosen, &mut out);
    }
    Ok(out)
}

fn combine(
    cover: &ProjectiveCover,
    arrows: &[(usize, usize)],
    choices: &[Vec<Vec<Vector>>],
    chosen: &mut Vec<Subspace>,
    out: &mut Vec<Subspace>,
) {
    let v = chosen.len();
    let field = cover.field();
    let n = cover.dim();
    if v == choices.len() {
        out.push(Subspace::span(field, n, chosen.iter().flat_map(|s| s.basis().iter().cloned())));
        return;
    }
    for rows in &choices[v] {
        let s = Subspace::span(field, n, rows.iter().cloned());
        chosen.push(s);
        // arrows between vertices decided so far
        let ok = arrows.iter().enumerate().all(|(a, &(src, tgt))| {
            if src > v || tgt > v || (src != v && tgt != v) {
                return true;
            }
            let m = cover.arrow_action(a);
            chosen[src].basis().iter().all(|b| chosen[tgt].contains(&m.mul_vec(b)))
        });
        if ok {
            combine(cover, arrows, choices, chosen, out);
        }
        chosen.pop();
    }
}

/// The enumerated points of `Grass_d^T` over a prime field, with their
/// quotient modules and radical layerings.
pub struct OracleScene {
    cover: ProjectiveCover,
    d: usize,
    points: Vec<Subspace>,
    index: HashMap<Subspace, usize>,
    quotients: Vec<Representation>,
    layerings: Vec<SemisimpleSequence>,
}

impl OracleScene {
    pub fn new(cover: ProjectiveCover, d: usize, budget: u128) -> Result<OracleScene> {
        let points = enumerate_points(&cover, d, budget)?;
        let index = points.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let loewy = cover.algebra().loewy();
        let quotients: Vec<Representation> = points
            .iter()
            .map(|c| quotient_rep(&cover, c).expect("enumerated points are submodules"))
            .collect();
        let layerings = quotients.iter().map(|m| m.radical_layering(loewy)).collect();
        Ok(OracleScene {
            cover,
            d,
            points,
            index,
            quotients,
            layerings,
        })
    }

    pub fn cover(&self) -> &ProjectiveCover {
        &self.cover
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn q(&self) -> u32 {
        prime_of(self.cover.field()).expect("scene over a prime field")
    }

    pub fn points(&self) -> &[Subspace] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn quotient(&self, i: usize) -> &Representation {
        &self.quotients[i]
    }

    pub fn layering(&self, i: usize) -> &SemisimpleSequence {
        &self.layerings[i]
    }

    pub fn point_index(&self, c: &Subspace) -> Option<usize> {
        self.index.get(c).copied()
    }

    /// Points grouped by radical layering, layerings in sorted order.
    pub fn layering_classes(&self) -> Vec<(SemisimpleSequence, Vec<usize>)> {
        let mut map: std::collections::BTreeMap<SemisimpleSequence, Vec<usize>> = Default::default();
        for (i, s) in self.layerings.iter().enumerate() {
            map.entry(s.clone()).or_default().push(i);
        }
        map.into_iter().collect()
    }

    /// For every point, the indices of the given skeletons that are
    /// skeletons of its quotient.
    pub fn skeleton_sets(&self, skeletons: &[Skeleton]) -> Vec<Vec<usize>> {
        self.points
            .iter()
            .map(|c| {
                (0..skeletons.len())
                    .filter(|&s| skeletons[s].is_skeleton_of_quotient(&self.cover, c))
                    .collect()
            })
            .collect()
    }
}

/// How an orbit partition was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitMethod {
    /// Every group element applied.
    Exhaustive,
    /// Closure under a generating set, used above the budget.
    Generators,
}

impl OrbitMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            OrbitMethod::Exhaustive => "exhaustive",
            OrbitMethod::Generators => "generators",
        }
    }
}

/// `Aut_Λ(P)(F_q)` (or its unipotent radical), as a list of matrices on `P`.
pub struct AutGroup {
    pub elements: Vec<Matrix>,
    pub method: OrbitMethod,
    pub order: u128,
}

fn gl_order(n: usize, q: u128) -> u128 {
    let qn = q.saturating_pow(n as u32);
    (0..n).fold(1u128, |acc, i| acc.saturating_mul(qn - q.pow(i as u32)))
}

fn invertible_matrices(field: Field, n: usize) -> Vec<Matrix> {
    let elements = field.elements().expect("finite field");
    let mut digits = vec![0usize; n * n];
    let mut out = Vec::new();
    loop {
        let mut m = Matrix::zeros(field, n, n);
        for (k, &dg) in digits.iter().enumerate() {
            m.set(k / n, k % n, elements[dg].clone());
        }
        if m.is_invertible() {
            out.push(m);
        }
        if !advance(&mut digits, elements.len()) {
            break;
        }
    }
    out
}

/// The automorphism group of `P` over `F_q`: a product of `GL_{t_i}` on the
/// top slots and the unipotent part `id + Hom(P, JP)`. With
/// `unipotent_only` the first factor is trivial. Above the budget a
/// generating set is returned instead.
pub fn automorphism_group(cover: &ProjectiveCover, budget: u128, unipotent_only: bool) -> Result<AutGroup> {
    let field = cover.field();
    let q = prime_of(field)? as u128;
    let n = cover.dim();
    let top = cover.top().vertices().to_vec();
    let nslots = top.len();
    let nv = cover.algebra().quiver().num_vertices();
    let slots_at: Vec<Vec<usize>> = (0..nv).map(|v| (0..nslots).filter(|&s| top[s] == v).collect()).collect();
    let top_coord = |s: usize| {
        cover
            .index_of(&crate::algebra::ProjectiveBasisElement {
                slot: s,
                path: crate::quiver::Path::vertex(top[s]),
            })
            .expect("slot generator")
    };
    // radical coordinates ending at each slot's vertex
    let radical_at: Vec<Vec<usize>> = (0..nslots)
        .map(|s| (0..n).filter(|&k| cover.is_radical(k) && cover.vertex_of(k) == top[s]).collect())
        .collect();
    let unipotent_dim: usize = radical_at.iter().map(Vec::len).sum();
    let unipotent_order = q.saturating_pow(unipotent_dim as u32);
    let torus_order = if unipotent_only {
        1
    } else {
        slots_at.iter().fold(1u128, |acc, s| acc.saturating_mul(gl_order(s.len(), q)))
    };
    let order = unipotent_order.saturating_mul(torus_order);

    let images_from = |h: &[Option<&Matrix>], radical: &[Vector]| -> Matrix {
        let mut images: Vec<Vector> = radical.to_vec();
        for (v, slots) in slots_at.iter().enumerate() {
            for (j, &s) in slots.iter().enumerate() {
                for (i, &r) in slots.iter().enumerate() {
                    let c = match h[v] {
                        Some(m) => m.get(i, j).clone(),
                        None if i == j => field.one(),
                        None => field.zero(),
                    };
                    if !c.is_zero() {
                        images[s][top_coord(r)] += &c;
                    }
                }
            }
        }
        endomorphism_from_images(cover, &images)
    };

    if order <= budget {
        let gl: Vec<Vec<Matrix>> = slots_at
            .iter()
            .map(|s| {
                if unipotent_only || s.is_empty() {
                    Vec::new()
                } else {
                    invertible_matrices(field, s.len())
                }
            })
            .collect();
        let elements_f = field.elements().expect("finite field");
        let mut elements = Vec::new();
        let mut gl_digits = vec![0usize; nv];
        loop {
            let h: Vec<Option<&Matrix>> = (0..nv).map(|v| gl[v].get(gl_digits[v])).collect();
            let mut digits = vec![0usize; unipotent_dim];
            loop {
                let mut radical = vec![zero_vector(field, n); nslots];
                let mut k = 0;
                for s in 0..nslots {
                    for &coord in &radical_at[s] {
                        radical[s][coord] = elements_f[digits[k]].clone();
                        k += 1;
                    }
                }
                elements.push(images_from(&h, &radical));
                if !advance(&mut digits, elements_f.len()) {
                    break;
                }
            }
            // advance the GL odometer
            let mut moved = false;
            for v in 0..nv {
                if gl[v].is_empty() {
                    continue;
                }
                gl_digits[v] += 1;
                if gl_digits[v] < gl[v].len() {
                    moved = true;
                    break;
                }
                gl_digits[v] = 0;
            }
            if !moved {
                break;
            }
        }
        return Ok(AutGroup {
            elements,
            method: OrbitMethod::Exhaustive,
            order,
        });
    }

    // generators: id + (e_s ↦ e_s + b) for radical basis vectors b, and
    // diagonal and elementary matrices on the top slots
    let mut gens = Vec::new();
    let none: Vec<Option<&Matrix>> = vec![None; nv];
    for s in 0..nslots {
        for &coord in &radical_at[s] {
            let mut radical = vec![zero_vector(field, n); nslots];
            radical[s][coord] = field.one();
            gens.push(images_from(&none, &radical));
        }
    }
    if !unipotent_only {
        let zeta = primitive_root(field);
        let mut owned: Vec<(usize, Matrix)> = Vec::new();
        for (v, slots) in slots_at.iter().enumerate() {
            let t = slots.len();
            for i in 0..t {
                let mut m = Matrix::identity(field, t);
                m.set(i, i, zeta.clone());
                owned.push((v, m));
                for j in 0..t {
                    if i != j {
                        let mut e = Matrix::identity(field, t);
                        e.set(i, j, field.one());
                        owned.push((v, e));
                    }
                }
            }
        }
        let zero_radical = vec![zero_vector(field, n); nslots];
        for (v, m) in &owned {
            let mut h = none.clone();
            h[*v] = Some(m);
            gens.push(images_from(&h, &zero_radical));
        }
    }
    Ok(AutGroup {
        elements: gens,
        method: OrbitMethod::Generators,
        order,
    })
}

fn primitive_root(field: Field) -> Scalar {
    let order = field.order().expect("finite field") - 1;
    let elements = field.elements().expect("finite field");
    elements
        .into_iter()
        .skip(1)
        .find(|g| (1..order).all(|e| !g.pow(e as u32).is_one()))
        .unwrap_or_else(|| field.one())
}

/// A partition of the scene's points.
#[derive(Clone, Debug)]
pub struct OrbitPartition {
    pub orbits: Vec<Vec<usize>>,
    pub orbit_of: Vec<usize>,
    pub method: OrbitMethod,
}

impl OrbitPartition {
    /// Orbit sizes in orbit order.
    pub fn sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(Vec::len).collect()
    }
}

fn apply(g: &Matrix, c: &Subspace) -> Subspace {
    c.image(g)
}

fn partition_by_group(scene: &OracleScene, group: &AutGroup) -> Result<OrbitPartition> {
    let n = scene.len();
    let mut orbit_of = vec![usize::MAX; n];
    let mut orbits = Vec::new();
    for start in 0..n {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut members: Vec<usize> = Vec::new();
        match group.method {
            OrbitMethod::Exhaustive => {
                let mut seen = HashSet::new();
                for g in &group.elements {
                    let img = apply(g, &scene.points[start]);
                    let i = scene.point_index(&img).ok_or_else(|| {
                        Error::InvalidInput("an automorphism moved a point outside the Grassmannian".into())
                    })?;
                    if seen.insert(i) {
                        members.push(i);
                    }
                }
            }
            OrbitMethod::Generators => {
                let mut seen = HashSet::from([start]);
                let mut queue = VecDeque::from([start]);
                members.push(start);
                while let Some(i) = queue.pop_front() {
                    for g in &group.elements {
                        let img = apply(g, &scene.points[i]);
                        let j = scene.point_index(&img).ok_or_else(|| {
                            Error::InvalidInput("an automorphism moved a point outside the Grassmannian".into())
                        })?;
                        if seen.insert(j) {
                            members.push(j);
                            queue.push_back(j);
                        }
                    }
                }
            }
        }
        members.sort_unstable();
        for &m in &members {
            orbit_of[m] = id;
        }
        orbits.push(members);
    }
    Ok(OrbitPartition {
        orbits,
        orbit_of,
        method: group.method,
    })
}

/// `Aut_Λ(P)(F_q)`-orbits, in order of their smallest point.
pub fn orbits(scene: &OracleScene, budget: u128) -> Result<OrbitPartition> {
    let group = automorphism_group(&scene.cover, budget, false)?;
    partition_by_group(scene, &group)
}

/// Orbits of the unipotent radical `id + Hom(P, JP)`.
pub fn unipotent_orbits(scene: &OracleScene, budget: u128) -> Result<OrbitPartition> {
    let group = automorphism_group(&scene.cover, budget, true)?;
    partition_by_group(scene, &group)
}

/// Whether two modules over a finite field are isomorphic, by exhaustive
/// search of `Hom(M, N)` for an invertible element.
pub fn are_isomorphic(m: &Representation, n: &Representation, budget: u128) -> Result<bool> {
    if m.dims() != n.dims() {
        return Ok(false);
    }
    let q = prime_of(m.field())? as u128;
    let h = hom(m, n);
    if h.dim() != hom_dim(m, m) || h.dim() != hom_dim(n, n) {
        return Ok(false);
    }
    let needed = q.saturating_pow(h.dim() as u32);
    if needed > budget {
        return Err(Error::OracleScale {
            what: "isomorphism search".into(),
            needed,
            budget,
        });
    }
    let elements = m.field().elements().expect("finite field");
    let mut digits = vec![0usize; h.dim()];
    loop {
        let coeffs: Vec<Scalar> = digits.iter().map(|&d| elements[d].clone()).collect();
        if h.combination(&coeffs).iter().all(Matrix::is_invertible) {
            return Ok(true);
        }
        if !advance(&mut digits, elements.len()) {
            return Ok(false);
        }
    }
}

/// Isomorphism classes of the quotients `P/C`, decided independently of
/// the group action. Classes are ordered by their smallest point.
pub fn iso_classes(scene: &OracleScene, budget: u128) -> Result<Vec<Vec<usize>>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..scene.len() {
        let mut placed = false;
        for class in classes.iter_mut() {
            let r = class[0];
            if scene.layerings[r] != scene.layerings[i] {
                continue;
            }
            if are_isomorphic(&scene.quotients[r], &scene.quotients[i], budget)? {
                class.push(i);
                placed = true;
                break;
            }
        }
        if !placed {
            classes.push(vec![i]);
        }
    }
    Ok(classes)
}

/// All solutions of the chart ideal over the chart's prime field.
/// Variables not occurring in any polynomial are free.
pub fn solve_chart(ideal: &ChartIdeal, budget: u128) -> Result<Vec<Vec<Scalar>>> {
    let field = ideal.field();
    let q = prime_of(field)? as u128;
    let n = ideal.num_variables();
    let mut constrained: Vec<usize> = ideal.polynomials().iter().flat_map(|p| p.variables()).collect();
    constrained.sort_unstable();
    constrained.dedup();
    let free: Vec<usize> = (0..n).filter(|v| !constrained.contains(v)).collect();
    let needed = q
        .saturating_pow(constrained.len() as u32)
        .saturating_add(q.saturating_pow(free.len() as u32));
    if needed > budget {
        return Err(Error::OracleScale {
            what: "chart solving".into(),
            needed,
            budget,
        });
    }
    let elements = field.elements().expect("finite field");
    let mut partial = Vec::new();
    let mut digits = vec![0usize; constrained.len()];
    loop {
        let mut point = vec![field.zero(); n];
        for (&v, &d) in constrained.iter().zip(&digits) {
            point[v] = elements[d].clone();
        }
        if ideal.polynomials().iter().all(|p| p.eval(&point).is_zero()) {
            partial.push(point);
        }
        if !advance(&mut digits, elements.len()) {
            break;
        }
    }
    let total = (partial.len() as u128).saturating_mul(q.saturating_pow(free.len() as u32));
    if total > budget {
        return Err(Error::OracleScale {
            what: "chart solutions".into(),
            needed: total,
            budget,
        });
    }
    let mut out = Vec::new();
    for base in partial {
        let mut digits = vec![0usize; free.len()];
        loop {
            let mut point = base.clone();
            for (&v, &d) in free.iter().zip(&digits) {
                point[v] = elements[d].clone();
            }
            out.push(point);
            if !advance(&mut digits, elements.len()) {
                break;
            }
        }
    }
    Ok(out)
}

/// Outcome of comparing a chart with the oracle's points.
#[derive(Clone, Debug, Default)]
pub struct CrossValidation {
    pub solutions: usize,
    pub oracle_points: usize,
    pub mismatches: Vec<String>,
}

impl CrossValidation {
    pub fn is_ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Checks that chart solutions map bijectively onto the points having σ as
/// a skeleton, and that both round trips are identities.
pub fn cross_validate_chart(scene: &OracleScene, sigma: &Skeleton, budget: u128) -> Result<CrossValidation> {
    let cover = &scene.cover;
    let ideal = chart_ideal(cover, sigma)?;
    let solutions = solve_chart(&ideal, budget)?;
    let expected: Vec<usize> = (0..scene.len())
        .filter(|&i| sigma.is_skeleton_of_quotient(cover, &scene.points[i]))
        .collect();
    let mut report = CrossValidation {
        solutions: solutions.len(),
        oracle_points: expected.len(),
        mismatches: Vec::new(),
    };
    let render = |c: &[Scalar]| c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
    let mut hit = HashSet::new();
    for c in &solutions {
        match submodule_from_point(cover, &ideal, c) {
            Ok(u) => match scene.point_index(&u) {
                Some(i) => {
                    if !expected.contains(&i) {
                        report.mismatches.push(format!("solution ({}) gives a point without this skeleton", render(c)));
                    }
                    if !hit.insert(i) {
                        report.mismatches.push(format!("solution ({}) hits point {i} twice", render(c)));
                    }
                    match point_from_submodule(cover, &ideal, &u) {
                        Ok(back) if &back == c => {}
                        Ok(back) => report
                            .mismatches
                            .push(format!("round trip sends ({}) to ({})", render(c), render(&back))),
                        Err(e) => report.mismatches.push(format!("round trip of ({}) failed: {e}", render(c))),
                    }
                }
                None => report
                    .mismatches
                    .push(format!("solution ({}) gives a subspace that is not an oracle point", render(c))),
            },
            Err(e) => report.mismatches.push(format!("solution ({}): {e}", render(c))),
        }
    }
    for &i in &expected {
        if !hit.contains(&i) {
            report.mismatches.push(format!("oracle point {i} is not reached by any solution"));
        }
        match point_from_submodule(cover, &ideal, &scene.points[i]) {
            Ok(c) => match submodule_from_point(cover, &ideal, &c) {
                Ok(u) if u == scene.points[i] => {}
                Ok(_) => report.mismatches.push(format!("point {i} does not survive the round trip")),
                Err(e) => report.mismatches.push(format!("point {i}: coordinates not on the chart: {e}")),
            },
            Err(e) => report.mismatches.push(format!("point {i}: {e}")),
        }
    }
    Ok(report)
}

/// One row of the orbit-size comparison.
#[derive(Clone, Debug)]
pub struct OrbitSizeEntry {
    pub point: usize,
    pub orbit_size: usize,
    pub unipotent_orbit_size: usize,
    pub orbit_dim: usize,
    pub unipotent_orbit_dim: usize,
}

#[derive(Clone, Debug)]
pub struct OrbitSizeReport {
    pub entries: Vec<OrbitSizeEntry>,
    pub mismatches: Vec<String>,
    pub method: OrbitMethod,
}

/// Compares `|U.C|` with `q^{unipotent_orbit_dim}` for every point and, for
/// a simple top, `|Aut(P).C|` with `q^{orbit_dim}`.
pub fn orbit_size_consistency(scene: &OracleScene, budget: u128) -> Result<OrbitSizeReport> {
    let cover = &scene.cover;
    cover.top().check_squarefree(cover.algebra().quiver())?;
    let full = orbits(scene, budget)?;
    let unip = unipotent_orbits(scene, budget)?;
    let q = scene.q() as u128;
    let simple = cover.top().is_simple();
    let mut entries = Vec::new();
    let mut mismatches = Vec::new();
    for i in 0..scene.len() {
        let c = &scene.points[i];
        let od = orbit_dim(cover, c)?;
        let ud = unipotent_orbit_dim(cover, c)?;
        let os = full.orbits[full.orbit_of[i]].len();
        let us = unip.orbits[unip.orbit_of[i]].len();
        if us as u128 != q.pow(ud as u32) {
            mismatches.push(format!("point {i}: unipotent orbit has {us} points, q^{ud} = {}", q.pow(ud as u32)));
        }
        if simple && os as u128 != q.pow(od as u32) {
            mismatches.push(format!("point {i}: orbit has {os} points, q^{od} = {}", q.pow(od as u32)));
        }
        entries.push(OrbitSizeEntry {
            point: i,
            orbit_size: os,
            unipotent_orbit_size: us,
            orbit_dim: od,
            unipotent_orbit_dim: ud,
        });
    }
    Ok(OrbitSizeReport {
        entries,
        mismatches,
        method: full.method,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_binomials() {
        assert_eq!(gaussian_binomial(3, 1, 2), 7);
        assert_eq!(gaussian_binomial(3, 2, 2), 7);
        assert_eq!(gaussian_binomial(4, 2, 2), 35);
        assert_eq!(gaussian_binomial(2, 1, 3), 4);
        assert_eq!(gaussian_binomial(5, 0, 3), 1);
        assert_eq!(gaussian_binomial(2, 3, 3), 0);
    }

    #[test]
    fn subspace_count_matches_gaussian_binomial() {
        let f = Field::prime(3).unwrap();
        let coords = [0, 2, 3, 5];
        for k in 0..=4 {
            let subs = subspaces_of_coordinates(f, 6, &coords, k);
            assert_eq!(subs.len() as u128, gaussian_binomial(4, k, 3));
            let distinct: HashSet<Subspace> = subs.into_iter().map(|r| Subspace::span(f, 6, r)).collect();
            assert_eq!(distinct.len() as u128, gaussian_binomial(4, k, 3));
        }
    }

    #[test]
    fn group_orders() {
        assert_eq!(gl_order(2, 2), 6);
        assert_eq!(gl_order(1, 3), 2);
        let f = Field::prime(2).unwrap();
        assert_eq!(invertible_matrices(f, 2).len(), 6);
        assert!(primitive_root(Field::prime(7).unwrap()).pow(3) != Field::prime(7).unwrap().one());
    }
}
