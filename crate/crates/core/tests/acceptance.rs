//! One pass/fail line per acceptance criterion, each with a pinned runtime limit.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qgrass::catalogue::{self, CatalogueEntry};
use qgrass::chart::{chart_ideal, relation_generators, Reducer};
use qgrass::moduli::{
    check_corollary_4_5, cover_over_prime, finite_local_type_check, is_fully_invariant, orbit_dim,
    thm_4_2_condition_5,
};
use qgrass::oracle::{cross_validate_chart, iso_classes, orbits, OracleScene, DEFAULT_BUDGET};
use qgrass::skeleton::{enumerate_skeletons, Skeleton};
use qgrass::{AlgElement, Error, Path, ProjectiveCover, Top};

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn path(entry: &CatalogueEntry, arrows: &[&str]) -> Path {
    let q = entry.algebra.quiver();
    let idx: Vec<usize> = arrows.iter().rev().map(|a| q.arrow_by_name(a).unwrap()).collect();
    q.path_from_arrows(0, &idx).unwrap()
}

fn criterion_1() -> Outcome {
    let e = catalogue::two_loops_two_arrows();
    let sigma = Skeleton::new(
        &e.algebra,
        &e.top,
        vec![path(&e, &[]), path(&e, &["w1"]), path(&e, &["a1", "w1"]), path(&e, &["a2"])],
    )
    .map_err(|x| x.to_string())?;
    let ideal = chart_ideal(&e.cover(), &sigma).map_err(|x| x.to_string())?;
    let polys: Vec<String> = (0..ideal.polynomials().len()).map(|i| ideal.render_polynomial(i)).collect();
    check(ideal.num_variables() == 4, || format!("{} variables", ideal.num_variables()))?;
    check(polys == ["1 - X1*X4"], || format!("polynomials {polys:?}"))?;
    Ok(format!("4 variables, {}", polys[0]))
}

fn criterion_2() -> Outcome {
    let e = catalogue::loop_and_arrow();
    let cover = e.cover();
    let q = e.algebra.quiver();
    let raw = enumerate_skeletons(&cover, 3, false).map_err(|x| x.to_string())?;
    let pruned = enumerate_skeletons(&cover, 3, true).map_err(|x| x.to_string())?;
    check(raw.len() == 3 && pruned.len() == 2, || format!("{} raw, {} pruned", raw.len(), pruned.len()))?;
    let sigma1 = Skeleton::new(&e.algebra, &e.top, vec![path(&e, &[]), path(&e, &["w"]), path(&e, &["a"])]).unwrap();
    let sigma2 =
        Skeleton::new(&e.algebra, &e.top, vec![path(&e, &[]), path(&e, &["w"]), path(&e, &["a", "w"])]).unwrap();
    check(pruned.contains(&sigma1) && pruned.contains(&sigma2), || "pruned list".into())?;
    let c1 = chart_ideal(&cover, &sigma1).map_err(|x| x.to_string())?;
    let c2 = chart_ideal(&cover, &sigma2).map_err(|x| x.to_string())?;
    check(c1.num_variables() == 0 && c1.polynomials().is_empty(), || "chart 1 is not a point".into())?;
    check(c2.num_variables() == 1 && c2.polynomials().is_empty(), || "chart 2 is not a line".into())?;

    let cover2 = cover_over_prime(&e.algebra, &e.top, 2).map_err(|x| x.to_string())?;
    let scene = OracleScene::new(cover2.clone(), 3, DEFAULT_BUDGET).map_err(|x| x.to_string())?;
    check(scene.len() == 3, || format!("{} points", scene.len()))?;
    let part = orbits(&scene, DEFAULT_BUDGET).map_err(|x| x.to_string())?;
    let mut sizes = part.sizes();
    sizes.sort_unstable();
    check(sizes == [1, 2], || format!("orbit sizes {sizes:?}"))?;
    let classes = iso_classes(&scene, DEFAULT_BUDGET).map_err(|x| x.to_string())?;
    check(classes.len() == 2, || format!("{} iso classes", classes.len()))?;
    let layerings: BTreeSet<String> =
        (0..scene.len()).map(|i| scene.layering(i).display(q).to_string()).collect();
    let expected: BTreeSet<String> = ["(S1, S1, S2)", "(S1, S1⊕S2, 0)"].iter().map(|s| s.to_string()).collect();
    check(layerings == expected, || format!("layerings {layerings:?}"))?;
    let alpha_omega = cover2.generated_submodule([cover2.embed_path(&path(&e, &["a", "w"])).unwrap()]);
    for (i, c) in scene.points().iter().enumerate() {
        let (inv, _) = is_fully_invariant(&cover2, c).map_err(|x| x.to_string())?;
        check(inv == (*c == alpha_omega), || format!("invariance wrong at point {i}"))?;
    }
    Ok("3 raw / 2 pruned skeletons, point and line charts, 3 points, orbits {1,2}, 2 classes".into())
}

fn criterion_3() -> Outcome {
    let first = catalogue::three_parallel_arrows();
    let mut counts = Vec::new();
    for q in [2u32, 3] {
        let cover = cover_over_prime(&first.algebra, &first.top, q).map_err(|x| x.to_string())?;
        for d in [2, 3] {
            let n = OracleScene::new(cover.clone(), d, DEFAULT_BUDGET).map_err(|x| x.to_string())?.len();
            let expected = (q * q + q + 1) as usize;
            check(n == expected, || format!("q = {q}, d = {d}: {n} points, expected {expected}"))?;
            counts.push(n);
        }
    }
    let second = catalogue::three_and_three_arrows();
    let cover = cover_over_prime(&second.algebra, &second.top, 2).map_err(|x| x.to_string())?;
    let scene = OracleScene::new(cover, 4, DEFAULT_BUDGET).map_err(|x| x.to_string())?;
    check(scene.len() == 100, || format!("second quiver: {} points", scene.len()))?;
    let classes = scene.layering_classes();
    check(classes.len() == 4, || format!("{} layering classes", classes.len()))?;
    let mut sizes: Vec<usize> = classes.iter().map(|(_, v)| v.len()).collect();
    sizes.sort_unstable();
    check(sizes == [1, 1, 49, 49], || format!("layering class sizes {sizes:?}"))?;
    Ok(format!("counts {counts:?}, 100 points in 4 layering classes"))
}

fn criterion_4() -> Outcome {
    let e = catalogue::truncated_loop(2);
    let cover = cover_over_prime(&e.algebra, &e.top, 2).map_err(|x| x.to_string())?;
    let scene = OracleScene::new(cover.clone(), 4, DEFAULT_BUDGET).map_err(|x| x.to_string())?;
    let part = orbits(&scene, DEFAULT_BUDGET).map_err(|x| x.to_string())?;
    let mut sizes = part.sizes();
    sizes.sort_unstable();

    // C_j = sum over i != j of Λαω^i
    let gens = |j: usize| -> Vec<Path> {
        (0..3)
            .filter(|&i| i != j)
            .map(|i| {
                let mut arrows = vec!["a"];
                arrows.extend(std::iter::repeat_n("w", i));
                path(&e, &arrows)
            })
            .collect()
    };
    let mut dims = Vec::new();
    for j in 0..3 {
        let c = cover.generated_submodule(gens(j).iter().map(|p| cover.embed_path(p).unwrap()));
        dims.push(orbit_dim(&cover, &c).map_err(|x| x.to_string())?);
    }
    let dim_vectors: BTreeSet<Vec<usize>> = (0..scene.len()).map(|i| scene.quotient(i).dims().to_vec()).collect();
    let mut sizes_31: Vec<usize> = part
        .orbits
        .iter()
        .filter(|o| scene.quotient(o[0]).dims() == [3, 1])
        .map(Vec::len)
        .collect();
    sizes_31.sort_unstable();
    let local = finite_local_type_check(&e.algebra, 0, 2, DEFAULT_BUDGET).map_err(|x| x.to_string())?;
    let cor = check_corollary_4_5(&e.algebra, 0, 2, DEFAULT_BUDGET).map_err(|x| x.to_string())?;

    let detail = format!(
        "{} points, orbit sizes {sizes:?} ({sizes_31:?} with dimension vector (3,1)), orbit_dim(C_j) = {dims:?}, dimension vectors {dim_vectors:?}, \
         local type {}, corollary {}",
        scene.len(),
        local.verdict,
        cor.holds
    );
    check(dims == [0, 1, 2], || detail.clone())?;
    check(local.verdict && !cor.holds, || detail.clone())?;
    check(sizes == [1, 2, 4], || detail.clone())?;
    check(dim_vectors.len() == 1 && dim_vectors.contains(&vec![3, 1]), || detail.clone())?;
    Ok(detail)
}

fn criterion_5() -> Outcome {
    let mut charts = 0;
    let mut points = 0;
    for e in catalogue::catalogue() {
        for q in [2u32, 3] {
            let cover = cover_over_prime(&e.algebra, &e.top, q).map_err(|x| x.to_string())?;
            for d in 1..=cover.dim() {
                let scene = OracleScene::new(cover.clone(), d, DEFAULT_BUDGET).map_err(|x| x.to_string())?;
                let skeletons = enumerate_skeletons(&cover, d, true).map_err(|x| x.to_string())?;
                let mut covered = BTreeSet::new();
                for sigma in &skeletons {
                    let report = cross_validate_chart(&scene, sigma, DEFAULT_BUDGET).map_err(|x| x.to_string())?;
                    check(report.is_ok(), || {
                        format!(
                            "{} F{q} d = {d} {}: {}",
                            e.name,
                            sigma.display(cover.algebra().quiver()),
                            report.mismatches.join("; ")
                        )
                    })?;
                    charts += 1;
                    for (i, c) in scene.points().iter().enumerate() {
                        if sigma.is_skeleton_of_quotient(&cover, c) {
                            covered.insert(i);
                        }
                    }
                }
                check(covered.len() == scene.len(), || {
                    format!("{} F{q} d = {d}: charts miss {} points", e.name, scene.len() - covered.len())
                })?;
                points += scene.len();
            }
        }
    }
    Ok(format!("{charts} charts over {points} points, zero mismatches"))
}

fn criterion_6() -> Outcome {
    let mut checks = 0;
    for e in catalogue::catalogue() {
        let cover = e.cover();
        let gens = relation_generators(&cover);
        let mut all: Vec<(usize, Skeleton)> = Vec::new();
        for d in 1..=cover.dim() {
            for s in enumerate_skeletons(&cover, d, true).map_err(|x| x.to_string())? {
                all.push((d, s));
            }
        }
        for (_, sigma) in &all {
            let mut pruned = Reducer::new(&e.algebra, sigma, true, true);
            let mut plain = Reducer::new(&e.algebra, sigma, true, false);
            for z in &gens {
                check(pruned.reduce(z) == plain.reduce(z), || format!("{}: pruning changes a reduction", e.name))?;
                checks += 1;
            }
        }
        if gens.is_empty() || all.is_empty() {
            continue;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let field = e.algebra.field();
        for _ in 0..100 {
            let (_, sigma) = &all[rng.gen_range(0..all.len())];
            let mut reducer = Reducer::new(&e.algebra, sigma, true, true);
            let mut z = AlgElement::zero(field);
            for g in &gens {
                let c = rng.gen_range(-2i64..=2);
                z = z.add(&g.scale(&field.from_i64(c)));
            }
            let memo = reducer.reduce(&z);
            let shuffled = reducer.reduce_in_random_order(&z, &mut rng);
            check(memo == shuffled, || format!("{}: reduction depends on the order", e.name))?;
            checks += 1;
        }
    }
    Ok(format!("{checks} comparisons, zero mismatches"))
}

fn criterion_7() -> Outcome {
    let mut checked = 0;
    for e in catalogue::catalogue() {
        if !e.top.is_simple() {
            continue;
        }
        for q in [2u32, 3] {
            let cover = cover_over_prime(&e.algebra, &e.top, q).map_err(|x| x.to_string())?;
            for d in 1..=cover.dim() {
                let scene = OracleScene::new(cover.clone(), d, DEFAULT_BUDGET).map_err(|x| x.to_string())?;
                let part = orbits(&scene, DEFAULT_BUDGET).map_err(|x| x.to_string())?;
                for (i, c) in scene.points().iter().enumerate() {
                    let size = part.orbits[part.orbit_of[i]].len();
                    let inv = is_fully_invariant(&cover, c).map_err(|x| x.to_string())?.0;
                    let cond5 = thm_4_2_condition_5(&cover, c).map_err(|x| x.to_string())?;
                    let od = orbit_dim(&cover, c).map_err(|x| x.to_string())?;
                    let tag = || format!("{} F{q} d = {d} point {i}", e.name);
                    check(inv == (size == 1), || format!("{}: invariant {inv}, orbit size {size}", tag()))?;
                    check(inv == cond5, || format!("{}: invariant {inv}, condition (5) {cond5}", tag()))?;
                    check(size as u64 == (q as u64).pow(od as u32), || {
                        format!("{}: orbit size {size}, orbit_dim {od}", tag())
                    })?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} points, zero mismatches"))
}

fn criterion_8() -> Outcome {
    let e = catalogue::doubled_vee();
    let q = e.algebra.quiver();
    let cover = cover_over_prime(&e.algebra, &e.top, 2).map_err(|x| x.to_string())?;
    let scene = OracleScene::new(cover, 4, DEFAULT_BUDGET).map_err(|x| x.to_string())?;
    let classes = scene.layering_classes();
    let (_, members) = classes
        .iter()
        .find(|(s, _)| s.display(q).to_string() == "(S1^2, S2⊕S3)")
        .ok_or("layering class (S1^2, S2⊕S3) is empty")?;
    check(members.len() == 9, || format!("{} points in the class", members.len()))?;
    let iso = iso_classes(&scene, DEFAULT_BUDGET).map_err(|x| x.to_string())?;
    let inside = iso.iter().filter(|c| members.contains(&c[0])).count();
    check(inside == 2, || format!("{inside} iso classes in the layering class"))?;
    let refused = ProjectiveCover::new(e.algebra.clone(), &e.top);
    check(matches!(refused, Err(Error::TopNotSquarefree { .. })), || "projective cover accepted S1^2".into())?;
    let full = ProjectiveCover::with_multiplicities(e.algebra.clone(), &e.top);
    let refused = enumerate_skeletons(&full, 4, true);
    check(matches!(refused, Err(Error::TopNotSquarefree { .. })), || "skeletons accepted S1^2".into())?;
    let sigma = Skeleton::new(&e.algebra, &Top::new(vec![0, 0]), vec![Path::vertex(0)]);
    check(matches!(sigma, Err(Error::TopNotSquarefree { .. })), || "skeleton accepted S1^2".into())?;
    Ok("9 points, 2 iso classes, charts refuse S1^2".into())
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome, Duration); 8] = [
        ("1 two-loop chart golden", criterion_1, Duration::from_secs(1)),
        ("2 loop-and-arrow suite", criterion_2, Duration::from_secs(5)),
        ("3 hereditary point counts", criterion_3, Duration::from_secs(30)),
        ("4 truncated loop m = 2", criterion_4, Duration::from_secs(30)),
        ("5 chart cross-validation", criterion_5, Duration::from_secs(300)),
        ("6 reduction properties", criterion_6, Duration::from_secs(300)),
        ("7 invariance coherence", criterion_7, Duration::from_secs(300)),
        ("8 non-squarefree top", criterion_8, Duration::from_secs(10)),
    ];
    let mut failed = Vec::new();
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed <= limit => Ok(msg),
            Ok(msg) => Err(format!("{msg}; took {elapsed:.2?}, limit {limit:?}")),
            Err(e) => Err(e),
        };
        match outcome {
            Ok(msg) => println!("criterion {name}: PASS ({elapsed:.2?}) {msg}"),
            Err(msg) => {
                println!("criterion {name}: FAIL ({elapsed:.2?}) {msg}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
