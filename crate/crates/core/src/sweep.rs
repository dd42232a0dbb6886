//! Exhaustive and sampled verification sweeps.

use std::collections::{BTreeSet, HashMap, HashSet};

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::cells::{
    boundary_reflections, brute_force_minimal_cells, cell_tableau_bijection, descent_cell,
    flat_partition, genericity_violations, is_generic, is_generic_integer, is_minimal_ay_cell,
    standard_relabelings, BasicFlat, Cell, Functional,
};
use crate::error::{Error, Result};
use crate::groups::{self, GroupType, Permutation, Reflection};
use crate::linalg::{rat, rat_int};
use crate::reps::{
    bn_classical, bn_pair_label, build_from_functional, build_on_cell, build_parabolic, build_skew,
    character, class_table, extend_to_bn, induce, induced_character, is_irreducible, mn_character,
    shuffle_cell, skew_functional, verify_axiom_b, verify_coxeter, BasisLabel, Character,
    Normalization, Report, Representation,
};
use crate::tableaux::{enumerate_standard, partitions, SkewShape, Tableau};
use crate::tops::top_elements;

/// Names accepted by [`run_suite`].
pub const SUITES: &[&str] = &[
    "coxeter", "bijection", "regular", "axiomB", "flat", "specht", "minimal", "induce", "bn", "tops",
    "convex",
];

/// Runs one named suite at degree `n`; `seed` drives the sampled suites.
pub fn run_suite(name: &str, n: usize, seed: u64) -> Result<Report> {
    match name {
        "coxeter" => coxeter(n),
        "bijection" => bijection(n),
        "regular" => regular(n),
        "axiomB" => axiom_b(n),
        "flat" => flat_invariance(n, 10, seed),
        "specht" => specht(n),
        "minimal" => minimal_cells(n),
        "induce" => induction(n),
        "bn" => hyperoctahedral(n),
        "tops" => tops(n),
        "convex" => convexity(n, 3).map(|mut r| {
            r.merge(genericity_equivalence(n, 2)?);
            Ok::<_, Error>(r)
        })?,
        _ => Err(Error::Parse(format!(
            "unknown suite {name:?}; expected one of {}",
            SUITES.join(", ")
        ))),
    }
}

fn push(report: &mut Report, pass: bool, msg: impl FnOnce() -> String) {
    report.checks += 1;
    if !pass {
        report.failures.push(msg());
    }
}

fn collect(parts: Vec<Result<Report>>) -> Result<Report> {
    let mut out = Report::default();
    for part in parts {
        out.merge(part?);
    }
    Ok(out)
}

/// Seminormal and orthogonal matrices of every skew shape of size `n`.
pub fn coxeter(n: usize) -> Result<Report> {
    coxeter_on(&SkewShape::all_of_size(n))
}

/// The Coxeter check on `count` shapes of size `n` drawn with `seed`.
pub fn coxeter_sampled(n: usize, count: usize, seed: u64) -> Result<Report> {
    let mut shapes = SkewShape::all_of_size(n);
    shapes.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    shapes.truncate(count);
    coxeter_on(&shapes)
}

fn coxeter_on(shapes: &[SkewShape]) -> Result<Report> {
    let parts = shapes
        .par_iter()
        .map(|shape| {
            let mut report = Report::default();
            for norm in [Normalization::Seminormal, Normalization::Orthogonal] {
                let rep = build_skew(shape, norm)?;
                let r = verify_coxeter(&rep);
                push(&mut report, r.ok(), || format!("{shape} {norm:?}: {}", r.failures.join("; ")));
            }
            Ok(report)
        })
        .collect();
    collect(parts)
}

/// `|K^{cont Q}_id| = #SYT` and `π ↦ Q^{π⁻¹}` is a bijection onto the
/// standard tableaux, for every skew shape of size `n`.
pub fn bijection(n: usize) -> Result<Report> {
    let parts = SkewShape::all_of_size(n)
        .par_iter()
        .map(|shape| {
            let mut report = Report::default();
            let q = Tableau::row_tableau(shape);
            let f = skew_functional(shape)?;
            let cell = descent_cell(&f, &Permutation::identity(n))?;
            let syt = enumerate_standard(shape)?;
            push(&mut report, cell.len() == syt.len(), || {
                format!("{shape}: cell has {} elements, {} standard tableaux", cell.len(), syt.len())
            });
            let pairs = cell_tableau_bijection(&f, &q)?;
            let images: BTreeSet<Tableau> = pairs.iter().map(|(_, t)| t.clone()).collect();
            let all_standard = pairs.iter().all(|(_, t)| t.is_standard());
            push(
                &mut report,
                all_standard && images == syt.into_iter().collect(),
                || format!("{shape}: relabelling is not a bijection onto standard tableaux"),
            );
            Ok(report)
        })
        .collect();
    collect(parts)
}

/// With `f_i = 3^i` the single cell is the whole group and the character is
/// `n!` at the identity and `0` elsewhere.
pub fn regular(n: usize) -> Result<Report> {
    let mut report = Report::default();
    let f = Functional::regular(n);
    let rep = build_from_functional(&f, &Permutation::identity(n), Normalization::Seminormal)?;
    let chi = character(&rep)?;
    let order = GroupType::A.order(n) as i64;
    for (k, x) in chi.iter().enumerate() {
        let want = if k == 0 { rat_int(order) } else { rat_int(0) };
        push(&mut report, *x == want, || format!("regular character at class {k} is {x}"));
    }
    Ok(report)
}

/// Axiom B on every skew build, recovery of `ȧ_t = 1/⟨f, α_t⟩`, and the
/// diagonal coefficient law in relabelled tableaux.
pub fn axiom_b(n: usize) -> Result<Report> {
    let parts = SkewShape::all_of_size(n)
        .par_iter()
        .map(|shape| {
            let mut report = Report::default();
            let f = skew_functional(shape)?;
            let id = Permutation::identity(n);
            let cell = descent_cell(&f, &id)?;
            let rep = build_from_functional(&f, &id, Normalization::Seminormal)?;
            let (r, coeffs) = verify_axiom_b(&rep, &cell);
            push(&mut report, r.ok(), || format!("{shape}: {}", r.failures.join("; ")));
            let read = coeffs.a_dot();
            let walls: BTreeSet<&Reflection> = cell.interior().iter().chain(cell.boundary()).collect();
            let recovered = walls.len() == read.len()
                && read.iter().all(|(t, a)| *a == rat(1, f.pair(t)) && walls.contains(t));
            push(&mut report, recovered, || format!("{shape}: coefficients do not recover f"));
            let q = Tableau::row_tableau(shape);
            let mats = rep.exact().expect("seminormal");
            for (c, pi) in cell.members().iter().enumerate() {
                let cont = q.relabel(pi)?.contents();
                for (g, &s) in rep.generators.iter().enumerate() {
                    let want = rat(1, cont[s] - cont[s - 1]);
                    push(&mut report, *mats[g].get(c, c) == want, || {
                        format!("{shape}: diagonal of s_{s} at {pi} is not 1/(c(i+1)-c(i))")
                    });
                }
            }
            Ok(report)
        })
        .collect();
    collect(parts)
}

/// Descent classes of `f` covering `S_n`, in order of first element.
pub fn descent_classes(f: &Functional) -> Result<Vec<Cell>> {
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut out = Vec::new();
    for w in groups::symmetric_group(f.n())? {
        if seen.contains(&w) {
            continue;
        }
        let cell = descent_cell(f, &w)?;
        seen.extend(cell.members().iter().cloned());
        out.push(cell);
    }
    Ok(out)
}

/// Integer points of the flat that are generic for every class of its
/// partition; distinct up to translation.
fn generic_points(flat: &BasicFlat, classes: &[Cell], want: usize, rng: &mut ChaCha8Rng) -> Vec<Functional> {
    let n = flat.n();
    let base = flat.point();
    let comps = flat.components();
    let a_l = flat.a_l();
    let mut out: Vec<Functional> = Vec::new();
    let mut seen = HashSet::new();
    for _ in 0..200 {
        if out.len() == want {
            break;
        }
        let mut coords = base.coords().to_vec();
        for (k, comp) in comps.iter().enumerate().skip(1) {
            let shift = rng.gen_range(-3 * n as i64..=3 * n as i64) + 10 * n as i64 * k as i64;
            for &letter in comp {
                coords[letter - 1] += shift;
            }
        }
        let first = coords[0];
        let key: Vec<i64> = coords.iter().map(|x| x - first).collect();
        let f = Functional::new(coords);
        if boundary_reflections(&f) != a_l
            || classes.iter().any(|k| !genericity_violations(&f, k).is_empty())
            || !seen.insert(key)
        {
            continue;
        }
        out.push(f);
    }
    out
}

/// For `count` random basic flats: at least three generic integer points
/// per flat, every class of the flat's partition, and every base point of
/// each class give the same exact character.
pub fn flat_invariance(n: usize, count: usize, seed: u64) -> Result<Report> {
    let mut report = Report::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let reflections = Reflection::all(n);
    let mut flats = 0;
    let mut attempts = 0;
    while flats < count {
        attempts += 1;
        if attempts > 200 * count {
            push(&mut report, false, || format!("only {flats} usable flats found for n = {n}"));
            break;
        }
        let k = rng.gen_range(1..=n.saturating_sub(1).max(1));
        let constraints: Vec<(Reflection, i64)> = reflections
            .choose_multiple(&mut rng, k)
            .map(|&t| (t, if rng.gen_bool(0.5) { 1 } else { -1 }))
            .collect();
        let Ok(flat) = BasicFlat::new(n, &constraints) else {
            continue;
        };
        let classes = flat_partition(&flat)?;
        let points = generic_points(&flat, &classes, 3, &mut rng);
        if points.len() < 3 {
            continue;
        }
        flats += 1;
        for class in &classes {
            let mut reference: Option<Character> = None;
            for f in &points {
                for v in class.members() {
                    let cell = descent_cell(f, v)?;
                    push(&mut report, cell == *class, || {
                        format!("flat {:?}: class of {v} under {f} differs", flat.constraints())
                    });
                    let chi = character(&build_on_cell(f, &cell, Normalization::Seminormal)?)?;
                    match &reference {
                        None => reference = Some(chi),
                        Some(r) => push(&mut report, *r == chi, || {
                            format!(
                                "flat {:?}: character at {v} under {f} differs from the first point",
                                flat.constraints()
                            )
                        }),
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Skew characters against Murnaghan–Nakayama, and the straight shapes
/// give `p(n)` distinct irreducibles with `Σ dim² = n!`.
pub fn specht(n: usize) -> Result<Report> {
    let table = class_table(GroupType::A, n, &GroupType::A.labels(n))?;
    let parts = SkewShape::all_of_size(n)
        .par_iter()
        .map(|shape| {
            let mut report = Report::default();
            let rep = build_skew(shape, Normalization::Seminormal)?;
            let chi = character(&rep)?;
            for (c, class) in table.classes.iter().enumerate() {
                let rho = class.cycle_type.as_ref().expect("full symmetric group");
                let want = rat_int(mn_character(shape, rho)?);
                push(&mut report, chi[c] == want, || {
                    format!("{shape} at cycle type {rho:?}: {} != {want}", chi[c])
                });
            }
            Ok(report)
        })
        .collect();
    let mut report = collect(parts)?;
    report.merge(straight_irreducibles(n)?);
    Ok(report)
}

/// Every straight shape is irreducible, pairwise distinct, `Σ dim² = n!`.
pub fn straight_irreducibles(n: usize) -> Result<Report> {
    let mut report = Report::default();
    let mut chars = Vec::new();
    let mut total = 0usize;
    for lambda in partitions(n) {
        let shape = SkewShape::straight(lambda.clone())?;
        let rep = build_skew(&shape, Normalization::Seminormal)?;
        total += rep.dim() * rep.dim();
        push(&mut report, is_irreducible(&rep)?, || format!("{lambda:?} is reducible"));
        chars.push(character(&rep)?);
    }
    let distinct = chars.iter().collect::<HashSet<_>>().len();
    push(&mut report, distinct == chars.len(), || "straight characters repeat".into());
    push(&mut report, total == GroupType::A.order(n), || {
        format!("sum of squared dimensions is {total}")
    });
    Ok(report)
}

/// Every convex subset, every subset for `n ≤ 3`, and sampled non-convex
/// subsets agree with the brute-force list of sets `σ·B_Q`.
pub fn minimal_cells(n: usize) -> Result<Report> {
    let mut report = Report::default();
    let truth = brute_force_minimal_cells(n)?;
    let group = groups::symmetric_group(n)?;
    let mut candidates: BTreeSet<Vec<Permutation>> = BTreeSet::new();
    if group.len() <= 6 {
        for mask in 1u64..(1 << group.len()) {
            candidates.insert(
                (0..group.len())
                    .filter(|b| mask >> b & 1 == 1)
                    .map(|b| group[b].clone())
                    .sorted()
                    .collect(),
            );
        }
    } else {
        // convex sets: one of {left descent, not, either} per reflection
        let refl = Reflection::all(n);
        let pos: Vec<Vec<usize>> = group.iter().map(Permutation::positions).collect();
        for code in 0..3usize.pow(refl.len() as u32) {
            let mut c = code;
            let pattern: Vec<usize> = (0..refl.len())
                .map(|_| {
                    let d = c % 3;
                    c /= 3;
                    d
                })
                .collect();
            let set: Vec<Permutation> = group
                .iter()
                .zip(&pos)
                .filter(|(_, p)| {
                    refl.iter().zip(&pattern).all(|(t, &d)| {
                        let desc = p[t.i() - 1] > p[t.j() - 1];
                        d == 2 || desc == (d == 1)
                    })
                })
                .map(|(w, _)| w.clone())
                .sorted()
                .collect();
            if !set.is_empty() {
                candidates.insert(set);
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
        for _ in 0..2000 {
            let size = rng.gen_range(1..=6);
            let set: Vec<Permutation> = group.choose_multiple(&mut rng, size).cloned().sorted().collect();
            candidates.insert(set);
        }
    }
    for set in &candidates {
        let got = is_minimal_ay_cell(set);
        let expect = truth.contains(set);
        push(&mut report, got.is_some() == expect, || {
            format!("{set:?}: detector says {}, brute force says {expect}", got.is_some())
        });
        if let Some((sigma, q)) = got {
            let inv = sigma.inverse();
            let moved: Vec<Permutation> =
                groups::sort_elements(set.iter().map(|w| inv.compose(w)).collect());
            push(&mut report, standard_relabelings(&q)? == moved, || {
                format!("{set:?}: witness ({sigma}, {q:?}) does not reproduce the set")
            });
        }
    }
    push(&mut report, candidates.iter().filter(|s| truth.contains(*s)).count() == truth.len(), || {
        "some brute-force minimal cells were never tested".into()
    });
    Ok(report)
}

/// Compositions of `n` as block sizes of standard parabolic subgroups.
fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    (1..=n)
        .flat_map(|first| {
            compositions(n - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// Functional of the row tableaux of `shapes` placed on consecutive blocks,
/// far apart so no reflection across blocks pairs to `±1`.
fn block_functional(shapes: &[Vec<usize>]) -> Result<Functional> {
    let mut coords = Vec::new();
    for (b, lambda) in shapes.iter().enumerate() {
        let f = skew_functional(&SkewShape::straight(lambda.clone())?)?;
        coords.extend(f.coords().iter().map(|x| x + 100 * b as i64));
    }
    Ok(Functional::new(coords))
}

/// Inducing straight-shape representations of every parabolic subgroup
/// matches the classical induced character; shuffle cells have the
/// expected sizes.
pub fn induction(n: usize) -> Result<Report> {
    let mut inputs = Vec::new();
    for comp in compositions(n) {
        let mut labels = Vec::new();
        let mut start = 1;
        for &b in &comp {
            labels.extend(start..start + b - 1);
            start += b;
        }
        for shapes in comp.iter().map(|&b| partitions(b)).multi_cartesian_product() {
            inputs.push((labels.clone(), shapes));
        }
    }
    let parts = inputs
        .par_iter()
        .map(|(labels, shapes)| {
            let mut report = Report::default();
            let f = block_functional(shapes)?;
            let psi = build_parabolic(&f, labels, Normalization::Seminormal)?;
            let up = induce(&psi)?;
            let r = verify_coxeter(&up);
            push(&mut report, r.ok(), || format!("J={labels:?} {shapes:?}: {}", r.failures.join("; ")));
            push(&mut report, character(&up)? == induced_character(&psi)?, || {
                format!("J={labels:?} {shapes:?}: induced character differs from the classical one")
            });
            Ok(report)
        })
        .collect();
    let mut report = collect(parts)?;
    for k in 0..=n {
        for lambda in partitions(k) {
            for mu in partitions(n - k) {
                let p = straight_row(&lambda)?;
                let q = straight_row(&mu)?;
                let cell = shuffle_cell(p.as_ref(), q.as_ref())?;
                let want = syt_count(&lambda) * syt_count(&mu) * binomial(n, k);
                push(&mut report, cell.len() == want, || {
                    format!("shuffle cell of {lambda:?}, {mu:?} has {} elements, expected {want}", cell.len())
                });
            }
        }
    }
    Ok(report)
}

fn straight_row(lambda: &[usize]) -> Result<Option<Tableau>> {
    if lambda.is_empty() {
        return Ok(None);
    }
    Ok(Some(Tableau::row_tableau(&SkewShape::straight(lambda.to_vec())?)))
}

fn syt_count(lambda: &[usize]) -> usize {
    crate::tableaux::hook_length_count(lambda) as usize
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// The `B_n` extension against the classical model, irreducibility and the
/// dimension count.
pub fn hyperoctahedral(n: usize) -> Result<Report> {
    let mut report = Report::default();
    let mut total = 0usize;
    let mut chars = Vec::new();
    for k in 0..=n {
        for lambda in partitions(k) {
            for mu in partitions(n - k) {
                let tag = format!("({lambda:?}, {mu:?})");
                let p = straight_row(&lambda)?;
                let q = straight_row(&mu)?;
                let ext = extend_to_bn(p.as_ref(), q.as_ref(), Normalization::Seminormal)?;
                let cls = bn_classical(&lambda, &mu, Normalization::Seminormal)?;
                for (name, rep) in [("extension", &ext), ("classical", &cls)] {
                    let r = verify_coxeter(rep);
                    push(&mut report, r.ok(), || format!("{tag} {name}: {}", r.failures.join("; ")));
                }
                let cell = shuffle_cell(p.as_ref(), q.as_ref())?;
                push(&mut report, matches_classical(&ext, &cls, &cell, p.as_ref(), q.as_ref()), || {
                    format!("{tag}: extension differs from the classical model")
                });
                // orthogonal forms from column tableaux
                let pc = p.as_ref().map(|t| Tableau::column_tableau(t.shape()));
                let qc = q.as_ref().map(|t| Tableau::column_tableau(t.shape()));
                let ext_o = extend_to_bn(pc.as_ref(), qc.as_ref(), Normalization::Orthogonal)?;
                let cls_o = bn_classical(&lambda, &mu, Normalization::Orthogonal)?;
                for (name, rep) in [("orthogonal extension", &ext_o), ("orthogonal classical", &cls_o)] {
                    let r = verify_coxeter(rep);
                    push(&mut report, r.ok(), || format!("{tag} {name}: {}", r.failures.join("; ")));
                }
                let cell_o = shuffle_cell(pc.as_ref(), qc.as_ref())?;
                push(
                    &mut report,
                    matches_classical(&ext_o, &cls_o, &cell_o, pc.as_ref(), qc.as_ref()),
                    || format!("{tag}: orthogonal extension differs from the classical model"),
                );
                push(&mut report, is_irreducible(&ext)?, || format!("{tag}: not irreducible"));
                total += ext.dim() * ext.dim();
                chars.push(character(&ext)?);
            }
        }
    }
    push(&mut report, total == GroupType::B.order(n), || {
        format!("sum of squared dimensions is {total}, expected {}", GroupType::B.order(n))
    });
    let distinct = chars.iter().collect::<HashSet<_>>().len();
    push(&mut report, distinct == chars.len(), || "B_n characters repeat".into());
    Ok(report)
}

/// Entrywise equality after sending `C_τ` to the pair labelled by `τ`.
fn matches_classical(
    ext: &Representation,
    cls: &Representation,
    cell: &[Permutation],
    p: Option<&Tableau>,
    q: Option<&Tableau>,
) -> bool {
    if ext.dim() != cls.dim() || ext.generators != cls.generators {
        return false;
    }
    let index: HashMap<&BasisLabel, usize> = cls.basis.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let Some(map): Option<Vec<usize>> = cell
        .iter()
        .map(|tau| index.get(&bn_pair_label(p, q, tau)).copied())
        .collect()
    else {
        return false;
    };
    let d = ext.dim();
    match (ext.exact(), cls.exact()) {
        (Some(a), Some(b)) => a.iter().zip(b).all(|(ma, mb)| {
            (0..d).all(|r| (0..d).all(|c| ma.get(r, c) == mb.get(map[r], map[c])))
        }),
        (None, None) => {
            let (a, b) = (ext.float_matrices(), cls.float_matrices());
            a.iter().zip(&b).all(|(ma, mb)| {
                (0..d).all(|r| (0..d).all(|c| (ma.get(r, c) - mb.get(map[r], map[c])).abs() < 1e-12))
            })
        }
        _ => false,
    }
}

/// The oracle set of top elements equals the top-to-bottom candidates, each
/// candidate interval is irreducible, and the interval structure of `B_Q`.
pub fn tops(n: usize) -> Result<Report> {
    let mut report = Report::default();
    let top = top_elements(n)?;
    push(&mut report, top.down_matches_oracle, || {
        format!("n={n}: oracle set differs from the column-word candidates")
    });
    for row in &top.rows {
        push(&mut report, row.irreducible && row.interval_size == row.syt_count, || {
            format!("n={n}: shape {:?} interval is not an irreducible cell of the right size", row.shape)
        });
    }
    for lambda in partitions(n) {
        let shape = SkewShape::straight(lambda.clone())?;
        let r = Tableau::row_tableau(&shape);
        let cell = standard_relabelings(&r)?;
        let m = maximal_elements(&cell);
        let ok = m.len() == 1
            && groups::sort_elements(groups::weak_interval(&m[0])) == cell
            && r.relabel(&m[0])? == Tableau::column_tableau(&shape);
        push(&mut report, ok, || format!("{lambda:?}: B of the row tableau is not [id, m] onto the column tableau"));
        for q in enumerate_standard(&shape)? {
            if q.is_row_tableau() || q.is_column_tableau() {
                continue;
            }
            let count = maximal_elements(&standard_relabelings(&q)?).len();
            push(&mut report, count >= 2, || format!("{q:?}: B_Q has {count} maximal element"));
        }
    }
    Ok(report)
}

/// Maximal elements of a set under right weak order.
pub fn maximal_elements(set: &[Permutation]) -> Vec<Permutation> {
    set.iter()
        .filter(|u| !set.iter().any(|w| w != *u && groups::weak_le(u, w)))
        .cloned()
        .collect()
}

/// Every descent class of every integer `f ∈ [−r, r]^n` is convex.
pub fn convexity(n: usize, range: i64) -> Result<Report> {
    let mut report = Report::default();
    let mut seen_walls = HashSet::new();
    for coords in (0..n).map(|_| -range..=range).multi_cartesian_product() {
        let f = Functional::new(coords);
        // classes depend only on which reflections pair to ±1
        if !seen_walls.insert(boundary_reflections(&f)) {
            continue;
        }
        for cell in descent_classes(&f)? {
            push(&mut report, cell.is_convex(), || format!("{f}: class {cell:?} is not convex"));
        }
    }
    Ok(report)
}

/// `is_generic(f, K^f_id) ⟺ is_generic_integer(f)` for `f ∈ [−r, r]^n`.
pub fn genericity_equivalence(n: usize, range: i64) -> Result<Report> {
    let mut report = Report::default();
    let id = Permutation::identity(n);
    for coords in (0..n).map(|_| -range..=range).multi_cartesian_product() {
        let f = Functional::new(coords);
        let cell = descent_cell(&f, &id)?;
        let a = is_generic(&f, &cell)?;
        let b = is_generic_integer(&f);
        push(&mut report, a == b, || format!("{f}: is_generic {a}, content vector {b}"));
    }
    Ok(report)
}
