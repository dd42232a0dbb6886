use proptest::prelude::*;
use proptest::sample::Index;

use ayrep::cells::{descent_cell, is_generic, is_generic_integer, Functional};
use ayrep::groups::{symmetric_group, Permutation, SignedPermutation};
use ayrep::linalg::{format_rational, parse_rational, rat};
use ayrep::reps::{
    build_from_functional, character, float_character, mn_character, verify_axiom_b, verify_coxeter,
    Normalization,
};
use ayrep::tableaux::{
    enumerate_standard, hook_length_count, is_content_vector, partitions, tableau_from_content,
    SkewShape, Tableau,
};

fn perm(n: usize, k: Index) -> Permutation {
    let all = symmetric_group(n).unwrap();
    all[k.index(all.len())].clone()
}

fn standard_tableau(n: usize, a: Index, b: Index) -> Tableau {
    let shapes = SkewShape::all_of_size(n);
    let shape = &shapes[a.index(shapes.len())];
    let all = enumerate_standard(shape).unwrap();
    all[b.index(all.len())].clone()
}

/// Standard fillings by exhaustive search over all orderings of the boxes.
fn brute_syt_count(shape: &SkewShape) -> usize {
    let cells = shape.cells();
    symmetric_group(cells.len())
        .unwrap()
        .iter()
        .filter(|p| {
            let boxes: Vec<_> = cells.iter().zip(p.images()).map(|(&c, &v)| (c, v)).collect();
            Tableau::from_boxes(&boxes).is_ok_and(|t| t.is_standard())
        })
        .count()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_and_inverse(n in 1usize..=5, a: Index, b: Index, c: Index) {
        let (x, y, z) = (perm(n, a), perm(n, b), perm(n, c));
        prop_assert_eq!(x.compose(&y).compose(&z), x.compose(&y.compose(&z)));
        prop_assert!(x.compose(&x.inverse()).is_identity());
        prop_assert_eq!(x.reduced_word().len(), x.length());
        for i in 1..n {
            prop_assert_eq!(x.mul_simple(i), x.compose(&Permutation::simple(n, i)));
            prop_assert_eq!(x.simple_mul(i), Permutation::simple(n, i).compose(&x));
        }
    }

    #[test]
    fn signed_generators_change_length_by_one(n in 1usize..=4, signs in prop::collection::vec(any::<bool>(), 4), k: Index) {
        let base = perm(n, k);
        let images: Vec<i64> = base.images().iter().zip(&signs).map(|(&v, &s)| if s { -(v as i64) } else { v as i64 }).collect();
        let w = SignedPermutation::from_images(images).unwrap();
        for s in 0..n {
            let l = w.mul_generator(s).length() as i64;
            prop_assert_eq!((l - w.length() as i64).abs(), 1);
        }
    }

    #[test]
    fn relabelling_is_an_action(n in 1usize..=5, a: Index, b: Index, c: Index, d: Index) {
        let t = standard_tableau(n, a, b);
        let (p, q) = (perm(n, c), perm(n, d));
        prop_assert_eq!(t.relabel(&p).unwrap().relabel(&q).unwrap(), t.relabel(&p.compose(&q)).unwrap());
    }

    #[test]
    fn content_vectors_round_trip(n in 1usize..=6, a: Index, b: Index) {
        let t = standard_tableau(n, a, b);
        let c = t.content_vector().unwrap();
        prop_assert!(is_content_vector(&c));
        let back = tableau_from_content(&c).unwrap();
        prop_assert!(back.is_standard());
        prop_assert_eq!(back.content_vector().unwrap(), c);
    }

    #[test]
    fn hook_length_matches_brute_force(n in 1usize..=6, k: Index) {
        let parts = partitions(n);
        let lambda = parts[k.index(parts.len())].clone();
        let shape = SkewShape::straight(lambda.clone()).unwrap();
        prop_assert_eq!(hook_length_count(&lambda) as usize, brute_syt_count(&shape));
        prop_assert_eq!(enumerate_standard(&shape).unwrap().len(), brute_syt_count(&shape));
    }

    #[test]
    fn descent_classes_are_convex(coords in prop::collection::vec(-4i64..=4, 1..=5), k: Index) {
        let n = coords.len();
        let f = Functional::new(coords);
        let w = perm(n, k);
        let cell = descent_cell(&f, &w).unwrap();
        prop_assert!(cell.contains(&w));
        prop_assert!(cell.is_convex());
    }

    #[test]
    fn integer_genericity_at_the_identity(coords in prop::collection::vec(-4i64..=4, 1..=5)) {
        let n = coords.len();
        let f = Functional::new(coords);
        let cell = descent_cell(&f, &Permutation::identity(n)).unwrap();
        prop_assert_eq!(is_generic(&f, &cell).unwrap(), is_generic_integer(&f));
    }

    #[test]
    fn content_functionals_build_specht_modules(n in 1usize..=5, a: Index, b: Index, shift in -5i64..=5) {
        let q = standard_tableau(n, a, b);
        let coords: Vec<i64> = q.content_vector().unwrap().iter().map(|x| x + shift).collect();
        let f = Functional::new(coords);
        let id = Permutation::identity(n);
        let rep = build_from_functional(&f, &id, Normalization::Seminormal).unwrap();
        prop_assert!(verify_coxeter(&rep).ok());
        prop_assert!(verify_axiom_b(&rep, &descent_cell(&f, &id).unwrap()).0.ok());
        let orth = build_from_functional(&f, &id, Normalization::Orthogonal).unwrap();
        prop_assert!(verify_coxeter(&orth).ok());
        let chi = character(&rep).unwrap();
        let chi_f = float_character(&orth).unwrap();
        let table = ayrep::reps::class_table(ayrep::groups::GroupType::A, n, &rep.generators).unwrap();
        for (k, class) in table.classes.iter().enumerate() {
            let want = mn_character(q.shape(), class.cycle_type.as_ref().unwrap()).unwrap();
            prop_assert_eq!(&chi[k], &ayrep::linalg::rat_int(want));
            prop_assert!((chi_f[k] - want as f64).abs() < 1e-9);
        }
    }

    #[test]
    fn rationals_round_trip(p in -1000i64..1000, q in 1i64..1000) {
        let x = rat(p, q);
        let s = format_rational(&x);
        prop_assert!(s.contains('/'));
        prop_assert_eq!(parse_rational(&s).unwrap(), x);
    }
}
