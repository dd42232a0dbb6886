use ayrep::cells::{boundary_reflections, descent_cell, BasicFlat, Functional};
use ayrep::groups::{GroupType, Permutation};
use ayrep::linalg::{rat_int, Matrix, Rational};
use ayrep::reps::{
    build_from_functional, build_on_cell, build_orthogonal_skew, char_inner, character, extend_to_bn,
    induce, is_irreducible, shuffle_cell, verify_coxeter, Normalization, Representation,
};
use ayrep::tableaux::{SkewShape, Tableau};
use ayrep::Error;

fn f(s: &str) -> Functional {
    s.parse().unwrap()
}

fn seminormal(coords: &str) -> Representation {
    let g = f(coords);
    build_from_functional(&g, &Permutation::identity(g.n()), Normalization::Seminormal).unwrap()
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| rat_int(x)).collect()
}

#[test]
fn sign_plus_two_dimensional() {
    let rep = seminormal("0,2,-1");
    assert_eq!(rep.dim(), 3);
    let chi = character(&rep).unwrap();
    assert_eq!(chi, ints(&[3, -1, 0]));
    assert_eq!(char_inner(&rep, &chi, &chi).unwrap(), rat_int(2));
}

#[test]
fn regular_representation_of_s3() {
    let rep = seminormal("0,2,5");
    assert_eq!(rep.dim(), 6);
    let chi = character(&rep).unwrap();
    assert_eq!(chi, ints(&[6, 0, 0]));
    assert_eq!(char_inner(&rep, &chi, &chi).unwrap(), rat_int(6));
    assert!(!is_irreducible(&rep).unwrap());
    assert!(is_irreducible(&seminormal("0,1,-1")).unwrap());
    let trivial = seminormal("0,1,2");
    assert_eq!(character(&trivial).unwrap(), ints(&[1, 1, 1]));
    assert!(is_irreducible(&trivial).unwrap());
}

#[test]
fn orthogonal_form_of_21() {
    let rep = build_orthogonal_skew(&"2,1".parse().unwrap()).unwrap();
    let m = &rep.float_matrices()[1];
    assert!((m.get(0, 0) + 0.5).abs() < 1e-12);
    assert!((m.get(1, 0) - 3f64.sqrt() / 2.0).abs() < 1e-12);
    for (shape, value) in [("1,1,1,1", -1.0), ("4", 1.0)] {
        let rep = build_orthogonal_skew(&shape.parse().unwrap()).unwrap();
        assert_eq!(rep.dim(), 1);
        assert!(rep.float_matrices().iter().all(|m| *m.get(0, 0) == value));
    }
}

#[test]
fn boundary_data_determine_the_character() {
    // same cell, same boundary pairings, different interior pairings
    let a = f("0,2,-1,5");
    let id = Permutation::identity(4);
    let cell = descent_cell(&a, &id).unwrap();
    let constraints: Vec<_> = cell.boundary().iter().map(|t| (*t, a.pair(t))).collect();
    let flat = BasicFlat::new(4, &constraints).unwrap();
    let b = f("0,3,-1,7");
    assert!(flat.contains(&b));
    assert_eq!(boundary_reflections(&a), boundary_reflections(&b));
    assert_eq!(descent_cell(&b, &id).unwrap(), cell);
    let ca = character(&build_on_cell(&a, &cell, Normalization::Seminormal).unwrap()).unwrap();
    let cb = character(&build_on_cell(&b, &cell, Normalization::Seminormal).unwrap()).unwrap();
    assert_eq!(ca, cb);
}

#[test]
fn induction_rejects_a_scrambled_subgroup_representation() {
    let g = f("0,1,-1,100");
    let psi = ayrep::reps::build_parabolic(&g, &[1, 2], Normalization::Seminormal).unwrap();
    assert_eq!(psi.dim(), 2);
    assert!(induce(&psi).is_ok());
    // s_1 fixes the wall at the identity, so its column may not leave C_id
    let bad = ayrep::reps::perturbed(&psi, 0, 1, 0);
    assert!(matches!(induce(&bad), Err(Error::Domain(_))));
}

#[test]
fn smallest_hyperoctahedral_cases() {
    let p = Tableau::from_rows(&[vec![1]]).unwrap();
    let cell = shuffle_cell(Some(&p), Some(&p)).unwrap();
    assert_eq!(cell, vec![Permutation::identity(2), Permutation::simple(2, 1)]);
    let pq = Tableau::from_rows(&[vec![1, 2]]).unwrap();
    assert_eq!(shuffle_cell(Some(&pq), Some(&p)).unwrap().len(), 3);

    let rep = extend_to_bn(Some(&p), Some(&p), Normalization::Seminormal).unwrap();
    let m = rep.exact().unwrap();
    let diag = Matrix::from_rows(vec![ints(&[1, 0]), ints(&[0, -1])]).unwrap();
    let swap = Matrix::from_rows(vec![ints(&[0, 1]), ints(&[1, 0])]).unwrap();
    assert_eq!(m[0], diag);
    assert_eq!(m[1], swap);
    assert!(rep.exact_word(&[0, 1, 0, 1, 0, 1, 0, 1]).unwrap().is_identity());
    assert!(!rep.exact_word(&[0, 1, 0, 1]).unwrap().is_identity());
    assert!(verify_coxeter(&rep).ok());
    assert!(is_irreducible(&rep).unwrap());

    // Q empty: s_0 is the identity and the rest is the S_n module
    let shape: SkewShape = "2,1".parse().unwrap();
    let r = Tableau::row_tableau(&shape);
    let rep = extend_to_bn(Some(&r), None, Normalization::Seminormal).unwrap();
    assert!(rep.exact().unwrap()[0].is_identity());
    assert_eq!(rep.group, GroupType::B);
    assert!(is_irreducible(&rep).unwrap());
}
