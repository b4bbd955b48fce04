use std::collections::BTreeMap;

use sl2hahn::freealg::{ideal_membership, FreePoly, Membership};
use sl2hahn::hahn::{natural, tilde_rho, HahnPresentation, NaturalMap};
use sl2hahn::linalg::{eigenspace, int, kernel_basis, rat, rref, span_closure, SparseMatrix, SparseVec};
use sl2hahn::repr::{build_l, hahn_on_l, parity_blocks, verify_hahn_module_splitting};
use sl2hahn::terwilliger::{
    adjacency, cube_rho, decompose_halved, dual_adjacency, te_dimension, verify_cube, CubeContext, HalvedContext,
};
use sl2hahn::usl2::{
    casimir, parse_element, ue_basis_decompose, UeBasisKey, UePart, Usl2Element,
};

fn el(s: &str) -> Usl2Element {
    parse_element(s).unwrap()
}

#[test]
fn linalg_examples() {
    let m = SparseMatrix::from_dense(&[vec![int(1), int(2)], vec![int(2), int(4)]]);
    assert_eq!(rref(&m).1, 1);
    assert_eq!(rref(&SparseMatrix::identity(3)).1, 3);
    assert_eq!(rref(&SparseMatrix::zeros(2, 2)).1, 0);
    assert!(kernel_basis(&SparseMatrix::identity(4)).is_empty());
    assert_eq!(kernel_basis(&SparseMatrix::zeros(2, 2)).len(), 2);
    let k = kernel_basis(&SparseMatrix::from_dense(&[vec![int(1), int(1)], vec![int(0), int(0)]]));
    assert_eq!(k.len(), 1);
    assert_eq!(k[0].value(0), -k[0].value(1));
    let h = build_l(2).h().clone();
    assert_eq!(eigenspace(&h, &int(0)).unwrap().len(), 1);
    assert!(eigenspace(&h, &int(1)).unwrap().is_empty());
    assert_eq!(eigenspace(&h, &int(2)).unwrap(), [SparseVec::unit(3, 0)]);
    assert_eq!(span_closure(&[SparseMatrix::identity(2)]).unwrap().dimension(), 1);
}

#[test]
fn usl2_examples() {
    assert_eq!(el("F E"), el("E F - H"));
    assert_eq!(el("H E"), el("E H + 2 E"));
    assert_eq!(el("1").multiply(&el("E F H")), el("E F H"));
    assert_eq!(el("H").commutator(&el("E^3")), el("6 E^3"));
    assert_eq!(el("H^2").commutator(&el("F^2")), el("-8 (H + 2) F^2"));
    assert!(casimir().commutator(&Usl2Element::e()).is_zero());
    assert!(casimir().commutator(&Usl2Element::h()).is_zero());
    assert_eq!(casimir().rho(), casimir());

    let parts = el("E^2 F H").degree_components();
    assert_eq!(parts.keys().copied().collect::<Vec<_>>(), [1]);
    let b = natural(&HahnPresentation::new().b).degree_components();
    assert_eq!(b[&2], el("1/4 E^2"));
    assert_eq!(b[&0], el("(L - 1)/4 - 1/8 H^2"));
    assert_eq!(b[&-2], el("1/4 F^2"));
    assert!(el("E^2").is_even() && !el("E").is_even());

    let coords = ue_basis_decompose(&el("H^3")).unwrap();
    assert_eq!(coords.len(), 1);
    assert_eq!(coords.keys().next().unwrap(), &UeBasisKey::zero_part(0, 3));
    assert_eq!(ue_basis_decompose(&el("L^2")).unwrap().len(), 1);
    let e2f2 = ue_basis_decompose(&el("E^2 F^2")).unwrap();
    assert!(e2f2.keys().all(|k| k.part == UePart::Zero));
    let expected = el("(2L - (H - 2) H)(2L - (H - 4)(H - 2)) / 16");
    assert_eq!(el("E^2 F^2"), expected);
}

#[test]
fn freealg_examples() {
    let pres = HahnPresentation::new();
    let (a, b) = (&pres.a, &pres.b);
    assert_eq!(a.fmultiply(b).unwrap(), FreePoly::monomial(pres.alphabet.clone(), "AB").unwrap());
    let lhs = (a + b).fmultiply(&(a - b)).unwrap();
    assert_eq!(lhs.to_string(), "AA - AB + BA - BB");
    assert_eq!(natural(&pres.c), el("1/4 E^2 - 1/4 F^2"));
    assert_eq!(natural(&pres.one()), Usl2Element::one());
    let images: BTreeMap<char, SparseMatrix> =
        [('A', SparseMatrix::diagonal(&[int(1), int(-1)])), ('B', SparseMatrix::zeros(2, 2))].into_iter().collect();
    assert_eq!(a.pow(2).substitute(&images).unwrap(), SparseMatrix::identity(2));

    let relators = pres.relators();
    let found = ideal_membership(&relators[0], &relators, 6).unwrap();
    let cert = found.certificate().unwrap();
    assert_eq!(cert.terms.len(), 1);
    assert!(cert.terms[0].left.is_empty() && cert.terms[0].right.is_empty() && cert.terms[0].generator == 0);
    assert!(matches!(ideal_membership(a, &relators, 6).unwrap(), Membership::NotFoundUpToBound { .. }));
}

#[test]
fn hahn_examples() {
    let pres = HahnPresentation::new();
    let nat = NaturalMap::new();
    assert_eq!(natural(&pres.a), el("1/4 H"));
    assert!(natural(&pres.beta).is_zero());
    assert_eq!(natural(&pres.omega), el("3/16 (2 L - 3)"));
    assert_eq!(nat.c.commutator(&nat.a), el("-(E^2 + F^2)/4"));
    assert_eq!(natural(&pres.alpha), el("(L - 1)/4"));
    let kernel = &(&pres.omega.scale(&int(16)) - &pres.alpha.scale(&int(24))) + &pres.constant(int(3));
    assert!(natural(&kernel).is_zero());
    assert_eq!(tilde_rho(&pres.c), -&pres.c);
    assert_eq!(tilde_rho(&pres.omega), pres.omega);
    let hat = pres.hatted();
    assert_eq!(tilde_rho(&hat.e2), hat.f2);
    assert_eq!(natural(&tilde_rho(&pres.a)), el("-1/4 H"));
}

#[test]
fn repr_examples() {
    assert!(verify_hahn_module_splitting(0).all_passed());
    let rep = build_l(1);
    let ops = hahn_on_l(&rep);
    assert_eq!(ops.a, SparseMatrix::diagonal(&[rat(1, 4), rat(-1, 4)]));
    let [b0, b1] = parity_blocks(&build_l(4), 4).unwrap();
    assert_eq!((b0.len(), b1.len()), (3, 2));
    assert!(verify_hahn_module_splitting(4).all_passed());
}

#[test]
fn cube_examples() {
    let c2 = CubeContext::standard(2).unwrap();
    let a = adjacency(&c2);
    assert!((0..4).all(|i| a.row(i).iter().count() == 2));
    let c3 = CubeContext::new(3, 0b011).unwrap();
    let a_star = dual_adjacency(&c3);
    assert_eq!(a_star.get(0b011, 0b011), int(3));
    assert_eq!(a_star.get(0b100, 0b100), int(-3));
    let rep = cube_rho(&c3);
    assert_eq!(rep.h(), &a_star);
    assert_eq!(&(rep.e() + rep.f()), &adjacency(&c3));
    let b_image = sl2hahn::repr::evaluate(&NaturalMap::new().b, &rep);
    let a3 = adjacency(&c3);
    assert_eq!(b_image, (&(&a3 * &a3) - &SparseMatrix::identity(8)).scale(&rat(1, 4)));
    assert_eq!(te_dimension(&HalvedContext::standard(2).unwrap()), 4);
    assert_eq!(te_dimension(&HalvedContext::standard(4).unwrap()), 11);
    assert_eq!(te_dimension(&HalvedContext::standard(6).unwrap()), 24);
}

#[test]
fn base_vertex_does_not_matter() {
    for (d, bases) in [(4usize, vec![0b0000, 0b0011, 0b1010, 0b1111]), (5, vec![0b00000, 0b11000, 0b10111])] {
        let reference = verify_cube(d, 0, true).unwrap();
        for base in bases {
            let other = verify_cube(d, base, true).unwrap();
            assert!(other.matches());
            assert_eq!(other.standard, reference.standard);
            assert_eq!(other.halved, reference.halved);
            assert_eq!(other.te_dimension, reference.te_dimension);
        }
    }
    let halved = decompose_halved(&HalvedContext::new(CubeContext::new(4, 0b0101).unwrap()).unwrap()).unwrap();
    assert_eq!(halved.wedderburn_dimension, 11);
}
