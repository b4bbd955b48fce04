//! Cross-checks against independent reference computations written here
//! from scratch: dense elimination, word rewriting, weight counting.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sl2hahn::freealg::{ideal_membership, Membership};
use sl2hahn::hahn::{natural, HahnPresentation};
use sl2hahn::linalg::{int, rat, span_closure, Rational, SparseMatrix};
use sl2hahn::repr::{build_l, build_l0, build_l1, evaluate, restrict_even};
use sl2hahn::terwilliger::{decompose_standard, halved_operators, CubeContext, HalvedContext};
use sl2hahn::usl2::{normal_form_of_word, parse_element, Generator, Usl2Element};

/// Rank by textbook Gaussian elimination on dense rows.
fn dense_rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let f = &rows[r][c] / &pivot;
                let pivot_row = rows[rank].clone();
                for (x, y) in rows[r].iter_mut().zip(pivot_row).skip(c) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn dense_mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).fold(Rational::zero(), |acc, k| acc + &a[i][k] * &b[k][j])).collect())
        .collect()
}

/// Dimension of the span of all words of length at most `max_len`.
fn brute_force_closure(generators: &[SparseMatrix], max_len: usize) -> usize {
    let n = generators[0].nrows();
    let gens: Vec<Vec<Vec<Rational>>> = generators.iter().map(SparseMatrix::to_dense).collect();
    let identity: Vec<Vec<Rational>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect();
    let mut layer = vec![identity];
    let mut all = layer.clone();
    for _ in 0..max_len {
        layer = layer.iter().flat_map(|w| gens.iter().map(move |g| dense_mul(w, g))).collect();
        all.extend(layer.iter().cloned());
    }
    dense_rank(all.into_iter().map(|m| m.into_iter().flatten().collect()).collect())
}

#[test]
fn closure_matches_brute_force() {
    let l1 = build_l(1);
    let cases: Vec<(Vec<SparseMatrix>, usize)> = vec![
        (vec![SparseMatrix::identity(3)], 2),
        (vec![l1.e().clone(), l1.f().clone(), l1.h().clone()], 3),
        (build_l0(4).operators().map(Clone::clone).to_vec(), 5),
        (build_l1(6).unwrap().operators().map(Clone::clone).to_vec(), 5),
        (build_l0(2).direct_sum(&build_l1(2).unwrap()).operators().map(Clone::clone).to_vec(), 5),
        {
            let ops = halved_operators(&HalvedContext::standard(3).unwrap());
            (vec![ops.a2, ops.a_star], 6)
        },
        {
            let ops = halved_operators(&HalvedContext::standard(4).unwrap());
            (vec![ops.a2, ops.a_star], 7)
        },
    ];
    for (gens, len) in cases {
        let fast = span_closure(&gens).unwrap().dimension();
        assert_eq!(fast, brute_force_closure(&gens, len));
    }
    let alg = span_closure(&[l1.e().clone(), l1.f().clone(), l1.h().clone()]).unwrap();
    assert_eq!(alg.dimension(), 4);
}

#[test]
fn generator_action_agrees_with_word_rewriting() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let gens = [Generator::E, Generator::F, Generator::H];
    for _ in 0..200 {
        let len = rng.gen_range(0..=7);
        let word: Vec<Generator> = (0..len).map(|_| gens[rng.gen_range(0..3)]).collect();
        let product = word.iter().fold(Usl2Element::one(), |acc, g| acc.multiply(&Usl2Element::generator(*g)));
        assert_eq!(product, normal_form_of_word(&word), "{word:?}");
    }
}

#[test]
fn f_times_e_squared_on_l2() {
    let rep = build_l(2);
    let lhs = rep.f() * &(rep.e() * rep.e());
    let rhs = &(&(&(rep.e() * rep.e()) * rep.f()) - &(rep.e() * rep.h()).scale(&int(2))) - &rep.e().scale(&int(2));
    assert_eq!(lhs, rhs);
    let pbw = Usl2Element::f().multiply(&Usl2Element::pbw(2, 0, 0));
    assert_eq!(pbw, parse_element("E^2 F - 2 E H - 2 E").unwrap());
    assert_eq!(evaluate(&pbw, &rep), lhs);
}

#[test]
fn casimir_on_l_n_from_raw_matrices() {
    for n in 0..=8usize {
        let rep = build_l(n);
        let raw = &(&(rep.e() * rep.f()).scale(&int(2)) + &(rep.h() * rep.h()).scale(&rat(1, 2))) - rep.h();
        let expected = SparseMatrix::scalar(n + 1, &rat((n * (n + 2)) as i64, 2));
        assert_eq!(raw, expected);
        assert!(rep.e().pow(n as u32 + 1).is_zero());
    }
}

#[test]
fn parity_blocks_are_coordinate_submatrices() {
    for n in 1..=9usize {
        let rep = build_l(n);
        let e2 = rep.e() * rep.e();
        let f2 = rep.f() * rep.f();
        let even: Vec<usize> = (0..=n).step_by(2).collect();
        let odd: Vec<usize> = (1..=n).step_by(2).collect();
        let (b0, b1) = restrict_even(&rep, n as i64).unwrap();
        let (b0, b1) = (b0.unwrap(), b1.unwrap());
        assert_eq!(b0.e2(), &e2.submatrix(&even, &even));
        assert_eq!(b0.f2(), &f2.submatrix(&even, &even));
        assert_eq!(b1.e2(), &e2.submatrix(&odd, &odd));
        assert_eq!(b1.f2(), &f2.submatrix(&odd, &odd));
    }
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn cube_multiplicities_from_weight_counts() {
    // The multiplicity of L_(D-2k) is the drop in weight-space dimension.
    for d in 2..=8 {
        let dec = decompose_standard(&CubeContext::standard(d).unwrap());
        for (n, mult) in dec.summands {
            let k = (d - n) / 2;
            let below = if k == 0 { 0 } else { binom(d, k - 1) };
            assert_eq!(mult, binom(d, k) - below, "D={d} n={n}");
        }
    }
}

#[test]
fn non_member_is_not_certified() {
    let pres = HahnPresentation::new();
    assert!(!natural(&pres.a).is_zero());
    let found = ideal_membership(&pres.a, &pres.relators(), 6).unwrap();
    assert!(matches!(found, Membership::NotFoundUpToBound { bound: 6, .. }));
}
