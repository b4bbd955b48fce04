//! Finite-dimensional modules: `L_n` for `U(sl2)`, its parity blocks
//! `L_n^(0)` and `L_n^(1)` for the even subalgebra, irreducibility by
//! Burnside closure, and classification of irreducible even-subalgebra
//! modules up to isomorphism.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::hahn::{natural, HahnPresentation, NaturalMap};
use crate::linalg::{
    eigenspace, factorial, int, rat, rational_spectrum, restrict_to_subspace, span_closure, LinalgError, Rational,
    SparseMatrix, SparseVec,
};
use crate::report::Report;
use crate::usl2::Usl2Element;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ReprError {
    #[error("L_n^(1) needs n >= 1")]
    EmptyModule,
    #[error("operators do not satisfy the defining relations: {0}")]
    RelationFailed(&'static str),
    #[error("the Casimir element does not act as a scalar")]
    CasimirNotScalar,
    #[error("H has an eigenvalue that is not rational")]
    IrrationalSpectrum,
    #[error("no eigenvalue of H qualifies as a top weight")]
    NoTopWeight,
    #[error("the F^2 chain from the top weight vector does not span the module")]
    ChainNotSpanning,
    #[error("no case of the classification matches (lambda = {lambda}, theta = {theta})")]
    NoCaseMatches { lambda: String, theta: String },
    #[error("H eigenvalue {0} belongs to neither parity class")]
    ParityMismatch(Rational),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

fn check_square(ms: &[&SparseMatrix]) -> Result<usize, ReprError> {
    let n = ms[0].nrows();
    for m in ms {
        if m.nrows() != n || m.ncols() != n {
            return Err(LinalgError::DimensionMismatch { expected: n, found: m.ncols() }.into());
        }
    }
    Ok(n)
}

/// Matrices of `E`, `F`, `H` on a `U(sl2)`-module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Rep {
    e: SparseMatrix,
    f: SparseMatrix,
    h: SparseMatrix,
}

impl Sl2Rep {
    /// Validates `[H,E]=2E`, `[H,F]=-2F`, `[E,F]=H`.
    pub fn new(e: SparseMatrix, f: SparseMatrix, h: SparseMatrix) -> Result<Self, ReprError> {
        check_square(&[&e, &f, &h])?;
        if h.commutator(&e) != e.scale(&int(2)) {
            return Err(ReprError::RelationFailed("[H,E]=2E"));
        }
        if h.commutator(&f) != f.scale(&int(-2)) {
            return Err(ReprError::RelationFailed("[H,F]=-2F"));
        }
        if e.commutator(&f) != h {
            return Err(ReprError::RelationFailed("[E,F]=H"));
        }
        Ok(Sl2Rep { e, f, h })
    }

    pub fn dim(&self) -> usize {
        self.h.nrows()
    }

    pub fn e(&self) -> &SparseMatrix {
        &self.e
    }

    pub fn f(&self) -> &SparseMatrix {
        &self.f
    }

    pub fn h(&self) -> &SparseMatrix {
        &self.h
    }

    /// The even-subalgebra generators `E^2, F^2, Λ, H` on the same space.
    pub fn to_ue(&self) -> UeRep {
        let lam = evaluate(&crate::usl2::casimir(), self);
        UeRep::new(&self.e * &self.e, &self.f * &self.f, lam, self.h.clone())
            .expect("an sl2 module restricts to an even-subalgebra module")
    }
}

/// Matrices of `E^2`, `F^2`, `Λ`, `H` on a `U(sl2)_e`-module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UeRep {
    e2: SparseMatrix,
    f2: SparseMatrix,
    lambda: SparseMatrix,
    h: SparseMatrix,
}

impl UeRep {
    /// Validates the even-subalgebra relations.
    pub fn new(e2: SparseMatrix, f2: SparseMatrix, lambda: SparseMatrix, h: SparseMatrix) -> Result<Self, ReprError> {
        let n = check_square(&[&e2, &f2, &lambda, &h])?;
        if h.commutator(&e2) != e2.scale(&int(4)) {
            return Err(ReprError::RelationFailed("[H,E^2]=4E^2"));
        }
        if h.commutator(&f2) != f2.scale(&int(-4)) {
            return Err(ReprError::RelationFailed("[H,F^2]=-4F^2"));
        }
        let id = SparseMatrix::identity(n);
        let h2 = &h * &h;
        let lam2 = lambda.scale(&int(2));
        let quad = |s: i64, shift: i64, c: i64| &(&(&h2 + &h.scale(&int(s * shift))) - &lam2) + &id.scale(&int(c));
        if (&e2 * &f2).scale(&int(16)) != &quad(-1, 2, 0) * &quad(-1, 6, 8) {
            return Err(ReprError::RelationFailed("16E^2F^2"));
        }
        if (&f2 * &e2).scale(&int(16)) != &quad(1, 2, 0) * &quad(1, 6, 8) {
            return Err(ReprError::RelationFailed("16F^2E^2"));
        }
        if !lambda.commutator(&e2).is_zero() || !lambda.commutator(&f2).is_zero() || !lambda.commutator(&h).is_zero() {
            return Err(ReprError::RelationFailed("L central"));
        }
        Ok(UeRep { e2, f2, lambda, h })
    }

    pub fn dim(&self) -> usize {
        self.h.nrows()
    }

    pub fn e2(&self) -> &SparseMatrix {
        &self.e2
    }

    pub fn f2(&self) -> &SparseMatrix {
        &self.f2
    }

    pub fn lambda(&self) -> &SparseMatrix {
        &self.lambda
    }

    pub fn h(&self) -> &SparseMatrix {
        &self.h
    }

    /// `[E^2, F^2, Λ, H]`.
    pub fn operators(&self) -> [&SparseMatrix; 4] {
        [&self.e2, &self.f2, &self.lambda, &self.h]
    }

    /// Restriction to an invariant subspace given by a basis.
    pub fn restrict(&self, basis: &[SparseVec]) -> Result<UeRep, ReprError> {
        let [e2, f2, lambda, h] = self.operators().map(|m| restrict_to_subspace(m, basis));
        UeRep::new(e2?, f2?, lambda?, h?)
    }

    pub fn direct_sum(&self, other: &UeRep) -> UeRep {
        UeRep {
            e2: self.e2.direct_sum(&other.e2),
            f2: self.f2.direct_sum(&other.f2),
            lambda: self.lambda.direct_sum(&other.lambda),
            h: self.h.direct_sum(&other.h),
        }
    }
}

/// `L_n` in the basis `v_0, ..., v_n`.
pub fn build_l(n: usize) -> Sl2Rep {
    let dim = n + 1;
    let ni = n as i64;
    let e = SparseMatrix::from_triplets(dim, dim, (1..dim).map(|i| (i - 1, i, int(ni - i as i64 + 1))));
    let f = SparseMatrix::from_triplets(dim, dim, (0..n).map(|i| (i + 1, i, int(i as i64 + 1))));
    let h = SparseMatrix::diagonal(&(0..dim).map(|i| int(ni - 2 * i as i64)).collect::<Vec<_>>());
    Sl2Rep::new(e, f, h).expect("L_n satisfies the sl2 relations")
}

fn casimir_scalar(n: usize) -> Rational {
    let n = n as i64;
    rat(n * (n + 2), 2)
}

/// `L_n^(0)` in the basis `u_i = v_(2i)`.
pub fn build_l0(n: usize) -> UeRep {
    let dim = n / 2 + 1;
    let ni = n as i64;
    let e2 = SparseMatrix::from_triplets(
        dim,
        dim,
        (1..dim).map(|i| {
            let i2 = 2 * i as i64;
            (i - 1, i, int((ni - i2 + 1) * (ni - i2 + 2)))
        }),
    );
    let f2 = SparseMatrix::from_triplets(
        dim,
        dim,
        (0..dim - 1).map(|i| {
            let i2 = 2 * i as i64;
            (i + 1, i, int((i2 + 1) * (i2 + 2)))
        }),
    );
    let h = SparseMatrix::diagonal(&(0..dim).map(|i| int(ni - 4 * i as i64)).collect::<Vec<_>>());
    UeRep::new(e2, f2, SparseMatrix::scalar(dim, &casimir_scalar(n)), h).expect("L_n^(0) satisfies the relations")
}

/// `L_n^(1)` in the basis `u_i = v_(2i+1)`; requires `n >= 1`.
pub fn build_l1(n: usize) -> Result<UeRep, ReprError> {
    if n == 0 {
        return Err(ReprError::EmptyModule);
    }
    let dim = (n - 1) / 2 + 1;
    let ni = n as i64;
    let e2 = SparseMatrix::from_triplets(
        dim,
        dim,
        (1..dim).map(|i| {
            let i2 = 2 * i as i64;
            (i - 1, i, int((ni - i2) * (ni - i2 + 1)))
        }),
    );
    let f2 = SparseMatrix::from_triplets(
        dim,
        dim,
        (0..dim - 1).map(|i| {
            let i2 = 2 * i as i64;
            (i + 1, i, int((i2 + 2) * (i2 + 3)))
        }),
    );
    let h = SparseMatrix::diagonal(&(0..dim).map(|i| int(ni - 4 * i as i64 - 2)).collect::<Vec<_>>());
    Ok(UeRep::new(e2, f2, SparseMatrix::scalar(dim, &casimir_scalar(n)), h).expect("L_n^(1) satisfies the relations"))
}

/// Matrix of `a` acting on `rep`.
pub fn evaluate(a: &Usl2Element, rep: &Sl2Rep) -> SparseMatrix {
    let dim = rep.dim();
    let mut powers: [Vec<SparseMatrix>; 3] = [
        alloc::vec![SparseMatrix::identity(dim)],
        alloc::vec![SparseMatrix::identity(dim)],
        alloc::vec![SparseMatrix::identity(dim)],
    ];
    let gens = [rep.e(), rep.f(), rep.h()];
    let mut power = |which: usize, k: u32| -> SparseMatrix {
        let list = &mut powers[which];
        while list.len() <= k as usize {
            let next = list.last().expect("nonempty") * gens[which];
            list.push(next);
        }
        list[k as usize].clone()
    };
    let mut out = SparseMatrix::zeros(dim, dim);
    for (m, c) in a.terms() {
        let term = &(&power(0, m.e) * &power(1, m.f)) * &power(2, m.h);
        out = &out + &term.scale(c);
    }
    out
}

/// Bases of the two parity blocks of `rep`: the sums of `H`-eigenspaces
/// with eigenvalue congruent to `n` and to `n - 2` modulo 4. Within each
/// block, eigenvalues are taken in decreasing order.
pub fn parity_blocks(rep: &Sl2Rep, n: i64) -> Result<[Vec<SparseVec>; 2], ReprError> {
    let spectrum = rational_spectrum(rep.h())?.ok_or(ReprError::IrrationalSpectrum)?;
    let mut blocks: [Vec<SparseVec>; 2] = [Vec::new(), Vec::new()];
    for (theta, _) in spectrum {
        if !theta.is_integer() {
            return Err(ReprError::ParityMismatch(theta));
        }
        let shift = (theta.to_integer() - n).mod_floor(&4.into());
        let class = match shift.to_i64() {
            Some(0) => 0,
            Some(2) => 1,
            _ => return Err(ReprError::ParityMismatch(theta)),
        };
        blocks[class].extend(eigenspace(rep.h(), &theta)?);
    }
    Ok(blocks)
}

/// Restrictions of `rep` to its parity blocks relative to `n`. An empty
/// block gives `None`.
pub fn restrict_even(rep: &Sl2Rep, n: i64) -> Result<(Option<UeRep>, Option<UeRep>), ReprError> {
    let ue = rep.to_ue();
    let [even, odd] = parity_blocks(rep, n)?;
    let restrict = |basis: &[SparseVec]| -> Result<Option<UeRep>, ReprError> {
        if basis.is_empty() {
            Ok(None)
        } else {
            ue.restrict(basis).map(Some)
        }
    };
    Ok((restrict(&even)?, restrict(&odd)?))
}

/// Burnside criterion: the operators generate the full matrix algebra.
pub fn generates_full_algebra(ops: &[SparseMatrix]) -> Result<bool, ReprError> {
    Ok(span_closure(ops)?.is_full())
}

pub fn is_irreducible(rep: &UeRep) -> bool {
    let ops: Vec<SparseMatrix> = rep.operators().into_iter().cloned().collect();
    generates_full_algebra(&ops).expect("operators share a size")
}

/// Isomorphism invariants of a module on which `Λ` is a scalar.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IsoSignature {
    pub dim: usize,
    pub casimir: Rational,
    /// `H` eigenvalues in decreasing order with multiplicities.
    pub h_spectrum: Vec<(Rational, usize)>,
}

pub fn signature(rep: &UeRep) -> Result<IsoSignature, ReprError> {
    let casimir = rep.lambda().scalar_value().ok_or(ReprError::CasimirNotScalar)?;
    let h_spectrum = rational_spectrum(rep.h())?.ok_or(ReprError::IrrationalSpectrum)?;
    Ok(IsoSignature { dim: rep.dim(), casimir, h_spectrum })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// `L_n^(0)`.
    Even,
    /// `L_n^(1)`.
    Odd,
}

/// `L_n^(0)` or `L_n^(1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UeLabel {
    pub family: Family,
    pub n: usize,
}

impl UeLabel {
    pub fn even(n: usize) -> Self {
        UeLabel { family: Family::Even, n }
    }

    pub fn odd(n: usize) -> Self {
        UeLabel { family: Family::Odd, n }
    }

    pub fn dim(&self) -> usize {
        match self.family {
            Family::Even => self.n / 2 + 1,
            Family::Odd => self.n.div_ceil(2),
        }
    }

    /// `0` for `L_n^(0)`, `1` for `L_n^(1)`.
    pub fn family_index(&self) -> u8 {
        match self.family {
            Family::Even => 0,
            Family::Odd => 1,
        }
    }

    pub fn build(&self) -> Result<UeRep, ReprError> {
        match self.family {
            Family::Even => Ok(build_l0(self.n)),
            Family::Odd => build_l1(self.n),
        }
    }
}

impl fmt::Display for UeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L_{}^({})", self.n, self.family_index())
    }
}

/// Result of [`classify_ue_irreducible`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub label: UeLabel,
    /// Which of the four cases applied (1 to 4).
    pub case: u8,
    pub d: usize,
    pub theta: Rational,
    pub lambda: Rational,
    /// Columns are the images in the input module of the standard basis of
    /// the model module; intertwines every operator exactly.
    pub isomorphism: SparseMatrix,
}

/// Identifies an irreducible `U(sl2)_e`-module with one of `L_2d^(0)`,
/// `L_(2d+1)^(0)`, `L_(2d+1)^(1)`, `L_(2d+2)^(1)` where `d + 1` is its
/// dimension.
///
/// `θ` is the largest `H`-eigenvalue with `θ + 4` not an eigenvalue, the
/// chain `w_i = (F^2)^i w` starts at a `θ`-eigenvector, and `λ` is tested
/// against the two top-weight and two bottom-weight conditions. The model
/// basis vector `u_i` is matched with `w_i / (2i)!` or `w_i / (2i+1)!`, and
/// the resulting map is checked against all four operators.
pub fn classify_ue_irreducible(rep: &UeRep) -> Result<Classification, ReprError> {
    let dim = rep.dim();
    let lambda = rep.lambda().scalar_value().ok_or(ReprError::CasimirNotScalar)?;
    let spectrum = rational_spectrum(rep.h())?.ok_or(ReprError::IrrationalSpectrum)?;
    let eigenvalues: Vec<&Rational> = spectrum.iter().map(|(t, _)| t).collect();
    let four = int(4);
    let theta = eigenvalues
        .iter()
        .find(|t| !eigenvalues.contains(&&(**t + &four)))
        .map(|t| (*t).clone())
        .ok_or(ReprError::NoTopWeight)?;
    let w = eigenspace(rep.h(), &theta)?.into_iter().next().ok_or(ReprError::NoTopWeight)?;
    let mut chain = alloc::vec![w];
    for _ in 1..dim {
        let next = rep.f2().mul_vec(chain.last().expect("nonempty"));
        chain.push(next);
    }
    if !rep.f2().mul_vec(chain.last().expect("nonempty")).is_zero() {
        return Err(ReprError::ChainNotSpanning);
    }
    let w_matrix = SparseMatrix::from_columns(dim, &chain);
    if crate::linalg::rref(&w_matrix).1 != dim {
        return Err(ReprError::ChainNotSpanning);
    }

    let d = dim - 1;
    let di = int(d as i64);
    let half = rat(1, 2);
    let bottom = &theta - &(&four * &di);
    let top_a = &(&theta * &(&theta + &int(2))) * &half;
    let top_b = &four + &(&(&theta * &(&theta + &int(6))) * &half);
    let bottom_a = &(&bottom * &(&bottom - &int(2))) * &half;
    let bottom_b = &four + &(&(&bottom * &(&bottom - &int(6))) * &half);
    let two_d = int(2 * d as i64);
    let cases = [
        (1u8, &top_a, &bottom_a, &two_d + &Rational::zero(), UeLabel::even(2 * d)),
        (2, &top_a, &bottom_b, &two_d + &Rational::one(), UeLabel::even(2 * d + 1)),
        (3, &top_b, &bottom_a, &two_d - &Rational::one(), UeLabel::odd(2 * d + 1)),
        (4, &top_b, &bottom_b, two_d.clone(), UeLabel::odd(2 * d + 2)),
    ];
    let (case, label) = cases
        .iter()
        .find(|(_, top, bot, expected_theta, _)| **top == lambda && **bot == lambda && *expected_theta == theta)
        .map(|(c, _, _, _, l)| (*c, *l))
        .ok_or_else(|| ReprError::NoCaseMatches { lambda: lambda.to_string(), theta: theta.to_string() })?;

    let model = label.build()?;
    let columns: Vec<SparseVec> = chain
        .iter()
        .enumerate()
        .map(|(i, w)| {
            let scale = match label.family {
                Family::Even => factorial(2 * i as u64),
                Family::Odd => factorial(2 * i as u64 + 1),
            };
            w.scale(&scale.recip())
        })
        .collect();
    let iso = SparseMatrix::from_columns(dim, &columns);
    for (ours, theirs) in rep.operators().into_iter().zip(model.operators()) {
        if (ours * &iso) != (&iso * theirs) {
            return Err(ReprError::RelationFailed("isomorphism does not intertwine"));
        }
    }
    Ok(Classification { label, case, d, theta, lambda, isomorphism: iso })
}

/// Invariants of an `H`-module pulled back through `♮`: dimension, the
/// scalars by which `α` and `Ω` act, and the spectrum of `A`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HahnSignature {
    pub dim: usize,
    pub alpha: Rational,
    pub omega: Rational,
    pub a_spectrum: Vec<(Rational, usize)>,
}

/// Images of `A`, `B`, `C` and the scalars of `α`, `Ω` on `L_n`.
pub struct HahnOnL {
    pub a: SparseMatrix,
    pub b: SparseMatrix,
    pub c: SparseMatrix,
    pub alpha: SparseMatrix,
    pub omega: SparseMatrix,
}

pub fn hahn_on_l(rep: &Sl2Rep) -> HahnOnL {
    let nat = NaturalMap::new();
    let pres = HahnPresentation::new();
    HahnOnL {
        a: evaluate(&nat.a, rep),
        b: evaluate(&nat.b, rep),
        c: evaluate(&nat.c, rep),
        alpha: evaluate(&nat.alpha, rep),
        omega: evaluate(&natural(&pres.omega), rep),
    }
}

/// For each `n` in `0..=n_max`, checks that `L_n`, viewed as a module for
/// the Hahn algebra through `♮`, is irreducible for `n = 0` and otherwise
/// splits into two invariant irreducible blocks with distinct invariants.
pub fn verify_hahn_module_splitting(n_max: usize) -> Report {
    let mut report = Report::new("hahn-module-splitting");
    for n in 0..=n_max {
        let rep = build_l(n);
        let ops = hahn_on_l(&rep);
        let gens = [ops.a.clone(), ops.b.clone(), ops.c.clone()];
        let blocks = match parity_blocks(&rep, n as i64) {
            Ok(b) => b,
            Err(e) => {
                report.check(format!("n={n} parity blocks ({e})"), false);
                continue;
            }
        };
        if n == 0 {
            report.check("n=0 irreducible", blocks[1].is_empty() && generates_full_algebra(&gens).unwrap_or(false));
            continue;
        }
        let mut signatures = Vec::new();
        for (tag, basis) in blocks.iter().enumerate() {
            let restricted: Result<Vec<SparseMatrix>, LinalgError> = [&ops.a, &ops.b, &ops.c, &ops.alpha, &ops.omega]
                .iter()
                .map(|m| restrict_to_subspace(m, basis))
                .collect();
            let Ok(restricted) = restricted else {
                report.check(format!("n={n} block {tag} invariant"), false);
                continue;
            };
            report.check(format!("n={n} block {tag} invariant"), !basis.is_empty());
            let irreducible = generates_full_algebra(&restricted[..3]).unwrap_or(false);
            report.check(format!("n={n} block {tag} dim {} irreducible", basis.len()), irreducible);
            let sig = match (restricted[3].scalar_value(), restricted[4].scalar_value(), rational_spectrum(&restricted[0])) {
                (Some(alpha), Some(omega), Ok(Some(a_spectrum))) => {
                    Some(HahnSignature { dim: basis.len(), alpha, omega, a_spectrum })
                }
                _ => None,
            };
            report.check(format!("n={n} block {tag} has scalar alpha and Omega"), sig.is_some());
            signatures.push(sig);
        }
        let distinct = signatures.len() == 2 && signatures[0].is_some() && signatures[0] != signatures[1];
        report.check(format!("n={n} blocks non-isomorphic"), distinct);
        report.check(format!("n={n} block dims sum to n+1"), blocks[0].len() + blocks[1].len() == n + 1);
    }
    report
}

/// Checks, for `n <= n_max`: Casimir scalars, agreement of the parity
/// blocks of `L_n` with the model modules, irreducibility, distinct
/// signatures, and the classification round trip.
pub fn verify_module_facts(n_max: usize) -> Report {
    let mut report = Report::new("ue-modules");
    let mut signatures: BTreeMap<IsoSignature, UeLabel> = BTreeMap::new();
    for n in 0..=n_max {
        let rep = build_l(n);
        let lam = evaluate(&crate::usl2::casimir(), &rep);
        report.check(format!("L_{n} Casimir scalar n(n+2)/2"), lam.scalar_value() == Some(casimir_scalar(n)));
        let (even, odd) = match restrict_even(&rep, n as i64) {
            Ok(pair) => pair,
            Err(e) => {
                report.check(format!("L_{n} parity split ({e})"), false);
                continue;
            }
        };
        report.check(format!("L_{n}^(0) restriction matches model"), even.as_ref() == Some(&build_l0(n)));
        let odd_model = build_l1(n).ok();
        report.check(format!("L_{n}^(1) restriction matches model"), odd == odd_model);
        let mut labels = alloc::vec![UeLabel::even(n)];
        if n >= 1 {
            labels.push(UeLabel::odd(n));
        }
        for label in labels {
            let model = label.build().expect("label is valid");
            let closure = span_closure(&model.operators().map(Clone::clone)).expect("operators share a size");
            report.check(
                format!("{label} closure dimension {}", label.dim() * label.dim()),
                closure.dimension() == label.dim() * label.dim(),
            );
            match signature(&model) {
                Ok(sig) => {
                    let clash = signatures.insert(sig, label);
                    report.check(format!("{label} signature distinct"), clash.is_none());
                }
                Err(e) => report.check(format!("{label} signature ({e})"), false),
            }
            let round_trip = classify_ue_irreducible(&model).map(|c| c.label);
            report.check(format!("{label} classifies as itself"), round_trip == Ok(label));
        }
    }
    report
}
