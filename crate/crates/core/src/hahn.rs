//! The universal Hahn algebra on generators `A`, `B`, its map into `U(sl2)`,
//! and the identity checks that relate the two.
//!
//! `C`, `α`, `β` and `Ω` are abbreviations for free polynomials in `A`, `B`:
//!
//! ```text
//! C = AB - BA
//! α = [C,A] + 2A^2 + B
//! β = [B,C] + 4BA + 2C
//! Ω = 4ABA + B^2 - C^2 - 2βA + 2(1-α)B
//! ```
//!
//! The algebra itself is the free algebra modulo the ideal generated by the
//! relators `[α,A]`, `[α,B]`, `[β,A]`, `[β,B]`. Identities "in the algebra"
//! are checked by certifying that their residuals lie in that ideal.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::freealg::{ideal_membership, FreeAlgError, FreePoly, Membership};
use crate::linalg::{int, rat, Rational};
use crate::report::{CheckItem, Report, Status};
use crate::usl2::{casimir, Usl2Element};

/// Default degree bound for membership certificates.
pub const DEFAULT_DEGREE_BOUND: usize = 8;

/// Generators and abbreviations of the universal Hahn algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HahnPresentation {
    pub alphabet: Arc<[char]>,
    pub a: FreePoly,
    pub b: FreePoly,
    pub c: FreePoly,
    pub alpha: FreePoly,
    pub beta: FreePoly,
    pub omega: FreePoly,
}

/// Preimages of `E^2`, `F^2`, `Λ`, `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HattedElements {
    pub e2: FreePoly,
    pub f2: FreePoly,
    pub lambda: FreePoly,
    pub h: FreePoly,
}

impl Default for HahnPresentation {
    fn default() -> Self {
        Self::new()
    }
}

impl HahnPresentation {
    pub fn new() -> Self {
        let alphabet: Arc<[char]> = Arc::from(&['A', 'B'][..]);
        let a = FreePoly::monomial(alphabet.clone(), "A").expect("A is in the alphabet");
        let b = FreePoly::monomial(alphabet.clone(), "B").expect("B is in the alphabet");
        let c = a.commutator(&b);
        let alpha = &(&c.commutator(&a) + &(&a * &a).scale(&int(2))) + &b;
        let beta = &(&b.commutator(&c) + &(&b * &a).scale(&int(4))) + &c.scale(&int(2));
        let one = FreePoly::one(alphabet.clone());
        let omega = [
            (&(&a * &b) * &a).scale(&int(4)),
            &b * &b,
            -&(&c * &c),
            (&beta * &a).scale(&int(-2)),
            (&(&one - &alpha) * &b).scale(&int(2)),
        ]
        .iter()
        .fold(FreePoly::zero(alphabet.clone()), |acc, t| &acc + t);
        HahnPresentation { alphabet, a, b, c, alpha, beta, omega }
    }

    pub fn one(&self) -> FreePoly {
        FreePoly::one(self.alphabet.clone())
    }

    pub fn constant(&self, c: Rational) -> FreePoly {
        FreePoly::constant(self.alphabet.clone(), c)
    }

    /// `[α,A]`, `[α,B]`, `[β,A]`, `[β,B]`.
    pub fn relators(&self) -> Vec<FreePoly> {
        alloc::vec![
            self.alpha.commutator(&self.a),
            self.alpha.commutator(&self.b),
            self.beta.commutator(&self.a),
            self.beta.commutator(&self.b),
        ]
    }

    pub fn relator_degrees(&self) -> Vec<usize> {
        self.relators().iter().map(FreePoly::degree).collect()
    }

    /// `16Ω - 24α + 3`.
    pub fn omega_relation(&self) -> FreePoly {
        &(&self.omega.scale(&int(16)) - &self.alpha.scale(&int(24))) + &self.constant(int(3))
    }

    /// Relators together with `β` and `16Ω - 24α + 3`; generates the
    /// preimage of the kernel of `♮` in the free algebra.
    pub fn kernel_generators(&self) -> Vec<FreePoly> {
        let mut out = self.relators();
        out.push(self.beta.clone());
        out.push(self.omega_relation());
        out
    }

    pub fn hatted(&self) -> HattedElements {
        let a2 = &self.a * &self.a;
        let common = &(&a2.scale(&int(4)) + &self.b.scale(&int(2))) - &self.alpha.scale(&int(2));
        HattedElements {
            e2: &common + &self.c.scale(&int(2)),
            f2: &common - &self.c.scale(&int(2)),
            lambda: &self.one() + &self.alpha.scale(&int(4)),
            h: self.a.scale(&int(4)),
        }
    }
}

/// Images of the Hahn generators and abbreviations in `U(sl2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaturalMap {
    pub a: Usl2Element,
    pub b: Usl2Element,
    pub c: Usl2Element,
    pub alpha: Usl2Element,
    pub beta: Usl2Element,
}

impl Default for NaturalMap {
    fn default() -> Self {
        Self::new()
    }
}

impl NaturalMap {
    /// The stated images, written out directly rather than computed by
    /// substitution.
    pub fn new() -> Self {
        let e2 = Usl2Element::pbw(2, 0, 0);
        let f2 = Usl2Element::pbw(0, 2, 0);
        let h = Usl2Element::h();
        let lam_minus_one = &casimir() - &Usl2Element::one();
        NaturalMap {
            a: h.scale(&rat(1, 4)),
            b: &(&(&e2 + &f2) + &lam_minus_one).scale(&rat(1, 4)) - &Usl2Element::pbw(0, 0, 2).scale(&rat(1, 8)),
            c: (&e2 - &f2).scale(&rat(1, 4)),
            alpha: lam_minus_one.scale(&rat(1, 4)),
            beta: Usl2Element::zero(),
        }
    }

    pub fn images(&self) -> BTreeMap<char, Usl2Element> {
        [('A', self.a.clone()), ('B', self.b.clone())].into_iter().collect()
    }
}

/// Image of a polynomial in `A`, `B` under `♮`.
pub fn natural(p: &FreePoly) -> Usl2Element {
    p.substitute(&NaturalMap::new().images()).expect("polynomials over {A, B} have both images")
}

/// Image under the involution `A -> -A`, `B -> B`.
pub fn tilde_rho(p: &FreePoly) -> FreePoly {
    let a = FreePoly::monomial(p.alphabet().clone(), "A").expect("alphabet contains A");
    let b = FreePoly::monomial(p.alphabet().clone(), "B").expect("alphabet contains B");
    let images: BTreeMap<char, FreePoly> = [('A', -&a), ('B', b)].into_iter().collect();
    p.substitute(&images).expect("polynomials over {A, B} have both images")
}

/// Certifies that `residual` lies in the ideal spanned by `generators`.
///
/// A zero residual passes without a search. When the search finds nothing
/// the item is marked unresolved, not failed.
pub fn certify(name: impl Into<String>, residual: &FreePoly, generators: &[FreePoly], bound: usize) -> CheckItem {
    let name = name.into();
    if residual.is_zero() {
        return CheckItem::new(name, Status::Pass, "identically zero in the free algebra");
    }
    let mut item = match ideal_membership(residual, generators, bound) {
        Ok(Membership::Certified(cert)) => {
            let replays = cert.verify(residual, generators);
            let detail = format!("certificate with {} terms, residual degree {}", cert.terms.len(), residual.degree());
            let mut item = CheckItem::new(name, replays.into(), detail);
            item.certificate = Some(cert);
            item
        }
        Ok(Membership::NotFoundUpToBound { rank, .. }) => CheckItem::new(
            name,
            Status::Unresolved,
            format!("no certificate up to degree {bound} (span rank {rank})"),
        ),
        Err(FreeAlgError::BoundBelowDegree { degree, .. }) => CheckItem::new(
            name,
            Status::Unresolved,
            format!("degree bound {bound} is below residual degree {degree}"),
        ),
        Err(e) => CheckItem::new(name, Status::Fail, format!("{e}")),
    };
    item.bound = Some(bound);
    item
}

/// Checks the defining relations of the Hahn algebra on the `U(sl2)` images.
pub fn verify_natural_well_defined() -> Report {
    let mut report = Report::new("hahn-natural-well-defined");
    let nat = NaturalMap::new();
    let pres = HahnPresentation::new();
    let e2 = Usl2Element::pbw(2, 0, 0);
    let f2 = Usl2Element::pbw(0, 2, 0);
    let h = Usl2Element::h();
    let lam = casimir();

    report.check("[A,B]=C on images", nat.a.commutator(&nat.b) == nat.c);
    let ca = nat.c.commutator(&nat.a);
    report.check("[C,A]=-(E^2+F^2)/4 on images", ca == (&e2 + &f2).scale(&rat(-1, 4)));
    let alpha_image = &(&ca + &nat.a.pow(2).scale(&int(2))) + &nat.b;
    report.check("[C,A]+2A^2+B=(L-1)/4 on images", alpha_image == nat.alpha);
    let bc = nat.b.commutator(&nat.c);
    let bc_expected = [
        (&(&(&Usl2Element::one() - &e2) - &f2) - &lam).multiply(&h).scale(&rat(1, 4)),
        Usl2Element::pbw(0, 0, 3).scale(&rat(1, 8)),
        (&f2 - &e2).scale(&rat(1, 2)),
    ]
    .iter()
    .fold(Usl2Element::zero(), |acc, t| &acc + t);
    report.check("[B,C] expansion on images", bc == bc_expected);
    let beta_image = &(&bc + &nat.b.multiply(&nat.a).scale(&int(4))) + &nat.c.scale(&int(2));
    report.check("[B,C]+4BA+2C=0 on images", beta_image == nat.beta && beta_image.is_zero());
    for (label, x) in [("A", &nat.a), ("B", &nat.b), ("C", &nat.c)] {
        report.check(format!("alpha image commutes with {label} image"), nat.alpha.commutator(x).is_zero());
    }
    for (idx, r) in pres.relators().iter().enumerate() {
        report.check(format!("relator {idx} maps to zero"), natural(r).is_zero());
    }
    report.check("substituted C equals its stated image", natural(&pres.c) == nat.c);
    report.check("substituted alpha equals (L-1)/4", natural(&pres.alpha) == nat.alpha);
    report.check("substituted beta equals 0", natural(&pres.beta).is_zero());
    let omega_image = (&lam.scale(&int(2)) - &Usl2Element::constant(int(3))).scale(&rat(3, 16));
    report.check("substituted Omega equals 3(2L-3)/16", natural(&pres.omega) == omega_image);
    report.check("16 Omega - 24 alpha + 3 maps to zero", natural(&pres.omega_relation()).is_zero());
    report
}

/// Checks which homogeneous components the images of `A`, `B`, `C`, `α`,
/// `Ω` occupy, including the componentwise computation of `Ω`.
pub fn verify_image_gradings() -> Report {
    let mut report = Report::new("hahn-image-gradings");
    let nat = NaturalMap::new();
    let pres = HahnPresentation::new();
    let degrees = |x: &Usl2Element| x.degree_components().keys().copied().collect::<Vec<i64>>();
    report.check("A image lies in U_0", degrees(&nat.a) == [0]);
    report.check("B image lies in U_2+U_0+U_-2", degrees(&nat.b) == [-2, 0, 2]);
    report.check("C image lies in U_2+U_-2", degrees(&nat.c) == [-2, 2]);
    report.check("alpha image lies in U_0", degrees(&nat.alpha) == [0]);

    let comp = |x: &Usl2Element, d: i64| x.degree_components().remove(&d).unwrap_or_default();
    let e2 = Usl2Element::pbw(2, 0, 0);
    let f2 = Usl2Element::pbw(0, 2, 0);
    let lam = casimir();
    let (b2, b0, bm2) = (comp(&nat.b, 2), comp(&nat.b, 0), comp(&nat.b, -2));
    let (c2, cm2) = (comp(&nat.c, 2), comp(&nat.c, -2));
    let (a0, alpha0) = (comp(&nat.a, 0), comp(&nat.alpha, 0));
    report.check(
        "component table",
        b2 == e2.scale(&rat(1, 4))
            && bm2 == f2.scale(&rat(1, 4))
            && b0 == &(&lam - &Usl2Element::one()).scale(&rat(1, 4)) - &Usl2Element::pbw(0, 0, 2).scale(&rat(1, 8))
            && c2 == e2.scale(&rat(1, 4))
            && cm2 == f2.scale(&rat(-1, 4))
            && a0 == Usl2Element::h().scale(&rat(1, 4))
            && alpha0 == (&lam - &Usl2Element::one()).scale(&rat(1, 4)),
    );

    let omega4 = &b2.multiply(&b2) - &c2.multiply(&c2);
    let one_minus_alpha = &Usl2Element::one() - &alpha0;
    let omega2 = [
        (&c2 + &b2.multiply(&a0)).multiply(&a0).scale(&int(4)),
        b0.multiply(&b2),
        b2.multiply(&b0),
        one_minus_alpha.multiply(&b2).scale(&int(2)),
    ]
    .iter()
    .fold(Usl2Element::zero(), |acc, t| &acc + t);
    let omega0 = [
        b0.multiply(&a0).multiply(&a0).scale(&int(4)),
        b0.multiply(&b0),
        b2.multiply(&bm2),
        bm2.multiply(&b2),
        -&c2.multiply(&cm2),
        -&cm2.multiply(&c2),
        one_minus_alpha.multiply(&b0).scale(&int(2)),
    ]
    .iter()
    .fold(Usl2Element::zero(), |acc, t| &acc + t);
    let target = (&lam.scale(&int(2)) - &Usl2Element::constant(int(3))).scale(&rat(3, 16));
    report.check("Omega degree-4 component vanishes", omega4.is_zero());
    report.check("Omega degree-2 component vanishes", omega2.is_zero());
    report.check("Omega degree-0 component equals 3(2L-3)/16", omega0 == target);
    let omega = natural(&pres.omega);
    report.check(
        "Omega image is even and supported in degrees -4..4",
        omega.is_even() && omega.supported_in(&[-4, -2, 0, 2, 4]),
    );
    report.check("Omega image lies in U_0", degrees(&omega) == [0]);
    report
}

/// Checks `♮ ∘ ρ̃ = ρ ∘ ♮` on the named elements and on `samples`, and the
/// action of `ρ̃` on the abbreviations and hatted elements.
pub fn verify_intertwining(samples: &[FreePoly]) -> Report {
    let mut report = Report::new("hahn-intertwining");
    let pres = HahnPresentation::new();
    let hat = pres.hatted();
    report.check("tilde_rho(A)=-A", tilde_rho(&pres.a) == -&pres.a);
    report.check("tilde_rho(B)=B", tilde_rho(&pres.b) == pres.b);
    report.check("tilde_rho(C)=-C", tilde_rho(&pres.c) == -&pres.c);
    report.check("tilde_rho(alpha)=alpha", tilde_rho(&pres.alpha) == pres.alpha);
    report.check("tilde_rho(beta)=-beta", tilde_rho(&pres.beta) == -&pres.beta);
    report.check("tilde_rho(Omega)=Omega", tilde_rho(&pres.omega) == pres.omega);
    report.check("tilde_rho swaps E2^ and F2^", tilde_rho(&hat.e2) == hat.f2 && tilde_rho(&hat.f2) == hat.e2);
    report.check("tilde_rho fixes L^", tilde_rho(&hat.lambda) == hat.lambda);
    report.check("tilde_rho(H^)=-H^", tilde_rho(&hat.h) == -&hat.h);
    let named = [
        ("1", pres.one()),
        ("A", pres.a.clone()),
        ("B", pres.b.clone()),
        ("C", pres.c.clone()),
        ("alpha", pres.alpha.clone()),
        ("beta", pres.beta.clone()),
        ("Omega", pres.omega.clone()),
    ];
    for (label, p) in &named {
        report.check(format!("natural(tilde_rho({label}))=rho(natural({label}))"), natural(&tilde_rho(p)) == natural(p).rho());
    }
    let mut commute = true;
    let mut involution = true;
    for p in samples {
        let image = tilde_rho(p);
        involution &= tilde_rho(&image) == *p;
        commute &= natural(&image) == natural(p).rho();
    }
    report.check(format!("natural o tilde_rho = rho o natural on {} samples", samples.len()), commute);
    report.check(format!("tilde_rho is an involution on {} samples", samples.len()), involution);
    report
}

/// Residuals `lhs - rhs` of the identities that hold in the Hahn algebra,
/// keyed by name. Each is either zero in the free algebra or in the
/// relator ideal.
pub fn hahn_identity_residuals() -> Vec<(String, FreePoly)> {
    let p = HahnPresentation::new();
    let hat = p.hatted();
    let (a, b, c, alpha, beta, omega) = (&p.a, &p.b, &p.c, &p.alpha, &p.beta, &p.omega);
    let one = p.one();
    let k = |n: i64| p.constant(int(n));
    let a2 = a * a;
    let a3 = &a2 * a;
    let half_omega = (&(omega - &(b * b)) + &(c * c)).scale(&rat(1, 2));
    let omega_lhs = &half_omega + &(beta * a);
    let omega_rhs_1 = &(&(b * &a2).scale(&int(2)) + &(c * a).scale(&int(2))) + &(&(&one - alpha) * b);
    let omega_rhs_2 = [&a2 * b, b * &a2, a2.scale(&int(-2)), -&(alpha * b), alpha.clone()]
        .iter()
        .fold(FreePoly::zero(p.alphabet.clone()), |acc, t| &acc + t);
    let ac = a.commutator(c);
    let ac_rhs = &(&a2.scale(&int(2)) + b) - alpha;
    let a2c_rhs = [a3.scale(&int(4)), (a * b).scale(&int(2)), (alpha * a).scale(&int(-2)), -c]
        .iter()
        .fold(FreePoly::zero(p.alphabet.clone()), |acc, t| &acc + t);
    let acc_rhs = &(&a3.scale(&int(8)) - &(alpha * a).scale(&int(4))) + beta;
    let (e2, f2, lam, h) = (&hat.e2, &hat.f2, &hat.lambda, &hat.h);
    let h2 = h * h;
    let quad = |s: i64, shift: i64, constant: i64| {
        &(&(&h2 + &h.scale(&int(s * shift))) - &lam.scale(&int(2))) + &k(constant)
    };
    let kernel_part = |sign: i64| {
        &p.omega_relation().scale(&int(4)) + &(beta * &(&a.scale(&int(2)) + &k(sign))).scale(&int(64))
    };
    let e2f2 = &(&(e2 * f2).scale(&int(16)) - &(&quad(-1, 2, 0) * &quad(-1, 6, 8))) - &kernel_part(-1);
    let f2e2 = &(&(f2 * e2).scale(&int(16)) - &(&quad(1, 2, 0) * &quad(1, 6, 8))) - &kernel_part(1);
    alloc::vec![
        ("Omega via 2BA^2+2CA+(1-alpha)B".into(), &omega_lhs - &omega_rhs_1),
        ("Omega via A^2B+BA^2-2A^2-alphaB+alpha".into(), &omega_lhs - &omega_rhs_2),
        ("[A,C]=2A^2+B-alpha".into(), &ac - &ac_rhs),
        ("[A^2,C]=4A^3+2AB-2alphaA-C".into(), &a2.commutator(c) - &a2c_rhs),
        ("[[A,C],C]=8A^3-4alphaA+beta".into(), &ac.commutator(c) - &acc_rhs),
        ("[H^,E2^]=4E2^".into(), &h.commutator(e2) - &e2.scale(&int(4))),
        ("[H^,F2^]=-4F2^".into(), &h.commutator(f2) + &f2.scale(&int(4))),
        ("16E2^F2^ product with kernel terms".into(), e2f2),
        ("16F2^E2^ product with kernel terms".into(), f2e2),
        ("[Omega,A]=0".into(), omega.commutator(a)),
        ("[Omega,B]=0".into(), omega.commutator(b)),
        ("[alpha,C]=0".into(), alpha.commutator(c)),
        ("[beta,C]=0".into(), beta.commutator(c)),
    ]
}

/// Certifies every identity of [`hahn_identity_residuals`] in the relator ideal.
pub fn verify_hahn_identities(degree_bound: usize) -> Report {
    let mut report = Report::new("hahn-identities");
    let relators = HahnPresentation::new().relators();
    for (name, residual) in hahn_identity_residuals() {
        report.push(certify(name, &residual, &relators, degree_bound));
    }
    report
}

/// Checks that `β` and `16Ω-24α+3` map to zero, that `A`, `B`, `C` are
/// recovered from the hatted elements, that the hatted elements map to
/// `E^2, F^2, Λ, H`, and that they satisfy the even-subalgebra relations
/// modulo the ideal generated by the relators, `β` and `16Ω-24α+3`.
pub fn verify_kernel_and_inverse(degree_bound: usize) -> Report {
    let mut report = Report::new("hahn-kernel-and-inverse");
    let p = HahnPresentation::new();
    let hat = p.hatted();
    report.check("natural(beta)=0", natural(&p.beta).is_zero());
    report.check("natural(16 Omega - 24 alpha + 3)=0", natural(&p.omega_relation()).is_zero());

    report.check("natural(E2^)=E^2", natural(&hat.e2) == Usl2Element::pbw(2, 0, 0));
    report.check("natural(F2^)=F^2", natural(&hat.f2) == Usl2Element::pbw(0, 2, 0));
    report.check("natural(L^)=L", natural(&hat.lambda) == casimir());
    report.check("natural(H^)=H", natural(&hat.h) == Usl2Element::h());

    let (e2, f2, lam, h) = (&hat.e2, &hat.f2, &hat.lambda, &hat.h);
    let a_back = h.scale(&rat(1, 4));
    let b_back = &(&(e2 + f2).scale(&rat(1, 4)) - &(h * h).scale(&rat(1, 8))) + &(lam - &p.one()).scale(&rat(1, 4));
    let c_back = (e2 - f2).scale(&rat(1, 4));
    report.push(certify("A=H^/4", &(&p.a - &a_back), &[], degree_bound));
    report.push(certify("B from hatted elements", &(&p.b - &b_back), &[], degree_bound));
    report.push(certify("C=(E2^-F2^)/4", &(&p.c - &c_back), &[], degree_bound));

    let generators = p.kernel_generators();
    let h2 = h * h;
    let k = |n: i64| p.constant(int(n));
    let quad = |s: i64, shift: i64, constant: i64| {
        &(&(&h2 + &h.scale(&int(s * shift))) - &lam.scale(&int(2))) + &k(constant)
    };
    let relations = [
        ("hatted Ue1", &h.commutator(e2) - &e2.scale(&int(4))),
        ("hatted Ue2", &h.commutator(f2) + &f2.scale(&int(4))),
        ("hatted Ue3", &(e2 * f2).scale(&int(16)) - &(&quad(-1, 2, 0) * &quad(-1, 6, 8))),
        ("hatted Ue4", &(f2 * e2).scale(&int(16)) - &(&quad(1, 2, 0) * &quad(1, 6, 8))),
        ("hatted Ue5 [L^,E2^]", lam.commutator(e2)),
        ("hatted Ue5 [L^,F2^]", lam.commutator(f2)),
        ("hatted Ue5 [L^,H^]", lam.commutator(h)),
    ];
    for (name, residual) in relations {
        report.push(certify(name, &residual, &generators, degree_bound));
    }
    report
}
