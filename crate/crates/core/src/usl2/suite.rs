//! Identity checks in `U(sl2)`, each an exact equality of PBW forms.

use alloc::format;

use super::{casimir, Usl2Element};
use crate::linalg::int;
use crate::report::Report;

fn c(n: i64) -> Usl2Element {
    Usl2Element::constant(int(n))
}

/// `prod_{i=1..n} (2Λ - (H + s(2i-2))(H + s·2i)) / 4` with `s = ±1`.
fn casimir_product(n: u32, sign: i64) -> Usl2Element {
    let lam2 = casimir().scale(&int(2));
    let h = Usl2Element::h();
    let mut out = Usl2Element::one();
    for i in 1..=i64::from(n) {
        let left = &h + &c(sign * (2 * i - 2));
        let right = &h + &c(sign * 2 * i);
        let factor = (&lam2 - &left.multiply(&right)).scale(&crate::linalg::rat(1, 4));
        out = out.multiply(&factor);
    }
    out
}

/// Checks the commutator and product formulas for powers of `E` and `F`:
///
/// * `[H,E^n] = 2n E^n`, `[H,F^n] = -2n F^n`
/// * `[H^2,E^n] = 4n(H-n)E^n`, `[H^2,F^n] = -4n(H+n)F^n`
/// * `E^n F^n` and `F^n E^n` as products of Casimir factors
///
/// The commutator families are also checked at `n = 0`.
pub fn power_identity_suite(n_max: u32) -> Report {
    let mut report = Report::new("usl2-power-identities");
    let h = Usl2Element::h();
    let h2 = Usl2Element::pbw(0, 0, 2);
    for n in 0..=n_max {
        let en = Usl2Element::pbw(n, 0, 0);
        let fn_ = Usl2Element::pbw(0, n, 0);
        let ni = i64::from(n);
        report.check(format!("[H,E^n]=2nE^n n={n}"), h.commutator(&en) == en.scale(&int(2 * ni)));
        report.check(format!("[H,F^n]=-2nF^n n={n}"), h.commutator(&fn_) == fn_.scale(&int(-2 * ni)));
        report.check(
            format!("[H^2,E^n]=4n(H-n)E^n n={n}"),
            h2.commutator(&en) == (&h - &c(ni)).multiply(&en).scale(&int(4 * ni)),
        );
        report.check(
            format!("[H^2,F^n]=-4n(H+n)F^n n={n}"),
            h2.commutator(&fn_) == (&h + &c(ni)).multiply(&fn_).scale(&int(-4 * ni)),
        );
        if n >= 1 {
            report.check(format!("E^nF^n product n={n}"), Usl2Element::pbw(n, n, 0) == casimir_product(n, -1));
            report.check(format!("F^nE^n product n={n}"), fn_.multiply(&en) == casimir_product(n, 1));
        }
    }
    report
}

/// Checks that `E^2, F^2, Λ, H` satisfy the defining relations of the
/// even subalgebra.
pub fn verify_ue_presentation() -> Report {
    let mut report = Report::new("usl2-ue-presentation");
    let e2 = Usl2Element::pbw(2, 0, 0);
    let f2 = Usl2Element::pbw(0, 2, 0);
    let lam = casimir();
    let h = Usl2Element::h();
    let h2 = Usl2Element::pbw(0, 0, 2);
    let lam2 = lam.scale(&int(2));
    report.check("Ue1 [H,E^2]=4E^2", h.commutator(&e2) == e2.scale(&int(4)));
    report.check("Ue2 [H,F^2]=-4F^2", h.commutator(&f2) == f2.scale(&int(-4)));
    let quad = |s: i64, shift: i64, constant: i64| &(&(&h2 + &h.scale(&int(s * shift))) - &lam2) + &c(constant);
    report.check(
        "Ue3 16E^2F^2",
        e2.multiply(&f2).scale(&int(16)) == quad(-1, 2, 0).multiply(&quad(-1, 6, 8)),
    );
    report.check(
        "Ue4 16F^2E^2",
        f2.multiply(&e2).scale(&int(16)) == quad(1, 2, 0).multiply(&quad(1, 6, 8)),
    );
    report.check("Ue5 [L,E^2]=0", lam.commutator(&e2).is_zero());
    report.check("Ue5 [L,F^2]=0", lam.commutator(&f2).is_zero());
    report.check("Ue5 [L,H]=0", lam.commutator(&h).is_zero());
    report
}

/// Checks the automorphism `ρ` on fixed generators and on `samples`:
/// involution, multiplicativity on consecutive pairs, and degree reversal.
pub fn verify_rho_properties(samples: &[Usl2Element]) -> Report {
    let mut report = Report::new("usl2-rho");
    let (e, f, h) = (Usl2Element::e(), Usl2Element::f(), Usl2Element::h());
    report.check("rho(E)=F", e.rho() == f);
    report.check("rho(F)=E", f.rho() == e);
    report.check("rho(H)=-H", h.rho() == -&h);
    report.check("rho(L)=L", casimir().rho() == casimir());
    let mut involution = true;
    let mut multiplicative = true;
    let mut reverses_degree = true;
    for (idx, x) in samples.iter().enumerate() {
        let image = x.rho();
        involution &= image.rho() == *x;
        reverses_degree &= x
            .degree_components()
            .iter()
            .all(|(d, part)| part.rho().terms().keys().all(|m| m.degree() == -d));
        if let Some(y) = samples.get(idx + 1) {
            multiplicative &= x.multiply(y).rho() == image.multiply(&y.rho());
        }
    }
    report.check(format!("rho^2=1 on {} samples", samples.len()), involution);
    report.check(format!("rho(xy)=rho(x)rho(y) on {} pairs", samples.len().saturating_sub(1)), multiplicative);
    report.check(format!("rho(U_n)=U_-n on {} samples", samples.len()), reverses_degree);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::usl2::PbwMonomial;

    #[test]
    fn power_identities_hold_to_four() {
        let report = power_identity_suite(4);
        assert_eq!(report.items.len(), 5 * 4 + 4 * 2);
        assert!(report.all_passed(), "{:?}", report.failures().collect::<alloc::vec::Vec<_>>());
    }

    #[test]
    fn ef_matches_casimir_factor() {
        // EF = (2Λ - H(H-2))/4
        assert_eq!(Usl2Element::pbw(1, 1, 0), casimir_product(1, -1));
    }

    #[test]
    fn presentation_holds() {
        let report = verify_ue_presentation();
        assert_eq!(report.items.len(), 7);
        assert!(report.all_passed());
    }

    #[test]
    fn rho_suite_on_small_samples() {
        let samples = [
            Usl2Element::pbw(2, 1, 1),
            Usl2Element::from_terms([(PbwMonomial::new(0, 3, 2), int(3)), (PbwMonomial::new(1, 0, 0), int(-1))]),
            casimir(),
        ];
        assert!(verify_rho_properties(&samples).all_passed());
    }
}
