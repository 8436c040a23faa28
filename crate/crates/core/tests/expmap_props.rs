mod common;

use std::collections::BTreeMap;
use std::sync::Arc;

use common::*;
use krw::expmap::ExpMap;
use krw::grading::{FiltrationSpec, Grading};
use krw::poly::{Monomial, Polynomial};
use krw::quotient::{QuotientRingSpec, Subring};
use krw::Error;
use proptest::prelude::*;

fn maps(r: &Arc<QuotientRingSpec>) -> [ExpMap; 2] {
    [
        ExpMap::builtin("phi1", r).unwrap(),
        ExpMap::builtin("phi2", r).unwrap(),
    ]
}

#[test]
fn phi1_on_z_squared_matches_expansion_oracle() {
    let r = QuotientRingSpec::generic(2);
    let phi1 = ExpMap::builtin("phi1", &r).unwrap();
    let image = phi1.apply(&r.element(&p("z^2"))).unwrap();
    let z_image = p("z - x^2*U");
    assert_eq!(
        dense(&image),
        oracle_mul(&terms_of(&z_image), &terms_of(&z_image))
    );
    assert_eq!(phi1.apply(&r.element(&p("t"))).unwrap(), p("t"));
    assert!(phi1.apply(&r.element(r.relation())).unwrap().is_zero());
}

#[test]
fn corrupted_phi1_leaves_a_residue() {
    // with z -> z - x*U the relation maps to f + 2x^2zU - x^4U^2 - 2xzU + x^2U^2
    let r = QuotientRingSpec::generic(1);
    let images = BTreeMap::from([(Y, p("y + 2*z*U - x^2*U^2")), (Z, p("z - x*U"))]);
    let bad = ExpMap::load(images, &r).unwrap();
    let outcome = bad.check_well_defined();
    assert!(!outcome.holds);
    let residue = r.normal_form(&p("2*x^2*z*U - x^4*U^2 - 2*x*z*U + x^2*U^2"));
    assert_eq!(outcome.witness, Some(residue.to_string()));
    assert!(matches!(
        bad.check_iterative(),
        Err(Error::NotWellDefined { .. })
    ));
}

#[test]
fn iterativity_by_hand() {
    let r = QuotientRingSpec::generic(0);
    let phi1 = ExpMap::builtin("phi1", &r).unwrap();
    // phi1_V applied to phi1_U(z) = z - x^2 U
    let z_then = p("(z - x^2*V) - x^2*U");
    assert_eq!(z_then, p("z - x^2*(U + V)"));
    // phi1_V applied to phi1_U(y) = y + 2zU - x^2U^2
    let y_then = p("(y + 2*z*V - x^2*V^2) + 2*(z - x^2*V)*U - x^2*U^2");
    assert_eq!(y_then, p("y + 2*z*(U + V) - x^2*(U + V)^2"));
    assert!(phi1.check_iterative().unwrap().holds);
    assert!(ExpMap::identity(&r).check_iterative().unwrap().holds);
}

#[test]
fn loading_phi1_by_hand_gives_the_builtin() {
    let r = QuotientRingSpec::generic(3);
    let images = BTreeMap::from([
        (X, p("x")),
        (Y, p("y + 2*z*U - x^2*U^2")),
        (Z, p("z - x^2*U")),
        (T, p("t")),
    ]);
    let loaded = ExpMap::load(images, &r).unwrap();
    let builtin = ExpMap::builtin("phi1", &r).unwrap();
    for s in [X, Y, Z, T] {
        assert_eq!(loaded.image(s), builtin.image(s));
    }
    assert_eq!(builtin.image(Y), &p("y + 2*z*U - x^2*U^2"));
    let phi2 = ExpMap::builtin("phi2", &r).unwrap();
    assert_eq!(phi2.image(Y), &p("y + 3*t^2*U - 3*x^2*t*U^2 + x^4*U^3"));
}

#[test]
fn derivation_components_and_fixed_points() {
    let r = QuotientRingSpec::generic(2);
    let [phi1, phi2] = maps(&r);
    let y = r.generator(Y);
    assert_eq!(phi1.derivation_component(&y, 1).unwrap().rep(), &p("2*z"));
    assert_eq!(phi1.derivation_component(&y, 2).unwrap().rep(), &p("-x^2"));
    assert!(phi1
        .derivation_component(&r.generator(X), 1)
        .unwrap()
        .is_zero());
    assert!(phi1.is_fixed(&r.element(&p("x*t^3"))).unwrap().fixed);
    let res = phi1.is_fixed(&y).unwrap();
    assert_eq!(
        res.witness.map(|(i, d)| (i, d.rep().clone())),
        Some((1, p("2*z")))
    );
    assert!(phi2.is_fixed(&r.generator(Z)).unwrap().fixed);
}

#[test]
fn induced_maps_on_the_omega1_graded_ring() {
    // delta(z) = 0, delta(D1 z) = delta(-x^2) = -2; delta(y) = 2, delta(D1 y) = 0,
    // delta(D2 y) = -2: every ratio is -2
    let r = QuotientRingSpec::generic(3);
    let filt = FiltrationSpec::new(&r, Grading::omega1()).unwrap();
    let [phi1, phi2] = maps(&r);
    let res = phi1.induce_graded(&filt).unwrap();
    assert_eq!(res.u_weight, q(-2, 1));
    assert!(res.verified);
    assert_eq!(res.induced.image(Z), &p("z - x^2*U"));
    assert_eq!(res.induced.image(Y), &p("y + 2*z*U - x^2*U^2"));
    let res = phi2.induce_graded(&filt).unwrap();
    assert_eq!(res.u_weight, q(-2, 1));
    assert_eq!(res.induced.image(T), &p("t - x^2*U"));
    assert_eq!(
        res.induced.image(Y),
        &p("y + 3*t^2*U - 3*x^2*t*U^2 + x^4*U^3")
    );
    assert!(matches!(
        ExpMap::identity(&r).induce_graded(&filt),
        Err(Error::TrivialMap)
    ));
}

fn fixed_generator_monomial(fixed: [krw::poly::Symbol; 2]) -> impl Strategy<Value = Polynomial> {
    (0u32..6, 0u32..6, -4i64..=4)
        .prop_filter("nonzero coefficient", |(_, _, c)| *c != 0)
        .prop_map(move |(a, b, c)| {
            Polynomial::term(
                q(c, 1),
                Monomial::from_exponents([(fixed[0], a), (fixed[1], b)]),
            )
        })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn apply_is_a_ring_homomorphism(r in ring_strategy(), a in poly_in(MAIN, 2, 3), b in poly_in(MAIN, 2, 3)) {
        for phi in maps(&r) {
            let (ea, eb) = (r.element(&a), r.element(&b));
            let (ia, ib) = (phi.apply(&ea).unwrap(), phi.apply(&eb).unwrap());
            prop_assert_eq!(phi.apply(&ea.times(&eb).unwrap()).unwrap(), r.normal_form(&(&ia * &ib)));
            prop_assert_eq!(phi.apply(&ea.plus(&eb).unwrap()).unwrap(), &ia + &ib);
        }
    }

    #[test]
    fn apply_ignores_the_representative(r in ring_strategy(), a in poly_in(MAIN, 3, 3), m in poly_in(MAIN, 1, 2)) {
        let shifted = &a + &(&m * r.relation());
        for phi in maps(&r) {
            prop_assert_eq!(phi.apply_rep(&shifted), phi.apply(&r.element(&a)).unwrap());
        }
    }

    #[test]
    fn setting_u_to_zero_recovers_the_element(r in ring_strategy(), a in poly_in(MAIN, 3, 4)) {
        let e = r.element(&a);
        for phi in maps(&r) {
            let image = phi.apply(&e).unwrap();
            prop_assert_eq!(&image.substitute_one(U, &Polynomial::zero()), e.rep());
            let components = phi.components(&e).unwrap();
            prop_assert_eq!(components[0].rep(), e.rep());
        }
    }

    #[test]
    fn monomials_in_fixed_generators_are_fixed(
        r in ring_strategy(),
        m1 in fixed_generator_monomial([X, T]),
        m2 in fixed_generator_monomial([X, Z]),
    ) {
        let [phi1, phi2] = maps(&r);
        prop_assert!(phi1.is_fixed(&r.element(&m1)).unwrap().fixed);
        prop_assert!(phi2.is_fixed(&r.element(&m2)).unwrap().fixed);
    }

    #[test]
    fn fixed_by_both_lies_in_k_x(
        r in ring_strategy(),
        kx in poly_in(&[X], 5, 3),
        noise in poly_in(MAIN, 2, 2),
        add_noise in any::<bool>(),
    ) {
        let a = if add_noise { &kx + &noise } else { kx };
        let e = r.element(&a);
        let [phi1, phi2] = maps(&r);
        let both = phi1.is_fixed(&e).unwrap().fixed && phi2.is_fixed(&e).unwrap().fixed;
        if both {
            prop_assert!(e.member_of(Subring::KX), "{} is fixed by both", e);
        }
        if e.member_of(Subring::KX) {
            prop_assert!(both);
        }
    }

    #[test]
    fn leading_forms_of_fixed_elements_are_fixed(r in ring_strategy(), a in nonzero(poly_in(&[X, T], 3, 4))) {
        let filt = FiltrationSpec::new(&r, Grading::omega1()).unwrap();
        let phi1 = ExpMap::builtin("phi1", &r).unwrap();
        let e = r.element(&a);
        prop_assert!(phi1.is_fixed(&e).unwrap().fixed);
        let induced = phi1.induce_graded(&filt).unwrap().induced;
        let xi = filt.degree_leading(&e).unwrap().form;
        prop_assert!(induced.is_fixed(&xi).unwrap().fixed);
    }
}
