use braidtk::braid::{closure_summary, BraidWord, Move};
use braidtk::certifier::{
    certify, check_certificate, gate, known_exception, search_assemblage,
    three_braid_normal_forms, verify_certificate, verify_certificate_json, AssemblageCertificate,
    Budget, CertifyOutcome, Gate, VerifyError, KNOWN_EXCEPTIONS,
};
use braidtk::forms::{arf_invariant, seifert_matrix};
use braidtk::linking::is_prime;
use proptest::prelude::*;

fn w(s: &str) -> BraidWord {
    s.parse().unwrap()
}

fn certified(o: &CertifyOutcome) -> Option<&AssemblageCertificate> {
    match o {
        CertifyOutcome::Certified(c) => Some(c),
        _ => None,
    }
}

#[test]
fn exceptions_are_reported() {
    for e in KNOWN_EXCEPTIONS {
        let x = w(e);
        for v in [x.clone(), x.rotated(3), x.flipped(), x.reversed()] {
            assert!(matches!(certify(&v, Budget::default()), CertifyOutcome::KnownException(_)), "{v}");
        }
    }
}

#[test]
fn gates_in_order() {
    let cases = [
        ("s1^2 s3^2", Gate::NotPrime),
        ("s1 s2 s1 s2 s1 s2", Gate::NotAKnot),
        ("s1^5", Gate::TypeA),
        ("s1^3 s2 s1^2 s2^2", Gate::Genus),
    ];
    for (word, g) in cases {
        assert_eq!(certify(&w(word), Budget::default()), CertifyOutcome::NotApplicable(g), "{word}");
        assert_eq!(gate(&w(word)), Some(g));
    }
    assert_eq!(certify(&w("s1^5"), Budget::default()).exit_code(), 4);
}

#[test]
fn three_component_e6_word() {
    let x = w("s1^2 s2 s1^2 s2 s1^2 s2 s1^2 s2 s1^2 s2^2");
    assert_eq!(closure_summary(&x).components, 3);
    let out = search_assemblage(&x, Budget::default());
    let cert = certified(&out).expect("certificate");
    assert!(verify_certificate(&x, cert));
    assert!(cert.h >= 5);
}

#[test]
fn genus_five_three_braid_knots_certify() {
    let mut n = 0;
    for x in three_braid_normal_forms(10) {
        if gate(&x).is_some() || known_exception(&x).is_some() {
            continue;
        }
        let out = certify(&x, Budget::default());
        let cert = certified(&out).unwrap_or_else(|| panic!("{x}: {out:?}"));
        assert_eq!(check_certificate(&x, cert), Ok(()));
        let sd = seifert_matrix(&x).unwrap();
        assert_eq!((cert.genus, cert.arf), (5, Some(arf_invariant(&sd).unwrap())));
        n += 1;
    }
    assert!(n > 10, "{n}");
}

#[test]
fn exceptions_never_certify_under_certify() {
    for e in KNOWN_EXCEPTIONS {
        for budget in [Budget { states: 10, depth: 1 }, Budget::default(), Budget { states: 200_000, depth: 20 }] {
            assert!(certified(&certify(&w(e), budget)).is_none());
        }
    }
}

#[test]
fn budget_monotonicity() {
    let budgets = [
        Budget { states: 5, depth: 1 },
        Budget { states: 50, depth: 3 },
        Budget { states: 500, depth: 6 },
        Budget::default(),
    ];
    for x in three_braid_normal_forms(10).into_iter().chain(three_braid_normal_forms(11)) {
        let mut was = false;
        for b in budgets {
            let now = certified(&search_assemblage(&x, b)).is_some();
            assert!(!was || now, "{x} lost its certificate at {b:?}");
            was = now;
        }
    }
}

#[test]
fn tampering_is_detected() {
    let (x, out) = three_braid_normal_forms(10)
        .into_iter()
        .map(|x| {
            let o = certify(&x, Budget::default());
            (x, o)
        })
        .find(|(_, o)| certified(o).is_some())
        .unwrap();
    let cert = certified(&out).unwrap().clone();
    let json = serde_json::to_string(&cert).unwrap();
    assert_eq!(verify_certificate_json(&x, &json), Ok(()));
    let pretty = serde_json::to_string_pretty(&cert).unwrap();
    assert!(verify_certificate_json(&x, &pretty).is_err());

    let mut bad = cert.clone();
    bad.twists.push([0, 1]);
    assert_eq!(check_certificate(&x, &bad), Err(VerifyError::Twists));
    let mut bad = cert.clone();
    bad.moves.push(Move::FarCommutation { position: 0 });
    assert!(!verify_certificate(&x, &bad));
    let mut bad = cert.clone();
    bad.h += 1;
    assert!(!verify_certificate(&x, &bad));
    let mut bad = cert.clone();
    bad.arf = bad.arf.map(|a| 1 - a);
    assert!(!verify_certificate(&x, &bad));
    let mut other = x.letters().to_vec();
    other.push(1);
    assert!(!verify_certificate(&BraidWord::new(3, other).unwrap(), &cert));
    let mut extra: serde_json::Value = serde_json::from_str(&json).unwrap();
    extra["note"] = serde_json::json!("hi");
    assert!(verify_certificate_json(&x, &extra.to_string()).is_err());
}

fn knot_strategy() -> impl Strategy<Value = BraidWord> {
    (3usize..=4).prop_flat_map(|n| {
        proptest::collection::vec(1..n, 8..16).prop_map(move |l| BraidWord::new(n, l).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn certify_is_sound_and_gated(x in knot_strategy()) {
        let out = certify(&x, Budget { states: 5_000, depth: 6 });
        if let Some(cert) = certified(&out) {
            let s = closure_summary(&x);
            prop_assert_eq!(s.components, 1);
            prop_assert!(is_prime(&x));
            prop_assert!(s.genus >= 5);
            prop_assert!(verify_certificate(&x, cert));
            let json = serde_json::to_string(cert).unwrap();
            prop_assert_eq!(verify_certificate_json(&x, &json), Ok(()));
        }
        prop_assert_eq!(out.exit_code(), match out {
            CertifyOutcome::Certified(_) => 0,
            CertifyOutcome::KnownException(_) => 3,
            CertifyOutcome::NotApplicable(_) => 4,
            CertifyOutcome::Unknown(_) => 5,
        });
    }

    #[test]
    fn search_is_deterministic(x in knot_strategy()) {
        let b = Budget { states: 2_000, depth: 4 };
        prop_assert_eq!(search_assemblage(&x, b), search_assemblage(&x, b));
    }
}
