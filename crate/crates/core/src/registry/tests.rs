use super::*;
use std::collections::HashSet;

fn c() -> EvalContext {
    EvalContext::default()
}

#[test]
fn ids_and_aliases_are_unique() {
    let mut seen = HashSet::new();
    for d in list_identities() {
        assert!(seen.insert(d.id), "duplicate {}", d.id);
        for a in d.aliases {
            assert!(seen.insert(a), "duplicate alias {a}");
        }
    }
    assert!(list_identities().len() >= 55);
}

#[test]
fn lookup_by_id_and_alias() {
    let d = lookup("I-7.19").unwrap();
    assert!(d.title.contains("functional equation for the first Stieltjes"));
    assert_eq!(lookup("I-7.20").unwrap().id, "I-7.19");
    assert!(matches!(lookup("I-0.0"), Err(Error::UnknownIdentity(_))));
}

#[test]
fn unknown_filter_is_empty() {
    assert!(run_suite(Some("I-none"), SamplePlan::Full, &c()).unwrap().is_empty());
}

#[test]
fn check_examples() {
    for (id, p) in [("I-3.6", vec![("x", 0.3)]), ("I-8.8", vec![]), ("I-2.14", vec![]), ("I-8.10", vec![])] {
        let params: Params = p.into_iter().map(|(k, v)| (k.to_string(), v)).collect();
        let case = check(id, &params, &c()).unwrap();
        assert!(case.pass, "{case:?}");
    }
}

#[test]
fn check_rejects_bad_input() {
    assert!(matches!(check("I-none", &Params::new(), &c()), Err(Error::UnknownIdentity(_))));
    let bad = Params::from([("x".to_string(), 1.5)]);
    assert!(matches!(check("I-7.17", &bad, &c()), Err(Error::Domain { .. })));
    let unknown = Params::from([("q".to_string(), 1.0)]);
    assert!(matches!(check("I-7.17", &unknown, &c()), Err(Error::Domain { .. })));
}

#[test]
fn smoke_stieltjes_section() {
    let cases = run_suite(Some("I-7"), SamplePlan::Smoke, &c()).unwrap();
    assert!(!cases.is_empty());
    for case in &cases {
        assert!(case.pass, "{case:?}");
    }
}

#[test]
fn full_suite_passes() {
    let cases = run_suite(None, SamplePlan::Full, &c()).unwrap();
    assert!(cases.len() >= 300, "{}", cases.len());
    let failed: Vec<_> = cases.iter().filter(|c| !c.pass).collect();
    assert!(failed.is_empty(), "{} failures: {failed:#?}", failed.len());
    let ids: HashSet<_> = cases.iter().map(|c| c.id.as_str()).collect();
    assert_eq!(ids.len(), list_identities().len());
}
