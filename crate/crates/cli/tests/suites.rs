use ambc_cells::{cell_triples, enumerate_cells, run_suite, EnumerationSpec, VerifyReport, SUITES};
use ambc_core::{phi, Partition};

fn without_time(mut r: VerifyReport) -> VerifyReport {
    r.wall_time_ms = 0;
    r
}

#[test]
fn every_suite_passes_at_small_scale() {
    for name in SUITES {
        let r = run_suite(name, &EnumerationSpec::new(3, 1)).unwrap();
        assert!(r.passed(), "{r}");
        assert!(r.instances > 0, "{name} checked nothing");
    }
}

#[test]
fn reports_do_not_depend_on_thread_count() {
    for name in ["roundtrip", "blasiak", "theta", "connectivity"] {
        let one = run_suite(name, &EnumerationSpec::new(3, 2)).unwrap();
        let mut spec = EnumerationSpec::new(3, 2);
        spec.jobs = 3;
        let three = run_suite(name, &spec).unwrap();
        assert_eq!(without_time(one), without_time(three), "{name}");
    }
}

#[test]
fn sampling_is_seeded() {
    let spec = EnumerationSpec::new(4, 2).with_sample(0.3).with_seed(11);
    let a = cell_triples(&spec).unwrap();
    assert_eq!(a, cell_triples(&spec).unwrap());
    let full = cell_triples(&EnumerationSpec::new(4, 2)).unwrap();
    assert!(a.len() < full.len() && !a.is_empty());
    assert!(a.iter().all(|t| full.contains(t)));
}

#[test]
fn lambda_filter_restricts_the_cell() {
    let lambda: Partition = "2,2".parse().unwrap();
    let spec = EnumerationSpec::new(4, 1).with_lambda(lambda.clone());
    let cells = enumerate_cells(&spec).unwrap();
    assert!(!cells.is_empty());
    assert!(cells.iter().all(|(w, t)| t.shape() == lambda && phi(w).as_ref() == Ok(t)));
    let bad = EnumerationSpec::new(4, 1).with_lambda("2,1".parse().unwrap());
    assert!(enumerate_cells(&bad).is_err());
}
