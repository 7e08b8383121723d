use pfusion::group::Permutation;
use pfusion::harness::{builtin_corpus, cmd_cross_validate, parse_group_spec, GroupSpec, Limits, Report};
use proptest::prelude::*;

#[test]
fn report_json_round_trips() {
    let specs: Vec<GroupSpec> = builtin_corpus().into_iter().take(14).collect();
    let report = cmd_cross_validate(&specs, &Limits::default()).unwrap();
    assert_eq!(report.exit_code(), 0);
    let parsed = Report::from_json(&report.to_json()).unwrap();
    assert_eq!(parsed, report);
}

#[test]
fn pairs_follow_input_order() {
    let specs: Vec<GroupSpec> = builtin_corpus().into_iter().filter(|s| s.primes.len() > 1).take(4).collect();
    let report = cmd_cross_validate(&specs, &Limits::default()).unwrap();
    let keys: Vec<String> = report.pairs.iter().map(|r| r.key()).collect();
    let expected: Vec<String> =
        specs.iter().flat_map(|s| s.primes.iter().map(move |p| format!("{}@{p}", s.name))).collect();
    assert_eq!(keys, expected);
}

#[test]
fn corpus_specs_survive_json() {
    for spec in builtin_corpus() {
        let text = serde_json::to_string(&spec).unwrap();
        assert_eq!(parse_group_spec(&text).unwrap(), spec);
    }
}

proptest! {
    #[test]
    fn spec_parser_never_panics(text in "\\PC{0,80}") {
        let _ = parse_group_spec(&text);
    }

    #[test]
    fn spec_parser_on_structured_noise(degree in 0usize..12, gens in prop::collection::vec("[()0-9 ]{0,12}", 0..4), primes in prop::collection::vec(0u64..20, 0..4)) {
        let doc = serde_json::json!({ "name": "x", "degree": degree, "generators": gens, "primes": primes });
        if let Ok(spec) = parse_group_spec(&doc.to_string()) {
            prop_assert!(spec.build(5000).is_ok() || spec.degree > 6);
        }
    }
}

fn fuzz_seeds(target: &str) -> Vec<(String, Vec<u8>)> {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut seeds: Vec<_> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let path = e.unwrap().path();
            (path.file_name().unwrap().to_string_lossy().into_owned(), std::fs::read(&path).unwrap())
        })
        .collect();
    seeds.sort();
    seeds
}

#[test]
fn fuzz_seeds_behave() {
    for (name, bytes) in fuzz_seeds("parse_cycles") {
        let (&degree, rest) = bytes.split_first().unwrap();
        let parsed = Permutation::parse_cycles(std::str::from_utf8(rest).unwrap(), degree as usize);
        assert_eq!(parsed.is_ok(), !["out_of_range", "repeated_point"].contains(&name.as_str()), "{name}");
        if let Ok(perm) = parsed {
            assert_eq!(Permutation::parse_cycles(&perm.to_string(), perm.degree()).unwrap(), perm);
        }
    }
    for (name, bytes) in fuzz_seeds("parse_group_spec") {
        let parsed = parse_group_spec(std::str::from_utf8(&bytes).unwrap());
        assert_eq!(parsed.is_ok(), !["syntax_error", "unknown_field"].contains(&name.as_str()), "{name}");
    }
    for (name, bytes) in fuzz_seeds("report_json") {
        let report = Report::from_json(std::str::from_utf8(&bytes).unwrap()).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(Report::from_json(&report.to_json()).unwrap().to_json(), report.to_json());
    }
}
