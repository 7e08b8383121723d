#![no_main]

use libfuzzer_sys::fuzz_target;
use pfusion::harness::Report;

fuzz_target!(|data: &str| {
    if let Ok(report) = Report::from_json(data) {
        let again = Report::from_json(&report.to_json()).expect("serialized report parses");
        assert_eq!(again.to_json(), report.to_json());
        let _ = report.to_text();
    }
});
