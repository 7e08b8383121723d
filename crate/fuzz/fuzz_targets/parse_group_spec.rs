#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(spec) = pfusion::harness::parse_group_spec(data) {
        // keep the search small so slow inputs are about parsing, not enumeration
        let _ = spec.build(256);
    }
});
