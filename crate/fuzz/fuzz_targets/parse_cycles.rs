#![no_main]

use libfuzzer_sys::fuzz_target;
use pfusion::group::Permutation;

// First byte picks the degree, the rest is cycle notation.
fuzz_target!(|data: &[u8]| {
    let Some((&degree, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    if let Ok(perm) = Permutation::parse_cycles(text, degree as usize) {
        let again = Permutation::parse_cycles(&perm.to_string(), perm.degree()).unwrap();
        assert_eq!(perm, again);
    }
});
