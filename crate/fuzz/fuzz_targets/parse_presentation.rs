#![no_main]

use libfuzzer_sys::fuzz_target;
use strata_core::presentation::{parse_presentation, serialize};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = parse_presentation(text) {
        let again = parse_presentation(&serialize(&p)).expect("serialized output parses");
        assert_eq!(serialize(&again), serialize(&p));
    }
});
