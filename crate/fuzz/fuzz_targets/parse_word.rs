#![no_main]

use libfuzzer_sys::fuzz_target;
use std::sync::OnceLock;
use strata_core::strings::parse_word;
use strata_core::{family, AlgebraPresentation, FamilyParams};

fn algebra() -> &'static AlgebraPresentation {
    static A: OnceLock<AlgebraPresentation> = OnceLock::new();
    A.get_or_init(|| family("A1", &FamilyParams::default()).unwrap())
}

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let _ = parse_word(algebra(), text);
});
