//! Relation files: parsing must never panic, and accepted files must
//! survive an exact round trip through emission.

#![no_main]

use covertop::files::{emit_relation, parse_relation};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(file) = parse_relation(text) else {
        return;
    };
    let emitted = emit_relation(&file);
    let again = parse_relation(&emitted).expect("emitted relations must reparse");
    assert_eq!(again, file, "relation round trips must be exact");
});
