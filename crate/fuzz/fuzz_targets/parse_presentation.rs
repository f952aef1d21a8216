//! Any byte string may arrive as a presentation file. Parsing must
//! never panic, accepted files must survive an exact round trip
//! through emission, and loading (reference resolution plus cover
//! generation) must fail cleanly or succeed, never crash.

#![no_main]

use covertop::files::{emit_presentation, load_presentation, parse_presentation};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(file) = parse_presentation(text) else {
        return;
    };
    let emitted = emit_presentation(&file);
    let again = parse_presentation(&emitted).expect("emitted presentations must reparse");
    assert_eq!(again, file, "presentation round trips must be exact");
    let _ = load_presentation(&file);
});
