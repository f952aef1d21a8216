//! The `element :: member,member` goal grammar: parsing must never
//! panic, and resolution against a base must fail cleanly on unknown
//! names rather than crash.

#![no_main]

use covertop::base::Base;
use covertop::files::{parse_goal, resolve_goal};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok((element, cover)) = parse_goal(text) else {
        return;
    };
    assert!(!element.is_empty(), "goal elements are never empty");
    assert!(
        cover.iter().all(|name| !name.is_empty()),
        "cover member names are never empty"
    );
    let base = Base::atomic(&["a", "b", "c"]).unwrap();
    let _ = resolve_goal(&base, text);
});
