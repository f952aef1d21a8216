//! Comma-separated subset arguments: parsing against a base must never
//! panic, and an accepted subset must reproduce itself from its own
//! rendered names.

#![no_main]

use covertop::base::Base;
use covertop::files::parse_subset_arg;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let base = Base::atomic(&["a", "b", "c", "d"]).unwrap();
    let Ok(subset) = parse_subset_arg(&base, text) else {
        return;
    };
    let rendered = subset.names().join(",");
    let again = parse_subset_arg(&base, &rendered).expect("rendered subsets must reparse");
    assert_eq!(again, subset, "subset arguments round trip through names");
});
