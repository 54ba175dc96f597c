#![no_main]

use libfuzzer_sys::fuzz_target;
use signed_elim::{greedy_seo, parse_sg, serialize_sg};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(g) = parse_sg(text) else {
        return;
    };
    // Canonical text must parse back to the same graph.
    let canonical = serialize_sg(&g);
    assert_eq!(parse_sg(&canonical).as_ref(), Ok(&g));
    if g.vertex_count() <= 64 {
        let _ = greedy_seo(&g);
    }
});
