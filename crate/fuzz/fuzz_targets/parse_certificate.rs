#![no_main]

use libfuzzer_sys::fuzz_target;
use signed_elim::{verify_certificate, Certificate, SignedGraph};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(cert) = s.parse::<Certificate>() else {
        return;
    };
    assert_eq!(cert.to_string().parse::<Certificate>().as_ref(), Ok(&cert));
    // The verifier must reject, not panic, on out-of-range vertices.
    let g = SignedGraph::new(6).unwrap();
    let _ = verify_certificate(&g, &cert);
});
