#![no_main]

use libfuzzer_sys::fuzz_target;
use signed_elim::VertexOrder;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(order) = s.parse::<VertexOrder>() {
            assert_eq!(order.to_string().parse::<VertexOrder>().as_ref(), Ok(&order));
        }
    }
});
