#![no_main]

use binsys::format::dot;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(d) = dot::parse_digraph(text) {
        let out = dot::digraph_to_dot(&d);
        let back = dot::parse_digraph(&out).expect("emitted DOT parses");
        assert_eq!(back, d);
        assert_eq!(back.labels(), d.labels());
    }
});
