#![no_main]

use binsys::format::gpd;
use libfuzzer_sys::fuzz_target;

// Anything that parses must serialize to a fixed point.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(g) = gpd::parse(text) {
        let out = gpd::serialize(&g);
        let back = gpd::parse(&out).expect("serializer output parses");
        assert_eq!(back, g);
        assert_eq!(back.zero(), g.zero());
        assert_eq!(gpd::serialize(&back), out);
    }
});
