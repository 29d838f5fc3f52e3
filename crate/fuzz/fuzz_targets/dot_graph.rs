#![no_main]

use binsys::format::dot;
use binsys::graph::{from_graph, to_graph};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(g) = dot::parse_graph(text) {
        let out = dot::graph_to_dot(&g);
        let back = dot::parse_graph(&out).expect("emitted DOT parses");
        assert_eq!(back, g);
        assert_eq!(back.labels(), g.labels());
        assert_eq!(to_graph(&from_graph(&g)), g);
    }
});
