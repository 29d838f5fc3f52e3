//! Holds the `acceptance` test target; run it with
//! `cargo test -p binsys-suite --test acceptance`.
