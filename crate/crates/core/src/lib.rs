//! Finite binary systems: Cayley tables, the ⋄ product on Bin(X), the
//! UA/AU/OJ/JO factorizations, axiom checks for type-(2,0) algebras, and the
//! groupoid/graph correspondence.
//!
//! ```
//! use binsys::{factor, Groupoid, Method};
//!
//! let z3 = Groupoid::new(3, &[vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]], None, None)?;
//! assert!(factor::derive(&z3, Method::Au).reproduces_target);
//! assert!(!factor::classify(&z3).u_normal);
//! # Ok::<(), binsys::Error>(())
//! ```

pub mod axioms;
pub mod claims;
pub mod enumerate;
mod error;
pub mod factor;
pub mod format;
pub mod graph;
mod groupoid;
pub mod semigroup;

pub use error::{Error, Result};
pub use factor::{classify, ClassificationReport, FactorPair, FactorizationMethod, Method};
pub use groupoid::{DiagonalProfile, Groupoid, Predicate, PredicateVector, ZeroKind};
