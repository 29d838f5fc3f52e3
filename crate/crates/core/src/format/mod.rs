//! Text formats: groupoid files and the DOT subset.

pub mod dot;
pub mod gpd;
