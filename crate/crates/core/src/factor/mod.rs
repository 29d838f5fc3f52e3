//! Derived factors and the prime / composite / normal taxonomy.
//!
//! Two families of factorization are provided:
//!
//! * Ψ-type (signature `U`, similar `A`): the diagonals of the target and of
//!   the left-zero identity are swapped. `U` keeps the off-diagonal of the
//!   target with an identity diagonal; `A` keeps the diagonal of the target
//!   with a left-zero off-diagonal.
//! * τ-type (orient `O`, skew `J`): one table transform is applied to the
//!   identity and to the target. The transform replaces the anti-diagonal by
//!   the skew-diagonal, so `O` depends only on the order and `J` transposes
//!   the anti-diagonal of the target.
//!
//! `A ⋄ U` and `O ⋄ J` reproduce every groupoid; `U ⋄ A` needs a strong
//! target and `J ⋄ O` one with the orientation property.

mod classify;
mod search;

pub use classify::{classify, ClassificationReport};
pub use search::{uniqueness_search, UniquenessReport, SEARCH_ORDER_LIMIT};

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::enumerate::{self, EXHAUSTIVE_LIMIT};
use crate::error::{Error, Result};
use crate::groupoid::Groupoid;
use crate::semigroup::{product_equals, product_unchecked};

/// Signature factor `U(g)`: identity diagonal, off-diagonal copied from `g`.
pub fn signature_factor(g: &Groupoid) -> Groupoid {
    Groupoid::from_fn(g.order(), |x, y| if x == y { x } else { g.get(x, y) }).with_meta_of(g)
}

/// Similar factor `A(g)`: diagonal copied from `g`, left-zero elsewhere.
pub fn similar_factor(g: &Groupoid) -> Groupoid {
    Groupoid::from_fn(g.order(), |x, y| if x == y { g.get(x, x) } else { x }).with_meta_of(g)
}

/// Orient factor `O(g)`: the left-zero table whose anti-diagonal takes the
/// column element. Only the order of `g` matters.
pub fn orient_factor(g: &Groupoid) -> Groupoid {
    let n = g.order();
    Groupoid::from_fn(n, |x, y| if x + y + 1 == n { y } else { x }).with_meta_of(g)
}

/// Skew factor `J(g)`: `g` with its anti-diagonal transposed.
pub fn skew_factor(g: &Groupoid) -> Groupoid {
    let n = g.order();
    Groupoid::from_fn(n, |x, y| {
        if x + y + 1 == n {
            g.get(y, x)
        } else {
            g.get(x, y)
        }
    })
    .with_meta_of(g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    #[serde(rename = "psi")]
    Psi,
    #[serde(rename = "tau")]
    Tau,
}

/// Which cells of a factor are pinned, and to what.
///
/// `None` marks a free cell. Shapes describe the constrained family a factor
/// must live in for the uniqueness search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shape {
    order: usize,
    cells: Vec<Option<usize>>,
}

impl Shape {
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> Option<usize>) -> Shape {
        let cells = (0..order)
            .flat_map(|x| (0..order).map(move |y| (x, y)))
            .map(|(x, y)| f(x, y))
            .collect();
        Shape { order, cells }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn fixed(&self, x: usize, y: usize) -> Option<usize> {
        self.cells[x * self.order + y]
    }

    pub fn free_cells(&self) -> usize {
        self.cells.iter().filter(|c| c.is_none()).count()
    }

    pub fn admits(&self, g: &Groupoid) -> bool {
        g.order() == self.order
            && self
                .cells
                .iter()
                .zip(g.cells())
                .all(|(pin, &v)| pin.is_none_or(|p| p == v))
    }
}

/// A two-factor decomposition scheme `target = left ⋄ right`.
///
/// Ψ-type schemes exchange diagonals between the target and the identity;
/// τ-type schemes push the identity and the target through one transform.
/// New schemes implement this trait; the four built-in ones are [`Method`].
pub trait FactorizationMethod: Sync {
    fn name(&self) -> &str;
    fn family(&self) -> Family;
    fn derive_left(&self, target: &Groupoid) -> Groupoid;
    fn derive_right(&self, target: &Groupoid) -> Groupoid;
    /// The family the left factor must belong to.
    fn left_shape(&self, target: &Groupoid) -> Shape;
    /// The family the right factor must belong to.
    fn right_shape(&self, target: &Groupoid) -> Shape;

    fn factor(&self, target: &Groupoid) -> FactorPair {
        let left = self.derive_left(target);
        let right = self.derive_right(target);
        let reproduces_target = product_equals(&left, &right, target);
        FactorPair {
            method: self.name().to_string(),
            left,
            right,
            reproduces_target,
        }
    }
}

/// The four factorizations: `UA = U ⋄ A`, `AU = A ⋄ U`, `OJ = O ⋄ J`,
/// `JO = J ⋄ O`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Method {
    #[serde(rename = "UA")]
    Ua,
    #[serde(rename = "AU")]
    Au,
    #[serde(rename = "OJ")]
    Oj,
    #[serde(rename = "JO")]
    Jo,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Ua, Method::Au, Method::Oj, Method::Jo];
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "ua" => Ok(Method::Ua),
            "au" => Ok(Method::Au),
            "oj" => Ok(Method::Oj),
            "jo" => Ok(Method::Jo),
            other => Err(format!(
                "unknown method {other:?} (expected ua, au, oj or jo)"
            )),
        }
    }
}

// U-shape: identity diagonal, free off-diagonal.
fn signature_shape(n: usize) -> Shape {
    Shape::from_fn(n, |x, y| (x == y).then_some(x))
}

// A-shape: left-zero off-diagonal, free diagonal.
fn similar_shape(n: usize) -> Shape {
    Shape::from_fn(n, |x, y| (x != y).then_some(x))
}

// O-shape: left-zero off the anti-diagonal, free anti-diagonal.
fn orient_shape(n: usize) -> Shape {
    Shape::from_fn(n, |x, y| (x + y + 1 != n).then_some(x))
}

// J-shape: agrees with the target off the anti-diagonal.
fn skew_shape(target: &Groupoid) -> Shape {
    let n = target.order();
    Shape::from_fn(n, |x, y| (x + y + 1 != n).then(|| target.get(x, y)))
}

impl FactorizationMethod for Method {
    fn name(&self) -> &str {
        match self {
            Method::Ua => "UA",
            Method::Au => "AU",
            Method::Oj => "OJ",
            Method::Jo => "JO",
        }
    }

    fn family(&self) -> Family {
        match self {
            Method::Ua | Method::Au => Family::Psi,
            Method::Oj | Method::Jo => Family::Tau,
        }
    }

    fn derive_left(&self, g: &Groupoid) -> Groupoid {
        match self {
            Method::Ua => signature_factor(g),
            Method::Au => similar_factor(g),
            Method::Oj => orient_factor(g),
            Method::Jo => skew_factor(g),
        }
    }

    fn derive_right(&self, g: &Groupoid) -> Groupoid {
        match self {
            Method::Ua => similar_factor(g),
            Method::Au => signature_factor(g),
            Method::Oj => skew_factor(g),
            Method::Jo => orient_factor(g),
        }
    }

    fn left_shape(&self, g: &Groupoid) -> Shape {
        let n = g.order();
        match self {
            Method::Ua => signature_shape(n),
            Method::Au => similar_shape(n),
            Method::Oj => orient_shape(n),
            Method::Jo => skew_shape(g),
        }
    }

    fn right_shape(&self, g: &Groupoid) -> Shape {
        let n = g.order();
        match self {
            Method::Ua => similar_shape(n),
            Method::Au => signature_shape(n),
            Method::Oj => skew_shape(g),
            Method::Jo => orient_shape(n),
        }
    }
}

/// A derived factor pair and whether `left ⋄ right` gives back the target.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorPair {
    pub method: String,
    pub left: Groupoid,
    pub right: Groupoid,
    pub reproduces_target: bool,
}

impl FactorPair {
    pub fn product(&self) -> Groupoid {
        product_unchecked(&self.left, &self.right)
    }
}

/// Convenience for the built-in methods.
pub fn derive(g: &Groupoid, method: Method) -> FactorPair {
    method.factor(g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// ∂-primality of `g` with respect to a one-sided identity `h`.
///
/// Requires `h ≠ id`, `h ≠ g`, `g ≠ id`, and `g ⋄ h = g` (right) or
/// `h ⋄ g = g` (left).
pub fn is_partially_prime(g: &Groupoid, h: &Groupoid, side: Side) -> Result<bool> {
    if g.order() != h.order() {
        return Err(Error::OrderMismatch {
            left: g.order(),
            right: h.order(),
        });
    }
    let id = Groupoid::left_zero(g.order());
    if *h == id || h == g || *g == id {
        return Ok(false);
    }
    Ok(match side {
        Side::Right => product_equals(g, h, g),
        Side::Left => product_equals(h, g, g),
    })
}

/// A witness `w` with `w ⋄ a = b` and `w ⋄ b = a`.
///
/// The supplied witness is tried first; otherwise every table is tried in
/// lexicographic order, which needs `order ≤ 3`.
pub fn binary_equivalent(
    a: &Groupoid,
    b: &Groupoid,
    witness: Option<&Groupoid>,
) -> Result<Option<Groupoid>> {
    if a.order() != b.order() {
        return Err(Error::OrderMismatch {
            left: a.order(),
            right: b.order(),
        });
    }
    let works = |w: &Groupoid| product_equals(w, a, b) && product_equals(w, b, a);
    if let Some(w) = witness {
        if w.order() != a.order() {
            return Err(Error::OrderMismatch {
                left: a.order(),
                right: w.order(),
            });
        }
        if works(w) {
            return Ok(Some(w.clone()));
        }
    }
    Ok(enumerate::enumerate(a.order())
        .map_err(|_| Error::OrderTooLarge {
            order: a.order(),
            limit: EXHAUSTIVE_LIMIT,
        })?
        .find(|w| works(w)))
}
