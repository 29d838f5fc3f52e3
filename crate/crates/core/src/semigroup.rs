//! The semigroup (Bin(X), ⋄).
//!
//! `(g ⋄ h)(x, y) = h(g(x, y), g(y, x))`. The left-zero semigroup is the
//! two-sided identity and locally-zero groupoids are self-inverse units.
//!
//! Locally-zero groupoids are usually quoted as the center of the semigroup.
//! That matches brute force at orders 1 and 2 only: at order 3 the center is
//! just the left- and right-zero semigroups. [`CenterMode::Fast`] reports
//! the locally-zero test, [`CenterMode::Exhaustive`] the true center.

use rayon::prelude::*;

use crate::enumerate::{self, EXHAUSTIVE_LIMIT};
use crate::error::{Error, Result};
use crate::groupoid::Groupoid;

fn same_order(g: &Groupoid, h: &Groupoid) -> Result<()> {
    if g.order() == h.order() {
        Ok(())
    } else {
        Err(Error::OrderMismatch {
            left: g.order(),
            right: h.order(),
        })
    }
}

/// `g ⋄ h`. Labels survive when both operands carry the same labels; the
/// zero survives when both carry the same zero.
pub fn product(g: &Groupoid, h: &Groupoid) -> Result<Groupoid> {
    same_order(g, h)?;
    Ok(product_unchecked(g, h))
}

pub(crate) fn product_unchecked(g: &Groupoid, h: &Groupoid) -> Groupoid {
    let out = Groupoid::from_fn(g.order(), |x, y| h.get(g.get(x, y), g.get(y, x)));
    let labels = if g.labels() == h.labels() {
        g.labels().map(<[String]>::to_vec)
    } else {
        None
    };
    let zero = if g.zero() == h.zero() { g.zero() } else { None };
    out.with_labels(labels)
        .and_then(|o| o.with_zero(zero))
        .expect("metadata was valid on the operands")
}

/// Cell-wise test of `g ⋄ h == target` without building the product.
pub(crate) fn product_equals(g: &Groupoid, h: &Groupoid, target: &Groupoid) -> bool {
    let n = g.order();
    (0..n).all(|x| (0..n).all(|y| h.get(g.get(x, y), g.get(y, x)) == target.get(x, y)))
}

/// `g ⋄ h == h ⋄ g`.
pub fn commutes(g: &Groupoid, h: &Groupoid) -> Result<bool> {
    same_order(g, h)?;
    Ok(commutes_unchecked(g, h))
}

fn commutes_unchecked(g: &Groupoid, h: &Groupoid) -> bool {
    let n = g.order();
    (0..n)
        .all(|x| (0..n).all(|y| h.get(g.get(x, y), g.get(y, x)) == g.get(h.get(x, y), h.get(y, x))))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CenterMode {
    /// Locally-zero test. Agrees with the center only up to order 2.
    Fast,
    /// Commute against every groupoid of the same order.
    Exhaustive,
}

/// Membership in the center ZBin(X).
pub fn in_center(g: &Groupoid, mode: CenterMode) -> Result<bool> {
    match mode {
        CenterMode::Fast => Ok(g.is_locally_zero()),
        CenterMode::Exhaustive => {
            let n = g.order();
            let total = enumerate::count(n, EXHAUSTIVE_LIMIT)?;
            Ok((0..total)
                .into_par_iter()
                .all(|k| commutes_unchecked(g, &enumerate::groupoid_at(n, k))))
        }
    }
}

/// A two-sided ⋄-inverse of `g`, if one exists.
///
/// Locally-zero groupoids are their own inverse. Otherwise every table of the
/// same order is tried in lexicographic order, which needs `order ≤ 3`.
pub fn find_inverse(g: &Groupoid) -> Result<Option<Groupoid>> {
    if g.is_locally_zero() {
        return Ok(Some(g.clone()));
    }
    let n = g.order();
    let total = enumerate::count(n, EXHAUSTIVE_LIMIT)?;
    let id = Groupoid::left_zero(n);
    let found = (0..total).into_par_iter().find_first(|&k| {
        let h = enumerate::groupoid_at(n, k);
        product_equals(g, &h, &id) && product_equals(&h, g, &id)
    });
    Ok(found.map(|k| enumerate::groupoid_at(n, k)))
}
