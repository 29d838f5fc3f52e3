//! Shape-constrained uniqueness search for a factorization method.
//!
//! The product cell `(x, y)` reads the left factor at `(x, y)` and `(y, x)`
//! and the right factor at one cell addressed by those two values. The
//! search therefore walks unordered pairs `{x, y}` of the left factor,
//! assigning its free cells, and pins the right-factor cells each choice
//! forces. A conflict prunes the branch. Right-factor cells that are never
//! addressed stay free and multiply the solution count by `n` each.

use serde::Serialize;

use super::{FactorPair, FactorizationMethod};
use crate::error::{Error, Result};
use crate::groupoid::Groupoid;

/// Largest order accepted by [`uniqueness_search`].
pub const SEARCH_ORDER_LIMIT: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Solution {
    pub left: Groupoid,
    pub right: Groupoid,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniquenessReport {
    pub method: String,
    pub derived_pair: FactorPair,
    /// Shape-conforming solutions other than the derived pair, in search
    /// order, at most `limit` of them.
    pub other_solutions: Vec<Solution>,
    /// Every solution seen, the derived pair included when it is one.
    pub solutions_found: u128,
    /// The search stopped after reaching the limit, so `solutions_found`
    /// is a lower bound.
    pub truncated: bool,
}

impl UniquenessReport {
    /// Exactly one shape-conforming solution and it is the derived pair.
    pub fn is_unique(&self) -> bool {
        !self.truncated
            && self.solutions_found == 1
            && self.derived_pair.reproduces_target
            && self.other_solutions.is_empty()
    }
}

struct Unit {
    x: usize,
    y: usize,
    // free left cells of this pair, as flat indices
    free: Vec<usize>,
}

struct Search<'a> {
    n: usize,
    target: &'a Groupoid,
    left: Vec<Option<usize>>,
    right: Vec<Option<usize>>,
    units: Vec<Unit>,
    derived: (&'a Groupoid, &'a Groupoid),
    limit: usize,
    found: u128,
    others: Vec<Solution>,
    stop: bool,
}

impl Search<'_> {
    fn at(&self, x: usize, y: usize) -> usize {
        self.left[x * self.n + y].expect("unit cells are assigned before use")
    }

    // Pin right[a][b] = v; returns false on conflict, records new pins.
    fn pin(&mut self, a: usize, b: usize, v: usize, pinned: &mut Vec<usize>) -> bool {
        let k = a * self.n + b;
        match self.right[k] {
            Some(w) => w == v,
            None => {
                self.right[k] = Some(v);
                pinned.push(k);
                true
            }
        }
    }

    fn constrain(&mut self, x: usize, y: usize, pinned: &mut Vec<usize>) -> bool {
        let (a, b) = (self.at(x, y), self.at(y, x));
        let (gxy, gyx) = (self.target.get(x, y), self.target.get(y, x));
        self.pin(a, b, gxy, pinned) && self.pin(b, a, gyx, pinned)
    }

    fn descend(&mut self, depth: usize) {
        if self.stop {
            return;
        }
        if depth == self.units.len() {
            self.leaf();
            return;
        }
        let free = self.units[depth].free.clone();
        let (x, y) = (self.units[depth].x, self.units[depth].y);
        let mut digits = vec![0usize; free.len()];
        loop {
            for (&k, &d) in free.iter().zip(&digits) {
                self.left[k] = Some(d);
            }
            let mut pinned = Vec::new();
            if self.constrain(x, y, &mut pinned) {
                self.descend(depth + 1);
            }
            for k in pinned {
                self.right[k] = None;
            }
            if self.stop || !odometer(&mut digits, self.n) {
                break;
            }
        }
        for &k in &free {
            self.left[k] = None;
        }
    }

    fn leaf(&mut self) {
        let open: Vec<usize> = (0..self.right.len())
            .filter(|&k| self.right[k].is_none())
            .collect();
        let left: Vec<usize> = self
            .left
            .iter()
            .map(|c| c.expect("all units assigned"))
            .collect();
        let left = Groupoid::from_cells(self.n, left).expect("digits are below the order");
        let mut digits = vec![0usize; open.len()];
        loop {
            let mut cells: Vec<usize> = self.right.iter().map(|c| c.unwrap_or(0)).collect();
            for (&k, &d) in open.iter().zip(&digits) {
                cells[k] = d;
            }
            let right = Groupoid::from_cells(self.n, cells).expect("digits are below the order");
            self.found += 1;
            if (&left, &right) != self.derived {
                self.others.push(Solution {
                    left: left.clone(),
                    right,
                });
            }
            if self.others.len() >= self.limit {
                self.stop = true;
                return;
            }
            if !odometer(&mut digits, self.n) {
                return;
            }
        }
    }
}

// Advance a base-n counter, last digit fastest. False once it wraps.
fn odometer(digits: &mut [usize], n: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < n {
            return true;
        }
        *d = 0;
    }
    false
}

/// Every pair `(ℓ, r)` in the method's left and right shapes with
/// `ℓ ⋄ r = target`, keeping at most `limit` solutions besides the derived
/// one.
pub fn uniqueness_search<M>(target: &Groupoid, method: &M, limit: usize) -> Result<UniquenessReport>
where
    M: FactorizationMethod + ?Sized,
{
    let n = target.order();
    if n > SEARCH_ORDER_LIMIT {
        return Err(Error::OrderTooLarge {
            order: n,
            limit: SEARCH_ORDER_LIMIT,
        });
    }
    let derived_pair = method.factor(target);
    let ls = method.left_shape(target);
    let rs = method.right_shape(target);
    let left: Vec<Option<usize>> = (0..n * n).map(|k| ls.fixed(k / n, k % n)).collect();
    let right: Vec<Option<usize>> = (0..n * n).map(|k| rs.fixed(k / n, k % n)).collect();

    let mut units: Vec<Unit> = (0..n)
        .flat_map(|x| (x..n).map(move |y| (x, y)))
        .map(|(x, y)| {
            let mut cells = vec![x * n + y];
            if x != y {
                cells.push(y * n + x);
            }
            let free = cells.into_iter().filter(|&k| left[k].is_none()).collect();
            Unit { x, y, free }
        })
        .collect();
    // fully pinned pairs first, they only prune
    units.sort_by_key(|u| u.free.len());

    let mut search = Search {
        n,
        target,
        left,
        right,
        units,
        derived: (&derived_pair.left, &derived_pair.right),
        limit: limit.max(1),
        found: 0,
        others: Vec::new(),
        stop: false,
    };
    search.descend(0);
    let (found, others, truncated) = (search.found, search.others, search.stop);
    let mut solutions_found = found;
    // the derived pair may sit beyond the truncation point
    if truncated && derived_pair.reproduces_target {
        solutions_found = solutions_found.max(others.len() as u128 + 1);
    }
    Ok(UniquenessReport {
        method: method.name().to_string(),
        derived_pair,
        other_solutions: others,
        solutions_found,
        truncated,
    })
}
