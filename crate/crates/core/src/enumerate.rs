//! Exhaustive and seeded-random generation of groupoids, and the census.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::factor::classify;
use crate::groupoid::Groupoid;

/// Largest order enumerated exhaustively (3^9 = 19,683 tables).
pub const EXHAUSTIVE_LIMIT: usize = 3;

/// `order^(order²)`, refusing orders above `limit`.
pub(crate) fn count(order: usize, limit: usize) -> Result<u64> {
    if order == 0 {
        return Err(Error::BadShape("order must be positive".into()));
    }
    if order > limit {
        return Err(Error::OrderTooLarge { order, limit });
    }
    Ok((order as u64).pow((order * order) as u32))
}

/// The `index`-th table of the given order in lexicographic order.
pub fn groupoid_at(order: usize, mut index: u64) -> Groupoid {
    let n = order as u64;
    let size = order * order;
    let mut cells = vec![0usize; size];
    for cell in cells.iter_mut().rev() {
        *cell = (index % n) as usize;
        index /= n;
    }
    Groupoid::from_cells(order, cells).expect("digits are below the order")
}

/// Every groupoid of the given order, in lexicographic table order.
pub fn enumerate(order: usize) -> Result<impl Iterator<Item = Groupoid>> {
    let total = count(order, EXHAUSTIVE_LIMIT)?;
    Ok((0..total).map(move |k| groupoid_at(order, k)))
}

/// Number of groupoids of the given order, if it is exhaustively enumerable.
pub fn total(order: usize) -> Result<u64> {
    count(order, EXHAUSTIVE_LIMIT)
}

/// Deterministic stream of groupoids with i.i.d. uniform cells.
pub fn random_groupoids(order: usize, count: usize, seed: u64) -> impl Iterator<Item = Groupoid> {
    assert!(order > 0, "order must be positive");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(move |_| random_groupoid(&mut rng, order))
}

pub(crate) fn random_groupoid(rng: &mut impl Rng, order: usize) -> Groupoid {
    let cells = (0..order * order)
        .map(|_| rng.gen_range(0..order))
        .collect();
    Groupoid::from_cells(order, cells).expect("samples are below the order")
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct PredicateCounts {
    pub strong: u64,
    pub idempotent: u64,
    pub locally_zero: u64,
    pub orientation: u64,
    pub twisted_orientation: u64,
    pub bi_diagonal: u64,
    pub abelian: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ClassificationCounts {
    pub signature_prime: u64,
    pub similar_prime: u64,
    pub ua_holds: u64,
    pub au_holds: u64,
    pub oj_holds: u64,
    pub jo_holds: u64,
    pub u_normal: u64,
    pub j_normal: u64,
    pub u_composite: u64,
    pub j_composite: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub order: usize,
    pub total: u64,
    pub predicates: PredicateCounts,
    pub classifications: ClassificationCounts,
}

#[derive(Default)]
struct Tally {
    p: PredicateCounts,
    c: ClassificationCounts,
}

impl Tally {
    fn of(g: &Groupoid) -> Tally {
        let r = classify(g);
        let b = |v: bool| v as u64;
        Tally {
            p: PredicateCounts {
                strong: b(r.predicates.strong),
                idempotent: b(r.predicates.idempotent),
                locally_zero: b(r.predicates.locally_zero),
                orientation: b(r.predicates.orientation),
                twisted_orientation: b(r.predicates.twisted_orientation),
                bi_diagonal: b(r.predicates.bi_diagonal),
                abelian: b(r.predicates.abelian),
            },
            c: ClassificationCounts {
                signature_prime: b(r.signature_prime),
                similar_prime: b(r.similar_prime),
                ua_holds: b(r.ua_holds),
                au_holds: b(r.au_holds),
                oj_holds: b(r.oj_holds),
                jo_holds: b(r.jo_holds),
                u_normal: b(r.u_normal),
                j_normal: b(r.j_normal),
                u_composite: b(r.u_composite),
                j_composite: b(r.j_composite),
            },
        }
    }

    fn merge(mut self, o: Tally) -> Tally {
        let (p, q) = (&mut self.p, o.p);
        p.strong += q.strong;
        p.idempotent += q.idempotent;
        p.locally_zero += q.locally_zero;
        p.orientation += q.orientation;
        p.twisted_orientation += q.twisted_orientation;
        p.bi_diagonal += q.bi_diagonal;
        p.abelian += q.abelian;
        let (c, d) = (&mut self.c, o.c);
        c.signature_prime += d.signature_prime;
        c.similar_prime += d.similar_prime;
        c.ua_holds += d.ua_holds;
        c.au_holds += d.au_holds;
        c.oj_holds += d.oj_holds;
        c.jo_holds += d.jo_holds;
        c.u_normal += d.u_normal;
        c.j_normal += d.j_normal;
        c.u_composite += d.u_composite;
        c.j_composite += d.j_composite;
        self
    }
}

/// Exhaustive predicate and classification counts for one order.
pub fn census(order: usize) -> Result<CensusReport> {
    let total = count(order, EXHAUSTIVE_LIMIT)?;
    let tally = (0..total)
        .into_par_iter()
        .map(|k| Tally::of(&groupoid_at(order, k)))
        .reduce(Tally::default, Tally::merge);
    Ok(CensusReport {
        order,
        total,
        predicates: tally.p,
        classifications: tally.c,
    })
}
