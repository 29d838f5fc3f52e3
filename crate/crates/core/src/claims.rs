//! A registry of universal statements about groupoids, checked by brute
//! force at small orders or on seeded random samples.
//!
//! Some statements are registered under more than one reading. A reading
//! that fails is reported with its counterexamples rather than hidden.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::axioms::{algebra_classes, axiom_holds, Axiom};
use crate::enumerate::{self, random_groupoid, EXHAUSTIVE_LIMIT};
use crate::error::{Error, Result};
use crate::factor::{
    classify, is_partially_prime, orient_factor, signature_factor, similar_factor, skew_factor,
    uniqueness_search, FactorizationMethod, Method, Side, SEARCH_ORDER_LIMIT,
};
use crate::graph::{all_graphs, from_graph, to_digraph, to_graph};
use crate::groupoid::Groupoid;
use crate::semigroup::{in_center, product_equals, product_unchecked, CenterMode};

/// Counterexamples kept per claim; the full count is reported separately.
pub const COUNTEREXAMPLE_CAP: usize = 5;

/// Random triples used for associativity when triples cannot be exhausted.
pub const ASSOCIATIVITY_SAMPLES: usize = 100_000;

const ASSOCIATIVITY_SEED: u64 = 0x5eed_a550c;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exhaustive,
    Sampled,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimReport {
    pub claim: &'static str,
    pub statement: &'static str,
    pub order: usize,
    pub mode: Mode,
    pub checked: u64,
    pub counterexample_count: u64,
    /// At most [`COUNTEREXAMPLE_CAP`] witnesses, each the tuple of
    /// groupoids the statement was applied to.
    pub counterexamples: Vec<Vec<Groupoid>>,
    pub notes: String,
    pub passed: bool,
}

type Single = fn(&Groupoid) -> bool;
type Pair = fn(&Groupoid, &Groupoid) -> bool;

#[derive(Clone, Copy)]
enum Check {
    /// Every groupoid of the order.
    All(Single),
    /// Every groupoid with every choice of zero.
    Pointed(Single),
    /// Every ordered pair from a domain built directly for the order.
    Pairs(fn(usize) -> Vec<Groupoid>, Pair),
    /// Specific tables of the order.
    Instances(fn(usize) -> Vec<Groupoid>, Single),
    Associativity,
    /// Needs exhaustive enumeration of the order; skipped when sampling
    /// above the exhaustive limit.
    AllExhaustiveOnly(Single),
}

/// One registered statement.
#[derive(Clone, Copy)]
pub struct Claim {
    pub id: &'static str,
    pub statement: &'static str,
    /// Orders below this hold vacuously.
    pub min_order: usize,
    pub notes: &'static str,
    check: Check,
}

fn lz_domain(n: usize) -> Vec<Groupoid> {
    all_graphs(n).map(|g| from_graph(&g)).collect()
}

fn semi_neutral_domain(n: usize) -> Vec<Groupoid> {
    (0..n)
        .map(|z| {
            Groupoid::from_fn(n, |x, y| if x == y { z } else { x })
                .with_zero(Some(z))
                .expect("zero is in range")
        })
        .collect()
}

fn right_zero_instance(n: usize) -> Vec<Groupoid> {
    vec![Groupoid::right_zero(n)]
}

fn abelian_groups(n: usize) -> Vec<Groupoid> {
    // beyond the enumeration limit only the cyclic group is checked
    match enumerate::enumerate(n) {
        Ok(all) => all.filter(|g| g.is_abelian() && g.is_group()).collect(),
        Err(_) => vec![Groupoid::from_fn(n, |x, y| (x + y) % n)],
    }
}

fn unique_under(g: &Groupoid, m: Method) -> bool {
    !m.factor(g).reproduces_target || uniqueness_search(g, &m, 1).is_ok_and(|r| r.is_unique())
}

fn b1(g: &Groupoid) -> bool {
    axiom_holds(g, Axiom::B1).expect("pointed")
}

fn semi_neutral(g: &Groupoid) -> bool {
    g.zero().is_some_and(|z| g.is_semi_neutral_at(z))
}

fn off_diagonal_avoids_operands(g: &Groupoid) -> bool {
    let n = g.order();
    (0..n).all(|x| {
        g.get(x, x) != x
            && (0..n).all(|y| {
                x == y || {
                    let v = g.get(x, y);
                    v != x && v != y
                }
            })
    })
}

/// The registered statements, in report order.
pub fn registry() -> Vec<Claim> {
    vec![
        Claim {
            id: "identity-left",
            statement: "id ⋄ g = g",
            min_order: 1,
            notes: "",
            check: Check::All(|g| product_equals(&Groupoid::left_zero(g.order()), g, g)),
        },
        Claim {
            id: "identity-right",
            statement: "g ⋄ id = g",
            min_order: 1,
            notes: "",
            check: Check::All(|g| product_equals(g, &Groupoid::left_zero(g.order()), g)),
        },
        Claim {
            id: "associativity",
            statement: "(f ⋄ g) ⋄ h = f ⋄ (g ⋄ h)",
            min_order: 1,
            notes: "all triples up to order 2, seeded random triples above",
            check: Check::Associativity,
        },
        Claim {
            id: "locally-zero-closed",
            statement: "the ⋄ product of locally-zero groupoids is locally-zero",
            min_order: 1,
            notes: "",
            check: Check::Pairs(lz_domain, |g, h| product_unchecked(g, h).is_locally_zero()),
        },
        Claim {
            id: "locally-zero-self-inverse",
            statement: "locally-zero g satisfies g ⋄ g = id",
            min_order: 1,
            notes: "",
            check: Check::Instances(lz_domain, |g| {
                product_equals(g, g, &Groupoid::left_zero(g.order()))
            }),
        },
        Claim {
            id: "center-is-locally-zero",
            statement: "g commutes with every groupoid iff g is locally-zero",
            min_order: 1,
            notes: "fails from order 3: only the left- and right-zero semigroups are central there",
            check: Check::AllExhaustiveOnly(|g| {
                in_center(g, CenterMode::Exhaustive).expect("order within the exhaustive limit")
                    == g.is_locally_zero()
            }),
        },
        Claim {
            id: "locally-zero-idempotent",
            statement: "locally-zero implies idempotent",
            min_order: 1,
            notes: "",
            check: Check::All(|g| !g.is_locally_zero() || g.is_idempotent()),
        },
        Claim {
            id: "orientation-idempotent",
            statement: "the orientation property implies idempotent",
            min_order: 1,
            notes: "",
            check: Check::All(|g| !g.has_orientation() || g.is_idempotent()),
        },
        Claim {
            id: "au-universal",
            statement: "every groupoid has an AU-factorization",
            min_order: 1,
            notes: "",
            check: Check::All(|g| product_equals(&similar_factor(g), &signature_factor(g), g)),
        },
        Claim {
            id: "oj-universal",
            statement: "every groupoid has an OJ-factorization",
            min_order: 1,
            notes: "",
            check: Check::All(|g| product_equals(&orient_factor(g), &skew_factor(g), g)),
        },
        Claim {
            id: "strong-has-ua",
            statement: "a strong groupoid has a UA-factorization",
            min_order: 1,
            notes: "",
            check: Check::All(|g| {
                !g.is_strong() || product_equals(&signature_factor(g), &similar_factor(g), g)
            }),
        },
        Claim {
            id: "strong-is-u-normal",
            statement: "a strong groupoid is u-normal",
            min_order: 1,
            notes: "",
            check: Check::All(|g| !g.is_strong() || classify(g).u_normal),
        },
        Claim {
            id: "orientation-has-jo",
            statement: "a groupoid with the orientation property has a JO-factorization",
            min_order: 1,
            notes: "",
            check: Check::All(|g| {
                !g.has_orientation() || product_equals(&skew_factor(g), &orient_factor(g), g)
            }),
        },
        Claim {
            id: "orientation-is-j-normal",
            statement: "a groupoid with the orientation property is j-normal",
            min_order: 1,
            notes: "",
            check: Check::All(|g| !g.has_orientation() || classify(g).j_normal),
        },
        Claim {
            id: "similar-factor-strong",
            statement: "the similar-factor of any groupoid is strong",
            min_order: 1,
            notes: "",
            check: Check::All(|g| similar_factor(g).is_strong()),
        },
        Claim {
            id: "orient-factor-locally-zero",
            statement: "the orient-factor of any groupoid is locally-zero",
            min_order: 1,
            notes: "",
            check: Check::All(|g| orient_factor(g).is_locally_zero()),
        },
        Claim {
            id: "orient-factor-unit",
            statement: "O(g) ⋄ O(g) = id",
            min_order: 1,
            notes: "",
            check: Check::All(|g| {
                let o = orient_factor(g);
                product_equals(&o, &o, &Groupoid::left_zero(g.order()))
            }),
        },
        Claim {
            id: "orient-factor-order-only",
            statement: "O(g) = O(id) for every g of the same order",
            min_order: 1,
            notes: "",
            check: Check::All(|g| orient_factor(g) == orient_factor(&Groupoid::left_zero(g.order()))),
        },
        Claim {
            id: "skew-factor-involution",
            statement: "J(J(g)) = g, and J(g) = g iff g is bi-diagonal",
            min_order: 1,
            notes: "",
            check: Check::All(|g| {
                let j = skew_factor(g);
                skew_factor(&j) == *g && ((j == *g) == g.is_bi_diagonal())
            }),
        },
        Claim {
            id: "signature-factor-similar-prime",
            statement: "A(U(g)) = id and U(A(g)) = id",
            min_order: 1,
            notes: "general form; covers strong groupoids",
            check: Check::All(|g| {
                let id = Groupoid::left_zero(g.order());
                similar_factor(&signature_factor(g)) == id
                    && signature_factor(&similar_factor(g)) == id
            }),
        },
        Claim {
            id: "orient-factor-skew-prime",
            statement: "J(O(g)) = id",
            min_order: 1,
            notes: "",
            check: Check::All(|g| skew_factor(&orient_factor(g)) == Groupoid::left_zero(g.order())),
        },
        Claim {
            id: "skew-factor-binary-equivalent",
            statement: "O(g) ⋄ J(g) = g and O(g) ⋄ g = J(g)",
            min_order: 1,
            notes: "the orient-factor witnesses binary equivalence of J(g) and g",
            check: Check::All(|g| {
                let (o, j) = (orient_factor(g), skew_factor(g));
                product_equals(&o, &j, g) && product_equals(&o, g, &j)
            }),
        },
        Claim {
            id: "prime-characterization",
            statement: "signature-prime iff left-zero off the diagonal; similar-prime iff idempotent",
            min_order: 1,
            notes: "",
            check: Check::All(|g| {
                let n = g.order();
                let r = classify(g);
                let off_lz = (0..n).all(|x| (0..n).all(|y| x == y || g.get(x, y) == x));
                r.signature_prime == off_lz && r.similar_prime == g.is_idempotent()
            }),
        },
        Claim {
            id: "prime-is-u-normal",
            statement: "a signature-prime or similar-prime groupoid is u-normal",
            min_order: 1,
            notes: "",
            check: Check::All(|g| {
                let r = classify(g);
                !(r.signature_prime || r.similar_prime) || r.u_normal
            }),
        },
        Claim {
            id: "right-zero-similar-prime",
            statement: "the right-zero semigroup is similar-prime",
            min_order: 1,
            notes: "",
            check: Check::Instances(right_zero_instance, |g| classify(g).similar_prime),
        },
        Claim {
            id: "right-zero-j-composite",
            statement: "the right-zero semigroup of order at least 2 is j-composite",
            min_order: 2,
            notes: "fails at order 2: J of the right-zero semigroup is the left-zero one, so it is skew-prime",
            check: Check::Instances(right_zero_instance, |g| classify(g).j_composite),
        },
        Claim {
            id: "right-zero-j-composite-from-3",
            statement: "the right-zero semigroup of order at least 3 is j-composite",
            min_order: 3,
            notes: "reading restricted to orders where the anti-diagonal misses some off-diagonal cell",
            check: Check::Instances(right_zero_instance, |g| classify(g).j_composite),
        },
        Claim {
            id: "bi-diagonal-left-partially-prime",
            statement: "a bi-diagonal groupoid is partially-left-prime with witness O(g)",
            min_order: 2,
            notes: "at order 1 the orient-factor is the identity, so no witness exists",
            check: Check::All(|g| {
                !g.is_bi_diagonal()
                    || is_partially_prime(g, &orient_factor(g), Side::Left).expect("same order")
            }),
        },
        Claim {
            id: "u-composite-statement",
            statement: "a strong groupoid that is not locally-zero is u-composite",
            min_order: 1,
            notes: "reading of the statement; a strong table that is left-zero off the diagonal is signature-prime",
            check: Check::All(|g| !(g.is_strong() && !g.is_locally_zero()) || classify(g).u_composite),
        },
        Claim {
            id: "u-composite-proof",
            statement: "a strong groupoid with x•y ∉ {x, y} for x ≠ y and x•x ≠ x is u-composite",
            min_order: 1,
            notes: "reading of the hypothesis used by the argument",
            check: Check::All(|g| {
                !(g.is_strong() && off_diagonal_avoids_operands(g)) || classify(g).u_composite
            }),
        },
        Claim {
            id: "refactor-ua",
            statement: "if UA holds then U(U(g)) ⋄ A(A(g)) = g",
            min_order: 1,
            notes: "",
            check: Check::All(|g| {
                let (u, a) = (signature_factor(g), similar_factor(g));
                !product_equals(&u, &a, g)
                    || product_equals(&signature_factor(&u), &similar_factor(&a), g)
            }),
        },
        Claim {
            id: "refactor-au",
            statement: "if AU holds then A(A(g)) ⋄ U(U(g)) = g",
            min_order: 1,
            notes: "",
            check: Check::All(|g| {
                let (u, a) = (signature_factor(g), similar_factor(g));
                !product_equals(&a, &u, g)
                    || product_equals(&similar_factor(&a), &signature_factor(&u), g)
            }),
        },
        Claim {
            id: "semi-neutral-signature-prime-oj-composite",
            statement: "a semi-neutral groupoid is signature-prime and OJ-composite",
            min_order: 2,
            notes: "at order 1 every factor is the identity",
            check: Check::Pointed(|g| {
                let r = classify(g);
                !semi_neutral(g) || (r.signature_prime && r.oj_composite)
            }),
        },
        Claim {
            id: "semi-neutral-semi-normal",
            statement: "a semi-neutral groupoid is semi-normal",
            min_order: 2,
            notes: "at order 1 both U and A are semi-neutral",
            check: Check::Pointed(|g| !semi_neutral(g) || classify(g).semi_normal == Some(true)),
        },
        Claim {
            id: "semi-neutral-closed",
            statement: "the ⋄ product of semi-neutral groupoids is semi-neutral",
            min_order: 1,
            notes: "pairs share the zero",
            check: Check::Pairs(semi_neutral_domain, |g, h| {
                g.zero() != h.zero() || semi_neutral(&product_unchecked(g, h))
            }),
        },
        Claim {
            id: "b1-similar-factor-semi-neutral",
            statement: "the similar-factor of a B1-algebra is semi-neutral",
            min_order: 1,
            notes: "",
            check: Check::Pointed(|g| !b1(g) || semi_neutral(&similar_factor(g))),
        },
        Claim {
            id: "strong-b1-semi-normal",
            statement: "a strong B1-algebra is semi-normal",
            min_order: 2,
            notes: "at order 1 both U and A are semi-neutral",
            check: Check::Pointed(|g| {
                !(b1(g) && g.is_strong()) || classify(g).semi_normal == Some(true)
            }),
        },
        Claim {
            id: "strong-b1-semi-composite",
            statement: "a strong B1-algebra that is not semi-neutral is semi-composite",
            min_order: 2,
            notes: "",
            check: Check::Pointed(|g| {
                !(b1(g) && g.is_strong() && !semi_neutral(g))
                    || classify(g).semi_composite == Some(true)
            }),
        },
        Claim {
            id: "abelian-magma-not-u-normal",
            statement: "a commutative groupoid of order at least 2 is not u-normal",
            min_order: 2,
            notes: "commutative-magma reading; the constant tables are commutative and u-normal",
            check: Check::All(|g| !g.is_abelian() || !classify(g).u_normal),
        },
        Claim {
            id: "abelian-group-not-u-normal",
            statement: "an abelian group of order at least 2 is not u-normal",
            min_order: 2,
            notes: "abelian-group reading",
            check: Check::Instances(abelian_groups, |g| !classify(g).u_normal),
        },
        Claim {
            id: "bck-is-d",
            statement: "every BCK-algebra is a d-algebra",
            min_order: 1,
            notes: "",
            check: Check::Pointed(|g| {
                let c = algebra_classes(g).expect("pointed");
                !c.bck_algebra || c.d_algebra
            }),
        },
        Claim {
            id: "twisted-orientation-digraph-symmetric",
            statement: "with OP and TOP the digraph is symmetric",
            min_order: 1,
            notes: "as stated; fails from order 2 under the x•y = x ⇒ x → y convention",
            check: Check::All(|g| {
                !(g.has_orientation() && g.has_twisted_orientation())
                    || to_digraph(g).expect("orientation checked").is_symmetric()
            }),
        },
        Claim {
            id: "twisted-orientation-digraph-antisymmetric",
            statement: "with OP and TOP the digraph has no pair of opposite arcs",
            min_order: 1,
            notes: "",
            check: Check::All(|g| {
                !(g.has_orientation() && g.has_twisted_orientation())
                    || to_digraph(g).expect("orientation checked").is_antisymmetric()
            }),
        },
        Claim {
            id: "locally-zero-factor-graphs",
            statement: "for locally-zero g the graphs of O(g) and J(g) rebuild g under ⋄",
            min_order: 1,
            notes: "",
            check: Check::Instances(lz_domain, |g| {
                let o = from_graph(&to_graph(&orient_factor(g)));
                let j = from_graph(&to_graph(&skew_factor(g)));
                product_equals(&o, &j, g)
            }),
        },
        Claim {
            id: "ua-unique",
            statement: "a UA-factorization is the only shape-conforming pair",
            min_order: 1,
            notes: "the off-diagonal of the right shape is pinned but pairs with equal off-diagonal entries leave a choice when g is not strong",
            check: Check::All(|g| unique_under(g, Method::Ua)),
        },
        Claim {
            id: "au-unique",
            statement: "an AU-factorization is the only shape-conforming pair",
            min_order: 1,
            notes: "",
            check: Check::All(|g| unique_under(g, Method::Au)),
        },
        Claim {
            id: "oj-unique",
            statement: "an OJ-factorization is the only shape-conforming pair",
            min_order: 1,
            notes: "the shape admits (id, g) whenever g is not J(g) or O is not id",
            check: Check::All(|g| unique_under(g, Method::Oj)),
        },
        Claim {
            id: "jo-unique",
            statement: "a JO-factorization is the only shape-conforming pair",
            min_order: 1,
            notes: "the shape admits (g, id)",
            check: Check::All(|g| unique_under(g, Method::Jo)),
        },
    ]
}

struct Outcome {
    mode: Mode,
    checked: u64,
    failures: Vec<Vec<Groupoid>>,
    count: u64,
}

fn collect(mode: Mode, checked: u64, mut failures: Vec<(u64, Vec<Groupoid>)>) -> Outcome {
    failures.sort_by_key(|(k, _)| *k);
    let count = failures.len() as u64;
    failures.truncate(COUNTEREXAMPLE_CAP);
    Outcome {
        mode,
        checked,
        failures: failures.into_iter().map(|(_, w)| w).collect(),
        count,
    }
}

fn pointed(g: &Groupoid) -> impl Iterator<Item = Groupoid> + '_ {
    (0..g.order()).map(move |z| g.clone().with_zero(Some(z)).expect("zero is in range"))
}

fn run(check: Check, n: usize, sample: Option<(usize, u64)>) -> Option<Outcome> {
    let exhaustive = sample.is_none();
    let samples = |count: usize, seed: u64| -> Vec<Groupoid> {
        enumerate::random_groupoids(n, count, seed).collect()
    };
    Some(match check {
        Check::All(f) | Check::AllExhaustiveOnly(f) => {
            if let (Check::AllExhaustiveOnly(_), false) = (check, exhaustive) {
                if n > EXHAUSTIVE_LIMIT {
                    return None;
                }
            }
            match sample {
                None => {
                    let total = enumerate::total(n).ok()?;
                    let fails = (0..total)
                        .into_par_iter()
                        .filter_map(|k| {
                            let g = enumerate::groupoid_at(n, k);
                            (!f(&g)).then(|| (k, vec![g]))
                        })
                        .collect();
                    collect(Mode::Exhaustive, total, fails)
                }
                Some((count, seed)) => {
                    let gs = samples(count, seed);
                    let fails = gs
                        .par_iter()
                        .enumerate()
                        .filter_map(|(k, g)| (!f(g)).then(|| (k as u64, vec![g.clone()])))
                        .collect();
                    collect(Mode::Sampled, count as u64, fails)
                }
            }
        }
        Check::Pointed(f) => match sample {
            None => {
                let total = enumerate::total(n).ok()?;
                let fails = (0..total)
                    .into_par_iter()
                    .flat_map_iter(|k| {
                        pointed(&enumerate::groupoid_at(n, k))
                            .enumerate()
                            .filter(|(_, g)| !f(g))
                            .map(move |(z, g)| (k * n as u64 + z as u64, vec![g]))
                            .collect::<Vec<_>>()
                    })
                    .collect();
                collect(Mode::Exhaustive, total * n as u64, fails)
            }
            Some((count, seed)) => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let gs: Vec<Groupoid> = (0..count)
                    .map(|_| {
                        let g = random_groupoid(&mut rng, n);
                        let z = rng.gen_range(0..n);
                        g.with_zero(Some(z)).expect("zero is in range")
                    })
                    .collect();
                let fails = gs
                    .par_iter()
                    .enumerate()
                    .filter_map(|(k, g)| (!f(g)).then(|| (k as u64, vec![g.clone()])))
                    .collect();
                collect(Mode::Sampled, count as u64, fails)
            }
        },
        Check::Pairs(domain, f) => {
            let d = domain(n);
            let m = d.len() as u64;
            let fails = (0..m * m)
                .into_par_iter()
                .filter_map(|k| {
                    let (g, h) = (&d[(k / m) as usize], &d[(k % m) as usize]);
                    (!f(g, h)).then(|| (k, vec![g.clone(), h.clone()]))
                })
                .collect();
            collect(Mode::Exhaustive, m * m, fails)
        }
        Check::Instances(domain, f) => {
            let d = domain(n);
            let fails = d
                .iter()
                .enumerate()
                .filter(|(_, g)| !f(g))
                .map(|(k, g)| (k as u64, vec![g.clone()]))
                .collect();
            collect(Mode::Exhaustive, d.len() as u64, fails)
        }
        Check::Associativity => {
            let assoc = |f: &Groupoid, g: &Groupoid, h: &Groupoid| {
                product_unchecked(&product_unchecked(f, g), h)
                    == product_unchecked(f, &product_unchecked(g, h))
            };
            if exhaustive && n <= 2 {
                let all: Vec<Groupoid> = enumerate::enumerate(n).ok()?.collect();
                let m = all.len() as u64;
                let fails = (0..m * m * m)
                    .into_par_iter()
                    .filter_map(|k| {
                        let (a, b, c) = (
                            &all[(k / (m * m)) as usize],
                            &all[(k / m % m) as usize],
                            &all[(k % m) as usize],
                        );
                        (!assoc(a, b, c)).then(|| (k, vec![a.clone(), b.clone(), c.clone()]))
                    })
                    .collect();
                collect(Mode::Exhaustive, m * m * m, fails)
            } else {
                let (count, seed) = sample.unwrap_or((ASSOCIATIVITY_SAMPLES, ASSOCIATIVITY_SEED));
                let gs = samples(3 * count, seed);
                let fails = gs
                    .par_chunks(3)
                    .enumerate()
                    .filter_map(|(k, t)| {
                        (!assoc(&t[0], &t[1], &t[2])).then(|| (k as u64, t.to_vec()))
                    })
                    .collect();
                collect(Mode::Sampled, count as u64, fails)
            }
        }
    })
}

/// Runs every registered claim at one order.
///
/// Without `sample` every table (and every zero, for pointed claims) of the
/// order is checked, which needs `order ≤ 3`. With `sample = (count, seed)`
/// claims over all groupoids draw `count` seeded random tables instead.
/// Claims whose domain is built directly (pairs of locally-zero or
/// semi-neutral tables, specific instances) are always exhaustive.
pub fn verify_claims(order: usize, sample: Option<(usize, u64)>) -> Result<Vec<ClaimReport>> {
    if order == 0 {
        return Err(Error::BadShape("order must be positive".into()));
    }
    if sample.is_none() && order > EXHAUSTIVE_LIMIT {
        return Err(Error::OrderTooLarge {
            order,
            limit: EXHAUSTIVE_LIMIT,
        });
    }
    Ok(registry()
        .into_iter()
        .filter_map(|c| verify_one(&c, order, sample))
        .collect())
}

/// Runs one claim; `None` when it cannot run at this order in this mode.
pub fn verify_one(c: &Claim, order: usize, sample: Option<(usize, u64)>) -> Option<ClaimReport> {
    let uses_search = matches!(c.id, "ua-unique" | "au-unique" | "oj-unique" | "jo-unique");
    if uses_search && order > SEARCH_ORDER_LIMIT {
        return None;
    }
    let outcome = if order < c.min_order {
        Outcome {
            mode: if sample.is_some() {
                Mode::Sampled
            } else {
                Mode::Exhaustive
            },
            checked: 0,
            failures: Vec::new(),
            count: 0,
        }
    } else {
        run(c.check, order, sample)?
    };
    let mut notes = c.notes.to_string();
    if order < c.min_order {
        notes = format!("vacuous below order {}", c.min_order);
    }
    Some(ClaimReport {
        claim: c.id,
        statement: c.statement,
        order,
        mode: outcome.mode,
        checked: outcome.checked,
        counterexample_count: outcome.count,
        passed: outcome.count == 0,
        counterexamples: outcome.failures,
        notes,
    })
}

/// Looks a claim up by id.
pub fn claim(id: &str) -> Option<Claim> {
    registry().into_iter().find(|c| c.id == id)
}
