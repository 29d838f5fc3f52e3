//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use binsys::axioms::algebra_classes;
use binsys::claims::{verify_one, ClaimReport};
use binsys::enumerate::{census, enumerate, random_groupoids};
use binsys::factor::{
    self, is_partially_prime, orient_factor, skew_factor, uniqueness_search, Method, Side,
};
use binsys::graph::{all_graphs, from_graph, to_graph, SimpleGraph};
use binsys::semigroup::product;
use binsys::{classify, Groupoid};
use common::{fixture, table, table_like};

#[derive(Default)]
struct Checks {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Checks {
    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn eq(&mut self, got: &Groupoid, want: &Groupoid, what: &str) {
        if got != want {
            self.failures
                .push(format!("{what}: got\n{got}want\n{want}"));
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }
}

fn claim(id: &str, order: usize) -> ClaimReport {
    let c = binsys::claims::claim(id).unwrap_or_else(|| panic!("claim {id} is registered"));
    verify_one(&c, order, None).expect("claim runs exhaustively")
}

// Factor tables, products and failures of the worked tables.
fn golden_tables(c: &mut Checks) {
    let bci = fixture("bci-4.gpd");
    let ua = factor::derive(&bci, Method::Ua);
    c.eq(
        &ua.left,
        &table_like(&bci, "0 0 a a/1 1 a a/a a a 0/b a 1 b"),
        "BCI signature factor",
    );
    c.eq(
        &ua.right,
        &table_like(&bci, "0 0 0 0/1 0 1 1/a a 0 a/b b b 0"),
        "BCI similar factor",
    );
    let ua_ok = ua.reproduces_target;
    let au_ok = factor::derive(&bci, Method::Au).reproduces_target;
    c.check(au_ok, "BCI table has an AU-factorization");
    c.note(format!("BCI table: UA holds = {ua_ok}, AU holds = {au_ok}"));

    let z5 = fixture("ua-failure-z5.gpd");
    let ua = factor::derive(&z5, Method::Ua);
    c.eq(
        &ua.left,
        &table("0 2 2 1 1/1 1 3 2 3/3 3 2 3 0/1 0 1 3 2/1 1 2 4 4"),
        "Z5 U",
    );
    c.eq(
        &ua.right,
        &table("3 0 0 0 0/1 3 1 1 1/2 2 0 2 2/3 3 3 1 3/4 4 4 4 2"),
        "Z5 A",
    );
    c.eq(
        &ua.product(),
        &table("3 2 2 3 3/1 3 1 2 3/3 1 0 3 0/3 0 1 1 2/3 1 2 4 2"),
        "Z5 U ⋄ A",
    );
    c.check(!ua.reproduces_target, "Z5 table has no UA-factorization");

    let d = fixture("d-algebra-z5.gpd");
    let u = table("0 0 0 0 0/1 1 1 0 1/2 2 2 3 0/3 3 2 3 3/4 4 1 1 4");
    let a = table("0 0 0 0 0/1 0 1 1 1/2 2 0 2 2/3 3 3 0 3/4 4 4 4 0");
    let ua = factor::derive(&d, Method::Ua);
    c.eq(&ua.left, &u, "d-algebra U");
    c.eq(&ua.right, &a, "d-algebra A");
    c.eq(&ua.product(), &d, "d-algebra U ⋄ A");
    c.check(ua.reproduces_target, "d-algebra UA flag");
    let au = factor::derive(&d, Method::Au);
    c.eq(&au.product(), &d, "d-algebra A ⋄ U");
    c.eq(
        &product(&a, &u).unwrap(),
        &d,
        "d-algebra A ⋄ U from printed factors",
    );

    let z3 = fixture("cyclic-z3.gpd");
    let au = factor::derive(&z3, Method::Au);
    c.eq(&au.left, &table("0 0 0/1 2 1/2 2 1"), "Z3 A");
    c.eq(&au.right, &table("0 1 2/1 1 0/2 0 2"), "Z3 U");
    c.eq(&au.product(), &z3, "Z3 A ⋄ U");
    let ua = factor::derive(&z3, Method::Ua);
    c.eq(&ua.product(), &table("0 2 1/2 2 0/1 0 1"), "Z3 U ⋄ A");
    c.check(!ua.reproduces_target, "Z3 UA flag");

    let rz = fixture("right-zero-abc.gpd");
    let ua = factor::derive(&rz, Method::Ua);
    c.eq(
        &ua.left,
        &table_like(&rz, "a b c/a b c/a b c"),
        "right-zero U",
    );
    c.eq(
        &ua.right,
        &table_like(&rz, "a a a/b b b/c c c"),
        "right-zero A",
    );
    c.eq(&ua.product(), &rz, "right-zero U ⋄ A");
    let oj = factor::derive(&rz, Method::Oj);
    c.eq(
        &oj.left,
        &table_like(&rz, "a a c/b b b/a c c"),
        "right-zero O",
    );
    c.eq(
        &oj.right,
        &table_like(&rz, "a b a/a b c/c b c"),
        "right-zero J",
    );
    c.eq(&oj.product(), &rz, "right-zero O ⋄ J");

    let g = fixture("oj-1234.gpd");
    let oj = factor::derive(&g, Method::Oj);
    c.eq(
        &oj.left,
        &table_like(&g, "1 1 1 4/2 2 3 2/3 2 3 3/1 4 4 4"),
        "order-4 O",
    );
    c.eq(
        &oj.right,
        &table_like(&g, "1 1 3 4/2 2 2 2/1 3 3 4/1 4 3 4"),
        "order-4 J",
    );
    c.eq(&oj.product(), &g, "order-4 O ⋄ J");
    c.check(oj.reproduces_target, "order-4 OJ flag");

    let g = fixture("locally-zero-6.gpd");
    let o = orient_factor(&g);
    let j = skew_factor(&g);
    let id = Groupoid::left_zero(6);
    c.eq(
        &o,
        &table("0 0 0 0 0 5/1 1 1 1 4 1/2 2 2 3 2 2/3 3 2 3 3 3/4 1 4 4 4 4/0 5 5 5 5 5"),
        "order-6 O",
    );
    c.eq(
        &j,
        &table("0 1 0 0 4 5/0 1 2 3 4 5/2 1 2 2 4 2/3 1 3 3 3 3/0 1 2 4 4 4/0 1 5 5 5 5"),
        "order-6 J",
    );
    c.eq(&orient_factor(&o), &o, "O(O(g))");
    c.eq(&skew_factor(&o), &id, "J(O(g))");
    c.eq(&product(&o, &id).unwrap(), &o, "O(g) ⋄ id");
    c.eq(&orient_factor(&j), &o, "O(J(g))");
    c.eq(&skew_factor(&j), &g, "J(J(g))");
    c.eq(&product(&o, &g).unwrap(), &j, "O(g) ⋄ g");

    let z4 = fixture("cyclic-z4.gpd");
    let oj = factor::derive(&z4, Method::Oj);
    c.eq(
        &oj.left,
        &table_like(&z4, "e e e c/a a b a/b a b b/e c c c"),
        "Z4 O",
    );
    c.eq(&oj.right, &z4, "Z4 J");
    c.check(oj.left.is_locally_zero(), "Z4 O is locally-zero");
    c.eq(&oj.product(), &z4, "Z4 O ⋄ J");

    let sn = fixture("strong-bck-3.gpd");
    let ua = factor::derive(&sn, Method::Ua);
    c.eq(&ua.left, &Groupoid::left_zero(3), "semi-neutral U");
    c.eq(&ua.right, &sn, "semi-neutral A");
    c.eq(&ua.product(), &sn, "semi-neutral U ⋄ A");
    let oj = factor::derive(&sn, Method::Oj);
    c.eq(&oj.left, &table("0 0 2/1 1 1/0 2 2"), "semi-neutral O");
    c.eq(&oj.right, &table("0 0 2/1 0 1/0 2 0"), "semi-neutral J");
    c.eq(&oj.product(), &sn, "semi-neutral O ⋄ J");

    let rot = fixture("rotation-3.gpd");
    let ua = factor::derive(&rot, Method::Ua);
    c.eq(&ua.left, &table("0 2 1/1 1 2/2 1 2"), "rotation U");
    c.eq(&ua.right, &table("0 0 0/1 0 1/2 2 0"), "rotation A");
    c.eq(&ua.product(), &rot, "rotation U ⋄ A");

    let star = fixture("star-abcd.gpd");
    let oj = factor::derive(&star, Method::Oj);
    c.eq(
        &oj.left,
        &table_like(&star, "a a a d/b b c b/c b c c/a d d d"),
        "star O",
    );
    c.eq(
        &oj.right,
        &table_like(&star, "a a c a/b b c b/a b c d/d d c d"),
        "star J",
    );
    c.eq(&oj.product(), &star, "star O ⋄ J");
}

fn classification(c: &mut Checks) {
    let bi = fixture("strong-bck-3.gpd");
    c.check(classify(&bi).signature_prime, "BI table is signature-prime");

    let z3 = classify(&fixture("cyclic-z3.gpd"));
    c.check(
        z3.au_composite && !z3.u_normal && z3.au_holds && !z3.ua_holds,
        "Z3 AU-composite, not u-normal",
    );

    let d = classify(&fixture("d-algebra-z5.gpd"));
    c.check(d.u_composite, "d-algebra is u-composite");

    let sn = classify(&bi);
    c.check(
        sn.signature_prime && sn.u_normal && sn.semi_neutral == Some(true) && sn.oj_composite,
        "semi-neutral table: signature-prime, u-normal, semi-neutral, OJ-composite",
    );

    let rot = classify(&fixture("rotation-3.gpd"));
    c.check(
        rot.semi_composite == Some(true),
        "rotation table is semi-composite",
    );

    let z4 = fixture("cyclic-z4.gpd");
    let o = orient_factor(&z4);
    c.check(
        is_partially_prime(&z4, &o, Side::Left).unwrap(),
        "Z4 is partially-left-prime with witness O",
    );
}

fn axiom_suite(c: &mut Checks) {
    let bci = algebra_classes(&fixture("bci-4.gpd")).unwrap();
    c.check(
        bci.bci_algebra && !bci.bck_algebra,
        "BCI table: BCI, not BCK",
    );
    let d = algebra_classes(&fixture("d-algebra-z5.gpd")).unwrap();
    c.check(
        d.strong_d_algebra && !d.bck_algebra,
        "d-algebra: strong d, not BCK",
    );
    let bi = algebra_classes(&fixture("strong-bck-3.gpd")).unwrap();
    c.check(bi.bi_algebra, "order-3 table: BI-algebra");
}

const UNIVERSAL: &[&str] = &[
    "identity-left",
    "identity-right",
    "associativity",
    "au-universal",
    "oj-universal",
    "strong-has-ua",
    "strong-is-u-normal",
    "orientation-has-jo",
    "orientation-is-j-normal",
    "similar-factor-strong",
    "orient-factor-locally-zero",
    "orient-factor-unit",
    "signature-factor-similar-prime",
    "orient-factor-skew-prime",
    "skew-factor-binary-equivalent",
    "right-zero-j-composite",
    "prime-is-u-normal",
    "right-zero-similar-prime",
    "bi-diagonal-left-partially-prime",
    "semi-neutral-signature-prime-oj-composite",
    "semi-neutral-semi-normal",
    "semi-neutral-closed",
    "b1-similar-factor-semi-neutral",
    "refactor-ua",
    "refactor-au",
];

fn universal_oracle(c: &mut Checks) {
    let mut checked = 0;
    for n in 1..=3 {
        for id in UNIVERSAL {
            let r = claim(id, n);
            checked += r.checked;
            c.check(
                r.passed,
                format!(
                    "{id} at order {n}: {} counterexample(s), first {:?} ({})",
                    r.counterexample_count,
                    r.counterexamples
                        .first()
                        .map(|w| w.iter().map(|g| g.to_rows()).collect::<Vec<_>>()),
                    r.notes
                ),
            );
        }
    }
    let restricted = claim("right-zero-j-composite-from-3", 3);
    c.note(format!(
        "{checked} checks; right-zero j-composite restricted to order ≥ 3 passes: {}",
        restricted.passed
    ));
}

fn uniqueness(c: &mut Checks) {
    for m in Method::ALL {
        let mut applicable = 0u64;
        let mut non_unique = 0u64;
        let mut first = None;
        for n in 1..=3 {
            for g in enumerate(n).unwrap() {
                let r = uniqueness_search(&g, &m, 1).unwrap();
                if !r.derived_pair.reproduces_target {
                    continue;
                }
                applicable += 1;
                if !r.is_unique() {
                    non_unique += 1;
                    first.get_or_insert_with(|| {
                        (
                            g.to_rows(),
                            r.other_solutions[0].left.to_rows(),
                            r.other_solutions[0].right.to_rows(),
                        )
                    });
                }
            }
        }
        c.note(format!("{m}: {non_unique} of {applicable} factorizable tables have another shape-conforming pair"));
        c.check(
            non_unique == 0,
            format!("{m} not unique on {non_unique} of {applicable}; first (g, ℓ, r) = {first:?}"),
        );
    }
}

fn census_regression(c: &mut Checks) {
    let two = census(2).unwrap();
    c.check(
        two.predicates.strong == 8,
        format!("n=2 strong = {}", two.predicates.strong),
    );
    c.check(
        two.predicates.locally_zero == 2,
        format!("n=2 locally-zero = {}", two.predicates.locally_zero),
    );
    c.check(
        two.predicates.orientation == 4,
        format!("n=2 OP = {}", two.predicates.orientation),
    );
    c.check(two.classifications.au_holds == 16, "n=2 au_holds = 16");
    c.check(two.classifications.oj_holds == 16, "n=2 oj_holds = 16");
    let three = census(3).unwrap();
    c.check(three.total == 19_683, "n=3 total");
    c.check(three.classifications.au_holds == 19_683, "n=3 au_holds");
    c.check(three.classifications.oj_holds == 19_683, "n=3 oj_holds");
}

fn discrepancies(c: &mut Checks) {
    let mut statement_cex = 0;
    let mut magma_cex = 0;
    let mut constant_zero_seen = false;
    for n in 1..=3 {
        statement_cex += claim("u-composite-statement", n).counterexample_count;
        let magma = claim("abelian-magma-not-u-normal", n);
        magma_cex += magma.counterexample_count;
        constant_zero_seen |= magma
            .counterexamples
            .iter()
            .any(|w| w[0] == Groupoid::constant(n, 0).unwrap());
        c.check(
            claim("u-composite-proof", n).passed,
            format!("proof reading at order {n}"),
        );
        c.check(
            claim("abelian-group-not-u-normal", n).passed,
            format!("abelian-group reading at order {n}"),
        );
    }
    c.check(statement_cex > 0, "statement reading has counterexamples");
    c.check(
        magma_cex > 0 && constant_zero_seen,
        "magma reading lists constant-0",
    );
    c.note(format!(
        "statement reading: {statement_cex}, magma reading: {magma_cex} counterexamples"
    ));
}

fn graph_bridge(c: &mut Checks) {
    let mut count = 0;
    for n in 1..=5 {
        for g in all_graphs(n) {
            count += 1;
            c.check(
                to_graph(&from_graph(&g)) == g,
                format!("round trip of {g:?}"),
            );
        }
    }
    c.check(all_graphs(5).count() == 1024, "1024 graphs on 5 vertices");
    c.note(format!("{count} graphs on 1..=5 vertices"));

    let star = fixture("star-abcd.gpd");
    let edges = SimpleGraph::new(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
    c.check(
        to_graph(&star) == edges,
        "star table gives edges ab, bc, bd",
    );
    let rebuilt = from_graph(
        &edges
            .with_labels(star.labels().map(<[String]>::to_vec))
            .unwrap(),
    );
    c.eq(&rebuilt, &star, "star graph gives its table");
    for n in 1..=5 {
        c.check(
            to_graph(&Groupoid::left_zero(n)) == SimpleGraph::complete(n),
            "left-zero ↔ complete",
        );
        c.check(
            to_graph(&Groupoid::right_zero(n)) == SimpleGraph::edgeless(n),
            "right-zero ↔ edgeless",
        );
        c.eq(
            &from_graph(&SimpleGraph::complete(n)),
            &Groupoid::left_zero(n),
            "complete → left-zero",
        );
        c.eq(
            &from_graph(&SimpleGraph::edgeless(n)),
            &Groupoid::right_zero(n),
            "edgeless → right-zero",
        );
    }
}

fn sampled(c: &mut Checks) {
    for n in [4, 5] {
        let mut bad = 0;
        for g in random_groupoids(n, 100_000, 2024 + n as u64) {
            let au = factor::derive(&g, Method::Au).reproduces_target;
            let oj = factor::derive(&g, Method::Oj).reproduces_target;
            bad += (!au || !oj) as u32;
        }
        c.check(bad == 0, format!("order {n}: {bad} samples break AU or OJ"));
    }
    let exact = census(3).unwrap().predicates.strong as f64 / 19_683.0;
    let strong = random_groupoids(3, 100_000, 42)
        .filter(Groupoid::is_strong)
        .count() as f64
        / 100_000.0;
    c.check(
        (strong - exact).abs() <= 0.02,
        format!("strong fraction {strong:.4} vs {exact:.4}"),
    );
    c.note(format!(
        "strong fraction sampled {strong:.4}, exhaustive {exact:.4}"
    ));
}

type Criterion = (&'static str, fn(&mut Checks), Option<Duration>);

fn main() {
    let criteria: [Criterion; 9] = [
        (
            "golden factor tables",
            golden_tables,
            Some(Duration::from_secs(1)),
        ),
        (
            "classification verdicts",
            classification,
            Some(Duration::from_secs(1)),
        ),
        ("axiom classes", axiom_suite, Some(Duration::from_secs(1))),
        (
            "universal statements, n ≤ 3",
            universal_oracle,
            Some(Duration::from_secs(120)),
        ),
        (
            "shape-constrained uniqueness, n ≤ 3",
            uniqueness,
            Some(Duration::from_secs(300)),
        ),
        ("census regression", census_regression, None),
        ("discrepancy reports", discrepancies, None),
        ("graph bridge", graph_bridge, Some(Duration::from_secs(1))),
        (
            "sampled identities at n = 4, 5",
            sampled,
            Some(Duration::from_secs(60)),
        ),
    ];
    let mut failed = 0;
    for (i, (name, run, budget)) in criteria.into_iter().enumerate() {
        let mut checks = Checks::default();
        let start = Instant::now();
        let panicked = catch_unwind(AssertUnwindSafe(|| run(&mut checks))).is_err();
        let elapsed = start.elapsed();
        if panicked {
            checks.failures.push("panicked".into());
        }
        if let Some(b) = budget {
            checks.check(elapsed <= b, format!("took {elapsed:.2?}, budget {b:?}"));
        }
        let ok = checks.failures.is_empty();
        failed += !ok as usize;
        println!(
            "{} criterion {}: {name} ({elapsed:.2?})",
            if ok { "PASS" } else { "FAIL" },
            i + 1
        );
        for n in &checks.notes {
            println!("    note: {n}");
        }
        for f in checks.failures.iter().take(8) {
            println!("    fail: {}", f.replace('\n', "\n          "));
        }
        if checks.failures.len() > 8 {
            println!("    ... {} more", checks.failures.len() - 8);
        }
    }
    println!("acceptance: {} of 9 criteria passed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
