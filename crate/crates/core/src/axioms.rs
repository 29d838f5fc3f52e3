//! Axioms of type-(2,0) algebras and the algebra classes they define.
//!
//! Each axiom is a universally quantified identity or implication checked by
//! a direct scan over the carrier (at most `n³` tuples).

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::{self, EXHAUSTIVE_LIMIT};
use crate::error::{Error, Result};
use crate::groupoid::Groupoid;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    /// `x•x = 0`
    B1,
    /// `x•0 = x`
    B2,
    /// `(x•y)•z = x•(z•(0•y))`
    B,
    /// `x = (x•y)•(0•y)`
    BG,
    /// `(z•x)•(z•y) = y•x`
    BM,
    /// `x•y = 0` and `y•x = 0` imply `x = y`
    BH,
    /// `0•(x•y) = y•x`
    BF,
    /// `(x•y)•z = (0•z)•(y•x)`
    BN,
    /// `x•(y•z) = (x•y)•(0•z)`
    BO,
    /// `x•(x•y) = y`
    BP1,
    /// `(x•z)•(y•z) = x•y`
    BP2,
    /// `(x•y)•z = (x•z)•y`
    Q,
    /// `(x•y)•z = x•(y•z)`
    CO,
    /// `((x•z)•(y•z))•(x•y) = 0`
    BZ,
    /// `0•x = 0`
    K,
    /// `((x•y)•(x•z))•(z•y) = 0`
    I,
    /// `x•(y•x) = x`
    BI,
    /// `x•y = y•x` implies `x = y`
    D3Prime,
}

impl Axiom {
    pub const ALL: [Axiom; 18] = [
        Axiom::B1,
        Axiom::B2,
        Axiom::B,
        Axiom::BG,
        Axiom::BM,
        Axiom::BH,
        Axiom::BF,
        Axiom::BN,
        Axiom::BO,
        Axiom::BP1,
        Axiom::BP2,
        Axiom::Q,
        Axiom::CO,
        Axiom::BZ,
        Axiom::K,
        Axiom::I,
        Axiom::BI,
        Axiom::D3Prime,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::B1 => "B1",
            Axiom::B2 => "B2",
            Axiom::B => "B",
            Axiom::BG => "BG",
            Axiom::BM => "BM",
            Axiom::BH => "BH",
            Axiom::BF => "BF",
            Axiom::BN => "BN",
            Axiom::BO => "BO",
            Axiom::BP1 => "BP1",
            Axiom::BP2 => "BP2",
            Axiom::Q => "Q",
            Axiom::CO => "CO",
            Axiom::BZ => "BZ",
            Axiom::K => "K",
            Axiom::I => "I",
            Axiom::BI => "BI",
            Axiom::D3Prime => "d3'",
        }
    }

    /// Whether the axiom mentions the constant `0`.
    pub fn needs_zero(self) -> bool {
        !matches!(
            self,
            Axiom::BM | Axiom::BP1 | Axiom::BP2 | Axiom::Q | Axiom::CO | Axiom::BI | Axiom::D3Prime
        )
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Axiom {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Axiom::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(s) || (s == "d3" && *a == Axiom::D3Prime))
            .ok_or_else(|| format!("unknown axiom {s:?}"))
    }
}

fn all2(n: usize, f: impl Fn(usize, usize) -> bool) -> bool {
    (0..n).all(|x| (0..n).all(|y| f(x, y)))
}

fn all3(n: usize, f: impl Fn(usize, usize, usize) -> bool) -> bool {
    (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| f(x, y, z))))
}

/// Truth of one axiom on `g`. Axioms mentioning `0` need `g.zero()`.
pub fn axiom_holds(g: &Groupoid, axiom: Axiom) -> Result<bool> {
    let zero = g.zero();
    if axiom.needs_zero() && zero.is_none() {
        return Err(Error::MissingZero);
    }
    let o = zero.unwrap_or(0);
    let n = g.order();
    let m = |x: usize, y: usize| g.get(x, y);
    Ok(match axiom {
        Axiom::B1 => (0..n).all(|x| m(x, x) == o),
        Axiom::B2 => (0..n).all(|x| m(x, o) == x),
        Axiom::B => all3(n, |x, y, z| m(m(x, y), z) == m(x, m(z, m(o, y)))),
        Axiom::BG => all2(n, |x, y| x == m(m(x, y), m(o, y))),
        Axiom::BM => all3(n, |x, y, z| m(m(z, x), m(z, y)) == m(y, x)),
        Axiom::BH => all2(n, |x, y| !(m(x, y) == o && m(y, x) == o) || x == y),
        Axiom::BF => all2(n, |x, y| m(o, m(x, y)) == m(y, x)),
        Axiom::BN => all3(n, |x, y, z| m(m(x, y), z) == m(m(o, z), m(y, x))),
        Axiom::BO => all3(n, |x, y, z| m(x, m(y, z)) == m(m(x, y), m(o, z))),
        Axiom::BP1 => all2(n, |x, y| m(x, m(x, y)) == y),
        Axiom::BP2 => all3(n, |x, y, z| m(m(x, z), m(y, z)) == m(x, y)),
        Axiom::Q => all3(n, |x, y, z| m(m(x, y), z) == m(m(x, z), y)),
        Axiom::CO => all3(n, |x, y, z| m(m(x, y), z) == m(x, m(y, z))),
        Axiom::BZ => all3(n, |x, y, z| m(m(m(x, z), m(y, z)), m(x, y)) == o),
        Axiom::K => (0..n).all(|x| m(o, x) == o),
        Axiom::I => all3(n, |x, y, z| m(m(m(x, y), m(x, z)), m(z, y)) == o),
        Axiom::BI => all2(n, |x, y| m(x, m(y, x)) == x),
        Axiom::D3Prime => g.is_strong(),
    })
}

/// One flag per axiom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AxiomVector {
    #[serde(rename = "B1")]
    pub b1: bool,
    #[serde(rename = "B2")]
    pub b2: bool,
    #[serde(rename = "B")]
    pub b: bool,
    #[serde(rename = "BG")]
    pub bg: bool,
    #[serde(rename = "BM")]
    pub bm: bool,
    #[serde(rename = "BH")]
    pub bh: bool,
    #[serde(rename = "BF")]
    pub bf: bool,
    #[serde(rename = "BN")]
    pub bn: bool,
    #[serde(rename = "BO")]
    pub bo: bool,
    #[serde(rename = "BP1")]
    pub bp1: bool,
    #[serde(rename = "BP2")]
    pub bp2: bool,
    #[serde(rename = "Q")]
    pub q: bool,
    #[serde(rename = "CO")]
    pub co: bool,
    #[serde(rename = "BZ")]
    pub bz: bool,
    #[serde(rename = "K")]
    pub k: bool,
    #[serde(rename = "I")]
    pub i: bool,
    #[serde(rename = "BI")]
    pub bi: bool,
    #[serde(rename = "d3'")]
    pub d3_prime: bool,
}

impl AxiomVector {
    pub fn of(g: &Groupoid) -> Result<AxiomVector> {
        if g.zero().is_none() {
            return Err(Error::MissingZero);
        }
        let h = |a| axiom_holds(g, a).expect("zero is present");
        Ok(AxiomVector {
            b1: h(Axiom::B1),
            b2: h(Axiom::B2),
            b: h(Axiom::B),
            bg: h(Axiom::BG),
            bm: h(Axiom::BM),
            bh: h(Axiom::BH),
            bf: h(Axiom::BF),
            bn: h(Axiom::BN),
            bo: h(Axiom::BO),
            bp1: h(Axiom::BP1),
            bp2: h(Axiom::BP2),
            q: h(Axiom::Q),
            co: h(Axiom::CO),
            bz: h(Axiom::BZ),
            k: h(Axiom::K),
            i: h(Axiom::I),
            bi: h(Axiom::BI),
            d3_prime: h(Axiom::D3Prime),
        })
    }

    pub fn get(&self, a: Axiom) -> bool {
        match a {
            Axiom::B1 => self.b1,
            Axiom::B2 => self.b2,
            Axiom::B => self.b,
            Axiom::BG => self.bg,
            Axiom::BM => self.bm,
            Axiom::BH => self.bh,
            Axiom::BF => self.bf,
            Axiom::BN => self.bn,
            Axiom::BO => self.bo,
            Axiom::BP1 => self.bp1,
            Axiom::BP2 => self.bp2,
            Axiom::Q => self.q,
            Axiom::CO => self.co,
            Axiom::BZ => self.bz,
            Axiom::K => self.k,
            Axiom::I => self.i,
            Axiom::BI => self.bi,
            Axiom::D3Prime => self.d3_prime,
        }
    }
}

/// Assumption attached to the `strong_q_algebra` flag.
pub const STRONG_Q_ASSUMPTION: &str =
    "Q-algebra is read as B1 + B2 + Q; strong Q-algebra adds d3' (x•y = y•x implies x = y)";

/// Membership in the classes that have a textual definition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlgebraClasses {
    pub b_algebra: bool,
    pub bg_algebra: bool,
    pub bci_algebra: bool,
    pub bck_algebra: bool,
    pub d_algebra: bool,
    pub strong_d_algebra: bool,
    pub bh_algebra: bool,
    pub bi_algebra: bool,
    pub q_algebra: bool,
    pub strong_q_algebra: bool,
    pub strong_b1_algebra: bool,
    pub semi_neutral_b1_algebra: bool,
    pub assumptions: Vec<String>,
}

impl AlgebraClasses {
    pub fn from_axioms(v: &AxiomVector, semi_neutral: bool) -> AlgebraClasses {
        let bci = v.b2 && v.i && v.bh;
        let d = v.b1 && v.k && v.bh;
        let q = v.b1 && v.b2 && v.q;
        AlgebraClasses {
            b_algebra: v.b1 && v.b2 && v.b,
            bg_algebra: v.b1 && v.b2 && v.bg,
            bci_algebra: bci,
            bck_algebra: bci && v.k,
            d_algebra: d,
            strong_d_algebra: d && v.d3_prime,
            bh_algebra: v.b1 && v.b2 && v.bh,
            bi_algebra: v.b1 && v.bi,
            q_algebra: q,
            strong_q_algebra: q && v.d3_prime,
            strong_b1_algebra: v.b1 && v.d3_prime,
            semi_neutral_b1_algebra: v.b1 && semi_neutral,
            assumptions: vec![STRONG_Q_ASSUMPTION.to_string()],
        }
    }

    /// Names of the classes that hold, in declaration order.
    pub fn names(&self) -> Vec<&'static str> {
        [
            (self.b_algebra, "B-algebra"),
            (self.bg_algebra, "BG-algebra"),
            (self.bci_algebra, "BCI-algebra"),
            (self.bck_algebra, "BCK-algebra"),
            (self.d_algebra, "d-algebra"),
            (self.strong_d_algebra, "strong d-algebra"),
            (self.bh_algebra, "BH-algebra"),
            (self.bi_algebra, "BI-algebra"),
            (self.q_algebra, "Q-algebra"),
            (self.strong_q_algebra, "strong Q-algebra"),
            (self.strong_b1_algebra, "strong B1-algebra"),
            (self.semi_neutral_b1_algebra, "semi-neutral B1-algebra"),
        ]
        .into_iter()
        .filter_map(|(on, name)| on.then_some(name))
        .collect()
    }
}

pub fn algebra_classes(g: &Groupoid) -> Result<AlgebraClasses> {
    let v = AxiomVector::of(g)?;
    let z = g.zero().ok_or(Error::MissingZero)?;
    Ok(AlgebraClasses::from_axioms(&v, g.is_semi_neutral_at(z)))
}

/// Pointed groupoids of the given order that are BCK-algebras but not
/// d-algebras, over every table and every choice of zero.
pub fn bck_not_d(order: usize) -> Result<Vec<Groupoid>> {
    let total = enumerate::count(order, EXHAUSTIVE_LIMIT)?;
    let mut out: Vec<(u64, usize, Groupoid)> = (0..total)
        .into_par_iter()
        .flat_map_iter(|k| {
            (0..order).filter_map(move |z| {
                let g = enumerate::groupoid_at(order, k).with_zero(Some(z)).ok()?;
                let c = algebra_classes(&g).ok()?;
                (c.bck_algebra && !c.d_algebra).then_some((k, z, g))
            })
        })
        .collect();
    out.sort_by_key(|(k, z, _)| (*k, *z));
    Ok(out.into_iter().map(|(_, _, g)| g).collect())
}
