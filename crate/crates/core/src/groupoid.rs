//! Finite groupoids stored as Cayley tables over dense element indices.
//!
//! Element `i` is the `i`-th declared element; the row index is the left
//! operand and the column index the right operand. Labels and the optional
//! zero are presentation metadata: equality and hashing look at the order and
//! the table only.

use std::fmt;
use std::hash::{Hash, Hasher};

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct Groupoid {
    order: usize,
    cells: Vec<usize>,
    labels: Option<Vec<String>>,
    zero: Option<usize>,
}

/// Which zero-semigroup to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroKind {
    /// `x•y = x`, the identity of the ⋄ product.
    Left,
    /// `x•y = y`.
    Right,
}

impl Groupoid {
    /// Validating constructor from rows of the Cayley table.
    pub fn new(
        order: usize,
        table: &[Vec<usize>],
        labels: Option<Vec<String>>,
        zero: Option<usize>,
    ) -> Result<Self> {
        if order == 0 {
            return Err(Error::BadShape("order must be positive".into()));
        }
        if table.len() != order {
            return Err(Error::BadShape(format!(
                "expected {order} rows, found {}",
                table.len()
            )));
        }
        let mut cells = Vec::with_capacity(order * order);
        for (r, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(Error::BadShape(format!(
                    "row {r} has {} entries, expected {order}",
                    row.len()
                )));
            }
            cells.extend_from_slice(row);
        }
        Self::from_cells(order, cells)?
            .with_labels(labels)?
            .with_zero(zero)
    }

    /// Validating constructor from a row-major cell vector.
    pub fn from_cells(order: usize, cells: Vec<usize>) -> Result<Self> {
        if order == 0 {
            return Err(Error::BadShape("order must be positive".into()));
        }
        if cells.len() != order * order {
            return Err(Error::BadShape(format!(
                "expected {} cells, found {}",
                order * order,
                cells.len()
            )));
        }
        if let Some(pos) = cells.iter().position(|&v| v >= order) {
            return Err(Error::ClosureViolation {
                row: pos / order,
                col: pos % order,
                value: cells[pos],
                order,
            });
        }
        Ok(Groupoid {
            order,
            cells,
            labels: None,
            zero: None,
        })
    }

    /// Builds a table from a total function on index pairs. The caller
    /// guarantees every value is below `order`.
    pub(crate) fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> usize) -> Self {
        let mut cells = Vec::with_capacity(order * order);
        for x in 0..order {
            for y in 0..order {
                let v = f(x, y);
                debug_assert!(v < order, "closure broken at ({x}, {y}): {v}");
                cells.push(v);
            }
        }
        Groupoid {
            order,
            cells,
            labels: None,
            zero: None,
        }
    }

    pub fn zero_semigroup(kind: ZeroKind, order: usize) -> Self {
        assert!(order > 0, "order must be positive");
        match kind {
            ZeroKind::Left => Self::from_fn(order, |x, _| x),
            ZeroKind::Right => Self::from_fn(order, |_, y| y),
        }
    }

    /// The left-zero semigroup, i.e. the identity of (Bin(X), ⋄).
    pub fn left_zero(order: usize) -> Self {
        Self::zero_semigroup(ZeroKind::Left, order)
    }

    pub fn right_zero(order: usize) -> Self {
        Self::zero_semigroup(ZeroKind::Right, order)
    }

    /// Every product equals `value`.
    pub fn constant(order: usize, value: usize) -> Result<Self> {
        Self::from_cells(order, vec![value; order * order])
    }

    pub fn with_labels(mut self, labels: Option<Vec<String>>) -> Result<Self> {
        if let Some(labels) = &labels {
            if labels.len() != self.order {
                return Err(Error::BadLabels(format!(
                    "expected {} labels, found {}",
                    self.order,
                    labels.len()
                )));
            }
            for (i, l) in labels.iter().enumerate() {
                if l.is_empty() || l.chars().any(|c| c.is_whitespace() || c == '#') {
                    return Err(Error::BadLabels(format!(
                        "label {l:?} is not a plain token"
                    )));
                }
                if labels[..i].contains(l) {
                    return Err(Error::BadLabels(format!("duplicate label {l:?}")));
                }
            }
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn with_zero(mut self, zero: Option<usize>) -> Result<Self> {
        if let Some(z) = zero {
            if z >= self.order {
                return Err(Error::BadZero {
                    zero: z,
                    order: self.order,
                });
            }
        }
        self.zero = zero;
        Ok(self)
    }

    /// Copies labels and zero from `other` (same order assumed).
    pub(crate) fn with_meta_of(mut self, other: &Groupoid) -> Self {
        debug_assert_eq!(self.order, other.order);
        self.labels = other.labels.clone();
        self.zero = other.zero;
        self
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// `x • y`.
    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.cells[x * self.order + y]
    }

    pub fn cells(&self) -> &[usize] {
        &self.cells
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> + '_ {
        self.cells.chunks(self.order)
    }

    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        self.rows().map(<[usize]>::to_vec).collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    /// Display name of element `x`: its label, or its index.
    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    /// Position of this table in the lexicographic enumeration of all
    /// tables of its order (first cell most significant).
    pub fn lex_index(&self) -> u128 {
        let n = self.order as u128;
        self.cells.iter().fold(0u128, |acc, &c| acc * n + c as u128)
    }

    /// The anti-diagonal partner of index `i`.
    #[inline]
    pub fn partner(&self, i: usize) -> usize {
        self.order - 1 - i
    }

    #[inline]
    pub fn on_anti_diagonal(&self, x: usize, y: usize) -> bool {
        x + y + 1 == self.order
    }

    pub fn is_left_zero(&self) -> bool {
        self.all_pairs(|x, y| self.get(x, y) == x)
    }

    pub fn is_right_zero(&self) -> bool {
        self.all_pairs(|x, y| self.get(x, y) == y)
    }

    fn all_pairs(&self, mut f: impl FnMut(usize, usize) -> bool) -> bool {
        (0..self.order).all(|x| (0..self.order).all(|y| f(x, y)))
    }

    pub fn diagonal_profile(&self) -> DiagonalProfile {
        let n = self.order;
        let j = |i: usize| n - 1 - i;
        DiagonalProfile {
            main: (0..n).map(|i| self.get(i, i)).collect(),
            anti: (0..n).map(|i| self.get(i, j(i))).collect(),
            reverse: (0..n).map(|i| self.get(j(i), j(i))).collect(),
            skew: (0..n).map(|i| self.get(j(i), i)).collect(),
        }
    }

    pub fn check(&self, p: Predicate) -> Result<bool> {
        Ok(match p {
            Predicate::Idempotent => self.is_idempotent(),
            Predicate::Strong => self.is_strong(),
            Predicate::Abelian => self.is_abelian(),
            Predicate::Orientation => self.has_orientation(),
            Predicate::TwistedOrientation => self.has_twisted_orientation(),
            Predicate::LocallyZero => self.is_locally_zero(),
            Predicate::BiDiagonal => self.is_bi_diagonal(),
            Predicate::SemiNeutral => {
                let z = self.zero.ok_or(Error::MissingZero)?;
                self.is_semi_neutral_at(z)
            }
        })
    }

    pub fn is_idempotent(&self) -> bool {
        (0..self.order).all(|x| self.get(x, x) == x)
    }

    /// `x•y = y•x` only when `x = y`.
    pub fn is_strong(&self) -> bool {
        let n = self.order;
        (0..n).all(|x| (x + 1..n).all(|y| self.get(x, y) != self.get(y, x)))
    }

    /// Fully commutative.
    pub fn is_abelian(&self) -> bool {
        let n = self.order;
        (0..n).all(|x| (x + 1..n).all(|y| self.get(x, y) == self.get(y, x)))
    }

    /// OP: `x•y ∈ {x, y}`.
    pub fn has_orientation(&self) -> bool {
        self.all_pairs(|x, y| {
            let v = self.get(x, y);
            v == x || v == y
        })
    }

    /// TOP: `x•y = x` implies `y•x = x`.
    pub fn has_twisted_orientation(&self) -> bool {
        self.all_pairs(|x, y| self.get(x, y) != x || self.get(y, x) == x)
    }

    /// Idempotent, and every two-element subset is a left- or right-zero
    /// subsemigroup.
    pub fn is_locally_zero(&self) -> bool {
        let n = self.order;
        self.is_idempotent()
            && (0..n).all(|x| {
                (x + 1..n).all(|y| {
                    let (a, b) = (self.get(x, y), self.get(y, x));
                    (a == x && b == y) || (a == y && b == x)
                })
            })
    }

    /// The anti-diagonal reads the same after transposition.
    pub fn is_bi_diagonal(&self) -> bool {
        (0..self.order).all(|i| {
            let j = self.partner(i);
            self.get(i, j) == self.get(j, i)
        })
    }

    /// `x•x = zero` for all `x` and `x•y = x` whenever `x ≠ y`.
    pub fn is_semi_neutral_at(&self, zero: usize) -> bool {
        self.all_pairs(|x, y| self.get(x, y) == if x == y { zero } else { x })
    }

    pub fn is_associative(&self) -> bool {
        let n = self.order;
        (0..n).all(|x| {
            (0..n).all(|y| {
                let xy = self.get(x, y);
                (0..n).all(|z| self.get(xy, z) == self.get(x, self.get(y, z)))
            })
        })
    }

    /// Associative with a two-sided identity and two-sided inverses.
    pub fn is_group(&self) -> bool {
        let n = self.order;
        if !self.is_associative() {
            return false;
        }
        let Some(e) = (0..n).find(|&e| (0..n).all(|x| self.get(e, x) == x && self.get(x, e) == x))
        else {
            return false;
        };
        (0..n).all(|x| (0..n).any(|y| self.get(x, y) == e && self.get(y, x) == e))
    }
}

impl PartialEq for Groupoid {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.cells == other.cells
    }
}

impl Eq for Groupoid {}

impl Hash for Groupoid {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.order.hash(state);
        self.cells.hash(state);
    }
}

impl fmt::Display for Groupoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = (0..self.order)
            .map(|x| self.label(x).len())
            .max()
            .unwrap_or(1);
        for row in self.rows() {
            let line: Vec<String> = row
                .iter()
                .map(|&v| format!("{:>width$}", self.label(v)))
                .collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for Groupoid {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Groupoid", 4)?;
        s.serialize_field("order", &self.order)?;
        s.serialize_field("table", &self.to_rows())?;
        s.serialize_field("labels", &self.labels)?;
        s.serialize_field("zero", &self.zero)?;
        s.end()
    }
}

/// The four diagonal readings of a Cayley table (0-based, partner `j = n-1-i`).
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct DiagonalProfile {
    /// `x_i • x_i`
    pub main: Vec<usize>,
    /// `x_i • x_j`
    pub anti: Vec<usize>,
    /// `x_j • x_j`
    pub reverse: Vec<usize>,
    /// `x_j • x_i`
    pub skew: Vec<usize>,
}

/// Named structural predicates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Predicate {
    Idempotent,
    Strong,
    Abelian,
    Orientation,
    TwistedOrientation,
    LocallyZero,
    BiDiagonal,
    SemiNeutral,
}

impl Predicate {
    pub const ALL: [Predicate; 8] = [
        Predicate::Idempotent,
        Predicate::Strong,
        Predicate::Abelian,
        Predicate::Orientation,
        Predicate::TwistedOrientation,
        Predicate::LocallyZero,
        Predicate::BiDiagonal,
        Predicate::SemiNeutral,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Predicate::Idempotent => "idempotent",
            Predicate::Strong => "strong",
            Predicate::Abelian => "abelian",
            Predicate::Orientation => "orientation",
            Predicate::TwistedOrientation => "twisted-orientation",
            Predicate::LocallyZero => "locally-zero",
            Predicate::BiDiagonal => "bi-diagonal",
            Predicate::SemiNeutral => "semi-neutral",
        }
    }
}

impl std::str::FromStr for Predicate {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let p = match s.to_ascii_lowercase().as_str() {
            "idempotent" => Predicate::Idempotent,
            "strong" => Predicate::Strong,
            "abelian" => Predicate::Abelian,
            "orientation" | "op" => Predicate::Orientation,
            "twisted-orientation" | "top" => Predicate::TwistedOrientation,
            "locally-zero" => Predicate::LocallyZero,
            "bi-diagonal" => Predicate::BiDiagonal,
            "semi-neutral" => Predicate::SemiNeutral,
            other => return Err(format!("unknown predicate {other:?}")),
        };
        Ok(p)
    }
}

/// All eight predicates evaluated at once.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct PredicateVector {
    pub idempotent: bool,
    pub strong: bool,
    pub abelian: bool,
    pub orientation: bool,
    pub twisted_orientation: bool,
    pub locally_zero: bool,
    pub bi_diagonal: bool,
    /// `None` when the groupoid has no zero.
    pub semi_neutral: Option<bool>,
}

impl PredicateVector {
    pub fn of(g: &Groupoid) -> Self {
        PredicateVector {
            idempotent: g.is_idempotent(),
            strong: g.is_strong(),
            abelian: g.is_abelian(),
            orientation: g.has_orientation(),
            twisted_orientation: g.has_twisted_orientation(),
            locally_zero: g.is_locally_zero(),
            bi_diagonal: g.is_bi_diagonal(),
            semi_neutral: g.zero().map(|z| g.is_semi_neutral_at(z)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(rows: &[&[usize]]) -> Groupoid {
        let rows: Vec<Vec<usize>> = rows.iter().map(|r| r.to_vec()).collect();
        Groupoid::new(rows.len(), &rows, None, None).unwrap()
    }

    #[test]
    fn constructor_validates() {
        assert!(g(&[&[0, 0], &[1, 1]]).is_left_zero());
        let bad = Groupoid::new(2, &[vec![0, 2], vec![1, 1]], None, None);
        assert!(matches!(
            bad,
            Err(Error::ClosureViolation {
                row: 0,
                col: 1,
                value: 2,
                ..
            })
        ));
        assert!(matches!(
            Groupoid::new(2, &[vec![0, 0]], None, None),
            Err(Error::BadShape(_))
        ));
        assert!(matches!(
            Groupoid::new(2, &[vec![0, 0], vec![0]], None, None),
            Err(Error::BadShape(_))
        ));
        let labels = Some(vec!["a".to_string(), "a".to_string()]);
        assert!(matches!(
            Groupoid::new(2, &[vec![0, 0], vec![1, 1]], labels, None),
            Err(Error::BadLabels(_))
        ));
        let labels = Some(vec!["a".to_string()]);
        assert!(matches!(
            Groupoid::new(2, &[vec![0, 0], vec![1, 1]], labels, None),
            Err(Error::BadLabels(_))
        ));
        assert!(matches!(
            Groupoid::new(2, &[vec![0, 0], vec![1, 1]], None, Some(2)),
            Err(Error::BadZero { zero: 2, order: 2 })
        ));
    }

    #[test]
    fn zero_semigroups() {
        assert_eq!(
            Groupoid::left_zero(2).to_rows(),
            vec![vec![0, 0], vec![1, 1]]
        );
        assert_eq!(
            Groupoid::right_zero(2).to_rows(),
            vec![vec![0, 1], vec![0, 1]]
        );
        assert_eq!(
            Groupoid::left_zero(3).to_rows(),
            vec![vec![0, 0, 0], vec![1, 1, 1], vec![2, 2, 2]]
        );
    }

    #[test]
    fn equality_ignores_metadata() {
        let a = Groupoid::left_zero(2);
        let b = Groupoid::left_zero(2)
            .with_labels(Some(vec!["p".into(), "q".into()]))
            .unwrap()
            .with_zero(Some(1))
            .unwrap();
        assert_eq!(a, b);
        assert_ne!(a, Groupoid::right_zero(2));
    }

    #[test]
    fn diagonal_profiles() {
        let ex43 = g(&[&[0, 1, 0, 3], &[1, 1, 1, 0], &[2, 2, 2, 3], &[0, 3, 2, 3]]);
        let d = ex43.diagonal_profile();
        assert_eq!(d.main, vec![0, 1, 2, 3]);
        assert_eq!(d.anti, vec![3, 1, 2, 0]);
        assert_eq!(d.reverse, vec![3, 2, 1, 0]);
        assert_eq!(d.skew, vec![0, 2, 1, 3]);

        let d = Groupoid::left_zero(2).diagonal_profile();
        assert_eq!(
            (d.main, d.anti, d.reverse, d.skew),
            (vec![0, 1], vec![0, 1], vec![1, 0], vec![1, 0])
        );

        let d = Groupoid::constant(2, 0).unwrap().diagonal_profile();
        assert!([d.main, d.anti, d.reverse, d.skew]
            .iter()
            .all(|s| s == &[0, 0]));
    }

    #[test]
    fn predicates_on_small_tables() {
        assert!(Groupoid::right_zero(3).is_strong());
        let ex23 = g(&[&[0, 0, 2], &[1, 1, 1], &[0, 2, 2]]);
        assert!(ex23.is_locally_zero());
        let ex42 = g(&[&[0, 1, 2], &[1, 1, 2], &[2, 1, 2]]);
        assert!(ex42.has_twisted_orientation());
        let ex29 = g(&[&[0, 0, 2, 2], &[1, 0, 2, 2], &[2, 2, 0, 0], &[3, 2, 1, 0]]);
        assert!(!ex29.is_strong());
    }

    #[test]
    fn semi_neutral_needs_zero() {
        let sn = g(&[&[0, 0, 0], &[1, 0, 1], &[2, 2, 0]]);
        assert_eq!(sn.check(Predicate::SemiNeutral), Err(Error::MissingZero));
        let sn = sn.with_zero(Some(0)).unwrap();
        assert_eq!(sn.check(Predicate::SemiNeutral), Ok(true));
        let sn = sn.with_zero(Some(1)).unwrap();
        assert_eq!(sn.check(Predicate::SemiNeutral), Ok(false));
    }

    #[test]
    fn group_detection() {
        assert!(g(&[&[0, 1, 2], &[1, 2, 0], &[2, 0, 1]]).is_group());
        assert!(!Groupoid::left_zero(2).is_group());
        assert!(Groupoid::left_zero(1).is_group());
    }

    #[test]
    fn predicate_names_round_trip() {
        for p in Predicate::ALL {
            assert_eq!(p.name().parse::<Predicate>(), Ok(p));
        }
        assert!("nope".parse::<Predicate>().is_err());
    }
}
