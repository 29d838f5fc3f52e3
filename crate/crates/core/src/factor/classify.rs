use serde::Serialize;

use super::{orient_factor, signature_factor, similar_factor, skew_factor};
use crate::groupoid::{Groupoid, PredicateVector};
use crate::semigroup::product_equals;

/// Every prime, composite and normal flag of one groupoid.
///
/// The semi-* flags are `None` when the groupoid has no zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub signature_prime: bool,
    pub similar_prime: bool,
    pub orient_prime: bool,
    pub skew_prime: bool,
    pub ua_holds: bool,
    pub au_holds: bool,
    pub oj_holds: bool,
    pub jo_holds: bool,
    pub ua_composite: bool,
    pub au_composite: bool,
    pub u_composite: bool,
    pub u_normal: bool,
    pub oj_composite: bool,
    pub jo_composite: bool,
    pub j_composite: bool,
    pub j_normal: bool,
    pub semi_neutral: Option<bool>,
    pub semi_normal: Option<bool>,
    pub semi_composite: Option<bool>,
    pub predicates: PredicateVector,
}

pub fn classify(g: &Groupoid) -> ClassificationReport {
    let id = Groupoid::left_zero(g.order());
    let u = signature_factor(g);
    let a = similar_factor(g);
    let o = orient_factor(g);
    let j = skew_factor(g);

    let signature_prime = u == id;
    let similar_prime = a == id;
    let orient_prime = o == id;
    let skew_prime = j == id;

    let ua_holds = product_equals(&u, &a, g);
    let au_holds = product_equals(&a, &u, g);
    let oj_holds = product_equals(&o, &j, g);
    let jo_holds = product_equals(&j, &o, g);

    let ua_composite = ua_holds && !signature_prime && !similar_prime;
    let au_composite = au_holds && !similar_prime && !signature_prime;
    let oj_composite = oj_holds && !orient_prime && !skew_prime;
    let jo_composite = jo_holds && !skew_prime && !orient_prime;
    let u_normal = ua_holds && au_holds;
    let j_normal = oj_holds && jo_holds;

    let predicates = PredicateVector::of(g);
    let (semi_normal, semi_composite) = match g.zero() {
        None => (None, None),
        Some(z) => {
            let one_of =
                |p: &Groupoid, q: &Groupoid| p.is_semi_neutral_at(z) != q.is_semi_neutral_at(z);
            let u_split = one_of(&u, &a);
            let j_split = one_of(&o, &j);
            let normal = (u_normal && u_split) || (j_normal && j_split);
            let composite = ((ua_composite || au_composite) && u_split)
                || ((oj_composite || jo_composite) && j_split);
            (Some(normal), Some(composite))
        }
    };

    ClassificationReport {
        signature_prime,
        similar_prime,
        orient_prime,
        skew_prime,
        ua_holds,
        au_holds,
        oj_holds,
        jo_holds,
        ua_composite,
        au_composite,
        u_composite: ua_composite && au_composite,
        u_normal,
        oj_composite,
        jo_composite,
        j_composite: oj_composite && jo_composite,
        j_normal,
        semi_neutral: predicates.semi_neutral,
        semi_normal,
        semi_composite,
        predicates,
    }
}
