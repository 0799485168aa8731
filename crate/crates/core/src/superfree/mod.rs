//! The Z2-graded free associative algebra over ℚ(q): words in graded
//! generator symbols, graded and q-deformed brackets, and the star map.

mod element;
mod generator;
pub mod identities;
mod text;

pub use element::{Element, Word};
pub use generator::{Family, Generator};
pub use identities::{check_bracket_identity, BracketIdentity, IdentityId};
pub use text::{parse_element, SymbolTable};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// `⟦a,b⟧_x = ab − (−1)^{deg a·deg b} x·ba` for homogeneous `a`, `b`.
pub fn graded_bracket(a: &Element, b: &Element, x: &Scalar) -> Result<Element> {
    let pa = a.parity()?;
    let pb = b.parity()?;
    let s = if pa * pb == 1 { -x.clone() } else { x.clone() };
    Ok(qbracket(a, b, &s))
}

/// The graded bracket with `x = 1`.
pub fn supercommutator(a: &Element, b: &Element) -> Result<Element> {
    graded_bracket(a, b, &Scalar::one())
}

/// Ungraded `[a,b]_x = ab − x·ba`.
pub fn qbracket(a: &Element, b: &Element, x: &Scalar) -> Element {
    let mut out = a.mul(b);
    out.add_scaled(&b.mul(a), &-x.clone());
    out
}

/// Ungraded `{a,b}_x = ab + x·ba`.
pub fn qanticommutator(a: &Element, b: &Element, x: &Scalar) -> Element {
    let mut out = a.mul(b);
    out.add_scaled(&b.mul(a), x);
    out
}

/// Antilinear antiinvolution: reverses words, swaps e↔f, k↔k̄, L↔L̄, a⁺↔a⁻,
/// fixes h and H, and bars coefficients.
pub fn star_map(a: &Element) -> Result<Element> {
    let mut out = Element::zero();
    for (w, c) in a.terms() {
        let mut v = Vec::with_capacity(w.len());
        for g in w.symbols().iter().rev() {
            v.push(g.star().ok_or_else(|| Error::NoStarImage(g.name()))?);
        }
        out.add_term(Word::from_slice(&v), c.bar());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x(i: u8) -> Element {
        Element::gen(Generator::free(i, false))
    }

    fn odd(i: u8) -> Element {
        Element::gen(Generator::free(i, true))
    }

    #[test]
    fn distributive_product() {
        let lhs = (x(0) + x(1)).mul(&x(2));
        assert_eq!(lhs, x(0).mul(&x(2)) + x(1).mul(&x(2)));
        assert_eq!(Element::one().mul(&x(3)), x(3));
        let a = x(0).scale(&Scalar::q());
        let b = x(1).scale(&Scalar::qbar());
        assert_eq!(a.mul(&b), x(0).mul(&x(1)));
    }

    #[test]
    fn bracket_cases() {
        let one = Scalar::one();
        assert_eq!(
            graded_bracket(&x(0), &x(1), &one).unwrap(),
            x(0).mul(&x(1)) - x(1).mul(&x(0))
        );
        assert_eq!(
            graded_bracket(&odd(0), &odd(1), &one).unwrap(),
            odd(0).mul(&odd(1)) + odd(1).mul(&odd(0))
        );
        let q = Scalar::q();
        assert_eq!(
            graded_bracket(&x(0), &odd(1), &q).unwrap(),
            x(0).mul(&odd(1)) - odd(1).mul(&x(0)).scale(&q)
        );
    }

    #[test]
    fn mixed_parity_is_rejected() {
        let mixed = x(0) + odd(1);
        assert_eq!(
            graded_bracket(&mixed, &x(2), &Scalar::one()),
            Err(Error::MixedParity)
        );
    }

    #[test]
    fn star_examples() {
        let e1 = Element::gen(Generator::new(Family::E, 1, false));
        let e2 = Element::gen(Generator::new(Family::E, 2, true));
        let f1 = Element::gen(Generator::new(Family::F, 1, false));
        let f2 = Element::gen(Generator::new(Family::F, 2, true));
        assert_eq!(star_map(&e1).unwrap(), f1);
        let t = e1.mul(&e2).scale(&Scalar::q());
        assert_eq!(star_map(&t).unwrap(), f2.mul(&f1).scale(&Scalar::qbar()));
        let ap = Element::gen(Generator::new(Family::APlus, 3, true));
        let am = Element::gen(Generator::new(Family::AMinus, 3, true));
        assert_eq!(star_map(&ap).unwrap(), am);
        assert!(matches!(star_map(&x(0)), Err(Error::NoStarImage(_))));
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        (-3i64..=3, -2i64..=2, prop::bool::ANY).prop_map(|(c, k, frac)| {
            let s = Scalar::monomial(crate::scalar::rat(c, 1), k);
            if frac {
                s.checked_div(&(Scalar::q() + Scalar::from_int(2))).unwrap()
            } else {
                s
            }
        })
    }

    fn arb_element(fams: &'static [Family], parity: Option<bool>) -> impl Strategy<Value = Element> {
        let word = prop::collection::vec((0usize..fams.len(), 1u8..=2), 0..4);
        prop::collection::vec((arb_scalar(), word), 0..4).prop_map(move |terms| {
            let mut e = Element::zero();
            for (c, w) in terms {
                let gs: Vec<Generator> = w
                    .into_iter()
                    .map(|(f, i)| Generator::new(fams[f], i, i == 2))
                    .collect();
                let word = Word::from_slice(&gs);
                if parity.is_some_and(|p| (word.parity() == 1) != p) {
                    continue;
                }
                e.add_term(word, c);
            }
            e
        })
    }

    const STAR_FAMS: &[Family] = &[Family::E, Family::F, Family::K, Family::APlus];

    proptest! {
        #[test]
        fn graded_antisymmetry(a in arb_element(STAR_FAMS, Some(false)),
                               b in arb_element(STAR_FAMS, Some(true)),
                               c in arb_element(STAR_FAMS, Some(true))) {
            let one = Scalar::one();
            for (u, v) in [(&a, &b), (&b, &c), (&a, &a), (&c, &c)] {
                let lhs = graded_bracket(u, v, &one).unwrap();
                let sign = if u.parity().unwrap() * v.parity().unwrap() == 1 { 1 } else { -1 };
                let rhs = graded_bracket(v, u, &one).unwrap().scale(&Scalar::from_int(sign));
                prop_assert_eq!(lhs, rhs);
            }
        }

        #[test]
        fn bracket_is_bilinear(a in arb_element(STAR_FAMS, Some(true)),
                               b in arb_element(STAR_FAMS, Some(true)),
                               c in arb_element(STAR_FAMS, Some(false)),
                               s in arb_scalar()) {
            let x = Scalar::q();
            let lhs = graded_bracket(&(a.clone() + b.scale(&s)), &c, &x).unwrap();
            let rhs = graded_bracket(&a, &c, &x).unwrap()
                + graded_bracket(&b, &c, &x).unwrap().scale(&s);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn star_is_involutive_antimorphism(a in arb_element(STAR_FAMS, None),
                                           b in arb_element(STAR_FAMS, None)) {
            prop_assert_eq!(star_map(&star_map(&a).unwrap()).unwrap(), a.clone());
            let lhs = star_map(&a.mul(&b)).unwrap();
            let rhs = star_map(&b).unwrap().mul(&star_map(&a).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn product_is_associative(a in arb_element(STAR_FAMS, None),
                                  b in arb_element(STAR_FAMS, None),
                                  c in arb_element(STAR_FAMS, None)) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }
    }
}
