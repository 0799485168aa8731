use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::superfree::{Family, Generator, Word};

/// Degree-lexicographic word order over a ranked alphabet.
///
/// Families are grouped into tiers. Symbols in a lower tier are smaller;
/// inside a tier symbols are ordered by index first and then by the position
/// of their family in the tier, so `k_1 < k̄_1 < k_2 < …`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordOrder {
    pub tiers: Vec<Vec<Family>>,
}

impl Default for WordOrder {
    /// `f < k, k̄, h < e` on Chevalley symbols and `a⁺ < L, L̄, H < a⁻` on CAGs.
    fn default() -> Self {
        WordOrder {
            tiers: vec![
                vec![Family::Free],
                vec![Family::F, Family::APlus],
                vec![
                    Family::H,
                    Family::CagH,
                    Family::K,
                    Family::KBar,
                    Family::L,
                    Family::LBar,
                ],
                vec![Family::E, Family::AMinus],
                vec![Family::Unit],
            ],
        }
    }
}

impl WordOrder {
    /// Group-like symbols above the raising generators: `f < e < k, k̄`.
    pub fn group_like_high() -> Self {
        WordOrder {
            tiers: vec![
                vec![Family::Free],
                vec![Family::F, Family::APlus],
                vec![Family::E, Family::AMinus],
                vec![
                    Family::H,
                    Family::CagH,
                    Family::K,
                    Family::KBar,
                    Family::L,
                    Family::LBar,
                ],
                vec![Family::Unit],
            ],
        }
    }

    /// Sort key of a symbol; `None` when its family is in no tier.
    pub fn key(&self, g: &Generator) -> Option<(usize, u8, u8, usize)> {
        self.tiers.iter().enumerate().find_map(|(t, fams)| {
            fams.iter()
                .position(|f| *f == g.family)
                .map(|p| (t, g.i, g.j, p))
        })
    }

    pub fn cmp_symbols(&self, a: &Generator, b: &Generator) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }

    pub fn cmp_words(&self, a: &Word, b: &Word) -> Ordering {
        a.len().cmp(&b.len()).then_with(|| {
            for (x, y) in a.symbols().iter().zip(b.symbols()) {
                match self.cmp_symbols(x, y) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_precedence() {
        let o = WordOrder::default();
        let e1 = Generator::new(Family::E, 1, false);
        let f2 = Generator::new(Family::F, 2, false);
        let k1 = Generator::new(Family::K, 1, false);
        let kb1 = Generator::new(Family::KBar, 1, false);
        let k2 = Generator::new(Family::K, 2, false);
        assert_eq!(o.cmp_symbols(&f2, &k1), Ordering::Less);
        assert_eq!(o.cmp_symbols(&k1, &e1), Ordering::Less);
        assert_eq!(o.cmp_symbols(&k1, &kb1), Ordering::Less);
        assert_eq!(o.cmp_symbols(&kb1, &k2), Ordering::Less);
        let short = Word::from_slice(&[e1]);
        let long = Word::from_slice(&[f2, f2]);
        assert_eq!(o.cmp_words(&short, &long), Ordering::Less);
    }

    #[test]
    fn multiplication_compatible() {
        let o = WordOrder::default();
        let g = |f, i| Generator::new(f, i, false);
        let u = Word::from_slice(&[g(Family::F, 1), g(Family::E, 1)]);
        let v = Word::from_slice(&[g(Family::E, 1), g(Family::F, 1)]);
        assert_eq!(o.cmp_words(&u, &v), Ordering::Less);
        let a = Word::from_slice(&[g(Family::K, 2)]);
        let b = Word::from_slice(&[g(Family::E, 3)]);
        assert_eq!(
            o.cmp_words(&a.concat(&u).concat(&b), &a.concat(&v).concat(&b)),
            Ordering::Less
        );
    }
}
