use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;

use super::Generator;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A word in the free monoid on generator symbols. Ordered length-first,
/// then lexicographically by symbol.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub SmallVec<[Generator; 8]>);

impl Word {
    pub fn unit() -> Self {
        Word(SmallVec::new())
    }

    pub fn from_slice(gs: &[Generator]) -> Self {
        Word(SmallVec::from_slice(gs))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn parity(&self) -> u8 {
        self.0.iter().map(|g| g.parity()).sum::<u8>() % 2
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn symbols(&self) -> &[Generator] {
        &self.0
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.as_slice().cmp(other.0.as_slice()))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, g) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Finite linear combination of words with [`Scalar`] coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Element {
    terms: BTreeMap<Word, Scalar>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn one() -> Self {
        Element::scalar(Scalar::one())
    }

    pub fn scalar(c: Scalar) -> Self {
        Element::term(c, Word::unit())
    }

    pub fn gen(g: Generator) -> Self {
        Element::term(Scalar::one(), Word::from_slice(&[g]))
    }

    pub fn word(gs: &[Generator]) -> Self {
        Element::term(Scalar::one(), Word::from_slice(gs))
    }

    pub fn term(c: Scalar, w: Word) -> Self {
        let mut e = Element::zero();
        e.add_term(w, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, Scalar)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Largest word under the canonical storage order.
    pub fn max_word(&self) -> Option<(&Word, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Element, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (w, d) in &other.terms {
            self.add_term(w.clone(), d * c);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        let mut out = Element::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn mul(&self, other: &Element) -> Element {
        let mut out = Element::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }

    /// Parity of a homogeneous element; `Ok(0)` for zero, error if mixed.
    pub fn parity(&self) -> Result<u8> {
        let mut it = self.terms.keys().map(Word::parity);
        let Some(p) = it.next() else { return Ok(0) };
        if it.all(|x| x == p) {
            Ok(p)
        } else {
            Err(Error::MixedParity)
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.parity().is_ok()
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> Element {
        let mut out = Element::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c));
        }
        out
    }

    pub fn try_map_coeffs(&self, f: impl Fn(&Scalar) -> Result<Scalar>) -> Result<Element> {
        let mut out = Element::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Algebra homomorphism induced by a symbol substitution.
    pub fn substitute(&self, f: &dyn Fn(&Generator) -> Result<Element>) -> Result<Element> {
        let mut cache: BTreeMap<Generator, Element> = BTreeMap::new();
        let mut out = Element::zero();
        for (w, c) in &self.terms {
            let mut acc = Element::scalar(c.clone());
            for g in w.symbols() {
                if !cache.contains_key(g) {
                    cache.insert(*g, f(g)?);
                }
                acc = acc.mul(&cache[g]);
                if acc.is_zero() {
                    break;
                }
            }
            out = out + acc;
        }
        Ok(out)
    }

    /// Every symbol occurring in the element.
    pub fn symbols(&self) -> std::collections::BTreeSet<Generator> {
        self.terms
            .keys()
            .flat_map(|w| w.symbols().iter().copied())
            .collect()
    }

    /// Returns `c` when `self == c · other` for a nonzero scalar `c`.
    pub fn proportionality(&self, other: &Element) -> Option<Scalar> {
        if self.len() != other.len() || self.is_zero() {
            return None;
        }
        let (w, a) = self.terms.iter().next()?;
        let b = other.terms.get(w)?;
        let c = a.checked_div(b).ok()?;
        if *self == other.scale(&c) {
            Some(c)
        } else {
            None
        }
    }
}

impl std::ops::Add for Element {
    type Output = Element;
    fn add(mut self, rhs: Element) -> Element {
        for (w, c) in rhs.terms {
            self.add_term(w, c);
        }
        self
    }
}

impl std::ops::Sub for Element {
    type Output = Element;
    fn sub(mut self, rhs: Element) -> Element {
        for (w, c) in rhs.terms {
            self.add_term(w, -c);
        }
        self
    }
}

impl std::ops::Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.map_coeffs(|c| -c)
    }
}

impl std::ops::Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        Element::mul(self, rhs)
    }
}

impl std::ops::Mul for Element {
    type Output = Element;
    fn mul(self, rhs: Element) -> Element {
        Element::mul(&self, &rhs)
    }
}

impl From<Generator> for Element {
    fn from(g: Generator) -> Self {
        Element::gen(g)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{w}")?;
            } else if w.is_empty() {
                write!(f, "[{c}]")?;
            } else {
                write!(f, "[{c}] {w}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
