use std::fmt;

use serde::{Deserialize, Serialize};

/// Generator families. The declaration order is the family precedence used
/// for canonical storage of [`Element`](super::Element)s.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// Anonymous placeholder used by identity checks and tests.
    Free,
    /// Creation generator `a_i^+`.
    APlus,
    /// Chevalley lowering generator `f_i`.
    F,
    /// Classical Cartan generator `h_i`.
    H,
    /// Cartan element `H_i` of the CAG presentation.
    CagH,
    K,
    KBar,
    L,
    LBar,
    /// Chevalley raising generator `e_i`.
    E,
    /// Annihilation generator `a_i^-`.
    AMinus,
    /// Matrix unit `e_{ij}` of gl(n+1|m).
    Unit,
}

impl Family {
    pub fn prefix(self) -> &'static str {
        match self {
            Family::Free => "x",
            Family::APlus => "ap",
            Family::F => "f",
            Family::H => "h",
            Family::CagH => "H",
            Family::K => "k",
            Family::KBar => "kb",
            Family::L => "L",
            Family::LBar => "Lb",
            Family::E => "e",
            Family::AMinus => "am",
            Family::Unit => "E",
        }
    }

    /// The family exchanged with this one by the star antiinvolution.
    pub fn star(self) -> Option<Family> {
        Some(match self {
            Family::E => Family::F,
            Family::F => Family::E,
            Family::K => Family::KBar,
            Family::KBar => Family::K,
            Family::L => Family::LBar,
            Family::LBar => Family::L,
            Family::APlus => Family::AMinus,
            Family::AMinus => Family::APlus,
            Family::H => Family::H,
            Family::CagH => Family::CagH,
            Family::Free | Family::Unit => return None,
        })
    }
}

/// A Z2-graded generator symbol. The parity is fixed when the symbol is built.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Generator {
    pub family: Family,
    pub i: u8,
    /// Second index; only used by matrix units.
    pub j: u8,
    pub odd: bool,
}

impl Generator {
    pub const fn new(family: Family, i: u8, odd: bool) -> Self {
        Generator {
            family,
            i,
            j: 0,
            odd,
        }
    }

    pub const fn unit(i: u8, j: u8, odd: bool) -> Self {
        Generator {
            family: Family::Unit,
            i,
            j,
            odd,
        }
    }

    pub const fn free(i: u8, odd: bool) -> Self {
        Generator::new(Family::Free, i, odd)
    }

    pub fn parity(&self) -> u8 {
        self.odd as u8
    }

    pub fn star(&self) -> Option<Generator> {
        self.family.star().map(|family| Generator { family, ..*self })
    }

    pub fn name(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Unit => write!(f, "E{}_{}", self.i, self.j),
            fam => write!(f, "{}{}", fam.prefix(), self.i),
        }
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self, if self.odd { "'" } else { "" })
    }
}
