//! Mapping class groups of closed surfaces, at the formula level: the
//! 4g+2 bound on finite cyclic subgroup orders, which is attained, and the
//! Ψ-sentence that separates Mod(S_g) from Mod(S_h) for g ≠ h.
//!
//! The groups themselves are never constructed; the two cited facts are
//! all the distinguisher needs.

use crate::theory::{psi, Basis, EquivalenceVerdict, Side, VerdictKind};
use crate::{Error, Result};

/// Genus of a closed orientable surface; the order bound is stated for
/// g ≥ 2, so smaller genera are rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Genus(u32);

impl Genus {
    pub fn new(g: u32) -> Result<Genus> {
        if g >= 2 {
            Ok(Genus(g))
        } else {
            Err(Error::Range(format!("genus must be ≥ 2, got {g}")))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

/// Maximal order of a finite cyclic subgroup of Mod(S_g): 4g+2, attained.
pub fn max_cyclic_order(g: Genus) -> u32 {
    4 * g.get() + 2
}

/// Separate Mod(S_g) from Mod(S_h): Ψ_{4·max(g,h)+2} holds on the larger
/// genus (an element of that order exists) and fails on the smaller (its
/// orders are capped strictly below).
pub fn distinguish_mcg(g: Genus, h: Genus) -> EquivalenceVerdict {
    let (og, oh) = (max_cyclic_order(g), max_cyclic_order(h));
    if g == h {
        return EquivalenceVerdict {
            kind: VerdictKind::SameSpec,
            sentence: None,
            holds_in: None,
            basis: Basis::Formula,
            exponents: [og, oh],
        };
    }
    EquivalenceVerdict {
        kind: VerdictKind::Distinguished,
        sentence: Some(psi(og.max(oh))),
        holds_in: Some(if og > oh { Side::Left } else { Side::Right }),
        basis: Basis::Formula,
        exponents: [og, oh],
    }
}
