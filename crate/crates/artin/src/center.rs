//! The fundamental element Δ, the Coxeter number h, and the generator of
//! the (infinite cyclic) center.
//!
//! With 𝒥₁, 𝒥₂ the products over the two parts of the diagram's
//! bipartition and 𝒥 = 𝒥₁𝒥₂, the fundamental element is
//! Δ = 𝒥^{h/2} for even h and 𝒥^{(h−1)/2}·𝒥₁ for odd h, and Δ² = 𝒥^h.
//! The center is generated by Δ for B_n, D_even, I2(even) and by Δ² for
//! A_n, D_odd, I2(odd).
//!
//! Rank 1 is degenerate: A_1 ≅ ℤ has center generated by Δ = x₁, yet the
//! uniform A-family rule says c_G = Δ² of word length 2. This module
//! follows the uniform rule so the root/exponent formulas stay consistent;
//! the CLI surfaces a caveat on A_1 rows.

use crate::coxeter::{bipartition, build_diagram, Family, FamilySpec};
use crate::monoid::{ArtinMonoid, PositiveWord};
use crate::{Error, Result};

/// Everything the center of one group comes down to.
#[derive(Debug, Clone)]
pub struct CenterData {
    pub spec: FamilySpec,
    /// Coxeter number, derived as the order of the image of 𝒥 in Ḡ.
    pub h: u32,
    pub j1_word: PositiveWord,
    pub j2_word: PositiveWord,
    pub j_word: PositiveWord,
    pub delta: PositiveWord,
    pub c_g: PositiveWord,
    /// True when c_G = Δ² (A_n, D_odd, I2(odd)); false when c_G = Δ.
    pub c_is_delta_squared: bool,
}

fn require_infinite_family(spec: &FamilySpec) -> Result<()> {
    if spec.family().is_infinite_family() {
        Ok(())
    } else {
        Err(Error::Unsupported(format!(
            "{spec} is sporadic; center and root data cover only the four infinite families"
        )))
    }
}

/// Compute the full center data of a four-family spec.
pub fn center_data(spec: &FamilySpec) -> Result<CenterData> {
    let monoid = ArtinMonoid::for_spec(spec)?;
    center_data_with(spec, &monoid)
}

/// Same, reusing an already-built monoid for the spec.
pub fn center_data_with(spec: &FamilySpec, monoid: &ArtinMonoid) -> Result<CenterData> {
    require_infinite_family(spec)?;
    let matrix = build_diagram(spec);
    let bp = bipartition(&matrix)?;
    let rank = spec.rank();
    let j1_word = PositiveWord::new(bp.j1.iter().map(|&i| i as u8).collect(), rank)?;
    let j2_word = PositiveWord::new(bp.j2.iter().map(|&i| i as u8).collect(), rank)?;
    let j_word = j1_word.concat(&j2_word);
    let h = monoid.system().coxeter_number()?;

    let delta = if h % 2 == 0 {
        j_word.pow(h as usize / 2)
    } else {
        j_word.pow((h as usize - 1) / 2).concat(&j1_word)
    };
    let c_is_delta_squared = generator_is_delta_squared(spec);
    let c_g = if c_is_delta_squared {
        delta.concat(&delta)
    } else {
        delta.clone()
    };
    Ok(CenterData {
        spec: *spec,
        h,
        j1_word,
        j2_word,
        j_word,
        delta,
        c_g,
        c_is_delta_squared,
    })
}

fn generator_is_delta_squared(spec: &FamilySpec) -> bool {
    match spec.family() {
        Family::A => true,
        Family::B => false,
        Family::D | Family::I2 => spec.param().unwrap() % 2 == 1,
        _ => unreachable!("guarded by require_infinite_family"),
    }
}

/// Δ as a concrete positive word in bipartition order.
pub fn fundamental_element(spec: &FamilySpec) -> Result<PositiveWord> {
    Ok(center_data(spec)?.delta)
}

/// The center generator c_G and whether it is Δ².
pub fn center_generator(spec: &FamilySpec) -> Result<(PositiveWord, bool)> {
    let data = center_data(spec)?;
    Ok((data.c_g, data.c_is_delta_squared))
}

/// True iff w commutes with every generator (normal-form equality of
/// x_i·w and w·x_i for all i).
pub fn check_central(monoid: &ArtinMonoid, w: &PositiveWord) -> bool {
    (1..=monoid.rank()).all(|i| {
        let gen = PositiveWord::new(vec![i as u8], monoid.rank()).unwrap();
        monoid.equal(&gen.concat(w), &w.concat(&gen))
    })
}

/// Structural identities of Δ, checked rather than assumed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaIdentityReport {
    /// Δ·Δ = 𝒥^h.
    pub delta_squared_is_j_h: bool,
    /// c_G commutes with every generator.
    pub c_g_central: bool,
    /// When c_G = Δ: h is even and Δ = 𝒥^{h/2}. None when c_G = Δ².
    pub central_delta_even_case: Option<bool>,
}

impl DeltaIdentityReport {
    pub fn all_pass(&self) -> bool {
        self.delta_squared_is_j_h && self.c_g_central && self.central_delta_even_case.unwrap_or(true)
    }
}

pub fn verify_delta_identities(spec: &FamilySpec) -> Result<DeltaIdentityReport> {
    let monoid = ArtinMonoid::for_spec(spec)?;
    let data = center_data_with(spec, &monoid)?;
    let delta_squared_is_j_h = monoid.equal(
        &data.delta.concat(&data.delta),
        &data.j_word.pow(data.h as usize),
    );
    let c_g_central = check_central(&monoid, &data.c_g);
    let central_delta_even_case = if data.c_is_delta_squared {
        None
    } else {
        Some(data.h % 2 == 0 && monoid.equal(&data.delta, &data.j_word.pow(data.h as usize / 2)))
    };
    Ok(DeltaIdentityReport {
        delta_squared_is_j_h,
        c_g_central,
        central_delta_even_case,
    })
}

/// Closed-form word length of c_G: k²+k (A_k), k² (B_k), 8k²+4k
/// (D_{2k+1}), 4k²−2k (D_{2k}), 4k+2 (I2(2k+1)), 2k (I2(2k)).
pub fn table_center_length(spec: &FamilySpec) -> Result<u64> {
    require_infinite_family(spec)?;
    let p = spec.param().unwrap() as u64;
    Ok(match spec.family() {
        Family::A => p * p + p,
        Family::B => p * p,
        Family::D => {
            if p % 2 == 1 {
                let k = (p - 1) / 2;
                8 * k * k + 4 * k
            } else {
                let k = p / 2;
                4 * k * k - 2 * k
            }
        }
        Family::I2 => {
            if p % 2 == 1 {
                2 * p // = 4k+2 with p = 2k+1
            } else {
                p // = 2k with p = 2k
            }
        }
        _ => unreachable!(),
    })
}
