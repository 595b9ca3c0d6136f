//! k-th roots of the center generator: existence decisions with witnesses,
//! root spectra, and the closed-form maximal exponents.
//!
//! The decision procedure is complete at desk scale. A root of c_G in the
//! group yields a root in the positive monoid (positive-root reduction),
//! any positive root x of c_G satisfies k·λ(x) = λ(c_G), and x must
//! contain every generator (c_G does, and support is preserved under
//! equality and powers). So the candidates are exactly the full-support
//! positive words of length λ(c_G)/k, a finite set the search enumerates
//! outright:
//!
//!  1. k = 1: c_G itself.
//!  2. k ∤ λ(c_G): no root (λ is a homomorphism).
//!  3. λ(c_G)/k < n: no root (full support needs λ ≥ n).
//!  4. otherwise: enumerate candidates, dedupe by normal form, test
//!     candidate^k = c_G; the lexicographically least witness wins.
//!
//! The search is data-parallel over candidate blocks when the `parallel`
//! feature is on; workers report all hits and a deterministic reduction
//! picks the least, so the answer never depends on scheduling.

use std::collections::{BTreeSet, HashSet};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use serde_json::json;

use crate::center::{center_data_with, CenterData};
use crate::coxeter::{Family, FamilySpec};
use crate::monoid::{ArtinMonoid, NormalForm, PositiveWord};
use crate::{Caps, Error, Result};

/// Outcome of a root-existence query. `UndecidedByCap` is a first-class
/// result, never conflated with `No`: a `No` carries a completeness
/// argument, an undecided merely reports an exhausted budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootDecision {
    Yes,
    No,
    UndecidedByCap,
}

/// Which part of the procedure settled the query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootMethod {
    Formula,
    Divisibility,
    SupportPrune,
    Search,
}

impl RootMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            RootMethod::Formula => "formula",
            RootMethod::Divisibility => "divisibility",
            RootMethod::SupportPrune => "support-prune",
            RootMethod::Search => "search",
        }
    }
}

#[derive(Debug, Clone)]
pub struct RootAnswer {
    pub spec: FamilySpec,
    pub k: u32,
    pub decision: RootDecision,
    pub witness: Option<PositiveWord>,
    pub method: RootMethod,
}

impl RootAnswer {
    pub fn to_json(&self) -> serde_json::Value {
        let mut v = json!({
            "decision": match self.decision {
                RootDecision::Yes => "yes",
                RootDecision::No => "no",
                RootDecision::UndecidedByCap => "undecided-by-cap",
            },
            "method": self.method.as_str(),
            "k": self.k,
            "group": self.spec.to_string(),
        });
        if let Some(w) = &self.witness {
            v["witness"] = json!(w.to_string());
        }
        v
    }
}

/// The set of k for which c_G has a k-th root, up to `search_bound`.
#[derive(Debug, Clone)]
pub struct RootSpectrum {
    pub spec: FamilySpec,
    pub members: BTreeSet<u32>,
    pub search_bound: u32,
}

impl RootSpectrum {
    pub fn max(&self) -> u32 {
        self.members.iter().copied().max().unwrap_or(0)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "group": self.spec.to_string(),
            "members": self.members.iter().copied().collect::<Vec<u32>>(),
            "max": self.max(),
            "searchBound": self.search_bound,
        })
    }
}

/// Largest k such that c_G has a k-th root: n+1 for A_n, n for B_n,
/// n−1/2n−2 for D_n (n even/odd), m/2 and m for I2(m) (m even/odd).
pub fn max_root_exponent(spec: &FamilySpec) -> Result<u32> {
    let p = match spec.family() {
        Family::A | Family::B | Family::D | Family::I2 => spec.param().unwrap(),
        _ => {
            return Err(Error::Unsupported(format!(
                "{spec} is sporadic; no root data"
            )))
        }
    };
    Ok(match spec.family() {
        Family::A => p + 1,
        Family::B => p,
        Family::D => {
            if p % 2 == 0 {
                p - 1
            } else {
                2 * p - 2
            }
        }
        Family::I2 => {
            if p % 2 == 0 {
                p / 2
            } else {
                p
            }
        }
        _ => unreachable!(),
    })
}

/// The canonical maximal root: 𝒥 to the maximal exponent. Since
/// Δ² = 𝒥^h and Δ = 𝒥^{h/2} when central, 𝒥 always realizes the bound.
pub fn explicit_root(spec: &FamilySpec) -> Result<(PositiveWord, u32)> {
    let data = crate::center::center_data(spec)?;
    Ok((data.j_word, max_root_exponent(spec)?))
}

/// How the candidate search runs. The default follows the `parallel`
/// feature; both are exposed so the bench suite can compare them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStrategy {
    Sequential,
    #[cfg(feature = "parallel")]
    Parallel,
}

#[allow(clippy::derivable_impls)] // the default variant depends on the feature set
impl Default for SearchStrategy {
    fn default() -> Self {
        #[cfg(feature = "parallel")]
        {
            SearchStrategy::Parallel
        }
        #[cfg(not(feature = "parallel"))]
        {
            SearchStrategy::Sequential
        }
    }
}

pub fn has_kth_root(spec: &FamilySpec, k: u32, caps: &Caps) -> Result<RootAnswer> {
    has_kth_root_with(spec, k, caps, SearchStrategy::default())
}

pub fn has_kth_root_with(
    spec: &FamilySpec,
    k: u32,
    caps: &Caps,
    strategy: SearchStrategy,
) -> Result<RootAnswer> {
    if k == 0 {
        return Err(Error::Range("root exponent k must be ≥ 1".into()));
    }
    let monoid = ArtinMonoid::for_spec(spec)?;
    let data = center_data_with(spec, &monoid)?;
    let answer = |decision, witness, method| RootAnswer {
        spec: *spec,
        k,
        decision,
        witness,
        method,
    };

    if k == 1 {
        return Ok(answer(RootDecision::Yes, Some(data.c_g.clone()), RootMethod::Formula));
    }
    let lambda_cg = data.c_g.lambda();
    if lambda_cg % k as usize != 0 {
        return Ok(answer(RootDecision::No, None, RootMethod::Divisibility));
    }
    let target_len = lambda_cg / k as usize;
    let n = spec.rank();
    if target_len < n {
        return Ok(answer(RootDecision::No, None, RootMethod::SupportPrune));
    }
    if target_len > caps.search_len || total_words(n, target_len).is_none() {
        return Ok(answer(RootDecision::UndecidedByCap, None, RootMethod::Search));
    }

    let witness = search_witness(&monoid, &data, k, target_len, strategy);
    match witness {
        Some(w) => Ok(answer(RootDecision::Yes, Some(w), RootMethod::Search)),
        None => Ok(answer(RootDecision::No, None, RootMethod::Search)),
    }
}

/// All k ≤ kmax (default: the formula bound) admitting roots. A cap hit
/// for any k aborts the whole spectrum: a spectrum is a completeness
/// claim.
pub fn root_spectrum(spec: &FamilySpec, kmax: Option<u32>, caps: &Caps) -> Result<RootSpectrum> {
    let bound = match kmax {
        Some(k) => k,
        None => max_root_exponent(spec)?,
    };
    let mut members = BTreeSet::new();
    for k in 1..=bound {
        let answer = has_kth_root(spec, k, caps)?;
        match answer.decision {
            RootDecision::Yes => {
                members.insert(k);
            }
            RootDecision::No => {}
            RootDecision::UndecidedByCap => {
                return Err(Error::CapExceeded {
                    what: "root search length",
                    needed: crate::center::table_center_length(spec)? / k as u64,
                    cap: caps.search_len as u64,
                });
            }
        }
    }
    // Divisor closure: y^k = c implies (y^{k/d})^d = c.
    for &k in &members {
        for d in 1..=k {
            if k % d == 0 && !members.contains(&d) {
                return Err(Error::Internal(format!(
                    "spectrum of {spec} not divisor-closed: {k} in, {d} out"
                )));
            }
        }
    }
    Ok(RootSpectrum {
        spec: *spec,
        members,
        search_bound: bound,
    })
}

fn search_witness(
    monoid: &ArtinMonoid,
    data: &CenterData,
    k: u32,
    target_len: usize,
    strategy: SearchStrategy,
) -> Option<PositiveWord> {
    let cg_nf = monoid.normal_form(&data.c_g);
    let total = total_words(monoid.rank(), target_len).expect("guarded by the caller");
    match strategy {
        SearchStrategy::Sequential => {
            search_block(monoid, &cg_nf, k, target_len, 0, total, true)
                .into_iter()
                .next()
        }
        #[cfg(feature = "parallel")]
        SearchStrategy::Parallel => {
            // Roughly four blocks per worker, but no smaller than 64
            // indices so task overhead stays amortized.
            let workers = rayon::current_num_threads() as u64;
            let block = (total.div_ceil(workers * 4)).max(64);
            let blocks: Vec<u64> = (0..total.div_ceil(block)).collect();
            blocks
                .into_par_iter()
                .flat_map_iter(|b| {
                    let start = b * block;
                    let end = (start + block).min(total);
                    search_block(monoid, &cg_nf, k, target_len, start, end, false)
                })
                .min()
        }
    }
}

fn total_words(n: usize, len: usize) -> Option<u64> {
    (n as u64).checked_pow(len as u32)
}

/// Scan candidate indices [start, end): each index spells a word base-n,
/// most significant letter first, so index order is lexicographic order.
/// Full-support filter, then normal-form dedupe, then the power test.
/// With `early_exit` the first hit is returned alone (it is the least in
/// the scanned range).
fn search_block(
    monoid: &ArtinMonoid,
    cg_nf: &NormalForm,
    k: u32,
    len: usize,
    start: u64,
    end: u64,
    early_exit: bool,
) -> Vec<PositiveWord> {
    let n = monoid.rank();
    let full_mask: u32 = (1u32 << n) - 1;
    let mut hits = Vec::new();
    let mut seen: HashSet<NormalForm> = HashSet::new();
    let mut letters = vec![0u8; len];
    for index in start..end {
        let mut rem = index;
        let mut support = 0u32;
        for slot in (0..len).rev() {
            let digit = (rem % n as u64) as u8;
            rem /= n as u64;
            letters[slot] = digit + 1;
            support |= 1 << digit;
        }
        if support != full_mask {
            continue;
        }
        let word = PositiveWord::new(letters.clone(), n).expect("letters in range");
        if !seen.insert(monoid.normal_form(&word)) {
            continue;
        }
        if monoid.normal_form(&word.pow(k as usize)) == *cg_nf {
            if early_exit {
                return vec![word];
            }
            hits.push(word);
        }
    }
    hits
}
