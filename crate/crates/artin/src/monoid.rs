//! The Artin monoid and group over a finite-type diagram: positive words,
//! the length homomorphism λ, generator support, two independent equality
//! deciders, and Δ-power group elements.
//!
//! Equality of positive words is decided two ways. [`ArtinMonoid::equal`]
//! compares Garside left-greedy normal forms: Δ^p·s₁⋯s_r with simple
//! factors modeled as Coxeter-group elements and left-weightedness tested
//! through descent-set containment. [`ArtinMonoid::equal_bfs`] closes a
//! word under single applications of the defining relations
//! ⟨x_i,x_j⟩^{m_ij} = ⟨x_j,x_i⟩^{m_ji}; the relations preserve length, so
//! the class is finite and the closure is a complete oracle. The two must
//! always agree; the test suites exploit that relentlessly.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use crate::coxeter::{CoxeterMatrix, FamilySpec};
use crate::coxgroup::{CoxElement, CoxSystem};
use crate::{Caps, Error, Result};

/// A positive word: a finite sequence of 1-based generator indices,
/// interpreted in the Artin monoid of its ambient diagram. The empty word
/// is the monoid identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PositiveWord {
    letters: Vec<u8>,
}

impl PositiveWord {
    pub fn new(letters: Vec<u8>, rank: usize) -> Result<Self> {
        for &l in &letters {
            if l == 0 || l as usize > rank {
                return Err(Error::LetterOutOfRange {
                    letter: l as usize,
                    rank,
                });
            }
        }
        Ok(PositiveWord { letters })
    }

    pub fn empty() -> Self {
        PositiveWord { letters: Vec::new() }
    }

    /// Parse the exact word format: whitespace-separated 1-based indices;
    /// the empty string is the identity.
    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let l: usize = token
                .parse()
                .map_err(|_| Error::Parse(format!("bad generator index `{token}`")))?;
            if l == 0 || l > rank {
                return Err(Error::LetterOutOfRange { letter: l, rank });
            }
            letters.push(l as u8);
        }
        Ok(PositiveWord { letters })
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    /// The length homomorphism λ: number of letters. The defining
    /// relations are length-preserving, so λ is constant on equality
    /// classes.
    pub fn lambda(&self) -> usize {
        self.letters.len()
    }

    /// Set of generators occurring in the word; invariant under monoid
    /// equality.
    pub fn support(&self) -> BTreeSet<usize> {
        self.letters.iter().map(|&l| l as usize).collect()
    }

    pub fn concat(&self, other: &PositiveWord) -> PositiveWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        PositiveWord { letters }
    }

    pub fn pow(&self, k: usize) -> PositiveWord {
        let mut letters = Vec::with_capacity(self.letters.len() * k);
        for _ in 0..k {
            letters.extend_from_slice(&self.letters);
        }
        PositiveWord { letters }
    }

    pub fn push(&mut self, letter: u8) {
        self.letters.push(letter);
    }
}

impl fmt::Display for PositiveWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        Ok(())
    }
}

/// Garside left-greedy normal form Δ^p·s₁⋯s_r.
///
/// Invariants: consecutive factors are left-weighted
/// (LeftDescents(s_{i+1}) ⊆ RightDescents(s_i)), no factor is the identity
/// or the longest element, and λ of the represented word equals
/// p·ℓ(w₀) + Σ ℓ(s_i). Equal positive words have identical normal forms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    pub delta_power: u32,
    pub factors: Vec<CoxElement>,
}

impl NormalForm {
    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }
}

/// An element of the Artin group in Δ-canonical form Δ^z·(positive part),
/// where the positive part is a left-weighted factor sequence not
/// left-divisible by Δ. Equal group elements have identical fields.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    pub delta_exp: i64,
    pub factors: Vec<CoxElement>,
}

impl GroupElement {
    pub fn is_identity(&self) -> bool {
        self.delta_exp == 0 && self.factors.is_empty()
    }
}

/// Monoid and group arithmetic over one ambient diagram.
pub struct ArtinMonoid {
    sys: CoxSystem,
    /// σ with x_i·Δ = Δ·x_{σ(i)}, 1-based: sigma[i−1] = σ(i).
    sigma: Vec<u8>,
}

impl ArtinMonoid {
    pub fn for_spec(spec: &FamilySpec) -> Result<ArtinMonoid> {
        Self::from_system(CoxSystem::for_spec(spec)?)
    }

    pub fn for_matrix(matrix: &CoxeterMatrix) -> Result<ArtinMonoid> {
        Self::from_system(CoxSystem::for_matrix(matrix)?)
    }

    pub fn from_system(sys: CoxSystem) -> Result<ArtinMonoid> {
        let sigma = solve_tau(&sys)?;
        Ok(ArtinMonoid { sys, sigma })
    }

    pub fn system(&self) -> &CoxSystem {
        &self.sys
    }

    pub fn rank(&self) -> usize {
        self.sys.rank()
    }

    pub fn word(&self, letters: Vec<u8>) -> Result<PositiveWord> {
        PositiveWord::new(letters, self.rank())
    }

    pub fn parse_word(&self, text: &str) -> Result<PositiveWord> {
        PositiveWord::parse(text, self.rank())
    }

    /// The permutation τ: x_i·Δ = Δ·x_{τ(i)}; a diagram automorphism and
    /// an involution (conjugation by the involution w₀).
    pub fn tau(&self) -> &[u8] {
        &self.sigma
    }

    /// Rewriting-closure equality oracle. Complete because the relations
    /// preserve length; capped because the class is exponential.
    pub fn equal_bfs(&self, w1: &PositiveWord, w2: &PositiveWord, caps: &Caps) -> Result<bool> {
        if w1.lambda() != w2.lambda() {
            return Ok(false);
        }
        if w1 == w2 {
            return Ok(true);
        }
        if w1.lambda() > caps.bfs_lambda {
            return Err(Error::CapExceeded {
                what: "bfs word length",
                needed: w1.lambda() as u64,
                cap: caps.bfs_lambda as u64,
            });
        }
        let n = self.rank() as u8;
        let matrix = self.sys.matrix();
        let target = w1.letters();
        let mut seen: HashSet<Vec<u8>> = HashSet::new();
        seen.insert(w2.letters().to_vec());
        let mut queue: VecDeque<Vec<u8>> = VecDeque::new();
        queue.push_back(w2.letters().to_vec());
        let mut alt_buf = Vec::new();
        while let Some(word) = queue.pop_front() {
            for pos in 0..word.len() {
                let a = word[pos];
                for b in 1..=n {
                    if b == a {
                        continue;
                    }
                    let Some(m) = matrix.label(a as usize, b as usize).finite() else {
                        continue;
                    };
                    let m = m as usize;
                    if pos + m > word.len() {
                        continue;
                    }
                    if !matches_alternating(&word[pos..pos + m], a, b) {
                        continue;
                    }
                    alternating_into(&mut alt_buf, b, a, m);
                    let mut next = word.clone();
                    next[pos..pos + m].copy_from_slice(&alt_buf);
                    if next.as_slice() == target {
                        return Ok(true);
                    }
                    if !seen.contains(next.as_slice()) {
                        seen.insert(next.clone());
                        queue.push_back(next);
                    }
                }
            }
        }
        Ok(false)
    }

    /// The unique left-weighted normal form of a positive word.
    pub fn normal_form(&self, w: &PositiveWord) -> NormalForm {
        let mut factors: Vec<CoxElement> = w
            .letters()
            .iter()
            .map(|&l| self.sys.generator(l as usize).unwrap())
            .collect();
        self.rebalance(&mut factors);
        let delta_power = self.strip_delta_prefix(&mut factors);
        let nf = NormalForm {
            delta_power,
            factors,
        };
        debug_assert_eq!(
            w.lambda(),
            nf.delta_power as usize * self.sys.longest_len()
                + nf.factors.iter().map(|f| self.sys.length(f)).sum::<usize>()
        );
        nf
    }

    /// Normal-form equality of positive words.
    pub fn equal(&self, w1: &PositiveWord, w2: &PositiveWord) -> bool {
        if w1.lambda() != w2.lambda() {
            return false;
        }
        self.normal_form(w1) == self.normal_form(w2)
    }

    /// Rendering: `D^p | f1 ; f2 ; ...`, factors as reduced words.
    pub fn render_normal_form(&self, nf: &NormalForm) -> String {
        let mut out = format!("D^{} |", nf.delta_power);
        let words: Vec<String> = nf
            .factors
            .iter()
            .map(|f| {
                let w = self.sys.reduced_word(f);
                w.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
            })
            .collect();
        if !words.is_empty() {
            out.push(' ');
            out.push_str(&words.join(" ; "));
        }
        out
    }

    /// Word read back off a normal form: Δ-word^p followed by the factors'
    /// reduced words. Positive-equal to any word with this normal form.
    pub fn normal_form_word(&self, nf: &NormalForm) -> PositiveWord {
        let mut letters = Vec::new();
        let delta_word = self.sys.reduced_word(self.sys.longest());
        for _ in 0..nf.delta_power {
            letters.extend_from_slice(&delta_word);
        }
        for f in &nf.factors {
            letters.extend_from_slice(&self.sys.reduced_word(f));
        }
        PositiveWord { letters }
    }

    // ----- Group-of-fractions arithmetic -----

    pub fn group_identity(&self) -> GroupElement {
        GroupElement {
            delta_exp: 0,
            factors: Vec::new(),
        }
    }

    /// Δ^z as a group element.
    pub fn group_delta_power(&self, z: i64) -> GroupElement {
        GroupElement {
            delta_exp: z,
            factors: Vec::new(),
        }
    }

    /// Canonical form of a positive word as a group element.
    pub fn group_from_word(&self, w: &PositiveWord) -> GroupElement {
        let nf = self.normal_form(w);
        GroupElement {
            delta_exp: nf.delta_power as i64,
            factors: nf.factors,
        }
    }

    /// g1·g2: commute g1's positive part across Δ^{z2} with τ, then
    /// renormalize the concatenated factor sequences.
    pub fn group_mul(&self, g1: &GroupElement, g2: &GroupElement) -> GroupElement {
        let mut factors = self.apply_sigma_power(&g1.factors, g2.delta_exp);
        factors.extend(g2.factors.iter().cloned());
        self.rebalance(&mut factors);
        let p = self.strip_delta_prefix(&mut factors);
        GroupElement {
            delta_exp: g1.delta_exp + g2.delta_exp + p as i64,
            factors,
        }
    }

    /// g⁻¹ via Δ-complements: each factor f satisfies f·(f⁻¹w₀) = Δ, so
    /// the positive part inverts to a complement chain times Δ^{−k}.
    pub fn group_inv(&self, g: &GroupElement) -> GroupElement {
        let k = g.factors.len() as i64;
        let w0 = self.sys.longest();
        // V = c_k · τ(c_{k−1}) · τ²(c_{k−2}) ⋯ with c_j = f_j⁻¹·w₀.
        let mut v: Vec<CoxElement> = Vec::with_capacity(g.factors.len());
        for (offset, f) in g.factors.iter().rev().enumerate() {
            let mut c = self.sys.mul(&self.sys.inv(f), w0);
            if offset % 2 == 1 {
                c = self.sys.conj_by_w0(&c);
            }
            v.push(c);
        }
        let m = k + g.delta_exp;
        let mut factors = self.apply_sigma_power(&v, m);
        self.rebalance(&mut factors);
        let p = self.strip_delta_prefix(&mut factors);
        GroupElement {
            delta_exp: -m + p as i64,
            factors,
        }
    }

    pub fn group_eq(&self, g1: &GroupElement, g2: &GroupElement) -> bool {
        g1 == g2
    }

    /// τ^power applied to a factor sequence; τ is conjugation by w₀ and an
    /// involution, so only the parity of `power` matters.
    fn apply_sigma_power(&self, factors: &[CoxElement], power: i64) -> Vec<CoxElement> {
        if power % 2 == 0 {
            factors.to_vec()
        } else {
            factors.iter().map(|f| self.sys.conj_by_w0(f)).collect()
        }
    }

    /// Fixpoint of local left-weighting moves over adjacent factor pairs.
    ///
    /// A violated pair (a, b) has some i ∈ LD(b) \ RD(a); sliding x_i left
    /// (a ← a·x_i, b ← x_i·b) preserves the monoid product and strictly
    /// increases the prefix-sum vector of factor lengths, so the sweep
    /// terminates; pairwise left-weighted is globally left-weighted.
    fn rebalance(&self, factors: &mut Vec<CoxElement>) {
        loop {
            let mut changed = false;
            let mut i = 0;
            while i + 1 < factors.len() {
                changed |= self.fix_pair(factors, i);
                i += 1;
            }
            if !changed {
                return;
            }
        }
    }

    fn fix_pair(&self, factors: &mut Vec<CoxElement>, i: usize) -> bool {
        let mut moved = false;
        loop {
            let avail = self.sys.left_descent_mask(&factors[i + 1])
                & !self.sys.right_descent_mask(&factors[i]);
            if avail == 0 {
                return moved;
            }
            let g = self.sys.generator(avail.trailing_zeros() as usize + 1).unwrap();
            factors[i] = self.sys.mul(&factors[i], &g);
            factors[i + 1] = self.sys.mul(&g, &factors[i + 1]);
            moved = true;
            if self.sys.is_identity(&factors[i + 1]) {
                factors.remove(i + 1);
                return true;
            }
        }
    }

    /// Pull maximal Δ-powers off the front. After rebalancing, any w₀
    /// factor forces every factor to its left to be w₀, so stripping the
    /// prefix removes them all.
    fn strip_delta_prefix(&self, factors: &mut Vec<CoxElement>) -> u32 {
        let w0 = self.sys.longest();
        let mut p = 0;
        while factors.first() == Some(w0) {
            factors.remove(0);
            p += 1;
        }
        debug_assert!(!factors.iter().any(|f| f == w0 || self.sys.is_identity(f)));
        p
    }

    #[cfg(test)]
    fn is_left_weighted(&self, factors: &[CoxElement]) -> bool {
        factors.windows(2).all(|pair| {
            let ld = self.sys.left_descent_mask(&pair[1]);
            ld & self.sys.right_descent_mask(&pair[0]) == ld
        })
    }
}

fn matches_alternating(slice: &[u8], a: u8, b: u8) -> bool {
    slice
        .iter()
        .enumerate()
        .all(|(t, &l)| l == if t % 2 == 0 { a } else { b })
}

fn alternating_into(buf: &mut Vec<u8>, a: u8, b: u8, m: usize) {
    buf.clear();
    for t in 0..m {
        buf.push(if t % 2 == 0 { a } else { b });
    }
}

/// ⟨a,b⟩^m as a word: the alternating product of length m starting with a.
pub fn alternating_word(a: u8, b: u8, m: usize) -> Vec<u8> {
    let mut buf = Vec::new();
    alternating_into(&mut buf, a, b, m);
    buf
}

/// Solve x_i·Δ = Δ·x_j for j, for every i. Conjugation by w₀ names the
/// candidate; normal-form equality certifies it (a miss means an upstream
/// bug, reported as such).
fn solve_tau(sys: &CoxSystem) -> Result<Vec<u8>> {
    let n = sys.rank();
    // Probe with a temporary monoid carrying a placeholder σ: the normal
    // form machinery never consults σ.
    let probe = ArtinMonoid {
        sys: sys.clone(),
        sigma: Vec::new(),
    };
    let delta_word = sys.reduced_word(sys.longest());
    let mut sigma = Vec::with_capacity(n);
    for i in 1..=n {
        let lhs = {
            let mut letters = vec![i as u8];
            letters.extend_from_slice(&delta_word);
            PositiveWord { letters }
        };
        let lhs_nf = probe.normal_form(&lhs);
        let candidate = {
            let conj = probe.sys.conj_by_w0(&probe.sys.generator(i)?);
            (1..=n).find(|&j| probe.sys.generator(j).unwrap() == conj)
        };
        let order: Vec<usize> = candidate
            .into_iter()
            .chain((1..=n).filter(|&j| Some(j) != candidate))
            .collect();
        let mut found = None;
        for j in order {
            let mut letters = delta_word.clone();
            letters.push(j as u8);
            let rhs = PositiveWord { letters };
            if lhs_nf == probe.normal_form(&rhs) {
                found = Some(j as u8);
                break;
            }
        }
        sigma.push(found.ok_or_else(|| {
            Error::Internal(format!("no τ image for generator {i}; Δ-commutation failed"))
        })?);
    }
    Ok(sigma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::parse_group_spec;

    fn monoid(spec: &str) -> ArtinMonoid {
        ArtinMonoid::for_spec(&parse_group_spec(spec).unwrap()).unwrap()
    }

    fn w(m: &ArtinMonoid, text: &str) -> PositiveWord {
        m.parse_word(text).unwrap()
    }

    #[test]
    fn lambda_and_support_basics() {
        let m = monoid("A2");
        assert_eq!(PositiveWord::empty().lambda(), 0);
        assert!(PositiveWord::empty().support().is_empty());
        let u = w(&m, "1");
        let v = w(&m, "2 1");
        assert_eq!(u.concat(&v).lambda(), 3);
        assert_eq!(w(&m, "1 2 1").support().into_iter().collect::<Vec<_>>(), vec![1, 2]);
    }

    #[test]
    fn word_parsing_rejects_out_of_range() {
        let m = monoid("A2");
        assert!(m.parse_word("1 3").is_err());
        assert!(m.parse_word("0").is_err());
        assert!(m.parse_word("x").is_err());
        assert_eq!(m.parse_word("  ").unwrap(), PositiveWord::empty());
    }

    #[test]
    fn word_display_round_trips() {
        let m = monoid("B3");
        let word = w(&m, "1 2 3 2 1");
        assert_eq!(m.parse_word(&word.to_string()).unwrap(), word);
        assert_eq!(PositiveWord::empty().to_string(), "");
    }

    #[test]
    fn bfs_decides_the_braid_relation() {
        let m = monoid("A2");
        let caps = Caps::default();
        assert!(m.equal_bfs(&w(&m, "1 2 1"), &w(&m, "2 1 2"), &caps).unwrap());
        assert!(!m.equal_bfs(&w(&m, "1 2"), &w(&m, "2 1"), &caps).unwrap());
        let u = w(&m, "1 2 1");
        assert!(m.equal_bfs(&u, &u, &caps).unwrap());
    }

    #[test]
    fn bfs_cap_is_enforced() {
        let m = monoid("A2");
        let mut left = vec![1u8; 14];
        left.push(2);
        let mut right = vec![1u8; 13];
        right.extend_from_slice(&[2, 1]);
        let left = PositiveWord::new(left, 2).unwrap();
        let right = PositiveWord::new(right, 2).unwrap();
        assert!(matches!(
            m.equal_bfs(&left, &right, &Caps::default()),
            Err(Error::CapExceeded { .. })
        ));
        // Identical or length-mismatched words short-circuit before the cap.
        assert!(m.equal_bfs(&left, &left, &Caps::default()).unwrap());
    }

    #[test]
    fn normal_form_examples_a2() {
        let m = monoid("A2");
        let nf = m.normal_form(&w(&m, "1 1 2 1"));
        assert_eq!(nf.delta_power, 1);
        assert_eq!(nf.factors, vec![m.system().generator(2).unwrap()]);

        let nf = m.normal_form(&w(&m, "1 2 1"));
        assert_eq!(nf.delta_power, 1);
        assert!(nf.factors.is_empty());

        let nf = m.normal_form(&w(&m, "1 1"));
        assert_eq!(nf.delta_power, 0);
        assert_eq!(
            nf.factors,
            vec![m.system().generator(1).unwrap(), m.system().generator(1).unwrap()]
        );
    }

    #[test]
    fn normal_form_is_left_weighted_and_sound() {
        for spec in ["A2", "A3", "B2", "B3", "I2(5)", "I2(6)"] {
            let m = monoid(spec);
            let n = m.rank() as u8;
            let mut state = 0x9e3779b97f4a7c15u64;
            for len in [0usize, 1, 3, 5, 8, 10] {
                for _ in 0..40 {
                    let letters: Vec<u8> = (0..len)
                        .map(|_| {
                            state = state
                                .wrapping_mul(6364136223846793005)
                                .wrapping_add(1442695040888963407);
                            (state >> 33) as u8 % n + 1
                        })
                        .collect();
                    let word = PositiveWord::new(letters, m.rank()).unwrap();
                    let nf = m.normal_form(&word);
                    assert!(m.is_left_weighted(&nf.factors), "{spec}: {word}");
                    let read_back = m.normal_form_word(&nf);
                    assert_eq!(read_back.lambda(), word.lambda(), "{spec}: {word}");
                    assert!(m.equal(&read_back, &word), "{spec}: {word}");
                }
            }
        }
    }

    #[test]
    fn equal_matches_bfs_on_examples() {
        let m = monoid("A2");
        assert!(m.equal(&w(&m, "1 2 1"), &w(&m, "2 1 2")));
        assert!(!m.equal(&w(&m, "1 2"), &w(&m, "2 1")));
        assert!(m.equal(&PositiveWord::empty(), &PositiveWord::empty()));
    }

    #[test]
    fn deciders_agree_on_exhaustive_short_words() {
        for spec in ["A2", "B2", "I2(5)"] {
            let m = monoid(spec);
            let caps = Caps::default();
            let mut words: Vec<Vec<u8>> = vec![Vec::new()];
            for _ in 0..4 {
                words = words
                    .iter()
                    .flat_map(|prefix| {
                        (1..=m.rank() as u8).map(move |l| {
                            let mut next = prefix.clone();
                            next.push(l);
                            next
                        })
                    })
                    .collect();
            }
            for u in &words {
                for v in &words {
                    let u = PositiveWord::new(u.clone(), m.rank()).unwrap();
                    let v = PositiveWord::new(v.clone(), m.rank()).unwrap();
                    assert_eq!(
                        m.equal(&u, &v),
                        m.equal_bfs(&u, &v, &caps).unwrap(),
                        "{spec}: {u} vs {v}"
                    );
                }
            }
        }
    }

    #[test]
    fn render_normal_form_format() {
        let m = monoid("A2");
        assert_eq!(m.render_normal_form(&m.normal_form(&PositiveWord::empty())), "D^0 |");
        assert_eq!(m.render_normal_form(&m.normal_form(&w(&m, "1 1 2 1"))), "D^1 | 2");
        assert_eq!(m.render_normal_form(&m.normal_form(&w(&m, "2 1"))), "D^0 | 2 1");
        assert_eq!(m.render_normal_form(&m.normal_form(&w(&m, "1 1"))), "D^0 | 1 ; 1");
    }

    #[test]
    fn tau_examples() {
        assert_eq!(monoid("A2").tau(), &[2, 1]);
        assert_eq!(monoid("B3").tau(), &[1, 2, 3]);
        assert_eq!(monoid("A1").tau(), &[1]);
        assert_eq!(monoid("A3").tau(), &[3, 2, 1]);
        // w₀(D_n) is central exactly for even n; odd n flips the fork.
        assert_eq!(monoid("D4").tau(), &[1, 2, 3, 4]);
        assert_eq!(monoid("D5").tau(), &[1, 2, 3, 5, 4]);
        assert_eq!(monoid("I2(5)").tau(), &[2, 1]);
        assert_eq!(monoid("I2(6)").tau(), &[1, 2]);
    }

    #[test]
    fn tau_is_an_involutive_diagram_automorphism() {
        for spec in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "D5", "I2(3)", "I2(8)"] {
            let m = monoid(spec);
            let sigma = m.tau();
            let n = m.rank();
            for i in 1..=n {
                let si = sigma[i - 1] as usize;
                assert_eq!(sigma[si - 1] as usize, i, "{spec}: σ² ≠ id at {i}");
                for j in 1..=n {
                    let sj = sigma[j - 1] as usize;
                    assert_eq!(
                        m.system().matrix().label(i, j),
                        m.system().matrix().label(si, sj),
                        "{spec}: σ does not preserve the diagram at ({i},{j})"
                    );
                }
            }
        }
    }

    #[test]
    fn group_generator_times_delta_commutes_via_tau() {
        // (z=0, [x₁]) · (z=1, []) = (z=1, [x₂]) in A_2.
        let m = monoid("A2");
        let g1 = m.group_from_word(&w(&m, "1"));
        let delta = m.group_delta_power(1);
        let product = m.group_mul(&g1, &delta);
        assert_eq!(product.delta_exp, 1);
        assert_eq!(product.factors, vec![m.system().generator(2).unwrap()]);
    }

    #[test]
    fn group_inverse_cancels() {
        for spec in ["A2", "A3", "B3", "I2(5)"] {
            let m = monoid(spec);
            let n = m.rank() as u8;
            let mut state = 0xdeadbeefcafef00du64;
            for _ in 0..60 {
                let len = (state % 7) as usize;
                let letters: Vec<u8> = (0..len)
                    .map(|_| {
                        state = state.wrapping_mul(6364136223846793005).wrapping_add(99991);
                        (state >> 37) as u8 % n + 1
                    })
                    .collect();
                let z = (state % 5) as i64 - 2;
                let word = PositiveWord::new(letters, m.rank()).unwrap();
                let g = m.group_mul(&m.group_delta_power(z), &m.group_from_word(&word));
                let inv = m.group_inv(&g);
                assert!(m.group_mul(&g, &inv).is_identity(), "{spec}: g·g⁻¹");
                assert!(m.group_mul(&inv, &g).is_identity(), "{spec}: g⁻¹·g");
            }
        }
    }

    #[test]
    fn group_multiplication_is_associative_on_samples() {
        let m = monoid("B3");
        let words = ["", "1", "2 3", "1 2 3 2", "3 3 1"];
        let elems: Vec<GroupElement> = words
            .iter()
            .enumerate()
            .map(|(i, text)| {
                let g = m.group_from_word(&w(&m, text));
                let shift = m.group_delta_power(i as i64 % 3 - 1);
                m.group_mul(&shift, &g)
            })
            .collect();
        for a in &elems {
            for b in &elems {
                for c in &elems {
                    let left = m.group_mul(&m.group_mul(a, b), c);
                    let right = m.group_mul(a, &m.group_mul(b, c));
                    assert!(m.group_eq(&left, &right));
                }
            }
        }
    }

    #[test]
    fn delta_squared_equals_coxeter_element_power_in_a2() {
        let m = monoid("A2");
        // Δ² = (1 2 1)² and 𝒥^h = (1 2)³ with h = 3.
        let delta_sq = m.group_from_word(&w(&m, "1 2 1 1 2 1"));
        let j_cubed = m.group_from_word(&w(&m, "1 2 1 2 1 2"));
        assert!(m.group_eq(&delta_sq, &j_cubed));
        assert_eq!(delta_sq.delta_exp, 2);
        assert!(delta_sq.factors.is_empty());
    }

    #[test]
    fn rank_one_monoid_is_free_on_one_letter() {
        let m = monoid("A1");
        let nf = m.normal_form(&PositiveWord::new(vec![1; 5], 1).unwrap());
        // Δ = x₁, so x₁⁵ = Δ⁵.
        assert_eq!(nf.delta_power, 5);
        assert!(nf.factors.is_empty());
        assert!(m.equal(&w(&m, "1 1"), &w(&m, "1 1")));
        assert!(!m.equal(&w(&m, "1"), &w(&m, "1 1")));
    }

    #[test]
    fn alternating_word_shapes() {
        assert_eq!(alternating_word(1, 2, 3), vec![1, 2, 1]);
        assert_eq!(alternating_word(2, 1, 4), vec![2, 1, 2, 1]);
        assert_eq!(alternating_word(1, 2, 0), Vec::<u8>::new());
    }
}
