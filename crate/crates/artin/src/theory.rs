//! First-order sentences in the language of groups, their evaluation over
//! finite groups, and the Φ-based procedure that distinguishes elementary
//! theories of the four-family Artin groups.
//!
//! Φ_k = ∀x.∃y.∀z.(¬(xz = zx) ∨ (x = y^k)) says every central element has
//! a k-th root. Over an Artin group of finite type the center is infinite
//! cyclic, generated by c_G, so Φ_k holds exactly when c_G has a k-th
//! root: a root y of c_G gives (y^m)^k = c_G^m for every m ∈ ℤ (powers of
//! y commute), covering the whole center. That reduction is
//! [`holds_phi`]; sentences are never evaluated over the infinite groups
//! themselves.
//!
//! Ψ_n = ∃x.((x^n = 1) ∧ (x^j ≠ 1 for j < n)) asserts an element of order
//! exactly n; it powers the mapping-class-group distinguisher in [`crate::mcg`].

use std::fmt;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use serde_json::json;

use crate::coxeter::FamilySpec;
use crate::coxgroup::GroupTable;
use crate::roots::{self, RootDecision};
use crate::{Caps, Error, Result};

/// One sentence of the prenex fragment used here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sentence {
    pub prefix: Vec<(Quantifier, String)>,
    pub matrix: Formula,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantifier {
    ForAll,
    Exists,
}

/// One ±-signed variable power inside an atom. `explicit_exp` keeps the
/// printed form faithful: Φ and Ψ write y^k and x^j with the exponent
/// shown even when it is 1, while plain products print bare letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub var: String,
    pub exp: i32,
    pub explicit_exp: bool,
}

impl Factor {
    pub fn bare(var: &str) -> Self {
        Factor {
            var: var.into(),
            exp: 1,
            explicit_exp: false,
        }
    }

    pub fn pow(var: &str, exp: i32) -> Self {
        Factor {
            var: var.into(),
            exp,
            explicit_exp: true,
        }
    }
}

/// Quantifier-free formulas over atoms `w₁ = w₂` (each side a product of
/// signed variable powers; the empty product is 1). `Neq` is sugar for
/// `Not(Eq(..))` kept separate so the printer can reproduce both the
/// ¬(u = v) and (u ≠ v) spellings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Formula {
    Eq(Vec<Factor>, Vec<Factor>),
    Neq(Vec<Factor>, Vec<Factor>),
    Not(Box<Formula>),
    And(Vec<Formula>),
    Or(Vec<Formula>),
}

/// The root sentence Φ_k = ∀x.∃y.∀z.(¬(xz = zx) ∨ (x = y^k)). Over the
/// Artin groups it is decided through the central-root reduction
/// ([`holds_phi`]); see the module docs for its literal finite-model
/// semantics.
pub fn phi(k: u32) -> Sentence {
    Sentence {
        prefix: vec![
            (Quantifier::ForAll, "x".into()),
            (Quantifier::Exists, "y".into()),
            (Quantifier::ForAll, "z".into()),
        ],
        matrix: Formula::Or(vec![
            Formula::Not(Box::new(Formula::Eq(
                vec![Factor::bare("x"), Factor::bare("z")],
                vec![Factor::bare("z"), Factor::bare("x")],
            ))),
            Formula::Eq(vec![Factor::bare("x")], vec![Factor::pow("y", k as i32)]),
        ]),
    }
}

/// Ψ_n: some element has order exactly n.
pub fn psi(n: u32) -> Sentence {
    let mut conjuncts = vec![Formula::Eq(vec![Factor::pow("x", n as i32)], vec![])];
    for j in 1..n {
        conjuncts.push(Formula::Neq(vec![Factor::pow("x", j as i32)], vec![]));
    }
    Sentence {
        prefix: vec![(Quantifier::Exists, "x".into())],
        matrix: Formula::And(conjuncts),
    }
}

/// The Kahr class: prenex prefix exactly ∀∃∀.
pub fn is_kahr(s: &Sentence) -> bool {
    matches!(
        s.prefix
            .iter()
            .map(|(q, _)| *q)
            .collect::<Vec<_>>()
            .as_slice(),
        [Quantifier::ForAll, Quantifier::Exists, Quantifier::ForAll]
    )
}

/// Rendering alphabet for sentences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Notation {
    #[default]
    Unicode,
    Ascii,
}

impl Sentence {
    pub fn render(&self, notation: Notation) -> String {
        let mut out = String::new();
        for (q, v) in &self.prefix {
            match (notation, q) {
                (Notation::Unicode, Quantifier::ForAll) => out.push('∀'),
                (Notation::Unicode, Quantifier::Exists) => out.push('∃'),
                (Notation::Ascii, Quantifier::ForAll) => out.push('A'),
                (Notation::Ascii, Quantifier::Exists) => out.push('E'),
            }
            out.push_str(v);
            out.push('.');
        }
        out.push_str(&render_formula(&self.matrix, notation));
        out
    }
}

impl fmt::Display for Sentence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(Notation::Unicode))
    }
}

fn render_word(factors: &[Factor], notation: Notation) -> String {
    if factors.is_empty() {
        return "1".into();
    }
    factors
        .iter()
        .map(|f| {
            if !f.explicit_exp && f.exp == 1 {
                f.var.clone()
            } else {
                match notation {
                    Notation::Unicode => format!("{}{}", f.var, superscript(f.exp)),
                    Notation::Ascii => format!("{}^{}", f.var, f.exp),
                }
            }
        })
        .collect()
}

fn superscript(value: i32) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    let mut out = String::new();
    if value < 0 {
        out.push('⁻');
    }
    let digits = value.unsigned_abs().to_string();
    for d in digits.bytes() {
        out.push(DIGITS[(d - b'0') as usize]);
    }
    out
}

fn render_formula(f: &Formula, notation: Notation) -> String {
    let (not, or, and, neq) = match notation {
        Notation::Unicode => ("¬", " ∨ ", " ∧ ", " ≠ "),
        Notation::Ascii => ("~", " | ", " & ", " != "),
    };
    match f {
        Formula::Eq(l, r) => format!("({} = {})", render_word(l, notation), render_word(r, notation)),
        Formula::Neq(l, r) => format!("({}{}{})", render_word(l, notation), neq, render_word(r, notation)),
        Formula::Not(inner) => format!("{}{}", not, render_formula(inner, notation)),
        Formula::Or(items) => format!(
            "({})",
            items.iter().map(|i| render_formula(i, notation)).collect::<Vec<_>>().join(or)
        ),
        Formula::And(items) => format!(
            "({})",
            items.iter().map(|i| render_formula(i, notation)).collect::<Vec<_>>().join(and)
        ),
    }
}

/// How the finite-model evaluator distributes the outermost quantifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalStrategy {
    Sequential,
    #[cfg(feature = "parallel")]
    Parallel,
}

#[allow(clippy::derivable_impls)] // the default variant depends on the feature set
impl Default for EvalStrategy {
    fn default() -> Self {
        #[cfg(feature = "parallel")]
        {
            EvalStrategy::Parallel
        }
        #[cfg(not(feature = "parallel"))]
        {
            EvalStrategy::Sequential
        }
    }
}

/// Exact truth value of a sentence over a finite group, by exhaustive
/// quantifier expansion (|G|^q assignments, capped).
pub fn eval_on_finite_group(s: &Sentence, table: &GroupTable, caps: &Caps) -> Result<bool> {
    eval_on_finite_group_with(s, table, caps, EvalStrategy::default())
}

pub fn eval_on_finite_group_with(
    s: &Sentence,
    table: &GroupTable,
    caps: &Caps,
    strategy: EvalStrategy,
) -> Result<bool> {
    let order = table.order() as u64;
    let q = s.prefix.len() as u32;
    let assignments = order
        .checked_pow(q)
        .ok_or(Error::CapExceeded {
            what: "quantifier assignments",
            needed: u64::MAX,
            cap: caps.assign,
        })?;
    if assignments > caps.assign {
        return Err(Error::CapExceeded {
            what: "quantifier assignments",
            needed: assignments,
            cap: caps.assign,
        });
    }
    check_bound(s)?;
    let mut assign = Vec::with_capacity(s.prefix.len());
    match strategy {
        EvalStrategy::Sequential => Ok(eval_prefix(s, table, &mut assign)),
        #[cfg(feature = "parallel")]
        EvalStrategy::Parallel => {
            if s.prefix.is_empty() {
                return Ok(eval_formula(&s.matrix, s, table, &assign));
            }
            let outer = |value: usize| {
                let mut assign = vec![value];
                eval_prefix(s, table, &mut assign)
            };
            Ok(match s.prefix[0].0 {
                Quantifier::ForAll => (0..table.order()).into_par_iter().all(outer),
                Quantifier::Exists => (0..table.order()).into_par_iter().any(outer),
            })
        }
    }
}

fn check_bound(s: &Sentence) -> Result<()> {
    fn walk(f: &Formula, s: &Sentence) -> Result<()> {
        match f {
            Formula::Eq(l, r) | Formula::Neq(l, r) => {
                for factor in l.iter().chain(r) {
                    if !s.prefix.iter().any(|(_, v)| *v == factor.var) {
                        return Err(Error::Parse(format!("unbound variable `{}`", factor.var)));
                    }
                }
                Ok(())
            }
            Formula::Not(inner) => walk(inner, s),
            Formula::And(items) | Formula::Or(items) => items.iter().try_for_each(|i| walk(i, s)),
        }
    }
    walk(&s.matrix, s)
}

fn eval_prefix(s: &Sentence, table: &GroupTable, assign: &mut Vec<usize>) -> bool {
    if assign.len() == s.prefix.len() {
        return eval_formula(&s.matrix, s, table, assign);
    }
    let (q, _) = s.prefix[assign.len()];
    let order = table.order();
    match q {
        Quantifier::ForAll => (0..order).all(|v| {
            assign.push(v);
            let r = eval_prefix(s, table, assign);
            assign.pop();
            r
        }),
        Quantifier::Exists => (0..order).any(|v| {
            assign.push(v);
            let r = eval_prefix(s, table, assign);
            assign.pop();
            r
        }),
    }
}

fn eval_formula(f: &Formula, s: &Sentence, table: &GroupTable, assign: &[usize]) -> bool {
    match f {
        Formula::Eq(l, r) => eval_word(l, s, table, assign) == eval_word(r, s, table, assign),
        Formula::Neq(l, r) => eval_word(l, s, table, assign) != eval_word(r, s, table, assign),
        Formula::Not(inner) => !eval_formula(inner, s, table, assign),
        Formula::And(items) => items.iter().all(|i| eval_formula(i, s, table, assign)),
        Formula::Or(items) => items.iter().any(|i| eval_formula(i, s, table, assign)),
    }
}

fn eval_word(factors: &[Factor], s: &Sentence, table: &GroupTable, assign: &[usize]) -> usize {
    let mut acc = 0usize; // identity index
    for f in factors {
        let slot = s
            .prefix
            .iter()
            .position(|(_, v)| *v == f.var)
            .expect("checked by check_bound");
        let mut base = assign[slot];
        let mut e = f.exp;
        if e < 0 {
            base = table.inverse(base);
            e = -e;
        }
        for _ in 0..e {
            acc = table.product(acc, base);
        }
    }
    acc
}

/// Reduction recorded with every Φ verdict.
pub const PHI_REDUCTION_NOTE: &str = "Phi_k holds in G iff every central element has a k-th root; \
the center of an irreducible finite-type Artin group is infinite cyclic generated by c_G, and a \
k-th root y of c_G yields (y^m)^k = c_G^m for every integer m, so the reduction to a single root \
query on c_G is exact.";

/// Φ_k over an Artin group, via the central-root reduction.
pub fn holds_phi(spec: &FamilySpec, k: u32, caps: &Caps) -> Result<bool> {
    let answer = roots::has_kth_root(spec, k, caps)?;
    match answer.decision {
        RootDecision::Yes => Ok(true),
        RootDecision::No => Ok(false),
        RootDecision::UndecidedByCap => Err(Error::CapExceeded {
            what: "root search behind holds_phi",
            needed: crate::center::table_center_length(spec)? / k as u64,
            cap: caps.search_len as u64,
        }),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerdictKind {
    Distinguished,
    SameSpec,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    Formula,
    Search,
}

/// Outcome of comparing two elementary theories through the Φ-family.
#[derive(Debug, Clone)]
pub struct EquivalenceVerdict {
    pub kind: VerdictKind,
    pub sentence: Option<Sentence>,
    pub holds_in: Option<Side>,
    pub basis: Basis,
    pub exponents: [u32; 2],
}

impl EquivalenceVerdict {
    pub fn to_json(&self, notation: Notation) -> serde_json::Value {
        let mut v = json!({
            "kind": match self.kind {
                VerdictKind::Distinguished => "Distinguished",
                VerdictKind::SameSpec => "SameSpec",
                VerdictKind::Unknown => "Unknown",
            },
            "basis": match self.basis {
                Basis::Formula => "formula",
                Basis::Search => "search",
            },
            "exponents": [self.exponents[0], self.exponents[1]],
        });
        if let Some(s) = &self.sentence {
            v["sentence"] = json!(s.render(notation));
        }
        if let Some(side) = self.holds_in {
            v["holdsIn"] = json!(match side {
                Side::Left => "left",
                Side::Right => "right",
            });
        }
        v
    }
}

/// Distinguish the elementary theories of two four-family specs.
///
/// Distinct maximal root exponents settle it by formula: Φ_k for
/// k = max(k₁,k₂) holds on the larger side and fails on the other. Equal
/// exponents fall back to comparing whole root spectra up to the common
/// bound; the least separating k wins (basis "search"). Identical spectra
/// yield `Unknown` — never a claim of equivalence.
pub fn distinguish(s1: &FamilySpec, s2: &FamilySpec, caps: &Caps) -> Result<EquivalenceVerdict> {
    let k1 = roots::max_root_exponent(s1)?;
    let k2 = roots::max_root_exponent(s2)?;
    if s1 == s2 {
        return Ok(EquivalenceVerdict {
            kind: VerdictKind::SameSpec,
            sentence: None,
            holds_in: None,
            basis: Basis::Formula,
            exponents: [k1, k2],
        });
    }
    if k1 != k2 {
        return Ok(EquivalenceVerdict {
            kind: VerdictKind::Distinguished,
            sentence: Some(phi(k1.max(k2))),
            holds_in: Some(if k1 > k2 { Side::Left } else { Side::Right }),
            basis: Basis::Formula,
            exponents: [k1, k2],
        });
    }
    let sp1 = roots::root_spectrum(s1, Some(k1), caps)?;
    let sp2 = roots::root_spectrum(s2, Some(k2), caps)?;
    let separating = sp1
        .members
        .symmetric_difference(&sp2.members)
        .copied()
        .min();
    match separating {
        Some(k) => Ok(EquivalenceVerdict {
            kind: VerdictKind::Distinguished,
            sentence: Some(phi(k)),
            holds_in: Some(if sp1.members.contains(&k) {
                Side::Left
            } else {
                Side::Right
            }),
            basis: Basis::Search,
            exponents: [k1, k2],
        }),
        None => Ok(EquivalenceVerdict {
            kind: VerdictKind::Unknown,
            sentence: None,
            holds_in: None,
            basis: Basis::Search,
            exponents: [k1, k2],
        }),
    }
}
