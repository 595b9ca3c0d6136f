//! Exact computation in the finite Coxeter group Ḡ of a diagram.
//!
//! Each of the four infinite families gets a faithful combinatorial model
//! (`A_n`: permutations of n+1 points; `B_n`: signed permutations; `D_n`:
//! even-signed permutations; `I2(m)`: dihedral pairs). Everything else that
//! is a connected diagram with labels in {2,3,4,5,6,∞} — in particular the
//! sporadic types — runs on the exact geometric reflection representation
//! over a quadratic integer ring. Faithfulness of that representation is
//! classical (Tits); the test suite additionally pins enumeration counts
//! against the known group orders.
//!
//! Lengths are computed by descent-stripping, so they are certified by the
//! descent predicates rather than stored.

pub mod quad;

use std::collections::HashMap;

use crate::coxeter::{bipartition, build_diagram, recognize, CoxeterMatrix, Family, FamilySpec};
use crate::{Caps, Error, Result};
use quad::{edge_coefficient, ring_for_labels, QuadMat, QuadRing};

/// Which side a descent is taken on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// An element of Ḡ in the model owned by its [`CoxSystem`].
///
/// Values are canonical: two elements are equal in the group iff their
/// representations are identical, so `Eq`/`Hash` decide the word problem
/// in Ḡ.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CoxElement {
    /// Permutation of {1..points}; `im[p]` is the 0-based image of point p.
    Perm(Vec<u8>),
    /// Signed permutation; `im[p]` is the signed 1-based image of
    /// coordinate p+1.
    Signed(Vec<i8>),
    /// Dihedral element s^flip · r^rot with r = x₁x₂.
    Dihedral { flip: bool, rot: u32 },
    /// Reflection-representation matrix together with its inverse.
    Reflection(Box<RefElem>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RefElem {
    pub mat: QuadMat,
    pub inv: QuadMat,
}

impl CoxElement {
    /// 1-based one-line notation, for `A_n` elements.
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        match self {
            CoxElement::Perm(im) => Some(im.iter().map(|&v| v as usize + 1).collect()),
            _ => None,
        }
    }

    /// Signed 1-based one-line notation, for `B_n`/`D_n` elements.
    pub fn as_signed_permutation(&self) -> Option<Vec<i32>> {
        match self {
            CoxElement::Signed(im) => Some(im.iter().map(|&v| v as i32).collect()),
            _ => None,
        }
    }

    pub fn as_dihedral(&self) -> Option<(bool, u32)> {
        match self {
            CoxElement::Dihedral { flip, rot } => Some((*flip, *rot)),
            _ => None,
        }
    }
}

#[derive(Debug, Clone)]
enum Model {
    Perm { points: usize },
    SignedB { n: usize },
    SignedD { n: usize },
    Dihedral { m: u32 },
    Reflection { ring: QuadRing, gens: Vec<QuadMat> },
}

/// A diagram together with a faithful model of its Coxeter group.
#[derive(Debug, Clone)]
pub struct CoxSystem {
    matrix: CoxeterMatrix,
    model: Model,
    w0: CoxElement,
    w0_len: usize,
}

/// Coefficient bound used to detect runaway reflection coordinates, which
/// only happens outside finite type.
const COEFF_LIMIT: i64 = 1 << 20;
const ASCENT_STEP_LIMIT: usize = 10_000;

impl CoxSystem {
    /// Model the Coxeter group of a standard family diagram.
    pub fn for_spec(spec: &FamilySpec) -> Result<CoxSystem> {
        let matrix = build_diagram(spec);
        let n = spec.rank();
        let model = match spec.family() {
            Family::A => Model::Perm { points: n + 1 },
            Family::B => Model::SignedB { n },
            Family::D => Model::SignedD { n },
            Family::I2 => Model::Dihedral {
                m: spec.param().unwrap(),
            },
            _ => reflection_model(&matrix)?,
        };
        Self::finish(matrix, model)
    }

    /// Model the Coxeter group of an arbitrary matrix: a recognized
    /// standard diagram uses its family model, anything else falls back to
    /// the reflection representation (which rejects diagrams it cannot
    /// certify as finite type at this scale).
    pub fn for_matrix(matrix: &CoxeterMatrix) -> Result<CoxSystem> {
        if let Some(spec) = recognize(matrix) {
            return Self::for_spec(&spec);
        }
        let model = reflection_model(matrix)?;
        Self::finish(matrix.clone(), model)
    }

    fn finish(matrix: CoxeterMatrix, model: Model) -> Result<CoxSystem> {
        // Descent sets are u32 bitmasks.
        if matrix.rank() == 0 || matrix.rank() > 32 {
            return Err(Error::Unsupported(format!(
                "rank {} outside the supported range 1..=32",
                matrix.rank()
            )));
        }
        let mut sys = CoxSystem {
            matrix,
            model,
            w0: CoxElement::Dihedral { flip: false, rot: 0 }, // placeholder
            w0_len: 0,
        };
        let (w0, len) = sys.ascend_to_longest()?;
        sys.w0 = w0;
        sys.w0_len = len;
        Ok(sys)
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn identity(&self) -> CoxElement {
        match &self.model {
            Model::Perm { points } => CoxElement::Perm((0..*points as u8).collect()),
            Model::SignedB { n } | Model::SignedD { n } => {
                CoxElement::Signed((1..=*n as i8).collect())
            }
            Model::Dihedral { .. } => CoxElement::Dihedral { flip: false, rot: 0 },
            Model::Reflection { gens, .. } => {
                let dim = gens[0].dim;
                CoxElement::Reflection(Box::new(RefElem {
                    mat: QuadMat::identity(dim),
                    inv: QuadMat::identity(dim),
                }))
            }
        }
    }

    /// The image of generator `i` (1-based).
    pub fn generator(&self, i: usize) -> Result<CoxElement> {
        let n = self.rank();
        if i < 1 || i > n {
            return Err(Error::LetterOutOfRange { letter: i, rank: n });
        }
        Ok(match &self.model {
            Model::Perm { points } => {
                let mut im: Vec<u8> = (0..*points as u8).collect();
                im.swap(i - 1, i);
                CoxElement::Perm(im)
            }
            Model::SignedB { n } => {
                let mut im: Vec<i8> = (1..=*n as i8).collect();
                if i < *n {
                    im.swap(i - 1, i);
                } else {
                    im[*n - 1] = -(*n as i8);
                }
                CoxElement::Signed(im)
            }
            Model::SignedD { n } => {
                let mut im: Vec<i8> = (1..=*n as i8).collect();
                if i < *n {
                    im.swap(i - 1, i);
                } else {
                    im[*n - 2] = -(*n as i8);
                    im[*n - 1] = -(*n as i8 - 1);
                }
                CoxElement::Signed(im)
            }
            Model::Dihedral { .. } => CoxElement::Dihedral {
                flip: true,
                rot: (i - 1) as u32,
            },
            Model::Reflection { gens, .. } => CoxElement::Reflection(Box::new(RefElem {
                mat: gens[i - 1].clone(),
                inv: gens[i - 1].clone(), // reflections are involutions
            })),
        })
    }

    /// Group product a·b (as functions, b applied first).
    pub fn mul(&self, a: &CoxElement, b: &CoxElement) -> CoxElement {
        match (&self.model, a, b) {
            (Model::Perm { .. }, CoxElement::Perm(pa), CoxElement::Perm(pb)) => {
                CoxElement::Perm(pb.iter().map(|&p| pa[p as usize]).collect())
            }
            (
                Model::SignedB { .. } | Model::SignedD { .. },
                CoxElement::Signed(sa),
                CoxElement::Signed(sb),
            ) => CoxElement::Signed(
                sb.iter()
                    .map(|&v| {
                        let image = sa[(v.abs() - 1) as usize];
                        if v < 0 {
                            -image
                        } else {
                            image
                        }
                    })
                    .collect(),
            ),
            (
                Model::Dihedral { m },
                &CoxElement::Dihedral { flip: f1, rot: a1 },
                &CoxElement::Dihedral { flip: f2, rot: a2 },
            ) => {
                // s^f1 r^a1 · s^f2 r^a2, using r s = s r⁻¹.
                let m = *m;
                if f2 {
                    CoxElement::Dihedral {
                        flip: !f1,
                        rot: (a2 + m - a1 % m) % m,
                    }
                } else {
                    CoxElement::Dihedral {
                        flip: f1,
                        rot: (a1 + a2) % m,
                    }
                }
            }
            (Model::Reflection { ring, .. }, CoxElement::Reflection(ra), CoxElement::Reflection(rb)) => {
                CoxElement::Reflection(Box::new(RefElem {
                    mat: ra.mat.mul(&rb.mat, *ring),
                    inv: rb.inv.mul(&ra.inv, *ring),
                }))
            }
            _ => panic!("CoxElement does not belong to this CoxSystem's model"),
        }
    }

    pub fn inv(&self, e: &CoxElement) -> CoxElement {
        match e {
            CoxElement::Perm(im) => {
                let mut out = vec![0u8; im.len()];
                for (p, &v) in im.iter().enumerate() {
                    out[v as usize] = p as u8;
                }
                CoxElement::Perm(out)
            }
            CoxElement::Signed(im) => {
                let mut out = vec![0i8; im.len()];
                for (p, &v) in im.iter().enumerate() {
                    let q = (v.abs() - 1) as usize;
                    out[q] = if v < 0 { -(p as i8 + 1) } else { p as i8 + 1 };
                }
                CoxElement::Signed(out)
            }
            &CoxElement::Dihedral { flip, rot } => {
                if flip {
                    CoxElement::Dihedral { flip, rot }
                } else {
                    let m = match &self.model {
                        Model::Dihedral { m } => *m,
                        _ => unreachable!(),
                    };
                    CoxElement::Dihedral {
                        flip,
                        rot: (m - rot % m) % m,
                    }
                }
            }
            CoxElement::Reflection(r) => CoxElement::Reflection(Box::new(RefElem {
                mat: r.inv.clone(),
                inv: r.mat.clone(),
            })),
        }
    }

    pub fn is_identity(&self, e: &CoxElement) -> bool {
        *e == self.identity()
    }

    /// Right-descent set as a bitmask (bit i−1 ⇔ generator i).
    pub fn right_descent_mask(&self, e: &CoxElement) -> u32 {
        match (&self.model, e) {
            (Model::Perm { .. }, CoxElement::Perm(im)) => {
                let mut mask = 0u32;
                for i in 0..im.len() - 1 {
                    if im[i] > im[i + 1] {
                        mask |= 1 << i;
                    }
                }
                mask
            }
            (Model::SignedB { n }, CoxElement::Signed(im)) => {
                let mut mask = signed_adjacent_descents(im);
                if im[*n - 1] < 0 {
                    mask |= 1 << (*n - 1);
                }
                mask
            }
            (Model::SignedD { n }, CoxElement::Signed(im)) => {
                let mut mask = signed_adjacent_descents(im);
                // Fork generator: image of e_{n−1} + e_n negative?
                let (u, v) = (im[*n - 2], im[*n - 1]);
                let descent = match (u > 0, v > 0) {
                    (true, true) => false,
                    (true, false) => u > -v,
                    (false, true) => v > -u,
                    (false, false) => true,
                };
                if descent {
                    mask |= 1 << (*n - 1);
                }
                mask
            }
            (Model::Dihedral { m }, e) => dihedral_descents(*m, e).1,
            (Model::Reflection { ring, gens }, CoxElement::Reflection(r)) => {
                let mut mask = 0u32;
                for i in 0..gens.len() {
                    if r.mat.column_is_negative(i, *ring) {
                        mask |= 1 << i;
                    }
                }
                mask
            }
            _ => panic!("CoxElement does not belong to this CoxSystem's model"),
        }
    }

    pub fn left_descent_mask(&self, e: &CoxElement) -> u32 {
        match (&self.model, e) {
            (Model::Dihedral { m }, e) => dihedral_descents(*m, e).0,
            (Model::Reflection { ring, gens }, CoxElement::Reflection(r)) => {
                let mut mask = 0u32;
                for i in 0..gens.len() {
                    if r.inv.column_is_negative(i, *ring) {
                        mask |= 1 << i;
                    }
                }
                mask
            }
            _ => self.right_descent_mask(&self.inv(e)),
        }
    }

    pub fn descent_mask(&self, e: &CoxElement, side: Side) -> u32 {
        match side {
            Side::Left => self.left_descent_mask(e),
            Side::Right => self.right_descent_mask(e),
        }
    }

    /// Descent set as sorted 1-based indices.
    pub fn descents(&self, e: &CoxElement, side: Side) -> Vec<usize> {
        let mask = self.descent_mask(e, side);
        (1..=self.rank()).filter(|i| mask & (1 << (i - 1)) != 0).collect()
    }

    /// Coxeter length, by stripping right descents until the identity.
    pub fn length(&self, e: &CoxElement) -> usize {
        let mut cur = e.clone();
        let mut len = 0;
        loop {
            let mask = self.right_descent_mask(&cur);
            if mask == 0 {
                debug_assert!(self.is_identity(&cur));
                return len;
            }
            let i = mask.trailing_zeros() as usize + 1;
            cur = self.mul(&cur, &self.generator(i).unwrap());
            len += 1;
        }
    }

    /// Image of a positive word under the quotient map to Ḡ.
    pub fn word_product(&self, letters: &[u8]) -> Result<CoxElement> {
        let mut acc = self.identity();
        for &l in letters {
            acc = self.mul(&acc, &self.generator(l as usize)?);
        }
        Ok(acc)
    }

    /// The lexicographically least reduced word for `e` (greedy smallest
    /// left descent first).
    pub fn reduced_word(&self, e: &CoxElement) -> Vec<u8> {
        let mut word = Vec::new();
        let mut cur = e.clone();
        loop {
            let mask = self.left_descent_mask(&cur);
            if mask == 0 {
                debug_assert!(self.is_identity(&cur));
                return word;
            }
            let i = mask.trailing_zeros() as usize + 1;
            word.push(i as u8);
            cur = self.mul(&self.generator(i).unwrap(), &cur);
        }
    }

    /// Least k ≥ 1 with e^k = 1.
    pub fn element_order(&self, e: &CoxElement) -> usize {
        let mut cur = e.clone();
        let mut k = 1;
        while !self.is_identity(&cur) {
            cur = self.mul(&cur, e);
            k += 1;
        }
        k
    }

    /// The longest element w₀ (the image of Δ).
    pub fn longest(&self) -> &CoxElement {
        &self.w0
    }

    pub fn longest_len(&self) -> usize {
        self.w0_len
    }

    /// Conjugation by w₀; the diagram automorphism behind τ.
    pub fn conj_by_w0(&self, e: &CoxElement) -> CoxElement {
        self.mul(&self.mul(&self.w0, e), &self.w0)
    }

    /// Order of the Coxeter element 𝒥 = 𝒥₁𝒥₂ (product of all generators
    /// in bipartition order).
    pub fn coxeter_number(&self) -> Result<u32> {
        let bp = bipartition(&self.matrix)?;
        let word: Vec<u8> = bp.j1.iter().chain(bp.j2.iter()).map(|&i| i as u8).collect();
        let j = self.word_product(&word)?;
        Ok(self.element_order(&j) as u32)
    }

    fn element_sane(&self, e: &CoxElement) -> bool {
        match e {
            CoxElement::Reflection(r) => r.mat.abs_coeff_max() < COEFF_LIMIT,
            _ => true,
        }
    }

    /// Greedy ascent to the longest element: multiply by a non-descent
    /// generator until every generator is a right descent. Diverges exactly
    /// when the group is infinite, which the step/coefficient guards turn
    /// into an error.
    fn ascend_to_longest(&self) -> Result<(CoxElement, usize)> {
        let n = self.rank();
        let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
        let mut cur = self.identity();
        let mut len = 0usize;
        while self.right_descent_mask(&cur) != full {
            let mask = !self.right_descent_mask(&cur) & full;
            let i = mask.trailing_zeros() as usize + 1;
            cur = self.mul(&cur, &self.generator(i)?);
            len += 1;
            if len > ASCENT_STEP_LIMIT || !self.element_sane(&cur) {
                return Err(Error::NotFiniteType(
                    "no longest element within the supported scale".into(),
                ));
            }
        }
        Ok((cur, len))
    }

    /// BFS enumeration of the whole group, identity first. Discovery order
    /// is deterministic (queue order, generators ascending, right
    /// multiplication).
    pub fn enumerate(&self, cap: usize) -> Result<Vec<CoxElement>> {
        let mut elements = vec![self.identity()];
        let mut index: HashMap<CoxElement, u32> = HashMap::new();
        index.insert(self.identity(), 0);
        let mut head = 0usize;
        while head < elements.len() {
            let cur = elements[head].clone();
            head += 1;
            for i in 1..=self.rank() {
                let next = self.mul(&cur, &self.generator(i)?);
                if !self.element_sane(&next) {
                    return Err(Error::NotFiniteType(
                        "enumeration coordinates exploded; group is not finite at this scale".into(),
                    ));
                }
                if !index.contains_key(&next) {
                    if elements.len() >= cap {
                        return Err(Error::CapExceeded {
                            what: "group enumeration",
                            needed: elements.len() as u64 + 1,
                            cap: cap as u64,
                        });
                    }
                    index.insert(next.clone(), elements.len() as u32);
                    elements.push(next);
                }
            }
        }
        Ok(elements)
    }

    /// Complete multiplication table. Prefer [`CoxSystem::enumerate`] when
    /// only the element list is needed; the table is quadratic in the
    /// order.
    pub fn group_table(&self, caps: &Caps) -> Result<GroupTable> {
        let elements = self.enumerate(caps.enumerate)?;
        GroupTable::build(self, elements)
    }
}

/// Descents from the e_i − e_{i+1} roots, shared by the B and D models.
fn signed_adjacent_descents(im: &[i8]) -> u32 {
    let mut mask = 0u32;
    for i in 0..im.len() - 1 {
        let (u, v) = (im[i], im[i + 1]);
        let descent = match (u > 0, v > 0) {
            (true, true) => u > v,
            (true, false) => false,
            (false, true) => true,
            (false, false) => u > v, // i.e. |u| < |v|
        };
        if descent {
            mask |= 1 << i;
        }
    }
    mask
}

/// (left, right) descent masks of a dihedral element, from its alternating
/// reduced words: r^a is ⟨1,2⟩^{2a} or ⟨2,1⟩^{2(m−a)}, a reflection is
/// ⟨1,2⟩^{odd} or ⟨2,1⟩^{odd}; the shorter spelling(s) decide.
fn dihedral_descents(m: u32, e: &CoxElement) -> (u32, u32) {
    let &CoxElement::Dihedral { flip, rot } = e else {
        panic!("CoxElement does not belong to this CoxSystem's model")
    };
    if !flip {
        if rot == 0 {
            return (0, 0);
        }
        let l1 = 2 * rot; // ⟨1,2⟩^{2·rot}: starts 1, ends 2
        let l2 = 2 * (m - rot); // ⟨2,1⟩^{2(m−rot)}: starts 2, ends 1
        let len = l1.min(l2);
        let mut left = 0;
        let mut right = 0;
        if l1 == len {
            left |= 0b01;
            right |= 0b10;
        }
        if l2 == len {
            left |= 0b10;
            right |= 0b01;
        }
        (left, right)
    } else {
        let j1 = (m - rot % m) % m;
        let l1 = 2 * j1 + 1; // ⟨1,2⟩^{2j+1} = (1, −j): starts and ends 1
        let j2 = (rot + m - 1) % m;
        let l2 = 2 * j2 + 1; // ⟨2,1⟩^{2j+1} = (1, 1+j): starts and ends 2
        let len = l1.min(l2);
        let mut mask = 0;
        if l1 == len {
            mask |= 0b01;
        }
        if l2 == len {
            mask |= 0b10;
        }
        (mask, mask)
    }
}

fn reflection_model(matrix: &CoxeterMatrix) -> Result<Model> {
    let n = matrix.rank();
    let mut labels = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            labels.push(matrix.label(i, j).finite());
        }
    }
    let ring = ring_for_labels(labels.into_iter())?;
    let mut gens = Vec::with_capacity(n);
    for i in 0..n {
        let mut g = QuadMat::identity(n);
        for j in 0..n {
            if i == j {
                g.set(i, i, quad::QuadInt::int(-1));
            } else {
                let c = edge_coefficient(matrix.label(i + 1, j + 1).finite(), ring)?;
                g.set(i, j, c);
            }
        }
        gens.push(g);
    }
    Ok(Model::Reflection { ring, gens })
}

/// Multiplication table of a finite Coxeter group; identity at index 0.
#[derive(Debug, Clone)]
pub struct GroupTable {
    elements: Vec<CoxElement>,
    products: Vec<u32>,
    inverses: Vec<u32>,
}

/// Hard bound on table cells (order²); keeps accidental huge tables from
/// exhausting memory.
const TABLE_CELL_LIMIT: u64 = 1 << 28;

impl GroupTable {
    fn build(sys: &CoxSystem, elements: Vec<CoxElement>) -> Result<GroupTable> {
        let order = elements.len();
        let cells = (order as u64) * (order as u64);
        if cells > TABLE_CELL_LIMIT {
            return Err(Error::CapExceeded {
                what: "group table cells",
                needed: cells,
                cap: TABLE_CELL_LIMIT,
            });
        }
        let index: HashMap<&CoxElement, u32> =
            elements.iter().enumerate().map(|(i, e)| (e, i as u32)).collect();
        let mut products = vec![0u32; order * order];
        for i in 0..order {
            for j in 0..order {
                let p = sys.mul(&elements[i], &elements[j]);
                products[i * order + j] = *index
                    .get(&p)
                    .ok_or_else(|| Error::Internal("product escaped the enumerated set".into()))?;
            }
        }
        let mut inverses = vec![0u32; order];
        for i in 0..order {
            let j = (0..order)
                .find(|&j| products[i * order + j] == 0)
                .ok_or_else(|| Error::Internal("element without inverse".into()))?;
            inverses[i] = j as u32;
        }
        Ok(GroupTable {
            elements,
            products,
            inverses,
        })
    }

    /// Assemble a table from a row-major products array (the export
    /// format). Checks index ranges, the identity at index 0, and the
    /// existence of inverses; associativity is the caller's claim.
    /// Imported tables carry no model elements.
    pub fn from_products(order: usize, products: Vec<u32>) -> Result<GroupTable> {
        if order == 0 || products.len() != order * order {
            return Err(Error::Parse(format!(
                "products array must hold order² = {} entries, got {}",
                order * order,
                products.len()
            )));
        }
        if products.iter().any(|&p| p as usize >= order) {
            return Err(Error::Parse("product index out of range".into()));
        }
        for i in 0..order {
            if products[i] as usize != i || products[i * order] as usize != i {
                return Err(Error::Parse("index 0 is not an identity".into()));
            }
        }
        let mut inverses = vec![0u32; order];
        for i in 0..order {
            let j = (0..order)
                .find(|&j| products[i * order + j] == 0)
                .ok_or_else(|| Error::Parse(format!("element {i} has no inverse")))?;
            inverses[i] = j as u32;
        }
        Ok(GroupTable {
            elements: Vec::new(),
            products,
            inverses,
        })
    }

    pub fn order(&self) -> usize {
        self.inverses.len()
    }

    /// Model elements in index order; empty for imported tables.
    pub fn elements(&self) -> &[CoxElement] {
        &self.elements
    }

    pub fn product(&self, i: usize, j: usize) -> usize {
        self.products[i * self.order() + j] as usize
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.inverses[i] as usize
    }

    /// Least k ≥ 1 with i^k = identity.
    pub fn order_of(&self, i: usize) -> usize {
        let mut cur = i;
        let mut k = 1;
        while cur != 0 {
            cur = self.product(cur, i);
            k += 1;
        }
        k
    }

    /// The export format: `{order, products}` with the table row-major.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "order": self.order(),
            "products": self.products,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    fn sys(spec: &str) -> CoxSystem {
        CoxSystem::for_spec(&crate::coxeter::parse_group_spec(spec).unwrap()).unwrap()
    }

    fn family_zoo() -> Vec<(FamilySpec, usize)> {
        // (spec, |Ḡ|) for every supported diagram with order ≤ 10⁴.
        let mut zoo = Vec::new();
        let fact = |k: u64| (1..=k).product::<u64>() as usize;
        for n in 1..=6u32 {
            zoo.push((FamilySpec::a(n).unwrap(), fact(n as u64 + 1)));
        }
        for n in 2..=5u32 {
            zoo.push((FamilySpec::b(n).unwrap(), (1 << n) * fact(n as u64)));
        }
        for n in 4..=5u32 {
            zoo.push((FamilySpec::d(n).unwrap(), (1 << (n - 1)) * fact(n as u64)));
        }
        for m in 3..=12u32 {
            zoo.push((FamilySpec::i2(m).unwrap(), 2 * m as usize));
        }
        zoo.push((FamilySpec::sporadic(Family::H3).unwrap(), 120));
        zoo.push((FamilySpec::sporadic(Family::F4).unwrap(), 1152));
        zoo
    }

    /// Independent length/descent oracle: BFS distances over the Cayley
    /// graph, never consulting the descent predicates.
    fn bfs_lengths(sys: &CoxSystem) -> HashMap<CoxElement, usize> {
        let mut dist = HashMap::new();
        dist.insert(sys.identity(), 0usize);
        let mut queue = std::collections::VecDeque::from([sys.identity()]);
        while let Some(e) = queue.pop_front() {
            let d = dist[&e];
            for i in 1..=sys.rank() {
                let next = sys.mul(&e, &sys.generator(i).unwrap());
                if !dist.contains_key(&next) {
                    dist.insert(next.clone(), d + 1);
                    queue.push_back(next);
                }
            }
        }
        dist
    }

    #[test]
    fn a2_word_121_is_the_1_3_transposition() {
        let s = sys("A2");
        let e = s.word_product(&[1, 2, 1]).unwrap();
        assert_eq!(e.as_permutation().unwrap(), vec![3, 2, 1]);
    }

    #[test]
    fn empty_word_is_identity() {
        for spec in ["A3", "B3", "D4", "I2(5)"] {
            let s = sys(spec);
            assert!(s.is_identity(&s.word_product(&[]).unwrap()));
        }
    }

    #[test]
    fn i24_half_turn_has_order_two() {
        let s = CoxSystem::for_spec(&FamilySpec::i2(4).unwrap()).unwrap();
        let e = s.word_product(&[1, 2, 1, 2]).unwrap();
        assert_eq!(e.as_dihedral().unwrap(), (false, 2));
        assert_eq!(s.element_order(&e), 2);
    }

    #[test]
    fn defining_relations_hold_in_every_model() {
        let mut specs: Vec<FamilySpec> = family_zoo().into_iter().map(|(s, _)| s).collect();
        specs.push(FamilySpec::sporadic(Family::E6).unwrap());
        specs.push(FamilySpec::sporadic(Family::E7).unwrap());
        specs.push(FamilySpec::sporadic(Family::E8).unwrap());
        specs.push(FamilySpec::sporadic(Family::H4).unwrap());
        for spec in specs {
            let s = CoxSystem::for_spec(&spec).unwrap();
            for i in 1..=s.rank() {
                for j in 1..=s.rank() {
                    let m = s.matrix().label(i, j).finite().unwrap();
                    let mut word = Vec::new();
                    for _ in 0..m {
                        word.push(i as u8);
                        word.push(j as u8);
                    }
                    let e = s.word_product(&word).unwrap();
                    assert!(s.is_identity(&e), "{spec}: ({i},{j})^{m} != 1");
                }
            }
        }
    }

    #[test]
    fn length_examples() {
        let s = sys("A2");
        assert_eq!(s.length(&s.identity()), 0);
        assert_eq!(s.length(&s.generator(1).unwrap()), 1);
        assert_eq!(s.length(&s.word_product(&[1, 2, 1]).unwrap()), 3);
    }

    #[test]
    fn lengths_and_descents_match_bfs_oracle() {
        for spec in ["A1", "A3", "B2", "B3", "D4", "I2(3)", "I2(4)", "I2(5)", "I2(6)", "I2(7)", "I2(12)", "H3"]
        {
            let s = sys_any(spec);
            let dist = bfs_lengths(&s);
            for (e, &d) in &dist {
                assert_eq!(s.length(e), d, "{spec}: length mismatch");
                for i in 1..=s.rank() {
                    let right = dist[&s.mul(e, &s.generator(i).unwrap())] < d;
                    assert_eq!(
                        s.right_descent_mask(e) & (1 << (i - 1)) != 0,
                        right,
                        "{spec}: right descent {i} of {e:?}"
                    );
                    let left = dist[&s.mul(&s.generator(i).unwrap(), e)] < d;
                    assert_eq!(
                        s.left_descent_mask(e) & (1 << (i - 1)) != 0,
                        left,
                        "{spec}: left descent {i} of {e:?}"
                    );
                }
            }
        }
    }

    fn sys_any(spec: &str) -> CoxSystem {
        if spec == "H3" {
            CoxSystem::for_spec(&FamilySpec::sporadic(Family::H3).unwrap()).unwrap()
        } else {
            sys(spec)
        }
    }

    #[test]
    fn descent_examples() {
        let s = sys("A2");
        assert!(s.descents(&s.identity(), Side::Left).is_empty());
        assert!(s.descents(&s.identity(), Side::Right).is_empty());
        let g1 = s.generator(1).unwrap();
        assert_eq!(s.descents(&g1, Side::Left), vec![1]);
        assert_eq!(s.descents(&g1, Side::Right), vec![1]);
        let w0 = s.word_product(&[1, 2, 1]).unwrap();
        assert_eq!(s.descents(&w0, Side::Left), vec![1, 2]);
        assert_eq!(s.descents(&w0, Side::Right), vec![1, 2]);
    }

    #[test]
    fn longest_element_has_all_descents() {
        for (spec, _) in family_zoo() {
            let s = CoxSystem::for_spec(&spec).unwrap();
            let w0 = s.longest();
            assert_eq!(s.descents(w0, Side::Left).len(), s.rank(), "{spec}");
            assert_eq!(s.descents(w0, Side::Right).len(), s.rank(), "{spec}");
            assert_eq!(s.length(w0), s.longest_len(), "{spec}");
            // w₀ is an involution.
            assert!(s.is_identity(&s.mul(w0, w0)), "{spec}");
        }
    }

    #[test]
    fn enumeration_finds_the_same_longest_element() {
        for spec in ["A4", "B3", "D4", "I2(9)"] {
            let s = sys(spec);
            let longest_by_enumeration = s
                .enumerate(100_000)
                .unwrap()
                .into_iter()
                .max_by_key(|e| s.length(e))
                .unwrap();
            assert_eq!(&longest_by_enumeration, s.longest(), "{spec}");
        }
    }

    #[test]
    fn generator_orders_and_products() {
        let s = sys("A2");
        assert_eq!(s.element_order(&s.generator(1).unwrap()), 2);
        assert_eq!(s.element_order(&s.word_product(&[1, 2]).unwrap()), 3);
        let s = sys("I2(6)");
        assert_eq!(s.element_order(&s.word_product(&[1, 2]).unwrap()), 6);
    }

    #[test]
    fn coxeter_numbers_match_the_table() {
        let expect: Vec<(&str, u32)> = vec![
            ("A1", 2),
            ("A2", 3),
            ("A3", 4),
            ("A4", 5),
            ("A5", 6),
            ("A6", 7),
            ("B2", 4),
            ("B3", 6),
            ("B4", 8),
            ("B5", 10),
            ("B6", 12),
            ("D4", 6),
            ("D5", 8),
            ("D6", 10),
            ("D7", 12),
            ("I2(3)", 3),
            ("I2(7)", 7),
            ("I2(12)", 12),
        ];
        for (spec, h) in expect {
            assert_eq!(sys(spec).coxeter_number().unwrap(), h, "{spec}");
        }
    }

    #[test]
    fn sporadic_coxeter_numbers() {
        for (f, h) in [
            (Family::E6, 12),
            (Family::E7, 18),
            (Family::E8, 30),
            (Family::F4, 12),
            (Family::H3, 10),
            (Family::H4, 30),
        ] {
            let s = CoxSystem::for_spec(&FamilySpec::sporadic(f).unwrap()).unwrap();
            assert_eq!(s.coxeter_number().unwrap(), h, "{f:?}");
        }
    }

    #[test]
    fn enumeration_orders_certify_faithfulness() {
        // The models satisfy the relations (tested above), so each model
        // group is a quotient of Ḡ; matching orders make them isomorphic.
        for (spec, order) in family_zoo() {
            let s = CoxSystem::for_spec(&spec).unwrap();
            assert_eq!(s.enumerate(100_000).unwrap().len(), order, "{spec}");
        }
    }

    #[test]
    fn h4_enumerates_to_14400() {
        let s = CoxSystem::for_spec(&FamilySpec::sporadic(Family::H4).unwrap()).unwrap();
        assert_eq!(s.enumerate(100_000).unwrap().len(), 14_400);
    }

    #[test]
    #[ignore = "slow in debug builds; run with --ignored"]
    fn e6_enumerates_to_51840() {
        let s = CoxSystem::for_spec(&FamilySpec::sporadic(Family::E6).unwrap()).unwrap();
        assert_eq!(s.enumerate(100_000).unwrap().len(), 51_840);
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let s = sys("A4"); // order 120
        assert!(matches!(
            s.enumerate(100),
            Err(Error::CapExceeded { what: "group enumeration", .. })
        ));
        let e7 = CoxSystem::for_spec(&FamilySpec::sporadic(Family::E7).unwrap()).unwrap();
        assert!(e7.enumerate(10_000).is_err());
    }

    #[test]
    fn rank_limits_are_enforced() {
        assert!(matches!(
            CoxSystem::for_spec(&FamilySpec::a(33).unwrap()),
            Err(Error::Unsupported(_))
        ));
        assert!(CoxSystem::for_spec(&FamilySpec::a(32).unwrap()).is_ok());
        let empty = CoxeterMatrix::from_entries(0, vec![]).unwrap();
        assert!(CoxSystem::for_matrix(&empty).is_err());
    }

    #[test]
    fn matrix_dispatch_matches_spec_dispatch() {
        use crate::coxeter::build_diagram;
        let s = CoxSystem::for_matrix(&build_diagram(&FamilySpec::a(2).unwrap())).unwrap();
        let e = s.word_product(&[1, 2, 1]).unwrap();
        assert_eq!(e.as_permutation().unwrap(), vec![3, 2, 1]);
        // m = 4 resolves to the B_2 signed model, m ≥ 5 to the dihedral one.
        let s = CoxSystem::for_matrix(&build_diagram(&FamilySpec::i2(4).unwrap())).unwrap();
        assert!(s.generator(1).unwrap().as_signed_permutation().is_some());
        let s = CoxSystem::for_matrix(&build_diagram(&FamilySpec::i2(7).unwrap())).unwrap();
        assert!(s.generator(1).unwrap().as_dihedral().is_some());
    }

    #[test]
    fn from_products_validates() {
        assert!(GroupTable::from_products(1, vec![0]).is_ok());
        // Z/2.
        let z2 = GroupTable::from_products(2, vec![0, 1, 1, 0]).unwrap();
        assert_eq!(z2.inverse(1), 1);
        assert_eq!(z2.order_of(1), 2);
        // Wrong sizes, missing identity, out-of-range entries.
        assert!(GroupTable::from_products(2, vec![0, 1, 1]).is_err());
        assert!(GroupTable::from_products(2, vec![1, 0, 0, 1]).is_err());
        assert!(GroupTable::from_products(2, vec![0, 1, 1, 7]).is_err());
        assert!(GroupTable::from_products(0, vec![]).is_err());
    }

    #[test]
    fn infinite_type_is_rejected() {
        use crate::coxeter::{CoxLabel, CoxeterMatrix};
        // Rank-2 with m = ∞ is the infinite dihedral group.
        let m = CoxeterMatrix::from_entries(
            2,
            vec![CoxLabel::Fin(1), CoxLabel::Inf, CoxLabel::Inf, CoxLabel::Fin(1)],
        )
        .unwrap();
        assert!(matches!(CoxSystem::for_matrix(&m), Err(Error::NotFiniteType(_))));
    }

    #[test]
    fn group_table_small() {
        let caps = Caps::default();
        let t = sys("A2").group_table(&caps).unwrap();
        assert_eq!(t.order(), 6);
        assert_eq!(t.product(0, 3), 3);
        assert_eq!(t.product(t.inverse(3), 3), 0);
        let t = sys("A1").group_table(&caps).unwrap();
        assert_eq!(t.order(), 2);
        let t = sys("I2(5)").group_table(&caps).unwrap();
        assert_eq!(t.order(), 10);
    }

    #[test]
    fn group_table_is_associative() {
        let t = sys("I2(5)").group_table(&Caps::default()).unwrap();
        let n = t.order();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    assert_eq!(t.product(t.product(i, j), k), t.product(i, t.product(j, k)));
                }
            }
        }
    }

    #[test]
    fn group_table_json_shape() {
        let t = sys("A1").group_table(&Caps::default()).unwrap();
        let v = t.to_json();
        assert_eq!(v["order"], 2);
        assert_eq!(v["products"].as_array().unwrap().len(), 4);
    }

    #[test]
    fn length_changes_by_one_under_generator_multiplication() {
        for spec in ["A3", "B3", "D4", "I2(7)"] {
            let s = sys(spec);
            for e in s.enumerate(100_000).unwrap() {
                let le = s.length(&e);
                for i in 1..=s.rank() {
                    let lf = s.length(&s.mul(&s.generator(i).unwrap(), &e));
                    assert!(lf == le + 1 || lf + 1 == le, "{spec}");
                }
                assert_eq!(le == 0, s.is_identity(&e));
            }
        }
    }

    #[test]
    fn reduced_words_multiply_back() {
        for spec in ["A3", "B3", "D4", "I2(6)"] {
            let s = sys(spec);
            for e in s.enumerate(100_000).unwrap() {
                let w = s.reduced_word(&e);
                assert_eq!(w.len(), s.length(&e), "{spec}: word not reduced");
                assert_eq!(s.word_product(&w).unwrap(), e, "{spec}: wrong product");
            }
        }
    }
}
