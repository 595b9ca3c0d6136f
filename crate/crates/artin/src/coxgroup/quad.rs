//! Exact arithmetic in the quadratic rings needed by the geometric
//! reflection representation: ℤ, ℤ[√2], ℤ[√3], ℤ[φ].
//!
//! The representation of a Coxeter group sends generator i to the
//! reflection α_j ↦ α_j + 2cos(π/m_ij)·α_i, and 2cos(π/m) for
//! m ∈ {2, 3, 4, 5, 6, ∞} lies in one of these rings (0, 1, √2, φ, √3, 2).

use crate::{Error, Result};

/// Which ring the coefficients live in. `omega` is √2, √3 or the golden
/// ratio φ; in `Int` the ω-coordinate is identically zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadRing {
    Int,
    Sqrt2,
    Sqrt3,
    Golden,
}

/// `a + b·ω`, coordinates in the ω-power basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadInt {
    pub a: i64,
    pub b: i64,
}

impl QuadInt {
    pub const ZERO: QuadInt = QuadInt { a: 0, b: 0 };
    pub const ONE: QuadInt = QuadInt { a: 1, b: 0 };

    pub fn int(a: i64) -> Self {
        QuadInt { a, b: 0 }
    }

    pub fn omega() -> Self {
        QuadInt { a: 0, b: 1 }
    }

    /// Ring product; multiplication needs the ring, so it stays a method
    /// while addition and negation implement the std traits.
    pub fn mul(self, other: Self, ring: QuadRing) -> Self {
        let (a1, b1, a2, b2) = (self.a, self.b, other.a, other.b);
        match ring {
            // ω² = d
            QuadRing::Int => QuadInt { a: a1 * a2, b: 0 },
            QuadRing::Sqrt2 => QuadInt {
                a: a1 * a2 + 2 * b1 * b2,
                b: a1 * b2 + b1 * a2,
            },
            QuadRing::Sqrt3 => QuadInt {
                a: a1 * a2 + 3 * b1 * b2,
                b: a1 * b2 + b1 * a2,
            },
            // φ² = φ + 1
            QuadRing::Golden => QuadInt {
                a: a1 * a2 + b1 * b2,
                b: a1 * b2 + b1 * a2 + b1 * b2,
            },
        }
    }

    /// Sign of the real value `a + b·ω`, exactly.
    pub fn signum(self, ring: QuadRing) -> i32 {
        // Reduce to sign of p + q·√d.
        let (p, q, d) = match ring {
            QuadRing::Int => (self.a, 0, 2),
            QuadRing::Sqrt2 => (self.a, self.b, 2),
            QuadRing::Sqrt3 => (self.a, self.b, 3),
            // a + bφ = (2a + b + b√5)/2
            QuadRing::Golden => (2 * self.a + self.b, self.b, 5),
        };
        if q == 0 {
            return p.signum() as i32;
        }
        if p == 0 {
            return q.signum() as i32;
        }
        if p > 0 && q > 0 {
            return 1;
        }
        if p < 0 && q < 0 {
            return -1;
        }
        // Mixed signs: compare p² with d·q²; sign decided by the larger side.
        let cmp = (p * p).cmp(&(d * q * q));
        match cmp {
            std::cmp::Ordering::Greater => p.signum() as i32,
            std::cmp::Ordering::Less => q.signum() as i32,
            std::cmp::Ordering::Equal => 0,
        }
    }

    pub fn abs_coeff_max(self) -> i64 {
        self.a.abs().max(self.b.abs())
    }
}

impl std::ops::Add for QuadInt {
    type Output = QuadInt;

    fn add(self, other: QuadInt) -> QuadInt {
        QuadInt {
            a: self.a + other.a,
            b: self.b + other.b,
        }
    }
}

impl std::ops::Neg for QuadInt {
    type Output = QuadInt;

    fn neg(self) -> QuadInt {
        QuadInt { a: -self.a, b: -self.b }
    }
}

/// 2·cos(π/m) in the ring, or an error when the label needs a different
/// irrationality than `ring` provides.
pub fn edge_coefficient(m: Option<u32>, ring: QuadRing) -> Result<QuadInt> {
    match m {
        Some(2) => Ok(QuadInt::ZERO),
        Some(3) => Ok(QuadInt::ONE),
        Some(4) if ring == QuadRing::Sqrt2 => Ok(QuadInt::omega()),
        Some(5) if ring == QuadRing::Golden => Ok(QuadInt::omega()),
        Some(6) if ring == QuadRing::Sqrt3 => Ok(QuadInt::omega()),
        None => Ok(QuadInt::int(2)), // m = ∞
        Some(m) => Err(Error::Unsupported(format!(
            "edge label {m} not representable in the chosen coefficient ring"
        ))),
    }
}

/// Pick the ring for a label multiset, or reject mixed irrationalities.
pub fn ring_for_labels(labels: impl Iterator<Item = Option<u32>>) -> Result<QuadRing> {
    let mut ring = QuadRing::Int;
    for m in labels {
        let wanted = match m {
            Some(4) => QuadRing::Sqrt2,
            Some(5) => QuadRing::Golden,
            Some(6) => QuadRing::Sqrt3,
            Some(m) if m >= 7 => {
                return Err(Error::Unsupported(format!(
                    "edge label {m} needs a non-quadratic cyclotomic ring (rank-2 diagrams use the dihedral model instead)"
                )))
            }
            _ => continue,
        };
        if ring == QuadRing::Int {
            ring = wanted;
        } else if ring != wanted {
            return Err(Error::Unsupported(
                "diagram mixes edge labels with incompatible irrational cosines".into(),
            ));
        }
    }
    Ok(ring)
}

/// Dense square matrix over the ring, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadMat {
    pub dim: usize,
    pub data: Vec<QuadInt>,
}

impl QuadMat {
    pub fn identity(dim: usize) -> Self {
        let mut data = vec![QuadInt::ZERO; dim * dim];
        for i in 0..dim {
            data[i * dim + i] = QuadInt::ONE;
        }
        QuadMat { dim, data }
    }

    pub fn get(&self, row: usize, col: usize) -> QuadInt {
        self.data[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: QuadInt) {
        self.data[row * self.dim + col] = v;
    }

    pub fn mul(&self, other: &QuadMat, ring: QuadRing) -> QuadMat {
        let n = self.dim;
        debug_assert_eq!(n, other.dim);
        let mut out = QuadMat {
            dim: n,
            data: vec![QuadInt::ZERO; n * n],
        };
        for i in 0..n {
            for k in 0..n {
                let aik = self.get(i, k);
                if aik == QuadInt::ZERO {
                    continue;
                }
                for j in 0..n {
                    let v = out.get(i, j) + aik.mul(other.get(k, j), ring);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// True when column `col` is a negative root image: all entries ≤ 0,
    /// at least one < 0.
    pub fn column_is_negative(&self, col: usize, ring: QuadRing) -> bool {
        let mut any_neg = false;
        for row in 0..self.dim {
            match self.get(row, col).signum(ring) {
                1 => return false,
                -1 => any_neg = true,
                _ => {}
            }
        }
        any_neg
    }

    pub fn abs_coeff_max(&self) -> i64 {
        self.data.iter().map(|q| q.abs_coeff_max()).max().unwrap_or(0)
    }
}
