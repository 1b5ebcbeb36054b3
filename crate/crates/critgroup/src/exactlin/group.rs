//! Canonical invariant-factor chains of finitely generated abelian groups.
//!
//! A group is a list of nonnegative moduli `d1 | d2 | ... | dk` (every
//! integer divides 0) with no trivial `1` factors. Modulus 0 denotes an
//! infinite cyclic summand, so torsion factors come first and zeros trail.

use super::snf::{divides, snf};
use super::IntMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::fmt;

/// Finitely generated abelian group in invariant-factor form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    factors: Vec<BigInt>,
}

/// Order of a group; `Infinite` once any free factor is present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupOrder {
    Finite(BigInt),
    Infinite,
}

impl fmt::Display for GroupOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupOrder::Finite(n) => write!(f, "{n}"),
            GroupOrder::Infinite => write!(f, "infinite"),
        }
    }
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup { factors: Vec::new() }
    }

    /// Canonical moduli; each divides the next, none equal 1, zeros last.
    pub fn factors(&self) -> &[BigInt] {
        &self.factors
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn free_rank(&self) -> usize {
        self.factors.iter().filter(|d| d.is_zero()).count()
    }

    /// The finite part of the group (free factors dropped).
    pub fn torsion(&self) -> AbelianGroup {
        AbelianGroup {
            factors: self.factors.iter().filter(|d| !d.is_zero()).cloned().collect(),
        }
    }

    /// Product of the moduli, `Infinite` if any is zero.
    pub fn order(&self) -> GroupOrder {
        let mut acc = BigInt::from(1);
        for d in &self.factors {
            if d.is_zero() {
                return GroupOrder::Infinite;
            }
            acc *= d;
        }
        GroupOrder::Finite(acc)
    }
}

/// Groups print as `Z4 + Z4`, a free summand as plain `Z`, the trivial
/// group as `0`.
impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|d| if d.is_zero() { "Z".to_string() } else { format!("Z{d}") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Canonicalizes an arbitrary list of cyclic moduli into the unique
/// invariant-factor chain of their direct sum, by repeated pairwise
/// `(a, b) -> (gcd(a, b), lcm(a, b))` merging. No factorization involved.
/// Signs are normalized (`Z_-d` is `Z_d`), trivial factors are dropped.
pub fn canonicalize<I>(moduli: I) -> AbelianGroup
where
    I: IntoIterator,
    I::Item: Into<BigInt>,
{
    let mut fs: Vec<BigInt> = moduli.into_iter().map(|d| d.into().abs()).collect();
    loop {
        let mut changed = false;
        for i in 0..fs.len() {
            for j in i + 1..fs.len() {
                if !divides(&fs[i], &fs[j]) {
                    let g = fs[i].gcd(&fs[j]);
                    let l = if fs[i].is_zero() || fs[j].is_zero() {
                        BigInt::zero()
                    } else {
                        (&fs[i] * &fs[j]) / &g
                    };
                    fs[i] = g;
                    fs[j] = l;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    fs.retain(|d| *d != BigInt::from(1));
    AbelianGroup { factors: fs }
}

/// Critical group of a matrix: the cokernel of its transpose acting on the
/// column space. Torsion comes from nonunit invariant factors; the free rank
/// is `cols - rank`, encoded as trailing zero moduli.
pub fn critical_group(m: &IntMatrix) -> AbelianGroup {
    let s = snf(m);
    let rank = s.rank();
    let mut factors: Vec<BigInt> = s
        .diagonal
        .into_iter()
        .filter(|d| !d.is_zero() && *d != BigInt::from(1))
        .collect();
    factors.extend(std::iter::repeat(BigInt::zero()).take(m.cols() - rank));
    AbelianGroup { factors }
}
